#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "symsq/models.hpp"
#include "symsq/oracle.hpp"

namespace {

using namespace symsq;

TEST(Dicke, SpecialEntriesNFourMOne) {
  const auto p = dicke_special(DickeParams::with_m(4, 1));
  EXPECT_DOUBLE_EQ(p.a, 0.5);
  EXPECT_DOUBLE_EQ(p.c, 0.25);
  EXPECT_DOUBLE_EQ(p.d, 0.0);
  EXPECT_DOUBLE_EQ(p.b, 0.0);
}

TEST(Dicke, ZeroMagnetizationNFour) {
  const auto pair = dicke_pair(DickeParams::with_m(4, 0));
  EXPECT_NEAR(pair.invariants.I1, -4.0 / 27.0, 1e-15);
  EXPECT_DOUBLE_EQ(pair.invariants.I3, 0.0);
  EXPECT_EQ(classify(pair.invariants).branch, PairBranch::I3_zero_I1_negative);
}

TEST(Dicke, ZeroMagnetizationGeneralN) {
  for (const int N : {2, 4, 6, 10, 50}) {
    const double n = N;
    EXPECT_NEAR(dicke_pair(DickeParams{N, 0}).invariants.I1, -n * n / (4 * std::pow(n - 1, 3)), 1e-15) << N;
  }
}

TEST(Dicke, ClosedFormsMatchNumericInvariants) {
  for (int N = 2; N <= 12; ++N) {
    for (int two_m = -N; two_m <= N; two_m += 2) {
      const DickeParams p{N, two_m};
      const auto closed = dicke_pair(p).invariants;
      const auto numeric = symmetric_six(symmetric_from_special(dicke_special(p)));
      EXPECT_NEAR(closed.I1, numeric.I1, 1e-13);
      EXPECT_NEAR(closed.I2, numeric.I2, 1e-13);
      EXPECT_NEAR(closed.I3, numeric.I3, 1e-13);
      EXPECT_NEAR(closed.I4, numeric.I4, 1e-13);
      EXPECT_NEAR(closed.I5, numeric.I5, 1e-13);
      EXPECT_NEAR(closed.I4_minus_I3sq, numeric.I4_minus_I3sq, 1e-13);
    }
  }
}

TEST(Dicke, Branches) {
  EXPECT_EQ(classify(dicke_pair(DickeParams::with_m(6, 3)).invariants).branch, PairBranch::separable_signature);
  EXPECT_EQ(classify(dicke_pair(DickeParams::with_m(6, -3)).invariants).branch, PairBranch::separable_signature);
  // 4M^2 < N puts the variance along the mean spin below N/4.
  EXPECT_EQ(classify(dicke_pair(DickeParams::with_m(8, 1)).invariants).branch, PairBranch::I4_negative);
  EXPECT_EQ(classify(dicke_pair(DickeParams::with_m(8, 2)).invariants).branch, PairBranch::I4_pos_combo_negative);
}

TEST(Dicke, StretchedStateIsProduct) {
  const auto p = dicke_special(DickeParams::with_m(6, 3));
  EXPECT_DOUBLE_EQ(p.a, 1.0);
  EXPECT_DOUBLE_EQ(p.c, 0.0);
  EXPECT_LT(concurrence(symmetric_from_special(p).state()), 1e-12);
}

TEST(Dicke, ParameterValidation) {
  EXPECT_THROW(dicke_special(DickeParams{5, 0}), Error);
  EXPECT_THROW(dicke_special(DickeParams{4, 6}), Error);
  EXPECT_THROW(dicke_special(DickeParams{1, 1}), Error);
  EXPECT_NO_THROW(dicke_special(DickeParams{5, 1}));
}

TEST(Dicke, AgreesWithOracle) {
  for (const int N : {2, 3, 7, 12}) {
    for (int two_m = -N; two_m <= N; two_m += 2) {
      const auto closed = symmetric_from_special(dicke_special(DickeParams{N, two_m}));
      const auto oracle = pair_state_of(build_dicke_state(N, two_m));
      EXPECT_LT(max_abs(closed.rho() - oracle.rho()), 1e-12) << N << ' ' << two_m;
    }
  }
}

TEST(KitagawaUeda, UntwistedStateIsCoherent) {
  const auto pair = ku_pair({10, 0.0});
  EXPECT_NEAR(pair.s[2], -1, 1e-15);
  EXPECT_NEAR(pair.invariants.I3, 1, 1e-15);
  EXPECT_NEAR(pair.invariants.I5, 0, 1e-15);
  EXPECT_EQ(classify(pair.invariants).branch, PairBranch::separable_signature);
}

TEST(KitagawaUeda, SmallTwistSqueezes) {
  for (const int N : {4, 10, 40}) {
    const auto pair = ku_pair({N, 0.05});
    EXPECT_LT(pair.invariants.I5, 0) << N;
    EXPECT_EQ(classify(pair.invariants).branch, PairBranch::I5_negative);
  }
}

TEST(KitagawaUeda, ClosedFormsAgreeWithOracle) {
  for (const int N : {2, 3, 6, 15}) {
    for (const double x : {0.0, 0.1, 0.7, 1.5, 2.9}) {
      const auto pair = ku_pair({N, x});
      const auto oracle = pair_state_of(evolve_ku(N, x));
      EXPECT_LT(max_abs(pair.s - oracle.s()), 1e-11) << N << ' ' << x;
      EXPECT_LT(max_abs(pair.t - oracle.t()), 1e-11) << N << ' ' << x;
      const auto numeric = six_from_bloch(pair.s, pair.t);
      EXPECT_NEAR(pair.invariants.I1, numeric.I1, 1e-13);
      EXPECT_NEAR(pair.invariants.I2, numeric.I2, 1e-13);
      EXPECT_NEAR(pair.invariants.I4, numeric.I4, 1e-13);
      EXPECT_NEAR(pair.invariants.I5, numeric.I5, 1e-13);
    }
  }
}

TEST(KitagawaUeda, RejectsNonFiniteTime) {
  EXPECT_THROW(ku_pair({4, std::nan("")}), Error);
  EXPECT_THROW(ku_pair({1, 0.1}), Error);
}

TEST(WignerD, QuarterTurnValues) {
  EXPECT_NEAR(wigner_d_pi2(1, 1), -std::numbers::sqrt2 / 2, 1e-15);
  EXPECT_NEAR(wigner_d_pi2(1, 0), 0, 1e-15);
  EXPECT_NEAR(wigner_d_pi2(2, 0), -0.5, 1e-15);
  EXPECT_THROW(wigner_d_pi2(1, 2), Error);
}

TEST(WignerD, ColumnIsNormalized) {
  for (const int J : {1, 5, 20, 80}) {
    double total = 0;
    for (int M = -J; M <= J; ++M) total += std::pow(wigner_d_pi2(J, M), 2);
    EXPECT_NEAR(total, 1, 1e-12) << J;
  }
}

TEST(WignerD, MatchesRotatedOracleState) {
  for (const int N : {2, 6, 16}) {
    const auto psi = build_atomic_state(N, 0.0);
    const int J = N / 2;
    for (int k = 0; k <= N; ++k) {
      EXPECT_NEAR(psi.amplitudes[k].real(), wigner_d_pi2(J, J - k), 1e-12);
      EXPECT_NEAR(psi.amplitudes[k].imag(), 0, 1e-12);
    }
  }
}

TEST(Atomic, ParameterMaps) {
  const AtomicSqueezeParams p{8, 0.5};
  EXPECT_DOUBLE_EQ(p.theta(), 0.5 * std::log(0.5));
  EXPECT_DOUBLE_EQ(std::tanh(p.squeeze()), 0.5);
  EXPECT_THROW(atomic_pair(AtomicSqueezeParams{7, 0.5}), Error);
  EXPECT_THROW(atomic_pair(AtomicSqueezeParams{8, 1.0}), Error);
}

TEST(Atomic, AgreesWithOracleAndSqueezes) {
  for (const int N : {2, 4, 10, 30}) {
    for (const double x : {0.05, 0.3, 0.5, 0.9}) {
      const AtomicSqueezeParams p{N, x};
      const auto pair = atomic_pair(p);
      const auto oracle = pair_state_of(build_atomic_state(N, p.theta()));
      EXPECT_LT(max_abs(pair.s - oracle.s()), 1e-10) << N << ' ' << x;
      EXPECT_LT(max_abs(pair.t - oracle.t()), 1e-10) << N << ' ' << x;
      if (N > 2) {
        EXPECT_EQ(classify(pair.invariants).branch, PairBranch::I5_negative) << N << ' ' << x;
      }
    }
  }
}

TEST(ModelNames, ParseAndPrint) {
  EXPECT_EQ(parse_model("ku"), Model::ku);
  EXPECT_EQ(parse_model("atomic"), Model::atomic);
  EXPECT_EQ(parse_model("dicke"), Model::dicke);
  EXPECT_FALSE(parse_model("Dicke").has_value());
  EXPECT_EQ(to_string(Model::atomic), "atomic");
}

TEST(ParamRange, GridAndValidity) {
  const ParamRange r{0, 1, 5};
  const auto g = r.grid();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[2], 0.5);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_EQ((ParamRange{0.3, 0.9, 1}.grid()), std::vector<double>{0.3});
  EXPECT_TRUE(r.valid_for(Model::ku));
  EXPECT_FALSE(r.valid_for(Model::atomic));
  EXPECT_TRUE((ParamRange{0.1, 0.9, 3}.valid_for(Model::atomic)));
  EXPECT_FALSE((ParamRange{1, 0, 3}.valid_for(Model::ku)));
  EXPECT_FALSE((ParamRange{0, 1, 0}.valid_for(Model::ku)));
}

TEST(Sweep, OrderedAndThreadIndependent) {
  const ParamRange r{0, 3, 31};
  const auto one = sweep(Model::ku, {4, 9}, r, 1);
  const auto many = sweep(Model::ku, {4, 9}, r, 8);
  ASSERT_EQ(one.size(), 62u);
  ASSERT_EQ(many.size(), one.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    EXPECT_EQ(one[k].N, many[k].N);
    EXPECT_EQ(one[k].param, many[k].param);
    EXPECT_EQ(one[k].invariants.I5, many[k].invariants.I5);
    EXPECT_EQ(one[k].branch, many[k].branch);
  }
  EXPECT_EQ(one.front().N, 4);
  EXPECT_EQ(one.back().N, 9);
  EXPECT_DOUBLE_EQ(one[30].param, 3.0);
}

TEST(Sweep, DickeVisitsEveryM) {
  const auto rows = sweep(Model::dicke, {4}, {});
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_DOUBLE_EQ(rows.front().param, -2.0);
  EXPECT_DOUBLE_EQ(rows[2].param, 0.0);
  EXPECT_FALSE(rows[2].xi_sq.has_value());
  EXPECT_TRUE(rows[1].xi_sq.has_value());
}

TEST(Sweep, RejectsBadRange) {
  EXPECT_THROW(sweep(Model::atomic, {4}, {0, 1, 3}), Error);
  EXPECT_THROW(sweep(Model::atomic, {5}, {0.1, 0.5, 3}), Error);
}

}  // namespace
