#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "symsq/collective.hpp"

namespace {

using namespace symsq;

const double h = std::numbers::sqrt2 / 2;

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no symsq::Error thrown";
  return Errc::DomainError;
}

SymmetricInvariants<double> with_spin(double I1, double I4, double I5, double I3 = 0.25) {
  SymmetricInvariants<double> inv;
  inv.I1 = I1;
  inv.I3 = I3;
  inv.I4 = I4;
  inv.I5 = I5;
  inv.I4_minus_I3sq = I4 - I3 * I3;
  return inv;
}

TEST(Moments, RoundTrip) {
  std::mt19937_64 gen(1);
  for (int k = 0; k < 100; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const int N = 2 + k;
    const auto back = pair_from_moments(moments_from_pair(sym.s(), sym.t(), N));
    EXPECT_LT(max_abs(back.s - sym.s()), 1e-13);
    EXPECT_LT(max_abs(back.t - sym.t()), 1e-12);
  }
}

TEST(Moments, CasimirForSymmetricPairs) {
  // Tr <J J> = (N/4)(3 + (N-1) Tr T) = (N/2)(N/2 + 1) when Tr T = 1.
  const auto m = moments_from_pair<double>({0, 0, 0.3}, Mat3<double>::diag(0.2, 0.2, 0.6), 8);
  EXPECT_NEAR(trace(m.j_second), 4.0 * 5.0, 1e-12);
  EXPECT_NEAR(m.j_mean[2], 1.2, 1e-15);
}

TEST(Moments, Errors) {
  EXPECT_EQ(code_of([] { moments_from_pair<double>({}, Mat3<double>::identity(), 4); }), Errc::TraceViolation);
  EXPECT_EQ(code_of([] { moments_from_pair<double>({}, Mat3<double>::diag(1, 0, 0), 1); }), Errc::InvalidN);
  EXPECT_EQ(code_of([] { pair_from_moments(CollectiveMoments<double>{}); }), Errc::InvalidN);
}

TEST(Squeezing, SqueezedSpecialState) {
  const auto sym = symmetric_from_special(SpecialClassState<double>{0.6, -0.3, 0.1, 0.2});
  const auto sq = squeezing(sym.s(), sym.t(), 10);
  EXPECT_LT(sq.xi_sq, 1);
  EXPECT_GT(sq.max_variance_ratio, 1);
  EXPECT_NEAR(std::abs(sq.mean_spin_dir[2]), 1, 1e-15);
  EXPECT_NEAR(dot(sq.squeeze_dir, sq.mean_spin_dir), 0, 1e-15);
  // Closed form: t_perp_minus = 2(c - |b|) = -0.4.
  EXPECT_NEAR(sq.xi_sq, 1 + 9 * (-0.4), 1e-13);
}

TEST(Squeezing, SignMatchesI5) {
  std::mt19937_64 gen(2);
  for (int k = 0; k < 500; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto inv = symmetric_six(sym);
    if (inv.I3 < 1e-6) continue;
    const auto sq = squeezing(sym.s(), sym.t(), 6);
    // I5 = 2 |s|^2 t_perp_minus t_perp_plus
    EXPECT_NEAR(inv.I5, 2 * inv.I3 * sq.t_perp_minus * sq.t_perp_plus, 1e-12);
  }
}

TEST(Squeezing, Errors) {
  EXPECT_EQ(code_of([] { squeezing<double>({}, Mat3<double>::diag(1, -1, 1), 4); }), Errc::ZeroMeanSpin);
  EXPECT_EQ(code_of([] { squeezing<double>({0, 0, 1}, Mat3<double>::diag(0, 0, 1), 1); }), Errc::InvalidN);
}

TEST(Classify, BranchOrder) {
  EXPECT_EQ(classify(with_spin(0, 0.1, -0.2)).branch, PairBranch::I5_negative);
  EXPECT_EQ(classify(with_spin(0, -0.1, -0.2)).branch, PairBranch::I5_negative);
  EXPECT_EQ(classify(with_spin(0, -0.1, 0.2)).branch, PairBranch::I4_negative);
  EXPECT_EQ(classify(with_spin(0, 0.01, 0.2)).branch, PairBranch::I4_pos_combo_negative);
  EXPECT_EQ(classify(with_spin(0, 0.2, 0.2)).branch, PairBranch::separable_signature);
}

TEST(Classify, ZeroMeanSpinUsesI1) {
  const auto c = classify(with_spin(-0.5, 0, 0, 0));
  EXPECT_EQ(c.branch, PairBranch::I3_zero_I1_negative);
  EXPECT_DOUBLE_EQ(c.margin, -0.5);
  EXPECT_FALSE(c.collective_note.empty());
  EXPECT_EQ(classify(with_spin(0.1, 0, 0, 0)).branch, PairBranch::separable_signature);
}

TEST(Classify, StrictComparisons) {
  EXPECT_EQ(classify(with_spin(0, 0.2, -1e-10)).branch, PairBranch::separable_signature);
  EXPECT_EQ(classify(with_spin(-1e-10, 0, 0, 0)).branch, PairBranch::separable_signature);
}

TEST(Classify, StatesAndNames) {
  const auto bell =
      SymmetricTwoQubitState<double>::from(TwoQubitState<double>::from_density(projector<double>({h, 0, 0, h})));
  EXPECT_EQ(classify(bell, 4).branch, PairBranch::I3_zero_I1_negative);
  EXPECT_EQ(code_of([&] { classify(bell, 1); }), Errc::InvalidN);
  EXPECT_EQ(to_string(PairBranch::I4_pos_combo_negative), "I4_pos_combo_negative");
}

TEST(CollectiveForms, MatchDirectInvariants) {
  std::mt19937_64 gen(3);
  for (int k = 0; k < 300; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto inv = symmetric_six(sym);
    if (inv.I3 < 1e-6) continue;
    const int N = 2 + k % 30;
    const auto f = collective_forms(inv, sym.s(), sym.t(), N);
    EXPECT_LT(f.max_deviation, 1e-11) << k;
    EXPECT_NEAR(f.xi_sq, squeezing(sym.s(), sym.t(), N).xi_sq, 1e-11);
  }
}

TEST(CollectiveForms, RejectsZeroSpin) {
  const SymmetricInvariants<double> inv;
  EXPECT_EQ(code_of([&] { collective_forms<double>(inv, {}, Mat3<double>::diag(1, -1, 1), 4); }), Errc::ZeroMeanSpin);
}

}  // namespace
