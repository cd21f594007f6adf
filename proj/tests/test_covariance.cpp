#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "symsq/covariance.hpp"

namespace {

using namespace symsq;

const double h = std::numbers::sqrt2 / 2;

SymmetricTwoQubitState<double> bell() {
  return SymmetricTwoQubitState<double>::from(TwoQubitState<double>::from_density(projector<double>({h, 0, 0, h})));
}

TEST(CovarianceBlocks, ProductStateHasNoCorrelationExcess) {
  const auto st = TwoQubitState<double>::from_density(projector<double>({1, 0, 0, 0}));
  const auto b = covariance_blocks(st);
  EXPECT_LT(max_abs(b.C), 1e-15);
  EXPECT_LT(max_abs(b.A - Mat3<double>::diag(1, 1, 0)), 1e-15);
  EXPECT_LT(max_abs(b.B - b.A), 1e-15);
}

TEST(NegativityTest, BellAndSeparable) {
  const auto t = c_negativity_test(bell());
  EXPECT_NEAR(t.min_eig, -1, 1e-14);
  EXPECT_TRUE(t.entangled);

  std::mt19937_64 gen(1);
  for (int k = 0; k < 500; ++k) {
    const auto r = c_negativity_test(random_separable_symmetric<double>(1 + k % 4, gen));
    EXPECT_GE(r.min_eig, -1e-12);
    EXPECT_FALSE(r.entangled);
  }
}

TEST(NegativityTest, AgreesWithPartialTranspose) {
  std::mt19937_64 gen(2);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const double ppt = ppt_min_eigenvalue(sym.state());
    const auto c = c_negativity_test(sym);
    if (std::abs(ppt) < 1e-9 || std::abs(c.min_eig) < 1e-9) continue;
    EXPECT_EQ(ppt < 0, c.min_eig < 0) << k;
    ++checked;
  }
  EXPECT_GT(checked, 900);
}

TEST(PptChain, BlockFormsMatch) {
  std::mt19937_64 gen(3);
  for (int k = 0; k < 300; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto d = ppt_equivalence_chain(sym);
    EXPECT_LT(d.bordered_deviation, 1e-12);
    EXPECT_LT(d.reduced_deviation, 1e-12);
    EXPECT_LT(d.imaginary_residue, 1e-12);
    EXPECT_EQ(d.negative_eigs_ppt, d.negative_eigs_reduced);
  }
}

TEST(PptChain, BellHasOneNegativeDirection) {
  const auto d = ppt_equivalence_chain(bell());
  EXPECT_EQ(d.negative_eigs_ppt, 1);
  EXPECT_EQ(d.negative_eigs_reduced, 1);
}

TEST(BarInvariants, SpectralAndInvariantFormsAgree) {
  std::mt19937_64 gen(4);
  for (int k = 0; k < 300; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto a = bar_invariants(sym);
    const auto b = bar_from_six(symmetric_six(sym));
    EXPECT_NEAR(a.bar1, b.bar1, 1e-12);
    EXPECT_NEAR(a.bar2, b.bar2, 1e-12);
    EXPECT_NEAR(a.bar3, b.bar3, 1e-12);
    EXPECT_NEAR(a.bar4, b.bar4, 1e-12);
    if (std::abs(a.spectrum[0]) > 1e-9 && std::abs(a.bar1) > 1e-9 && std::abs(a.bar4) > 1e-9) {
      EXPECT_EQ(a.entangled(), a.spectrum[0] < 0) << k;
    }
  }
}

TEST(BarInvariants, SeparableTraceIsOneMinusI3) {
  std::mt19937_64 gen(5);
  const auto sym = random_separable_symmetric<double>(3, gen);
  EXPECT_NEAR(bar_invariants(sym).bar2, 1 - dot(sym.s(), sym.s()), 1e-14);
}

TEST(CollectiveCriterion, IdentityAndThreshold) {
  std::mt19937_64 gen(6);
  for (int k = 0; k < 300; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const int N = 2 + k % 40;
    const auto cc = collective_criterion(sym.s(), sym.t(), N);
    EXPECT_LT(cc.identity_residual, 1e-12 * N * N);
    const double cmin = c_negativity_test(sym).min_eig;
    EXPECT_NEAR(cc.min_eig, N / 4.0 * (1 + (N - 1) * cmin), 1e-10 * N * N);
    if (std::abs(cmin) > 1e-9) {
      EXPECT_EQ(cc.entangled, cmin < 0);
    }
  }
}

TEST(CollectiveCriterion, RejectsSmallN) {
  try {
    collective_criterion<double>({}, Mat3<double>::diag(1, 0, 0), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidN);
  }
}

TEST(Korbicz, MinimumBoundsEveryDirection) {
  std::mt19937_64 gen(7);
  for (int k = 0; k < 100; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto best = korbicz_minimum(sym.s(), sym.t());
    EXPECT_NEAR(korbicz_witness(sym.s(), sym.t(), best.direction), best.value, 1e-12);
    for (int j = 0; j < 20; ++j)
      EXPECT_GE(korbicz_witness(sym.s(), sym.t(), random_unit_vector<double>(gen)), best.value - 1e-12);
  }
}

TEST(Korbicz, RejectsNonUnitDirection) {
  try {
    korbicz_witness<double>({}, Mat3<double>::identity(), {1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonUnitVector);
  }
}

}  // namespace
