#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "symsq/invariants.hpp"

namespace {

using namespace symsq;

const double h = std::numbers::sqrt2 / 2;

Mat3<double> adjugate(const Mat3<double>& t) {
  Mat3<double> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c(j, i) = t(i1, j1) * t(i2, j2) - t(i1, j2) * t(i2, j1);
    }
  return c;
}

TEST(SymmetricSix, BellState) {
  const auto inv = symmetric_six(TwoQubitState<double>::from_density(projector<double>({h, 0, 0, h})));
  EXPECT_NEAR(inv.I1, -1, 1e-15);
  EXPECT_NEAR(inv.I2, 3, 1e-14);
  EXPECT_NEAR(inv.I3, 0, 1e-15);
  EXPECT_NEAR(inv.I4, 0, 1e-15);
  EXPECT_NEAR(inv.I5, 0, 1e-15);
  EXPECT_NEAR(inv.I6, 0, 1e-15);
}

TEST(SymmetricSix, ProductStateSigns) {
  const auto inv = symmetric_six(TwoQubitState<double>::from_density(projector<double>({1, 0, 0, 0})));
  EXPECT_NEAR(inv.I3, 1, 1e-15);
  EXPECT_NEAR(inv.I4, 1, 1e-15);
  EXPECT_NEAR(inv.I4_minus_I3sq, 0, 1e-15);
  EXPECT_NEAR(inv.I5, 0, 1e-15);
}

TEST(SymmetricSix, DoubleEpsilonIsAdjugateForm) {
  std::mt19937_64 gen(1);
  for (int k = 0; k < 200; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto inv = symmetric_six(sym);
    EXPECT_NEAR(inv.I5, 2 * dot(sym.s(), adjugate(sym.t()) * sym.s()), 1e-13);
  }
}

TEST(SymmetricSix, SpecialClassClosedForms) {
  std::mt19937_64 gen(2);
  for (int k = 0; k < 300; ++k) {
    const auto p = random_special_class<double>(gen);
    const auto a = symmetric_six(symmetric_from_special(p));
    const auto b = special_class_invariants(p);
    EXPECT_NEAR(a.I1, b.I1, 1e-13);
    EXPECT_NEAR(a.I2, b.I2, 1e-13);
    EXPECT_NEAR(a.I3, b.I3, 1e-13);
    EXPECT_NEAR(a.I4, b.I4, 1e-13);
    EXPECT_NEAR(a.I5, b.I5, 1e-13);
    EXPECT_NEAR(a.I6, 0.0, 1e-13);
  }
}

TEST(Makhlin, SymmetricDegeneracies) {
  std::mt19937_64 gen(3);
  for (int k = 0; k < 200; ++k) {
    const auto m = makhlin_all(random_symmetric_state<double>(1 + k % 3, gen).state());
    EXPECT_NEAR(m(4), m(7), 1e-12);
    EXPECT_NEAR(m(5), m(8), 1e-12);
    EXPECT_NEAR(m(6), m(9), 1e-12);
    EXPECT_NEAR(m(10), m(11), 1e-12);
    EXPECT_NEAR(m(15), m(16), 1e-12);
    EXPECT_NEAR(m(17), m(18), 1e-12);
  }
}

TEST(Makhlin, NonNegativeQuadraticForms) {
  std::mt19937_64 gen(4);
  for (int k = 0; k < 200; ++k) {
    const auto m = makhlin_all(random_two_qubit_state<double>(1 + k % 4, gen));
    for (const int i : {2, 3, 4, 5, 6, 7, 8, 9}) EXPECT_GE(m(i), -1e-15) << i;
  }
}

TEST(Makhlin, InvariantUnderIndependentLocalUnitaries) {
  std::mt19937_64 gen(5);
  for (int k = 0; k < 300; ++k) {
    const auto st = random_two_qubit_state<double>(1 + k % 4, gen);
    const auto moved = apply_local_unitaries(st, haar_su2<double>(gen), haar_su2<double>(gen));
    const auto a = makhlin_all(st), b = makhlin_all(moved);
    for (int i = 1; i <= 18; ++i) EXPECT_NEAR(a(i), b(i), 1e-12) << "I" << i;
    EXPECT_TRUE(locally_equivalent(st, moved));
  }
}

TEST(Makhlin, DistinguishesInequivalentStates) {
  std::mt19937_64 gen(6);
  const auto a = random_two_qubit_state<double>(2, gen);
  const auto b = random_two_qubit_state<double>(2, gen);
  EXPECT_FALSE(locally_equivalent(a, b));
}

TEST(SeparabilityFlags, KnownStates) {
  const auto bell = separability_flags(
      symmetric_six(TwoQubitState<double>::from_density(projector<double>({h, 0, 0, h}))));
  EXPECT_TRUE(bell.I1_negative_with_I3_zero);
  EXPECT_TRUE(bell.any());

  // Maximally mixed within the triplet space.
  const auto mixed = separability_flags(
      symmetric_six(SymmetricTwoQubitState<double>::from_bloch({}, (1.0 / 3.0) * Mat3<double>::identity())));
  EXPECT_FALSE(mixed.any());

  const SpecialClassState<double> squeezed{0.6, -0.3, 0.1, 0.2};
  const auto f = separability_flags(symmetric_six(symmetric_from_special(squeezed)));
  EXPECT_TRUE(f.I5_negative);
  EXPECT_FALSE(f.I1_negative_with_I3_zero);
}

TEST(SeparabilityFlags, SeparableMixturesRaiseNothing) {
  std::mt19937_64 gen(7);
  for (int k = 0; k < 1000; ++k) {
    const auto inv = symmetric_six(random_separable_symmetric<double>(1 + k % 4, gen));
    EXPECT_FALSE(separability_flags(inv, 1e-9).any());
  }
}

// ---------------------------------------------------------------------------
// Canonical form

TEST(CanonicalForm, AlreadyCanonicalIsUntouched) {
  const Vec3<double> s{0.1, 0.05, 0.02};
  const auto st = from_bloch(s, s, Mat3<double>::diag(0.5, 0.3, 0.2));
  const auto cf = canonical_form(st);
  EXPECT_EQ(cf.branch, DegeneracyBranch::nondegenerate);
  EXPECT_LT(max_abs(cf.o1 - Mat3<double>::identity()), 1e-12);
  EXPECT_LT(max_abs(cf.o2 - Mat3<double>::identity()), 1e-12);
  EXPECT_LT(max_abs(cf.s_canon - s), 1e-12);
}

TEST(CanonicalForm, ReconstructionIsLocallyEquivalent) {
  std::mt19937_64 gen(8);
  for (int k = 0; k < 200; ++k) {
    const auto st = random_two_qubit_state<double>(1 + k % 4, gen);
    const auto cf = canonical_form(st);
    EXPECT_TRUE(locally_equivalent(st, reconstruct(cf), 1e-9));
    EXPECT_LT(max_abs(cf.o1 * st.t() * transpose(cf.o2) - Mat3<double>::diag(cf.t_diag)), 1e-12);
    EXPECT_LT(max_abs(cf.o1 * st.s() - cf.s_canon), 1e-12);
    EXPECT_LT(max_abs(cf.o2 * st.r() - cf.r_canon), 1e-12);
  }
}

TEST(CanonicalForm, SameOrbitSameForm) {
  std::mt19937_64 gen(9);
  for (int k = 0; k < 200; ++k) {
    const auto st = random_two_qubit_state<double>(1 + k % 4, gen);
    const auto moved = apply_local_unitaries(st, haar_su2<double>(gen), haar_su2<double>(gen));
    const auto a = canonical_form(st), b = canonical_form(moved);
    EXPECT_LT(max_abs(a.t_diag - b.t_diag), 1e-10);
    EXPECT_LT(max_abs(a.s_canon - b.s_canon), 1e-8);
    EXPECT_LT(max_abs(a.r_canon - b.r_canon), 1e-8);
  }
}

TEST(CanonicalForm, FullyDegenerateBell) {
  const auto cf = canonical_form(TwoQubitState<double>::from_density(projector<double>({h, 0, 0, h})));
  EXPECT_EQ(cf.branch, DegeneracyBranch::fully_degenerate);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(cf.t_diag[i], -1, 1e-12);
}

TEST(CanonicalForm, PartiallyDegenerateSpecialClass) {
  // b = 0 makes t1 = t2; s lies along the third axis.
  const auto sym = symmetric_from_special(SpecialClassState<double>{0.5, 0.0, 0.1, 0.3});
  const auto cf = canonical_form(sym.state());
  EXPECT_EQ(cf.branch, DegeneracyBranch::partially_degenerate);
  EXPECT_TRUE(locally_equivalent(sym.state(), reconstruct(cf), 1e-9));
}

TEST(CanonicalForm, AmbiguousGapThrows) {
  // Relative gap of the squared singular values is about 5e-8.
  const double delta = 1e-8;
  const auto st = from_bloch<double>({}, {}, Mat3<double>::diag(0.4, 0.4 - delta, 0.2));
  try {
    canonical_form(st);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateUnhandled);
  }
}

}  // namespace
