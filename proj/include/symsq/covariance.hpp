// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Two-qubit covariance blocks, the C = T - s s^T entanglement test for
 * symmetric states, the explicit partial-transpose reduction to C, the
 * invariants of C and the collective-spin form of the same criterion.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "symsq/invariants.hpp"
#include "symsq/numerics.hpp"
#include "symsq/states.hpp"

namespace symsq {

template <std::floating_point R>
struct CovarianceBlocks {
  Mat3<R> A;   ///< I - s s^T
  Mat3<R> B;   ///< I - r r^T
  Mat3<R> C;   ///< T - s r^T
};

template <std::floating_point R>
CovarianceBlocks<R> covariance_blocks(const Bloch<R>& b) {
  const Mat3<R> id = Mat3<R>::identity();
  return {id - outer(b.s, b.s), id - outer(b.r, b.r), b.t - outer(b.s, b.r)};
}

template <std::floating_point R>
CovarianceBlocks<R> covariance_blocks(const TwoQubitState<R>& state) {
  return covariance_blocks(state.bloch());
}

template <std::floating_point R>
Mat3<R> correlation_excess(const Vec3<R>& s, const Mat3<R>& t) {
  return t - outer(s, s);
}

template <std::floating_point R>
struct NegativityTest {
  R min_eig;
  bool entangled;
};

/// Entangled iff T - s s^T has an eigenvalue below -tol.
template <std::floating_point R>
NegativityTest<R> c_negativity_test(const SymmetricTwoQubitState<R>& state,
                                    R tol = default_tol<R>) {
  const R m = sym3_eigen(correlation_excess(state.s(), state.t())).values[0];
  return {m, m < -tol};
}

template <std::floating_point R>
NegativityTest<R> c_negativity_test(const TwoQubitState<R>& state, R tol = default_tol<R>) {
  return c_negativity_test(SymmetricTwoQubitState<R>::from(state, tol), tol);
}

// ---------------------------------------------------------------------------
// Partial transpose -> C reduction

template <std::floating_point R>
struct ChainDiagnostics {
  CMatrix<R> transposed;      ///< partial transpose followed by I (x) sigma_2 conjugation
  CMatrix<R> bordered;        ///< after both basis changes; equals (1/2)[[T, s], [s^T, 1]]
  CMatrix<R> reduced;         ///< after the congruence; equals (1/2) diag(T - s s^T, 1)
  R bordered_deviation = 0;
  R reduced_deviation = 0;
  R imaginary_residue = 0;    ///< largest imaginary part left in `bordered`
  int negative_eigs_ppt = 0;
  int negative_eigs_reduced = 0;
};

/// (-1, 0, 1, 0; -i, 0, -i, 0; 0, sqrt2, 0, 0; 0, 0, 0, sqrt2) / sqrt2
template <std::floating_point R>
CMatrix<R> cartesian_triplet_change() {
  using C = std::complex<R>;
  const R h = R(1) / std::sqrt(R(2));
  return CMatrix<R>(4, 4, {C(-h), C(0), C(h), C(0),      //
                           C(0, -h), C(0), C(0, -h), C(0),  //
                           C(0), C(1), C(0), C(0),         //
                           C(0), C(0), C(0), C(1)});
}

namespace detail {
template <std::floating_point R>
int count_negative(const std::vector<R>& values, R tol) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](R v) { return v < -tol; }));
}
}  // namespace detail

/**
 * Walks the partial transpose of a symmetric state to the block form
 * (1/2) diag(T - s s^T, 1). A pi rotation about axis 2 on the second qubit
 * (conjugation by I (x) sigma_2) follows the transpose so that every second-qubit
 * spin flips sign; without it the basis changes do not produce the bordered
 * [[T, s], [s^T, 1]] block. Only inertia survives the final congruence, so
 * the record compares negative-eigenvalue counts rather than spectra.
 */
template <std::floating_point R>
ChainDiagnostics<R> ppt_equivalence_chain(const SymmetricTwoQubitState<R>& state,
                                          R tol = default_tol<R>) {
  using C = std::complex<R>;
  ChainDiagnostics<R> out;
  const CMatrix<R> pt = partial_transpose(state.rho());
  const CMatrix<R> flip = kron(pauli<R>(0), pauli<R>(2));
  out.transposed = flip * pt * flip;

  const CMatrix<R> u = cartesian_triplet_change<R>() * triplet_basis_change<R>();
  out.bordered = u * out.transposed * u.adjoint();

  const Vec3<R>& s = state.s();
  const Mat3<R>& t = state.t();
  CMatrix<R> expected(4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) expected(i, j) = R(0.5) * t(i, j);
    expected(i, 3) = R(0.5) * s[i];
    expected(3, i) = R(0.5) * s[i];
  }
  expected(3, 3) = R(0.5);
  out.bordered_deviation = max_abs(out.bordered - expected);
  for (const auto& z : out.bordered.data()) out.imaginary_residue = std::max(out.imaginary_residue, std::abs(z.imag()));

  CMatrix<R> congruence = CMatrix<R>::identity(4);
  for (std::size_t i = 0; i < 3; ++i) congruence(i, 3) = C(-s[i]);
  out.reduced = congruence * out.bordered * congruence.adjoint();
  const Mat3<R> cmat = correlation_excess(s, t);
  CMatrix<R> expected_reduced(4, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) expected_reduced(i, j) = R(0.5) * cmat(i, j);
  expected_reduced(3, 3) = R(0.5);
  out.reduced_deviation = max_abs(out.reduced - expected_reduced);

  out.negative_eigs_ppt = detail::count_negative(hermitian_eigenvalues(pt, tol), tol);
  out.negative_eigs_reduced = detail::count_negative(hermitian_eigenvalues(out.reduced, tol), tol);

  const R worst = std::max(out.bordered_deviation, out.reduced_deviation);
  if (worst > R(1e-10)) throw Error(Errc::ChainMismatch, "transformation chain deviates", worst);
  return out;
}

// ---------------------------------------------------------------------------
// Invariants of C

template <std::floating_point R>
struct BarInvariants {
  R bar1 = 0;   ///< det C
  R bar2 = 0;   ///< Tr C
  R bar3 = 0;   ///< Tr C^2
  R bar4 = 0;   ///< (bar2^2 - bar3) / 2
  Vec3<R> spectrum{};   ///< ascending eigenvalues of C

  /// bar1 < 0 covers one negative eigenvalue; bar4 < 0 covers two.
  bool entangled(R tol = default_tol<R>) const { return bar1 < -tol || bar4 < -tol; }
};

template <std::floating_point R>
BarInvariants<R> bar_invariants(const SymmetricTwoQubitState<R>& state) {
  const auto es = sym3_eigen(correlation_excess(state.s(), state.t()));
  const Vec3<R>& c = es.values;
  BarInvariants<R> out;
  out.spectrum = c;
  out.bar1 = c[0] * c[1] * c[2];
  out.bar2 = c[0] + c[1] + c[2];
  out.bar3 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  out.bar4 = (out.bar2 * out.bar2 - out.bar3) / 2;
  return out;
}

/// Same quantities written through the six symmetric invariants.
template <std::floating_point R>
BarInvariants<R> bar_from_six(const SymmetricInvariants<R>& inv) {
  BarInvariants<R> out;
  out.bar1 = inv.I1 - inv.I5 / 2;
  out.bar2 = 1 - inv.I3;
  out.bar3 = inv.I2 + inv.I3 * inv.I3 - 2 * inv.I4;
  out.bar4 = (out.bar2 * out.bar2 - out.bar3) / 2;
  return out;
}

// ---------------------------------------------------------------------------
// Collective criterion

template <std::floating_point R>
struct CollectiveCriterion {
  int N = 0;
  Vec3<R> S{};               ///< <J>
  Mat3<R> Vn{};              ///< collective covariance
  Mat3<R> witness_matrix{};  ///< Vn + S S^T / N
  R min_eig = 0;
  R identity_residual = 0;   ///< distance to (N/4)(I + (N-1) C)
  bool entangled = false;
};

/**
 * Builds the collective covariance from the pair moments
 *   <J_i> = (N/2) s_i,  (1/2)<{J_i, J_j}> = (N/4)(delta_ij + (N-1) t_ij)
 * and tests the least eigenvalue of Vn + S S^T / N against N/4.
 */
template <std::floating_point R>
CollectiveCriterion<R> collective_criterion(const Vec3<R>& s, const Mat3<R>& t, int N,
                                            R tol = default_tol<R>) {
  if (N < 2) throw Error(Errc::InvalidN, "collective criterion needs N >= 2", N);
  const R n = static_cast<R>(N);
  CollectiveCriterion<R> out;
  out.N = N;
  out.S = (n / 2) * s;
  const Mat3<R> second = (n / 4) * (Mat3<R>::identity() + (n - 1) * t);
  out.Vn = second - outer(out.S, out.S);
  out.witness_matrix = out.Vn + (R(1) / n) * outer(out.S, out.S);
  const Mat3<R> closed = (n / 4) * (Mat3<R>::identity() + (n - 1) * correlation_excess(s, t));
  out.identity_residual = max_abs(out.witness_matrix - closed);
  const Mat3<R> sym = R(0.5) * (out.witness_matrix + transpose(out.witness_matrix));
  out.min_eig = sym3_eigen(sym, std::max(tol, R(1e-9) * n * n)).values[0];
  out.entangled = out.min_eig < n / 4 - tol;
  return out;
}

/// k^T (T - s s^T) k for a unit vector k.
template <std::floating_point R>
R korbicz_witness(const Vec3<R>& s, const Mat3<R>& t, const Vec3<R>& k, R tol = default_tol<R>) {
  const R len = norm(k);
  if (std::abs(len - 1) > tol) throw Error(Errc::NonUnitVector, "direction must be a unit vector", len);
  return dot(k, correlation_excess(s, t) * k);
}

template <std::floating_point R>
struct KorbiczMinimum {
  R value;
  Vec3<R> direction;
};

/// Exact minimum of the witness over directions: the least eigenpair of C.
template <std::floating_point R>
KorbiczMinimum<R> korbicz_minimum(const Vec3<R>& s, const Mat3<R>& t) {
  const auto es = sym3_eigen(correlation_excess(s, t));
  return {es.values[0], es.rotation.row(0)};
}

}  // namespace symsq
