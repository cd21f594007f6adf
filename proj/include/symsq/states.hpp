// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Two-qubit density matrices and their Bloch data (s, r, T), the symmetric
 * and special-class subfamilies, partial transpose, concurrence and seeded
 * random-state samplers.
 *
 * Basis order is {|00>, |01>, |10>, |11>} with |0> the spin-up state.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "symsq/errors.hpp"
#include "symsq/numerics.hpp"

namespace symsq {

/// States whose spectrum dips below this are rejected as non-positive.
template <std::floating_point R>
inline constexpr R positivity_gate = R(1e-9);

template <std::floating_point R>
struct Bloch {
  Vec3<R> s;   ///< first-qubit Bloch vector
  Vec3<R> r;   ///< second-qubit Bloch vector
  Mat3<R> t;   ///< correlation matrix
};

namespace detail {

template <std::floating_point R>
const std::array<CMatrix<R>, 16>& pauli_products() {
  static const std::array<CMatrix<R>, 16> table = [] {
    std::array<CMatrix<R>, 16> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[4 * i + j] = kron(pauli<R>(i), pauli<R>(j));
    return out;
  }();
  return table;
}

/// Re Tr(rho * (sigma_i (x) sigma_j)) without forming the product.
template <std::floating_point R>
R pauli_expectation(const CMatrix<R>& rho, int i, int j) {
  const auto& p = pauli_products<R>()[4 * i + j];
  std::complex<R> acc{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) acc += rho(a, b) * p(b, a);
  return acc.real();
}

template <std::floating_point R>
Bloch<R> bloch_of_matrix(const CMatrix<R>& rho) {
  Bloch<R> out;
  for (int i = 1; i <= 3; ++i) {
    out.s[i - 1] = pauli_expectation(rho, i, 0);
    out.r[i - 1] = pauli_expectation(rho, 0, i);
    for (int j = 1; j <= 3; ++j) out.t(i - 1, j - 1) = pauli_expectation(rho, i, j);
  }
  return out;
}

template <std::floating_point R>
CMatrix<R> matrix_of_bloch(const Vec3<R>& s, const Vec3<R>& r, const Mat3<R>& t) {
  const auto& p = pauli_products<R>();
  CMatrix<R> rho = p[0];
  for (int i = 1; i <= 3; ++i) {
    rho = rho + std::complex<R>(s[i - 1]) * p[4 * i];
    rho = rho + std::complex<R>(r[i - 1]) * p[i];
    for (int j = 1; j <= 3; ++j) rho = rho + std::complex<R>(t(i - 1, j - 1)) * p[4 * i + j];
  }
  return std::complex<R>(R(0.25)) * rho;
}

template <std::floating_point R>
bool all_finite(const CMatrix<R>& m) {
  for (const auto& z : m.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace detail

/// A validated two-qubit density matrix with cached Bloch data.
template <std::floating_point R>
class TwoQubitState {
 public:
  /// Validates Hermiticity, unit trace and positivity (gate -1e-9).
  static TwoQubitState from_density(const CMatrix<R>& rho, R tol = default_tol<R>) {
    if (rho.rows() != 4 || rho.cols() != 4)
      throw Error(Errc::InvalidDensityMatrix, "two-qubit density matrix must be 4x4");
    if (!detail::all_finite(rho)) throw Error(Errc::InvalidDensityMatrix, "non-finite entry");
    const R defect = hermiticity_defect(rho);
    if (defect > tol) throw Error(Errc::InvalidDensityMatrix, "matrix is not Hermitian", defect);
    const CMatrix<R> h = std::complex<R>(R(0.5)) * (rho + rho.adjoint());
    const R tr = h.trace().real();
    if (std::abs(tr - 1) > tol)
      throw Error(Errc::InvalidDensityMatrix, "trace differs from 1", tr);
    const R min_eig = hermitian_eigenvalues(h, tol).front();
    if (min_eig < -positivity_gate<R>)
      throw Error(Errc::NotPositive, "density matrix has a negative eigenvalue", min_eig);
    return TwoQubitState(h, detail::bloch_of_matrix(h));
  }

  const CMatrix<R>& rho() const noexcept { return rho_; }
  const Bloch<R>& bloch() const noexcept { return bloch_; }
  const Vec3<R>& s() const noexcept { return bloch_.s; }
  const Vec3<R>& r() const noexcept { return bloch_.r; }
  const Mat3<R>& t() const noexcept { return bloch_.t; }

 private:
  TwoQubitState(CMatrix<R> rho, Bloch<R> bloch) : rho_(std::move(rho)), bloch_(bloch) {}

  CMatrix<R> rho_;
  Bloch<R> bloch_;
};

/// rho = (1/4)(I + s.sigma (x) I + I (x) r.sigma + sum t_ij sigma_i (x) sigma_j).
template <std::floating_point R>
TwoQubitState<R> from_bloch(const Vec3<R>& s, const Vec3<R>& r, const Mat3<R>& t,
                            R tol = default_tol<R>) {
  return TwoQubitState<R>::from_density(detail::matrix_of_bloch(s, r, t), tol);
}

template <std::floating_point R>
TwoQubitState<R> from_bloch(const Bloch<R>& b, R tol = default_tol<R>) {
  return from_bloch(b.s, b.r, b.t, tol);
}

template <std::floating_point R>
Bloch<R> bloch_decompose(const TwoQubitState<R>& state) {
  return detail::bloch_of_matrix(state.rho());
}

/// Density matrix of a pure two-qubit state given by four amplitudes.
template <std::floating_point R>
CMatrix<R> projector(const std::vector<std::complex<R>>& psi) {
  CMatrix<R> out(psi.size(), psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) out(i, j) = psi[i] * std::conj(psi[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric states

/// Rows are |1,1>, |1,0>, |1,-1>, |0,0> in the computational basis.
template <std::floating_point R>
CMatrix<R> triplet_basis_change() {
  const R h = R(1) / std::sqrt(R(2));
  return CMatrix<R>(4, 4, {1, 0, 0, 0,  //
                           0, h, h, 0,  //
                           0, 0, 0, 1,  //
                           0, h, -h, 0});
}

template <std::floating_point R>
R singlet_population(const CMatrix<R>& rho) {
  // <0,0| rho |0,0> with |0,0> = (|01> - |10>)/sqrt 2
  return R(0.5) * (rho(1, 1) - rho(1, 2) - rho(2, 1) + rho(2, 2)).real();
}

/// A two-qubit state invariant under qubit exchange: r = s, T = T^T, Tr T = 1.
template <std::floating_point R>
class SymmetricTwoQubitState {
 public:
  static SymmetricTwoQubitState from(const TwoQubitState<R>& state, R tol = default_tol<R>) {
    const R ds = max_abs(state.s() - state.r());
    const R dt = asymmetry(state.t());
    const R dtr = std::abs(trace(state.t()) - 1);
    const R worst = std::max({ds, dt, dtr});
    if (worst > tol) throw Error(Errc::NotSymmetric, "state is not exchange symmetric", worst);
    return SymmetricTwoQubitState(state);
  }

  static SymmetricTwoQubitState from_bloch(const Vec3<R>& s, const Mat3<R>& t,
                                           R tol = default_tol<R>) {
    return from(symsq::from_bloch(s, s, t, tol), tol);
  }

  const TwoQubitState<R>& state() const noexcept { return state_; }
  const CMatrix<R>& rho() const noexcept { return state_.rho(); }
  const Vec3<R>& s() const noexcept { return state_.s(); }
  const Mat3<R>& t() const noexcept { return state_.t(); }

 private:
  explicit SymmetricTwoQubitState(const TwoQubitState<R>& state) : state_(state) {}
  TwoQubitState<R> state_;
};

/**
 * Four-parameter symmetric family
 *   [[a,0,0,b],[0,c,c,0],[0,c,c,0],[b,0,0,d]],  a + 2c + d = 1.
 * b is real and may be negative.
 */
template <std::floating_point R>
struct SpecialClassState {
  R a = 0, b = 0, c = 0, d = 0;

  /// Checks trace and positivity (a, c, d >= 0 and b^2 <= a d).
  void validate(R tol = default_tol<R>) const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
      throw Error(Errc::InvalidDensityMatrix, "non-finite special-class parameter");
    const R tr = a + 2 * c + d;
    if (std::abs(tr - 1) > tol) throw Error(Errc::InvalidDensityMatrix, "a + 2c + d != 1", tr);
    const R worst = std::min({a, c, d, a * d - b * b});
    if (worst < -positivity_gate<R>)
      throw Error(Errc::NotPositive, "special-class parameters are not positive", worst);
  }

  CMatrix<R> matrix() const {
    return CMatrix<R>(4, 4, {a, 0, 0, b,  //
                             0, c, c, 0,  //
                             0, c, c, 0,  //
                             b, 0, 0, d});
  }

  Vec3<R> s() const { return {0, 0, a - d}; }
  Mat3<R> t() const { return Mat3<R>::diag(2 * (c + b), 2 * (c - b), a + d - 2 * c); }

  /// Partial-transpose spectrum {lambda1 <= lambda2, lambda3 <= lambda4}.
  std::array<R, 4> ppt_eigenvalues() const {
    const R root = std::sqrt((a - d) * (a - d) + 4 * c * c);
    return {R(0.5) * ((a + d) - root), R(0.5) * ((a + d) + root), c - std::abs(b),
            c + std::abs(b)};
  }
};

template <std::floating_point R>
SymmetricTwoQubitState<R> symmetric_from_special(const SpecialClassState<R>& p,
                                                 R tol = default_tol<R>) {
  p.validate(tol);
  return SymmetricTwoQubitState<R>::from(TwoQubitState<R>::from_density(p.matrix(), tol), tol);
}

/// Pure state k1|00> + k2|11>.
template <std::floating_point R>
struct SchmidtPair {
  R k1 = 1, k2 = 0;

  TwoQubitState<R> state(R tol = default_tol<R>) const {
    if (std::abs(k1 * k1 + k2 * k2 - 1) > tol)
      throw Error(Errc::InvalidDensityMatrix, "Schmidt coefficients are not normalized");
    return TwoQubitState<R>::from_density(projector<R>({k1, 0, 0, k2}), tol);
  }
};

// ---------------------------------------------------------------------------
// Partial transpose and concurrence

/// Transpose on the second qubit: out(m mu, n nu) = rho(m nu, n mu).
template <std::floating_point R>
CMatrix<R> partial_transpose(const CMatrix<R>& rho) {
  CMatrix<R> out(4, 4);
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t mu = 0; mu < 2; ++mu)
      for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t nu = 0; nu < 2; ++nu) out(2 * m + mu, 2 * n + nu) = rho(2 * m + nu, 2 * n + mu);
  return out;
}

template <std::floating_point R>
CMatrix<R> partial_transpose(const TwoQubitState<R>& state) {
  return partial_transpose(state.rho());
}

/// Smallest eigenvalue of the partial transpose; negative means entangled.
template <std::floating_point R>
R ppt_min_eigenvalue(const TwoQubitState<R>& state, R tol = default_tol<R>) {
  return hermitian_eigenvalues(partial_transpose(state), tol).front();
}

namespace detail {
/// Eigenvalues within a few ulps of ||m|| are rounding noise and are
/// dropped, so a rank-deficient input keeps an exactly rank-deficient root.
template <std::floating_point R>
CMatrix<R> psd_sqrt(const CMatrix<R>& m, R tol) {
  const auto es = hermitian_eigen(m, tol);
  const std::size_t n = m.rows();
  const R floor = R(4 * n) * std::numeric_limits<R>::epsilon() * std::max(R(1), es.values.back());
  CMatrix<R> out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] <= floor) continue;
    const R root = std::sqrt(es.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}
}  // namespace detail

/**
 * Wootters concurrence. The spin-flip values lambda_i are the singular
 * values of sqrt(rho) sqrt(rho~), with sqrt(rho~) = F conj(sqrt(rho)) F and
 * F = sigma_y (x) sigma_y. Taking them directly avoids square roots of
 * eigenvalue noise.
 */
template <std::floating_point R>
R concurrence(const TwoQubitState<R>& state, R tol = default_tol<R>) {
  const CMatrix<R> flip = kron(pauli<R>(2), pauli<R>(2));
  const CMatrix<R> root = detail::psd_sqrt(state.rho(), tol);
  CMatrix<R> conj_root = root;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) conj_root(i, j) = std::conj(root(i, j));
  const auto lam = singular_values(CMatrix<R>(root * (flip * conj_root * flip)));
  return std::max(R(0), lam[0] - lam[1] - lam[2] - lam[3]);
}

template <std::floating_point R>
R entanglement_of_formation(R concurrence_value) {
  const R c = std::clamp(concurrence_value, R(0), R(1));
  const R x = R(0.5) * (1 + std::sqrt(1 - c * c));
  auto h = [](R p) { return p <= 0 || p >= 1 ? R(0) : -p * std::log2(p) - (1 - p) * std::log2(1 - p); };
  return h(x);
}

// ---------------------------------------------------------------------------
// Local unitaries

template <std::floating_point R>
TwoQubitState<R> apply_local_unitaries(const TwoQubitState<R>& state, const CMatrix<R>& u1,
                                       const CMatrix<R>& u2, R tol = default_tol<R>) {
  for (const auto* u : {&u1, &u2}) {
    if (u->rows() != 2 || u->cols() != 2) throw Error(Errc::NonSquare, "expected a 2x2 unitary");
    const R defect = max_abs(u->adjoint() * *u - CMatrix<R>::identity(2));
    if (defect > tol) throw Error(Errc::NonUnitary, "local operation is not unitary", defect);
  }
  const CMatrix<R> u = kron(u1, u2);
  return TwoQubitState<R>::from_density(u * state.rho() * u.adjoint(), tol);
}

// ---------------------------------------------------------------------------
// Seeded samplers

/// Convex mixture of n identical product pairs rho_w (x) rho_w with Haar
/// directions and Dirichlet(1) weights.
template <std::floating_point R = double, std::uniform_random_bit_generator G>
SymmetricTwoQubitState<R> random_separable_symmetric(int n_terms, G& gen) {
  if (n_terms < 1) throw Error(Errc::DomainError, "n_terms must be positive");
  const auto w = dirichlet_weights<R>(static_cast<std::size_t>(n_terms), gen);
  Vec3<R> s{};
  Mat3<R> t{};
  for (const R weight : w) {
    const Vec3<R> n = random_unit_vector<R>(gen);
    s = s + weight * n;
    t = t + weight * outer(n, n);
  }
  return SymmetricTwoQubitState<R>::from_bloch(s, t);
}

template <std::floating_point R = double>
SymmetricTwoQubitState<R> random_separable_symmetric(int n_terms, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_separable_symmetric<R>(n_terms, gen);
}

/// Mixture of `rank` Haar-random pure states on the triplet subspace.
template <std::floating_point R = double, std::uniform_random_bit_generator G>
SymmetricTwoQubitState<R> random_symmetric_state(int rank, G& gen) {
  if (rank < 1 || rank > 3) throw Error(Errc::DomainError, "rank must be 1, 2 or 3");
  const auto w = dirichlet_weights<R>(static_cast<std::size_t>(rank), gen);
  const CMatrix<R> basis = triplet_basis_change<R>();
  CMatrix<R> rho(4, 4);
  for (const R weight : w) {
    const auto amp = haar_vector<R>(3, gen);
    std::vector<std::complex<R>> psi(4);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 4; ++i) psi[i] += amp[k] * basis(k, i);
    rho = rho + std::complex<R>(weight) * projector(psi);
  }
  return SymmetricTwoQubitState<R>::from(TwoQubitState<R>::from_density(rho));
}

template <std::floating_point R = double>
SymmetricTwoQubitState<R> random_symmetric_state(int rank, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_symmetric_state<R>(rank, gen);
}

/// General two-qubit mixed state: `rank` Haar pure states, Dirichlet weights.
template <std::floating_point R = double, std::uniform_random_bit_generator G>
TwoQubitState<R> random_two_qubit_state(int rank, G& gen) {
  if (rank < 1 || rank > 4) throw Error(Errc::DomainError, "rank must be 1..4");
  const auto w = dirichlet_weights<R>(static_cast<std::size_t>(rank), gen);
  CMatrix<R> rho(4, 4);
  for (const R weight : w) rho = rho + std::complex<R>(weight) * projector(haar_vector<R>(4, gen));
  return TwoQubitState<R>::from_density(rho);
}

/// Uniform draw of (a, 2c, d) on the simplex and b uniform in [-sqrt(ad), sqrt(ad)].
template <std::floating_point R = double, std::uniform_random_bit_generator G>
SpecialClassState<R> random_special_class(G& gen) {
  const auto w = dirichlet_weights<R>(3, gen);
  SpecialClassState<R> p;
  p.a = w[0];
  p.c = w[1] / 2;
  p.d = w[2];
  const R bound = std::sqrt(p.a * p.d);
  p.b = std::uniform_real_distribution<R>(-bound, bound)(gen);
  return p;
}

}  // namespace symsq
