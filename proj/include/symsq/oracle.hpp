// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Brute-force simulator on the (N+1)-dimensional symmetric subspace. It
 * builds collective spin operators, prepares model states by direct matrix
 * functions and reads pair data back from the moments. Nothing here uses
 * the closed forms in models.hpp.
 */
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <vector>

#include "symsq/collective.hpp"
#include "symsq/numerics.hpp"
#include "symsq/states.hpp"

namespace symsq {

/// Index k holds M = N/2 - k.
template <std::floating_point R>
struct CollectiveState {
  int N = 0;
  std::vector<std::complex<R>> amplitudes;
};

template <std::floating_point R>
struct JOperators {
  int N = 0;
  CMatrix<R> J1, J2, J3, Jplus, Jminus;
};

namespace detail {

template <std::floating_point R>
std::shared_ptr<const JOperators<R>> make_j_operators(int N) {
  using C = std::complex<R>;
  const std::size_t dim = static_cast<std::size_t>(N) + 1;
  const R J = R(N) / 2;
  auto ops = std::make_shared<JOperators<R>>();
  ops->N = N;
  ops->Jplus = CMatrix<R>(dim, dim);
  ops->J3 = CMatrix<R>(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const R M = J - static_cast<R>(k);
    ops->J3(k, k) = M;
    if (k > 0) ops->Jplus(k - 1, k) = std::sqrt((J - M) * (J + M + 1));
  }
  ops->Jminus = ops->Jplus.adjoint();
  ops->J1 = C(R(0.5)) * (ops->Jplus + ops->Jminus);
  ops->J2 = C(0, R(-0.5)) * (ops->Jplus - ops->Jminus);
  return ops;
}

}  // namespace detail

/// Cached per N; first use builds, later calls share the same matrices.
template <std::floating_point R = double>
std::shared_ptr<const JOperators<R>> build_j_operators(int N) {
  if (N < 1) throw Error(Errc::InvalidN, "J operators need N >= 1", N);
  static std::shared_mutex lock;
  static std::map<int, std::shared_ptr<const JOperators<R>>> cache;
  {
    std::shared_lock read(lock);
    if (auto it = cache.find(N); it != cache.end()) return it->second;
  }
  std::unique_lock write(lock);
  auto& slot = cache[N];
  if (!slot) slot = detail::make_j_operators<R>(N);
  return slot;
}

template <std::floating_point R>
R norm_of(const std::vector<std::complex<R>>& v) {
  R acc = 0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

template <std::floating_point R>
std::complex<R> inner(const std::vector<std::complex<R>>& a, const std::vector<std::complex<R>>& b) {
  std::complex<R> acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

/// f(H) psi for Hermitian H via its eigendecomposition.
template <std::floating_point R, class F>
std::vector<std::complex<R>> apply_function(const CMatrix<R>& h, const std::vector<std::complex<R>>& psi,
                                            F&& f) {
  const auto es = hermitian_eigen(h);
  const std::size_t n = h.rows();
  std::vector<std::complex<R>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<R> proj{};
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(es.vectors(i, k)) * psi[i];
    proj *= f(es.values[k]);
    for (std::size_t i = 0; i < n; ++i) out[i] += es.vectors(i, k) * proj;
  }
  return out;
}

template <std::floating_point R = double>
CollectiveState<R> build_dicke_state(int N, int two_m) {
  if (N < 1) throw Error(Errc::InvalidN, "Dicke state needs N >= 1", N);
  if (std::abs(two_m) > N || (N + two_m) % 2 != 0)
    throw Error(Errc::ParityViolation, "invalid M for this N", two_m);
  CollectiveState<R> out{N, std::vector<std::complex<R>>(static_cast<std::size_t>(N) + 1)};
  out.amplitudes[static_cast<std::size_t>((N - two_m) / 2)] = 1;
  return out;
}

/// exp(-i chi_t J_1^2) applied to the all-down state M = -N/2.
template <std::floating_point R = double>
CollectiveState<R> evolve_ku(int N, R chi_t) {
  if (N < 2) throw Error(Errc::InvalidN, "twisting needs N >= 2", N);
  const auto ops = build_j_operators<R>(N);
  std::vector<std::complex<R>> start(static_cast<std::size_t>(N) + 1);
  start.back() = 1;
  const CMatrix<R> j1sq = ops->J1 * ops->J1;
  auto psi = apply_function<R>(j1sq, start, [&](R lambda) {
    return std::polar(R(1), -chi_t * lambda);
  });
  return {N, std::move(psi)};
}

/// A0 exp(theta J_3) exp(-i pi/2 J_2) |J, 0>, both exponentials taken spectrally.
template <std::floating_point R = double>
CollectiveState<R> build_atomic_state(int N, R theta) {
  if (N < 2 || N % 2 != 0) throw Error(Errc::ParityViolation, "atomic state needs even N", N);
  const auto ops = build_j_operators<R>(N);
  std::vector<std::complex<R>> start(static_cast<std::size_t>(N) + 1);
  start[static_cast<std::size_t>(N / 2)] = 1;
  auto psi = apply_function<R>(ops->J2, start, [](R lambda) {
    return std::polar(R(1), -std::numbers::pi_v<R> / 2 * lambda);
  });
  for (std::size_t k = 0; k < psi.size(); ++k) psi[k] *= std::exp(theta * ops->J3(k, k).real());
  const R len = norm_of(psi);
  if (!(len > 0) || !std::isfinite(len)) throw Error(Errc::NormalizationFailure, "state norm not representable");
  for (auto& z : psi) z /= len;
  return {N, std::move(psi)};
}

/// || R3 psi || with R3 = (J_- cosh q + J_+ sinh q) / sqrt(2 sinh 2q).
template <std::floating_point R = double>
R r3_residual(const CollectiveState<R>& state, R q) {
  const auto ops = build_j_operators<R>(state.N);
  const R scale = R(1) / std::sqrt(2 * std::sinh(2 * q));
  const auto a = ops->Jminus * state.amplitudes;
  const auto b = ops->Jplus * state.amplitudes;
  std::vector<std::complex<R>> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = scale * (std::cosh(q) * a[k] + std::sinh(q) * b[k]);
  return norm_of(v);
}

template <std::floating_point R>
CollectiveMoments<R> moments_of(const CollectiveState<R>& state) {
  const auto ops = build_j_operators<R>(state.N);
  const std::array<const CMatrix<R>*, 3> js{&ops->J1, &ops->J2, &ops->J3};
  std::array<std::vector<std::complex<R>>, 3> applied;
  for (std::size_t i = 0; i < 3; ++i) applied[i] = *js[i] * state.amplitudes;
  const R n2 = std::norm(norm_of(state.amplitudes));
  CollectiveMoments<R> m;
  m.N = state.N;
  for (std::size_t i = 0; i < 3; ++i) {
    m.j_mean[i] = inner(state.amplitudes, applied[i]).real() / n2;
    // <J_i J_j> + <J_j J_i> = 2 Re <J_i psi | J_j psi>
    for (std::size_t j = 0; j < 3; ++j) m.j_second(i, j) = inner(applied[i], applied[j]).real() / n2;
  }
  return m;
}

template <std::floating_point R>
SymmetricTwoQubitState<R> pair_state_of(const CollectiveState<R>& state, R tol = default_tol<R>) {
  if (state.N < 2) throw Error(Errc::InvalidN, "pair state needs N >= 2", state.N);
  const auto pair = pair_from_moments(moments_of(state));
  return SymmetricTwoQubitState<R>::from_bloch(pair.s, pair.t, tol);
}

}  // namespace symsq
