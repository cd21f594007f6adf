// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Maps between symmetric pair data (s, T) and collective spin moments of an
 * N-qubit symmetric state, the spin-squeezing parameter and the sign-based
 * classification of pairwise entanglement.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

#include "symsq/covariance.hpp"
#include "symsq/invariants.hpp"
#include "symsq/numerics.hpp"
#include "symsq/states.hpp"

namespace symsq {

template <std::floating_point R>
struct CollectiveMoments {
  int N = 0;
  Vec3<R> j_mean{};     ///< <J_i>
  Mat3<R> j_second{};   ///< (1/2)<J_i J_j + J_j J_i>
};

template <std::floating_point R>
CollectiveMoments<R> moments_from_pair(const Vec3<R>& s, const Mat3<R>& t, int N,
                                       R tol = default_tol<R>) {
  if (N < 2) throw Error(Errc::InvalidN, "pair moments need N >= 2", N);
  const R tr = trace(t);
  if (std::abs(tr - 1) > tol) throw Error(Errc::TraceViolation, "Tr T must equal 1", tr);
  const R n = static_cast<R>(N);
  return {N, (n / 2) * s, (n / 4) * (Mat3<R>::identity() + (n - 1) * t)};
}

template <std::floating_point R>
struct PairData {
  Vec3<R> s;
  Mat3<R> t;
};

/// t_ij = (4 m_ij / N - delta_ij) / (N - 1),  s_i = 2 <J_i> / N.
template <std::floating_point R>
PairData<R> pair_from_moments(const CollectiveMoments<R>& m) {
  if (m.N < 2) throw Error(Errc::InvalidN, "pair data needs N >= 2", m.N);
  const R n = static_cast<R>(m.N);
  PairData<R> out;
  out.s = (2 / n) * m.j_mean;
  out.t = (R(1) / (n - 1)) * ((4 / n) * m.j_second - Mat3<R>::identity());
  return out;
}

// ---------------------------------------------------------------------------
// Squeezing

template <std::floating_point R>
struct SqueezingReport {
  R xi_sq = 1;
  R t_perp_minus = 0;
  R t_perp_plus = 0;
  Vec3<R> mean_spin_dir{};
  Vec3<R> squeeze_dir{};          ///< direction of least transverse variance
  R max_variance_ratio = 1;       ///< 4 (Delta J_perp)^2_max / N
  bool direction_degenerate = false;
};

namespace detail {

/// Orthonormal pair spanning the plane orthogonal to unit n.
template <std::floating_point R>
std::array<Vec3<R>, 2> transverse_basis(const Vec3<R>& n) {
  const Vec3<R> e1 = any_orthogonal_unit(n);
  return {e1, cross(n, e1)};
}

template <std::floating_point R>
struct Sym2Eigen {
  R lo, hi;
  R angle;   ///< direction of `lo` in the (e1, e2) basis
};

template <std::floating_point R>
Sym2Eigen<R> sym2_eigen(R a, R b, R c) {
  const R mean = (a + c) / 2;
  const R rad = std::hypot((a - c) / 2, b);
  // The major axis sits at atan2(2b, a - c) / 2; the minor is perpendicular.
  const R major = R(0.5) * std::atan2(2 * b, a - c);
  return {mean - rad, mean + rad, major + std::numbers::pi_v<R> / 2};
}

}  // namespace detail

/// xi^2 = 1 + (N - 1) t_perp^- with t_perp the T block transverse to s.
template <std::floating_point R>
SqueezingReport<R> squeezing(const Vec3<R>& s, const Mat3<R>& t, int N, R tol = default_tol<R>) {
  if (N < 2) throw Error(Errc::InvalidN, "squeezing needs N >= 2", N);
  const R len = norm(s);
  if (len <= tol) throw Error(Errc::ZeroMeanSpin, "mean spin vanishes; use the I3 = 0 branch", len);
  SqueezingReport<R> out;
  out.mean_spin_dir = (R(1) / len) * s;
  const auto [e1, e2] = detail::transverse_basis(out.mean_spin_dir);
  const R a = dot(e1, t * e1), b = dot(e1, t * e2), c = dot(e2, t * e2);
  const auto eig = detail::sym2_eigen(a, b, c);
  out.t_perp_minus = eig.lo;
  out.t_perp_plus = eig.hi;
  out.squeeze_dir = std::cos(eig.angle) * e1 + std::sin(eig.angle) * e2;
  out.direction_degenerate = eig.hi - eig.lo <= tol;
  const R n1 = static_cast<R>(N - 1);
  out.xi_sq = 1 + n1 * out.t_perp_minus;
  out.max_variance_ratio = 1 + n1 * out.t_perp_plus;
  return out;
}

// ---------------------------------------------------------------------------
// Classification

enum class PairBranch {
  I5_negative,
  I4_negative,
  I4_pos_combo_negative,
  I3_zero_I1_negative,
  separable_signature,
};

constexpr std::string_view to_string(PairBranch b) noexcept {
  switch (b) {
    case PairBranch::I5_negative: return "I5_negative";
    case PairBranch::I4_negative: return "I4_negative";
    case PairBranch::I4_pos_combo_negative: return "I4_pos_combo_negative";
    case PairBranch::I3_zero_I1_negative: return "I3_zero_I1_negative";
    case PairBranch::separable_signature: return "separable_signature";
  }
  return "unknown";
}

constexpr std::string_view collective_note(PairBranch b) noexcept {
  switch (b) {
    case PairBranch::I5_negative:
      return "spin squeezed: least transverse variance below N/4";
    case PairBranch::I4_negative:
      return "variance along the mean spin <(J.n0)^2> below N/4";
    case PairBranch::I4_pos_combo_negative:
      return "N/4 < <(J.n0)^2> < N/4 + (N-1)|<J>|^2/N";
    case PairBranch::I3_zero_I1_negative:
      return "zero mean spin; some <J_i^2> below N/4 along a principal axis of T";
    case PairBranch::separable_signature:
      return "no pairwise entanglement signature";
  }
  return "";
}

inline constexpr double classify_tol = 1e-9;

template <std::floating_point R>
struct PairClassification {
  PairBranch branch = PairBranch::separable_signature;
  std::string_view collective_note;
  R margin = 0;   ///< value of the deciding invariant (negative when a branch fired)
  SymmetricInvariants<R> invariants;
};

/**
 * Tries the rows in order. With mean spin present: I5 < 0, then I4 < 0,
 * then I4 - I3^2 < 0. Without mean spin: I1 < 0. All comparisons are strict
 * at -tol.
 */
template <std::floating_point R>
PairClassification<R> classify(const SymmetricInvariants<R>& inv, R tol = R(classify_tol)) {
  PairClassification<R> out;
  out.invariants = inv;
  auto pick = [&](PairBranch b, R margin) {
    out.branch = b;
    out.margin = margin;
  };
  if (inv.I3 > tol) {
    if (inv.I5 < -tol) {
      pick(PairBranch::I5_negative, inv.I5);
    } else if (inv.I4 < -tol) {
      pick(PairBranch::I4_negative, inv.I4);
    } else if (inv.I4_minus_I3sq < -tol) {
      pick(PairBranch::I4_pos_combo_negative, inv.I4_minus_I3sq);
    } else {
      pick(PairBranch::separable_signature, std::min({inv.I5, inv.I4, inv.I4_minus_I3sq}));
    }
  } else if (inv.I1 < -tol) {
    pick(PairBranch::I3_zero_I1_negative, inv.I1);
  } else {
    pick(PairBranch::separable_signature, inv.I1);
  }
  out.collective_note = collective_note(out.branch);
  return out;
}

/// N does not enter the branch decision; it only fixes the notes' scale.
template <std::floating_point R>
PairClassification<R> classify(const SymmetricTwoQubitState<R>& state, int N,
                               R tol = R(classify_tol)) {
  if (N < 2) throw Error(Errc::InvalidN, "classification needs N >= 2", N);
  return classify(symmetric_six(state), tol);
}

// ---------------------------------------------------------------------------
// Invariants re-expressed through collective moments

template <std::floating_point R>
struct CollectiveForms {
  R I1_direct = 0, I1_collective = 0;
  R I4_direct = 0, I4_collective = 0;
  R I5_direct = 0, I5_collective = 0;
  R combo_direct = 0, combo_collective = 0;
  R xi_sq = 1;
  R max_deviation = 0;
};

/**
 * Recomputes I1, I4, I5 and I4 - I3^2 from the collective moments of an
 * N-qubit symmetric state with pair data (s, T) and reports the largest
 * disagreement with the direct invariants.
 */
template <std::floating_point R>
CollectiveForms<R> collective_forms(const SymmetricInvariants<R>& inv, const Vec3<R>& s,
                                    const Mat3<R>& t, int N, R tol = default_tol<R>) {
  const auto m = moments_from_pair(s, t, N, tol);
  const R n = static_cast<R>(N), n1 = static_cast<R>(N - 1);
  const R jlen2 = dot(m.j_mean, m.j_mean);
  if (std::sqrt(jlen2) <= tol * n) throw Error(Errc::ZeroMeanSpin, "collective forms need <J> != 0");

  const Vec3<R> n0 = (R(1) / std::sqrt(jlen2)) * m.j_mean;
  const Mat3<R> cov = m.j_second - outer(m.j_mean, m.j_mean);
  const auto [e1, e2] = detail::transverse_basis(n0);
  const auto eig = detail::sym2_eigen(dot(e1, cov * e1), dot(e1, cov * e2), dot(e2, cov * e2));
  const R xi_sq = 4 * eig.lo / n;
  const R ratio = 4 * eig.hi / n;
  const R along = dot(n0, m.j_second * n0);   // <(J.n0)^2>

  CollectiveForms<R> out;
  out.xi_sq = xi_sq;
  out.I5_direct = inv.I5;
  out.I5_collective = 8 * jlen2 / (n * n * n1 * n1) * (xi_sq - 1) * (ratio - 1);
  out.I4_direct = inv.I4;
  out.I4_collective = 4 / (n * n * n1) * jlen2 * (4 * along / n - 1);
  out.combo_direct = inv.I4_minus_I3sq;
  out.combo_collective = 16 / (n * n * n * n1) * jlen2 * (along - (n / 4 + n1 * jlen2 / n));
  const auto principal = sym3_eigen(R(0.5) * (m.j_second + transpose(m.j_second))).values;
  const R k = 4 / (n * n1);
  out.I1_direct = inv.I1;
  out.I1_collective = k * k * k * (principal[0] - n / 4) * (principal[1] - n / 4) * (principal[2] - n / 4);
  out.max_deviation = std::max({std::abs(out.I5_direct - out.I5_collective),
                                std::abs(out.I4_direct - out.I4_collective),
                                std::abs(out.combo_direct - out.combo_collective),
                                std::abs(out.I1_direct - out.I1_collective)});
  return out;
}

}  // namespace symsq
