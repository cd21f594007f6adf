// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Local-unitary invariants of two-qubit states: the complete 18-element
 * polynomial set, its six-element reduction on the symmetric subspace,
 * sign tests for separability and a canonical form for local equivalence.
 */
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "symsq/numerics.hpp"
#include "symsq/states.hpp"

namespace symsq {

namespace detail {

constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

/// eps_ijk eps_lmn a_i b_l t_jm t_kn
template <std::floating_point R>
R double_epsilon_contraction(const Vec3<R>& a, const Vec3<R>& b, const Mat3<R>& t) {
  R acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int eijk = levi_civita(i, j, k);
        if (eijk == 0) continue;
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              const int elmn = levi_civita(l, m, n);
              if (elmn == 0) continue;
              acc += R(eijk * elmn) * a[i] * b[l] * t(j, m) * t(k, n);
            }
      }
  return acc;
}

}  // namespace detail

/// The 18 polynomial invariants, addressed 1-based.
template <std::floating_point R>
struct MakhlinInvariants {
  std::array<R, 18> values{};

  R operator()(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
  R& operator()(int k) { return values.at(static_cast<std::size_t>(k - 1)); }
};

template <std::floating_point R>
MakhlinInvariants<R> makhlin_all(const Bloch<R>& b) {
  const Vec3<R>& s = b.s;
  const Vec3<R>& r = b.r;
  const Mat3<R>& t = b.t;
  const Mat3<R> tt = transpose(t);
  const Mat3<R> g = t * tt;   // T T^T
  const Mat3<R> h = tt * t;   // T^T T
  const Mat3<R> g2 = g * g;
  const Mat3<R> h2 = h * h;

  MakhlinInvariants<R> out;
  out(1) = det(t);
  out(2) = trace(h);
  out(3) = trace(h2);
  out(4) = dot(s, s);
  out(5) = dot(s, g * s);
  out(6) = dot(s, g2 * s);
  out(7) = dot(r, r);
  // r turns with the second qubit, so it pairs with T^T T.
  out(8) = dot(r, h * r);
  out(9) = dot(r, h2 * r);
  out(10) = det_cols(s, g * s, g2 * s);
  out(11) = det_cols(r, h * r, h2 * r);
  out(12) = dot(s, t * r);
  out(13) = dot(s, g * (t * r));
  out(14) = detail::double_epsilon_contraction(s, r, t);
  out(15) = det_cols(s, g * s, t * r);
  out(16) = det_cols(tt * s, r, h * r);
  out(17) = det_cols(tt * s, tt * (g * s), r);
  out(18) = det_cols(s, t * r, g * (t * r));
  return out;
}

template <std::floating_point R>
MakhlinInvariants<R> makhlin_all(const TwoQubitState<R>& state) {
  return makhlin_all(state.bloch());
}

template <std::floating_point R>
struct SymmetricInvariants {
  R I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0, I6 = 0;
  R I4_minus_I3sq = 0;
};

/// The six invariants from raw (s, T); the caller vouches for symmetry.
template <std::floating_point R>
SymmetricInvariants<R> six_from_bloch(const Vec3<R>& s, const Mat3<R>& t) {
  SymmetricInvariants<R> out;
  const Vec3<R> ts = t * s;
  out.I1 = det(t);
  out.I2 = trace(t * t);
  out.I3 = dot(s, s);
  out.I4 = dot(s, ts);
  out.I5 = detail::double_epsilon_contraction(s, s, t);
  out.I6 = det_cols(s, ts, t * ts);
  out.I4_minus_I3sq = out.I4 - out.I3 * out.I3;
  return out;
}

template <std::floating_point R>
SymmetricInvariants<R> symmetric_six(const SymmetricTwoQubitState<R>& state) {
  return six_from_bloch(state.s(), state.t());
}

/// Checks the symmetry constraints before evaluating the six invariants.
template <std::floating_point R>
SymmetricInvariants<R> symmetric_six(const TwoQubitState<R>& state, R tol = default_tol<R>) {
  return symmetric_six(SymmetricTwoQubitState<R>::from(state, tol));
}

/// Closed forms for the special class; b enters only through |b|.
template <std::floating_point R>
SymmetricInvariants<R> special_class_invariants(const SpecialClassState<R>& p) {
  const R b2 = p.b * p.b;
  const R m = p.a - p.d;
  const R t1 = 2 * (p.c + std::abs(p.b)), t2 = 2 * (p.c - std::abs(p.b));
  const R t3 = p.a + p.d - 2 * p.c;
  SymmetricInvariants<R> out;
  out.I1 = (4 * p.c * p.c - 4 * b2) * (1 - 4 * p.c);
  out.I2 = t1 * t1 + t2 * t2 + t3 * t3;
  out.I3 = m * m;
  out.I4 = m * m * (1 - 4 * p.c);
  out.I5 = 8 * m * m * (p.c * p.c - b2);
  out.I6 = 0;
  out.I4_minus_I3sq = out.I4 - out.I3 * out.I3;
  return out;
}

struct SeparabilityFlags {
  bool I4_negative = false;
  bool I5_negative = false;
  bool I4_minus_I3sq_negative = false;
  bool I1_negative_with_I3_zero = false;

  /// Any raised flag certifies entanglement.
  bool any() const noexcept {
    return I4_negative || I5_negative || I4_minus_I3sq_negative || I1_negative_with_I3_zero;
  }
};

/// Strict sign tests. With I3 <= tol only I1 is consulted; the flags that
/// depend on a nonzero mean spin are then reported false.
template <std::floating_point R>
SeparabilityFlags separability_flags(const SymmetricInvariants<R>& inv, R tol = default_tol<R>) {
  SeparabilityFlags f;
  if (inv.I3 > tol) {
    f.I4_negative = inv.I4 < -tol;
    f.I5_negative = inv.I5 < -tol;
    f.I4_minus_I3sq_negative = inv.I4_minus_I3sq < -tol;
  } else {
    f.I1_negative_with_I3_zero = inv.I1 < -tol;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Canonical form

enum class DegeneracyBranch { nondegenerate, partially_degenerate, fully_degenerate };

inline constexpr double degeneracy_gap = 1e-8;
inline constexpr double degeneracy_ambiguity = 1e-7;

template <std::floating_point R>
struct CanonicalForm {
  Vec3<R> t_diag;       ///< all positive, or all negative when det T < 0
  Vec3<R> s_canon;
  Vec3<R> r_canon;
  Mat3<R> o1;           ///< first-qubit rotation into the canonical frame
  Mat3<R> o2;           ///< second-qubit rotation into the canonical frame
  DegeneracyBranch branch = DegeneracyBranch::nondegenerate;
  std::vector<int> residual_invariants;   ///< invariants that pin the residual signs
};

namespace detail {

/// Rotation in the (i, j) plane taking (x_i, x_j) to (|x|, 0).
template <std::floating_point R>
Mat3<R> plane_alignment(std::size_t i, std::size_t j, R xi, R xj) {
  Mat3<R> g = Mat3<R>::identity();
  const R rho = std::hypot(xi, xj);
  if (rho == 0) return g;
  const R c = xi / rho, s = xj / rho;
  g(i, i) = c;
  g(i, j) = s;
  g(j, i) = -s;
  g(j, j) = c;
  return g;
}

/// Proper rotation taking unit vector n to e_1.
template <std::floating_point R>
Mat3<R> align_to_first_axis(const Vec3<R>& n) {
  Vec3<R> e2 = any_orthogonal_unit(n);
  Vec3<R> e3 = cross(n, e2);
  Mat3<R> g;
  g.set_row(0, n);
  g.set_row(1, e2);
  g.set_row(2, e3);
  return g;
}

template <std::floating_point R>
Vec3<R> pick_reference(const Vec3<R>& s, const Vec3<R>& r, R thr) {
  return norm(s) > thr ? s : r;
}

}  // namespace detail

/**
 * Brings a state to its diagonal-correlation frame. t_diag follows the
 * sign convention of svd3. Continuous freedom inside degenerate singular
 * subspaces is removed by aligning s (or r when s vanishes there) with the
 * first axis of the block; the discrete freedom of flipping two axes at
 * once is removed by making the leading nonzero components non-negative.
 */
template <std::floating_point R>
CanonicalForm<R> canonical_form(const TwoQubitState<R>& state, R tol = default_tol<R>) {
  const Bloch<R>& b = state.bloch();
  const Svd3<R> svd = svd3(b.t, tol);
  CanonicalForm<R> cf;
  cf.t_diag = svd.diag;
  Mat3<R> o1 = svd.o1, o2 = svd.o2;
  Vec3<R> s = o1 * b.s, r = o2 * b.r;

  const R top = std::max(std::abs(svd.diag[0]), R(1e-300));
  auto gap = [&](std::size_t i, std::size_t j) {
    return std::abs(svd.diag[i] * svd.diag[i] - svd.diag[j] * svd.diag[j]) / (top * top);
  };
  const R g01 = gap(0, 1), g12 = gap(1, 2);
  for (const R g : {g01, g12}) {
    if (g >= R(degeneracy_gap) && g < R(degeneracy_ambiguity))
      throw Error(Errc::DegenerateUnhandled, "singular-value gap is at the detection boundary", g);
  }
  const bool d01 = g01 < R(degeneracy_gap), d12 = g12 < R(degeneracy_gap);
  const bool near_zero = std::abs(svd.diag[0]) < tol;
  const R thr = tol;

  auto rotate_frame = [&](const Mat3<R>& g) {
    o1 = g * o1;
    o2 = g * o2;
    s = g * s;
    r = g * r;
  };

  if ((d01 && d12) || near_zero) {
    cf.branch = DegeneracyBranch::fully_degenerate;
    cf.residual_invariants = {4, 5, 6, 7, 8, 9, 12};
    const Vec3<R> ref = detail::pick_reference(s, r, thr);
    if (norm(ref) > thr) {
      rotate_frame(detail::align_to_first_axis((R(1) / norm(ref)) * ref));
      // Spin the 2-3 plane so the other vector's transverse part lies on axis 2.
      const Vec3<R>& other = norm(s) > thr ? r : s;
      rotate_frame(detail::plane_alignment<R>(1, 2, other[1], other[2]));
    }
  } else if (d01 || d12) {
    cf.branch = DegeneracyBranch::partially_degenerate;
    cf.residual_invariants = {4, 5, 6, 7, 8, 9, 12, 13, 14};
    const std::size_t i = d01 ? 0 : 1, j = d01 ? 1 : 2;
    const R si = s[i], sj = s[j];
    if (std::hypot(si, sj) > thr) {
      rotate_frame(detail::plane_alignment<R>(i, j, si, sj));
    } else {
      rotate_frame(detail::plane_alignment<R>(i, j, r[i], r[j]));
    }
  } else {
    cf.branch = DegeneracyBranch::nondegenerate;
    cf.residual_invariants = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
  }

  // Residual group: simultaneous sign flips of two axes on both qubits.
  Vec3<R> key;
  for (std::size_t k = 0; k < 3; ++k) key[k] = std::abs(s[k]) > thr ? s[k] : (std::abs(r[k]) > thr ? r[k] : R(0));
  static constexpr std::array<std::array<int, 3>, 4> flips{{{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  std::size_t best = 0;
  std::array<bool, 3> best_score{};
  for (std::size_t f = 0; f < flips.size(); ++f) {
    std::array<bool, 3> score;
    for (std::size_t k = 0; k < 3; ++k) score[k] = flips[f][k] * key[k] >= 0;
    if (f == 0 || score > best_score) {
      best = f;
      best_score = score;
    }
  }
  const Mat3<R> flip = Mat3<R>::diag(R(flips[best][0]), R(flips[best][1]), R(flips[best][2]));
  rotate_frame(flip);

  cf.o1 = o1;
  cf.o2 = o2;
  cf.s_canon = s;
  cf.r_canon = r;
  return cf;
}

/// State built from canonical data; locally equivalent to the original.
template <std::floating_point R>
TwoQubitState<R> reconstruct(const CanonicalForm<R>& cf, R tol = default_tol<R>) {
  return from_bloch(cf.s_canon, cf.r_canon, Mat3<R>::diag(cf.t_diag), tol);
}

template <std::floating_point R>
bool invariants_close(R a, R b, R tol) {
  return std::abs(a - b) <= tol * (1 + std::max(std::abs(a), std::abs(b)));
}

/// Two states are locally equivalent iff all 18 invariants agree.
template <std::floating_point R>
bool locally_equivalent(const TwoQubitState<R>& a, const TwoQubitState<R>& b,
                        R tol = default_tol<R>) {
  const auto ia = makhlin_all(a), ib = makhlin_all(b);
  for (int k = 1; k <= 18; ++k)
    if (!invariants_close(ia(k), ib(k), tol)) return false;
  return true;
}

}  // namespace symsq
