// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Small dense linear algebra: fixed 3-vectors and 3x3 matrices, a dynamic
 * real/complex matrix, cyclic Jacobi eigensolvers, a sign-canonical 3x3 SVD
 * and the SU(2) -> SO(3) map.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <type_traits>
#include <vector>

#include "symsq/errors.hpp"

namespace symsq {

template <std::floating_point R>
inline constexpr R default_tol = R(1e-10);

namespace detail {
template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class S>
struct real_of {
  using type = S;
};
template <class T>
struct real_of<std::complex<T>> {
  using type = T;
};
}  // namespace detail

template <class S>
concept Scalar = std::floating_point<S> || detail::is_complex<S>::value;

template <class S>
using real_t = typename detail::real_of<S>::type;

template <Scalar S>
constexpr S conj_of(const S& x) {
  if constexpr (detail::is_complex<S>::value) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <Scalar S>
constexpr real_t<S> real_part(const S& x) {
  if constexpr (detail::is_complex<S>::value) {
    return x.real();
  } else {
    return x;
  }
}

// ---------------------------------------------------------------------------
// Fixed-size 3-vectors and 3x3 matrices

template <std::floating_point R>
struct Vec3 {
  std::array<R, 3> v{};

  constexpr R& operator[](std::size_t i) { return v[i]; }
  constexpr const R& operator[](std::size_t i) const { return v[i]; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

template <std::floating_point R>
struct Mat3 {
  std::array<std::array<R, 3>, 3> m{};

  constexpr R& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  constexpr const R& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }
  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;

  static constexpr Mat3 identity() { return diag(R(1), R(1), R(1)); }
  static constexpr Mat3 diag(R a, R b, R c) {
    Mat3 out;
    out(0, 0) = a;
    out(1, 1) = b;
    out(2, 2) = c;
    return out;
  }
  static constexpr Mat3 diag(const Vec3<R>& d) { return diag(d[0], d[1], d[2]); }

  constexpr Vec3<R> row(std::size_t i) const { return {m[i][0], m[i][1], m[i][2]}; }
  constexpr Vec3<R> col(std::size_t j) const { return {m[0][j], m[1][j], m[2][j]}; }
  constexpr void set_row(std::size_t i, const Vec3<R>& r) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = r[j];
  }
};

template <std::floating_point R>
constexpr Vec3<R> operator+(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <std::floating_point R>
constexpr Vec3<R> operator-(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <std::floating_point R>
constexpr Vec3<R> operator-(const Vec3<R>& a) {
  return {-a[0], -a[1], -a[2]};
}
template <std::floating_point R>
constexpr Vec3<R> operator*(R k, const Vec3<R>& a) {
  return {k * a[0], k * a[1], k * a[2]};
}
template <std::floating_point R>
constexpr R dot(const Vec3<R>& a, const Vec3<R>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
template <std::floating_point R>
constexpr Vec3<R> cross(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
template <std::floating_point R>
R norm(const Vec3<R>& a) {
  return std::sqrt(dot(a, a));
}
template <std::floating_point R>
R max_abs(const Vec3<R>& a) {
  return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

template <std::floating_point R>
constexpr Mat3<R> operator+(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}
template <std::floating_point R>
constexpr Mat3<R> operator-(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}
template <std::floating_point R>
constexpr Mat3<R> operator*(R k, const Mat3<R>& a) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = k * a(i, j);
  return c;
}
template <std::floating_point R>
constexpr Mat3<R> operator*(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      R acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}
template <std::floating_point R>
constexpr Vec3<R> operator*(const Mat3<R>& a, const Vec3<R>& x) {
  return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)};
}
template <std::floating_point R>
constexpr Mat3<R> transpose(const Mat3<R>& a) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = a(j, i);
  return c;
}
template <std::floating_point R>
constexpr R trace(const Mat3<R>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2);
}
template <std::floating_point R>
constexpr R det(const Mat3<R>& a) {
  return dot(a.row(0), cross(a.row(1), a.row(2)));
}
/// Determinant of the matrix whose columns are a, b, c.
template <std::floating_point R>
constexpr R det_cols(const Vec3<R>& a, const Vec3<R>& b, const Vec3<R>& c) {
  return dot(a, cross(b, c));
}
template <std::floating_point R>
constexpr Mat3<R> outer(const Vec3<R>& a, const Vec3<R>& b) {
  Mat3<R> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = a[i] * b[j];
  return c;
}
template <std::floating_point R>
R max_abs(const Mat3<R>& a) {
  R out = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out = std::max(out, std::abs(a(i, j)));
  return out;
}
template <std::floating_point R>
R asymmetry(const Mat3<R>& a) {
  return max_abs(a - transpose(a));
}

// ---------------------------------------------------------------------------
// Dynamic dense matrix, row-major

template <Scalar S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(Errc::DomainError, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = S(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<S>& data() const noexcept { return data_; }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = conj_of((*this)(i, j));
    return out;
  }

  S trace() const {
    S acc{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(S k, Matrix a) {
    for (auto& x : a.data_) x *= k;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::NonSquare, "incompatible matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S aik = a(i, k);
        if (aik == S{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& x) {
    std::vector<S> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      S acc{};
      for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <std::floating_point R>
using CMatrix = Matrix<std::complex<R>>;

template <Scalar S>
real_t<S> max_abs(const Matrix<S>& a) {
  real_t<S> out = 0;
  for (const auto& x : a.data()) out = std::max(out, std::abs(x));
  return out;
}

template <Scalar S>
real_t<S> frobenius(const Matrix<S>& a) {
  real_t<S> acc = 0;
  for (const auto& x : a.data()) acc += std::norm(x);
  return std::sqrt(acc);
}

/// max |m - m^dagger| over entries.
template <Scalar S>
real_t<S> hermiticity_defect(const Matrix<S>& m) {
  real_t<S> out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      out = std::max(out, std::abs(m(i, j) - conj_of(m(j, i))));
  return out;
}

template <Scalar S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

template <std::floating_point R>
CMatrix<R> to_complex(const Mat3<R>& a) {
  CMatrix<R> out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(i, j);
  return out;
}

/// Pauli matrix sigma_k for k = 1, 2, 3; k = 0 gives the identity.
template <std::floating_point R>
CMatrix<R> pauli(int k) {
  using C = std::complex<R>;
  switch (k) {
    case 0: return CMatrix<R>(2, 2, {C(1), C(0), C(0), C(1)});
    case 1: return CMatrix<R>(2, 2, {C(0), C(1), C(1), C(0)});
    case 2: return CMatrix<R>(2, 2, {C(0), C(0, -1), C(0, 1), C(0)});
    case 3: return CMatrix<R>(2, 2, {C(1), C(0), C(0), C(-1)});
    default: throw Error(Errc::DomainError, "Pauli index must be 0..3");
  }
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver

template <Scalar S>
struct EigenSystem {
  std::vector<real_t<S>> values;  ///< ascending
  Matrix<S> vectors;              ///< column k pairs with values[k]
};

inline constexpr int jacobi_max_sweeps = 50;

/**
 * Eigendecomposition of a Hermitian (or real symmetric) matrix by cyclic
 * Jacobi rotations. Sweeps stop once the largest off-diagonal magnitude
 * drops below 1e-14 relative to max(1, ||m||_F), or after 50 sweeps.
 */
template <Scalar S>
EigenSystem<S> hermitian_eigen(const Matrix<S>& m, real_t<S> tol = default_tol<real_t<S>>) {
  using R = real_t<S>;
  if (!m.square()) throw Error(Errc::NonSquare, "eigensolver needs a square matrix");
  const R defect = hermiticity_defect(m);
  if (defect > tol) throw Error(Errc::NonHermitian, "input is not Hermitian", defect);

  const std::size_t n = m.rows();
  Matrix<S> a = R(0.5) * (m + m.adjoint());
  Matrix<S> v = Matrix<S>::identity(n);
  const R threshold = R(1e-14) * std::max(R(1), frobenius(a));

  for (int sweep = 0; sweep < jacobi_max_sweeps; ++sweep) {
    R off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const S apq = a(p, q);
        const R mag = std::abs(apq);
        if (mag == R(0)) continue;
        const S phase = apq / mag;
        const S phase_c = conj_of(phase);
        const R theta = (real_part(a(q, q)) - real_part(a(p, p))) / (2 * mag);
        R t;
        if (std::abs(theta) > R(1e150)) {
          t = R(1) / (2 * theta);
        } else {
          t = (theta >= 0 ? R(1) : R(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        }
        const R c = R(1) / std::sqrt(t * t + 1);
        const R s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const S akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * phase_c * akq;
          a(k, q) = s * akp + c * phase_c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const S apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = S{};
        a(q, p) = S{};
        a(p, p) = real_part(a(p, p));
        a(q, q) = real_part(a(q, q));
        for (std::size_t k = 0; k < n; ++k) {
          const S vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * phase_c * vkq;
          v(k, q) = s * vkp + c * phase_c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return real_part(a(i, i)) < real_part(a(j, j));
  });
  EigenSystem<S> out{std::vector<R>(n), Matrix<S>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = real_part(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Ascending eigenvalues of a Hermitian matrix.
template <Scalar S>
std::vector<real_t<S>> hermitian_eigenvalues(const Matrix<S>& m,
                                             real_t<S> tol = default_tol<real_t<S>>) {
  return hermitian_eigen(m, tol).values;
}

/**
 * Descending singular values by one-sided (Hestenes) Jacobi. Column norms
 * converge with absolute error near eps * ||A||, so tiny singular values are
 * not swamped the way sqrt(eig(A^H A)) would swamp them.
 */
template <Scalar S>
std::vector<real_t<S>> singular_values(Matrix<S> a) {
  using R = real_t<S>;
  const std::size_t rows = a.rows(), n = a.cols();
  const R eps = std::numeric_limits<R>::epsilon();
  for (int sweep = 0; sweep < jacobi_max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        R alpha = 0, beta = 0;
        S gamma{};
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += conj_of(a(i, p)) * a(i, q);
        }
        const R g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta) || g == 0) continue;
        rotated = true;
        const S phase = gamma / g;   // rephase column q so the overlap is real
        const R zeta = (beta - alpha) / (2 * g);
        const R t = std::copysign(R(1), zeta) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        const R c = 1 / std::sqrt(1 + t * t), s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const S ap = a(i, p), aq = a(i, q) * conj_of(phase);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<R> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    R acc = 0;
    for (std::size_t i = 0; i < rows; ++i) acc += std::norm(a(i, k));
    out[k] = std::sqrt(acc);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <std::floating_point R>
struct SymEigen3 {
  Vec3<R> values;     ///< ascending
  Mat3<R> rotation;   ///< rows are eigenvectors; rotation * t * rotation^T is diagonal
};

namespace detail {
template <std::floating_point R>
void orient_first_nonzero_positive(Vec3<R>& x) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(x[i]) > R(1e-12)) {
      if (x[i] < 0) x = -x;
      return;
    }
  }
}
}  // namespace detail

/**
 * Real symmetric 3x3 eigensolver returning a proper rotation. Each
 * eigenvector has its first nonzero component positive, except that the
 * last one is negated when needed to make det(rotation) = +1.
 */
template <std::floating_point R>
SymEigen3<R> sym3_eigen(const Mat3<R>& t, R tol = default_tol<R>) {
  const R skew = asymmetry(t);
  if (skew > tol) throw Error(Errc::NonSymmetric, "matrix is not symmetric", skew);
  Matrix<R> a(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = R(0.5) * (t(i, j) + t(j, i));
  const auto es = hermitian_eigen(a, tol);
  SymEigen3<R> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out.values[k] = es.values[k];
    Vec3<R> e{es.vectors(0, k), es.vectors(1, k), es.vectors(2, k)};
    detail::orient_first_nonzero_positive(e);
    out.rotation.set_row(k, e);
  }
  if (det(out.rotation) < 0) out.rotation.set_row(2, -out.rotation.row(2));
  return out;
}

template <std::floating_point R>
struct Svd3 {
  Mat3<R> o1;     ///< proper rotation
  Vec3<R> diag;   ///< o1 * t * o2^T, magnitudes descending
  Mat3<R> o2;     ///< proper rotation
};

namespace detail {
template <std::floating_point R>
Vec3<R> any_orthogonal_unit(const Vec3<R>& u) {
  // Cross with the axis least aligned with u.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  Vec3<R> e{};
  e[k] = 1;
  Vec3<R> w = cross(u, e);
  return (R(1) / norm(w)) * w;
}
}  // namespace detail

/**
 * Singular value decomposition t = o1^T diag o2 with o1, o2 in SO(3).
 * When det t > 0 every entry of diag is positive; when det t < 0 every
 * entry is negative; a vanishing determinant yields the all-positive form.
 */
template <std::floating_point R>
Svd3<R> svd3(const Mat3<R>& t, R tol = default_tol<R>) {
  const auto es = sym3_eigen(transpose(t) * t, std::max(tol, R(1e-12) * (1 + max_abs(t) * max_abs(t))));
  // Reverse to descending singular values; swapping rows 0 and 2 flips
  // orientation, so negate the last row to stay in SO(3).
  Mat3<R> o2;
  o2.set_row(0, es.rotation.row(2));
  o2.set_row(1, es.rotation.row(1));
  o2.set_row(2, -es.rotation.row(0));

  const R scale = std::max(R(1), max_abs(t));
  const R tiny = R(1e-13) * scale;
  const Vec3<R> tv1 = t * o2.row(0);
  const Vec3<R> tv2 = t * o2.row(1);
  const Vec3<R> tv3 = t * o2.row(2);

  Vec3<R> u1;
  if (norm(tv1) > tiny) {
    u1 = (R(1) / norm(tv1)) * tv1;
  } else {
    u1 = o2.row(0);
  }
  Vec3<R> w2 = tv2 - dot(u1, tv2) * u1;
  Vec3<R> u2 = norm(w2) > tiny ? (R(1) / norm(w2)) * w2 : detail::any_orthogonal_unit(u1);
  u2 = u2 - dot(u1, u2) * u1;
  u2 = (R(1) / norm(u2)) * u2;
  const Vec3<R> u3 = cross(u1, u2);

  Svd3<R> out;
  out.o1.set_row(0, u1);
  out.o1.set_row(1, u2);
  out.o1.set_row(2, u3);
  out.o2 = o2;
  out.diag = {dot(u1, tv1), dot(u2, tv2), dot(u3, tv3)};

  const R det_floor = tol * scale;
  if (out.diag[2] < -det_floor) {
    out.o1.set_row(0, -u1);
    out.o1.set_row(1, -u2);
    out.diag[0] = -out.diag[0];
    out.diag[1] = -out.diag[1];
  } else {
    out.diag[2] = std::abs(out.diag[2]);
  }
  return out;
}

/// O_ij = (1/2) Tr(sigma_i u sigma_j u^dagger) for a 2x2 unitary u.
template <std::floating_point R>
Mat3<R> su2_to_so3(const CMatrix<R>& u, R tol = default_tol<R>) {
  if (u.rows() != 2 || u.cols() != 2) throw Error(Errc::NonSquare, "expected a 2x2 unitary");
  const R defect = max_abs(u.adjoint() * u - CMatrix<R>::identity(2));
  if (defect > tol) throw Error(Errc::NonUnitary, "matrix is not unitary", defect);
  const CMatrix<R> ud = u.adjoint();
  Mat3<R> o;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      o(i - 1, j - 1) = R(0.5) * (pauli<R>(i) * u * pauli<R>(j) * ud).trace().real();
  return o;
}

template <std::floating_point R>
struct PsdResult {
  R min_eig;
  bool is_psd;
};

template <Scalar S>
PsdResult<real_t<S>> min_eigenvalue_psd_test(const Matrix<S>& m,
                                            real_t<S> tol = default_tol<real_t<S>>) {
  const auto values = hermitian_eigenvalues(m, tol);
  return {values.front(), values.front() >= -tol};
}

template <std::floating_point R>
PsdResult<R> min_eigenvalue_psd_test(const Mat3<R>& m, R tol = default_tol<R>) {
  const auto es = sym3_eigen(m, tol);
  return {es.values[0], es.values[0] >= -tol};
}

// ---------------------------------------------------------------------------
// Sampling helpers

/// Haar-random element of SU(2) from a normalized Gaussian quaternion.
template <std::floating_point R, std::uniform_random_bit_generator G>
CMatrix<R> haar_su2(G& gen) {
  std::normal_distribution<R> gauss;
  R q[4];
  R n2 = 0;
  do {
    n2 = 0;
    for (auto& x : q) {
      x = gauss(gen);
      n2 += x * x;
    }
  } while (n2 < R(1e-20));
  const R inv = R(1) / std::sqrt(n2);
  const std::complex<R> a(q[0] * inv, q[1] * inv), b(q[2] * inv, q[3] * inv);
  return CMatrix<R>(2, 2, {a, -std::conj(b), b, std::conj(a)});
}

/// Haar-random unit vector in C^n via normalized complex Gaussians.
template <std::floating_point R, std::uniform_random_bit_generator G>
std::vector<std::complex<R>> haar_vector(std::size_t n, G& gen) {
  std::normal_distribution<R> gauss;
  std::vector<std::complex<R>> out(n);
  R n2 = 0;
  do {
    n2 = 0;
    for (auto& z : out) {
      z = {gauss(gen), gauss(gen)};
      n2 += std::norm(z);
    }
  } while (n2 < R(1e-20));
  const R inv = R(1) / std::sqrt(n2);
  for (auto& z : out) z *= inv;
  return out;
}

/// Dirichlet(1, ..., 1) weights as normalized exponentials.
template <std::floating_point R, std::uniform_random_bit_generator G>
std::vector<R> dirichlet_weights(std::size_t n, G& gen) {
  std::exponential_distribution<R> expo(R(1));
  std::vector<R> w(n);
  R total = 0;
  for (auto& x : w) {
    x = expo(gen);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

template <std::floating_point R, std::uniform_random_bit_generator G>
Vec3<R> random_unit_vector(G& gen) {
  std::normal_distribution<R> gauss;
  Vec3<R> v;
  do {
    v = {gauss(gen), gauss(gen), gauss(gen)};
  } while (norm(v) < R(1e-10));
  return (R(1) / norm(v)) * v;
}

}  // namespace symsq
