// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Closed-form pair data for three symmetric N-qubit families: Dicke states,
 * one-axis-twisted coherent states and the atomic squeezed state |Psi_0>.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symsq/collective.hpp"
#include "symsq/invariants.hpp"
#include "symsq/states.hpp"

namespace symsq {

template <std::floating_point R>
struct ModelPair {
  Vec3<R> s;
  Mat3<R> t;
  SymmetricInvariants<R> invariants;
};

// ---------------------------------------------------------------------------
// Dicke states |N/2, M>

/// M is carried doubled so odd N (half-integer M) is representable.
struct DickeParams {
  int N = 2;
  int two_m = 0;

  static DickeParams with_m(int N, int M) { return {N, 2 * M}; }

  void validate() const {
    if (N < 2) throw Error(Errc::InvalidN, "Dicke pair needs N >= 2", N);
    if (std::abs(two_m) > N) throw Error(Errc::ParityViolation, "|M| exceeds N/2", two_m);
    if ((N + two_m) % 2 != 0) throw Error(Errc::ParityViolation, "N + 2M must be even", two_m);
  }
};

template <std::floating_point R = double>
SpecialClassState<R> dicke_special(const DickeParams& p) {
  p.validate();
  const R n = p.N, m2 = p.two_m;   // m2 = 2M
  const R den = 4 * n * (n - 1);
  SpecialClassState<R> out;
  out.a = (n + m2) * (n - 2 + m2) / den;
  out.c = (n * n - m2 * m2) / den;
  out.d = (n - m2) * (n - 2 - m2) / den;
  out.b = 0;
  return out;
}

template <std::floating_point R = double>
struct DickePair {
  SpecialClassState<R> special;
  SymmetricInvariants<R> invariants;
};

template <std::floating_point R = double>
DickePair<R> dicke_pair(const DickeParams& p) {
  const auto special = dicke_special<R>(p);
  const R n = p.N, m2 = p.two_m;
  const R t1 = (n * n - m2 * m2) / (2 * n * (n - 1));
  const R t3 = (m2 * m2 - n) / (n * (n - 1));
  const R c = (n * n - m2 * m2) / (4 * n * (n - 1));
  SymmetricInvariants<R> inv;
  inv.I3 = m2 * m2 / (n * n);
  inv.I1 = t1 * t1 * t3;
  inv.I2 = 2 * t1 * t1 + t3 * t3;
  inv.I4 = inv.I3 * (m2 * m2 - n) / (n * (n - 1));
  inv.I5 = 8 * inv.I3 * c * c;
  inv.I6 = 0;
  inv.I4_minus_I3sq = inv.I3 * (m2 * m2 - n * n) / (n * n * (n - 1));
  return {special, inv};
}

// ---------------------------------------------------------------------------
// One-axis twisting: exp(-i chi t J_1^2) |J, -J>

struct KitagawaUedaParams {
  int N = 2;
  double chi_t = 0;

  void validate() const {
    if (N < 2) throw Error(Errc::InvalidN, "twisted state needs N >= 2", N);
    if (!std::isfinite(chi_t)) throw Error(Errc::DomainError, "chi_t must be finite");
  }
};

template <std::floating_point R = double>
ModelPair<R> ku_pair(const KitagawaUedaParams& p) {
  p.validate();
  const int N = p.N;
  const R x = static_cast<R>(p.chi_t);
  const R c = std::cos(x), sn = std::sin(x);
  const R cn2 = std::pow(c, N - 2);
  const R c2 = std::pow(std::cos(2 * x), N - 2);
  const R t12 = cn2 * sn;
  const R t22 = (1 - c2) / 2;
  const R t33 = (1 + c2) / 2;

  ModelPair<R> out;
  out.s = {0, 0, -std::pow(c, N - 1)};
  out.t(0, 1) = out.t(1, 0) = t12;
  out.t(1, 1) = t22;
  out.t(2, 2) = t33;
  out.t(0, 0) = 1 - t22 - t33;

  auto& inv = out.invariants;
  const R twist = cn2 * cn2 * sn * sn;   // cos^{2(N-2)} sin^2
  inv.I3 = std::pow(c, 2 * (N - 1));
  inv.I1 = -R(0.5) * twist * (1 + c2);
  inv.I2 = 2 * twist + R(0.5) * (1 + c2 * c2);
  inv.I4 = R(0.5) * inv.I3 * (1 + c2);
  inv.I5 = -2 * inv.I3 * twist;
  inv.I6 = 0;
  inv.I4_minus_I3sq = inv.I4 - inv.I3 * inv.I3;
  return out;
}

// ---------------------------------------------------------------------------
// Atomic squeezed state A0 exp(theta J_3) exp(-i pi/2 J_2) |J, 0>

/// d^J_{M0}(pi/2) for integer J; zero when J + M is odd. Uses the
/// single-term form with log-factorials, sign (-1)^{(J+M)/2}.
template <std::floating_point R = double>
R wigner_d_pi2(int J, int M) {
  if (J < 0 || std::abs(M) > J) throw Error(Errc::DomainError, "need |M| <= J", M);
  if ((J + M) % 2 != 0) return 0;
  const int hp = (J + M) / 2, hm = (J - M) / 2;
  const R log_mag = R(0.5) * (std::lgamma(R(J + M + 1)) + std::lgamma(R(J - M + 1))) -
                    std::lgamma(R(hp + 1)) - std::lgamma(R(hm + 1)) - J * std::log(R(2));
  return (hp % 2 == 0 ? 1 : -1) * std::exp(log_mag);
}

/// Half-integer J has no M = 0 row, so the second argument pair is doubled.
template <std::floating_point R = double>
R wigner_d_pi2_doubled(int two_j, int two_m) {
  if (two_j % 2 != 0 || two_m % 2 != 0)
    throw Error(Errc::DomainError, "d^J_{M0} needs integer J and M", two_j);
  return wigner_d_pi2<R>(two_j / 2, two_m / 2);
}

/// x = exp(2 theta) in (0, 1). The state is annihilated by
/// J_- cosh(q) + J_+ sinh(q) when tanh(q) = x; q is the squeeze parameter.
struct AtomicSqueezeParams {
  int N = 2;
  double x = 0.5;

  void validate() const {
    if (N < 2 || N % 2 != 0) throw Error(Errc::ParityViolation, "atomic state needs even N >= 2", N);
    if (!(x > 0 && x < 1)) throw Error(Errc::DomainError, "x must lie in (0, 1)", x);
  }
  double theta() const { return 0.5 * std::log(x); }
  double squeeze() const { return std::atanh(x); }
};

/// <J_3> = sum_M M d^2 e^{2 M theta} / sum_M d^2 e^{2 M theta}, in log space.
template <std::floating_point R = double>
R atomic_mean_j3(const AtomicSqueezeParams& p) {
  p.validate();
  const int J = p.N / 2;
  const R theta = static_cast<R>(p.theta());
  std::vector<R> logw;
  std::vector<int> ms;
  for (int M = -J; M <= J; ++M) {
    const R d = wigner_d_pi2<R>(J, M);
    if (d == 0) continue;
    logw.push_back(2 * std::log(std::abs(d)) + 2 * M * theta);
    ms.push_back(M);
  }
  const R top = *std::max_element(logw.begin(), logw.end());
  R num = 0, den = 0;
  for (std::size_t k = 0; k < logw.size(); ++k) {
    const R w = std::exp(logw[k] - top);
    num += ms[k] * w;
    den += w;
  }
  if (!(den > 0) || !std::isfinite(den) || !std::isfinite(num))
    throw Error(Errc::NormalizationFailure, "weight sum is not representable");
  return num / den;
}

template <std::floating_point R = double>
CollectiveMoments<R> atomic_moments(const AtomicSqueezeParams& p) {
  const R j3 = atomic_mean_j3<R>(p);
  const R x = static_cast<R>(p.x);
  const R J = R(p.N) / 2;
  const R e2 = (1 + x) / (1 - x);   // exp(2q) for tanh q = x
  CollectiveMoments<R> m;
  m.N = p.N;
  m.j_mean = {0, 0, j3};
  m.j_second(0, 0) = -R(0.5) * j3 / e2;
  m.j_second(1, 1) = -R(0.5) * j3 * e2;
  m.j_second(2, 2) = J * (J + 1) - m.j_second(0, 0) - m.j_second(1, 1);
  return m;
}

template <std::floating_point R = double>
ModelPair<R> atomic_pair(const AtomicSqueezeParams& p) {
  const auto pair = pair_from_moments(atomic_moments<R>(p));
  return {pair.s, pair.t, six_from_bloch(pair.s, pair.t)};
}

// ---------------------------------------------------------------------------
// Parameter sweeps

enum class Model { dicke, ku, atomic };

constexpr std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::dicke: return "dicke";
    case Model::ku: return "ku";
    case Model::atomic: return "atomic";
  }
  return "";
}

inline std::optional<Model> parse_model(std::string_view name) {
  if (name == "dicke") return Model::dicke;
  if (name == "ku") return Model::ku;
  if (name == "atomic") return Model::atomic;
  return std::nullopt;
}

template <std::floating_point R = double>
struct SweepRow {
  Model model = Model::dicke;
  int N = 0;
  R param = 0;
  SymmetricInvariants<R> invariants;
  std::optional<R> xi_sq;   ///< absent when the mean spin vanishes
  PairBranch branch = PairBranch::separable_signature;
};

struct ParamRange {
  double lo = 0, hi = 0;
  int steps = 1;

  /// Inclusive grid; a single step yields lo.
  std::vector<double> grid() const {
    std::vector<double> out;
    for (int k = 0; k < steps; ++k)
      out.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
    return out;
  }
  bool valid_for(Model m) const {
    if (steps < 1 || !std::isfinite(lo) || !std::isfinite(hi) || lo > hi) return false;
    if (m == Model::atomic) return lo > 0 && hi < 1;
    return true;
  }
};

template <std::floating_point R = double>
SweepRow<R> sweep_point(Model model, int N, double param) {
  SweepRow<R> row;
  row.model = model;
  row.N = N;
  row.param = static_cast<R>(param);
  ModelPair<R> pair;
  switch (model) {
    case Model::dicke: {
      const DickeParams p{N, static_cast<int>(std::lround(2 * param))};
      const auto special = dicke_special<R>(p);
      pair = {special.s(), special.t(), dicke_pair<R>(p).invariants};
      break;
    }
    case Model::ku: pair = ku_pair<R>({N, param}); break;
    case Model::atomic: pair = atomic_pair<R>({N, param}); break;
  }
  row.invariants = pair.invariants;
  if (pair.invariants.I3 > R(classify_tol)) row.xi_sq = squeezing(pair.s, pair.t, N).xi_sq;
  row.branch = classify(pair.invariants).branch;
  return row;
}

/**
 * Evaluates a model over N values and a parameter grid. Dicke sweeps ignore
 * the range and visit every admissible M from -N/2 to N/2. Grid points are
 * evaluated on worker threads; rows come back in (N, param) order.
 */
template <std::floating_point R = double>
std::vector<SweepRow<R>> sweep(Model model, const std::vector<int>& Ns, const ParamRange& range,
                               unsigned threads = std::thread::hardware_concurrency()) {
  if (model != Model::dicke && !range.valid_for(model))
    throw Error(Errc::DomainError, "invalid parameter range");
  std::vector<std::pair<int, double>> points;
  for (const int N : Ns) {
    if (model == Model::dicke) {
      for (int two_m = -N; two_m <= N; two_m += 2) points.emplace_back(N, two_m / 2.0);
    } else {
      for (const double x : range.grid()) points.emplace_back(N, x);
    }
  }
  std::vector<SweepRow<R>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(points.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < points.size(); k += workers) {
          try {
            rows[k] = sweep_point<R>(model, points[k].first, points[k].second);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace symsq
