// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Property suites that cross-check the closed forms against independent
 * computations: random states, the symmetric-subspace simulator and the
 * full 2^N expansion. Shared by `symsq verify` and the acceptance runner.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "symsq/collective.hpp"
#include "symsq/covariance.hpp"
#include "symsq/invariants.hpp"
#include "symsq/models.hpp"
#include "symsq/oracle.hpp"
#include "symsq/states.hpp"
#include "symsq/testing/full_hilbert.hpp"

namespace symsq::verify {

struct Config {
  std::uint64_t seed = 42;
  int random_states = 10000;   ///< sample count for the large random suites
  int small_states = 1000;     ///< sample count for the smaller ones
  int oracle_max_n = 10;
  int identity_max_n = 50;
  /// Multiplies every numeric limit and sign band; timing limits are fixed.
  double tol_scale = 1.0;

  static Config quick(std::uint64_t seed) { return {seed, 1000, 200, 6, 50, 1.0}; }
  static Config full(std::uint64_t seed) { return {seed, 10000, 1000, 10, 50, 1.0}; }
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long long cases = 0;
  long long failures = 0;
  long long boundary = 0;   ///< sign comparisons left undecided inside the band
  double max_deviation = 0;
  double seconds = 0;
  std::string detail;
};

namespace detail {

class Tally {
 public:
  explicit Tally(double scale) : scale_(scale) {}

  double limit(double base) const { return base * scale_; }

  void deviation(double dev, double base_limit) {
    ++cases;
    max_dev = std::max(max_dev, dev);
    if (!(dev <= limit(base_limit))) ++failures;
  }

  void require(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }

  /// Two quantities that must agree in sign; values within the band are
  /// treated as zero and a zero against a strict sign is only counted.
  void same_sign(double a, double b, double base_band) {
    ++cases;
    const int sa = sign(a, base_band), sb = sign(b, base_band);
    if (sa == sb) return;
    if (sa == 0 || sb == 0) {
      ++boundary;
    } else {
      ++failures;
    }
  }

  /// Negativity of a and of b must coincide.
  void same_negativity(double a, double b, double base_band) {
    ++cases;
    const double band = limit(base_band);
    const bool na = a < -band, nb = b < -band;
    if (na == nb) return;
    // One side negative, the other inside the band rather than clearly positive.
    if ((na && b <= band) || (nb && a <= band)) {
      ++boundary;
    } else {
      ++failures;
    }
  }

  SuiteResult finish(int id, std::string name, double seconds, std::string detail = {}) const {
    return {id, std::move(name), failures == 0 && cases > 0, cases, failures, boundary, max_dev, seconds,
            std::move(detail)};
  }

  long long cases = 0, failures = 0, boundary = 0;
  double max_dev = 0;

 private:
  int sign(double v, double base_band) const {
    const double band = limit(base_band);
    return v < -band ? -1 : (v > band ? 1 : 0);
  }
  double scale_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string short_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

inline std::mt19937_64 stream(const Config& cfg, int suite) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(suite)};
  return std::mt19937_64(seq);
}

/// Least eigenvalue of a real symmetric 3x3 matrix from the trigonometric
/// solution of its characteristic cubic.
inline double sym3_min_eigenvalue_closed(const Mat3<double>& a) {
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double q = trace(a) / 3;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2 * p1;
  if (p2 == 0) return q;
  const double p = std::sqrt(p2 / 6);
  const Mat3<double> b = (1 / p) * (a - q * Mat3<double>::identity());
  const double r = std::clamp(det(b) / 2, -1.0, 1.0);
  const double phi = std::acos(r) / 3;
  return q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
}

inline double pair_deviation(const Vec3<double>& s1, const Mat3<double>& t1, const Vec3<double>& s2,
                             const Mat3<double>& t2) {
  return std::max(max_abs(s1 - s2), max_abs(t1 - t2));
}

inline double six_deviation(const SymmetricInvariants<double>& a, const SymmetricInvariants<double>& b) {
  return std::max({std::abs(a.I1 - b.I1), std::abs(a.I2 - b.I2), std::abs(a.I3 - b.I3), std::abs(a.I4 - b.I4),
                   std::abs(a.I5 - b.I5), std::abs(a.I6 - b.I6)});
}

inline std::vector<double> grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k) out.push_back(lo + (hi - lo) * k / (points - 1));
  return out;
}

inline CollectiveState<double> random_collective(int N, std::mt19937_64& gen) {
  return {N, haar_vector<double>(static_cast<std::size_t>(N) + 1, gen)};
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Bell state: I1 = -1 and I3 = I4 = I5 = 0; one evaluation under 1 ms.
inline SuiteResult bell_invariants(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  const double h = std::numbers::sqrt2 / 2;
  const CMatrix<double> rho = projector<double>({h, 0, 0, h});
  auto evaluate = [&] { return symmetric_six(TwoQubitState<double>::from_density(rho)); };
  evaluate();   // warm caches
  const auto start = std::chrono::steady_clock::now();
  const auto inv = evaluate();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  tally.deviation(std::abs(inv.I1 + 1), 1e-12);
  tally.deviation(std::abs(inv.I3), 1e-12);
  tally.deviation(std::abs(inv.I4), 1e-12);
  tally.deviation(std::abs(inv.I5), 1e-12);
  tally.require(ms < 1.0);
  return tally.finish(1, "bell_invariants", clock.seconds(), "evaluation_ms=" + detail::short_number(ms));
}

/// Special class: lambda1 < 0 iff I4 - I3^2 < 0 and lambda3 < 0 iff I5 < 0.
inline SuiteResult special_class_ppt(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 2);
  long long skipped = 0;
  for (int k = 0; k < cfg.random_states; ++k) {
    const auto p = random_special_class<double>(gen);
    const auto sym = symmetric_from_special(p);
    const auto inv = symmetric_six(sym);
    const auto lam = p.ppt_eigenvalues();
    auto numeric = hermitian_eigenvalues(partial_transpose(sym.state()));
    auto closed = std::vector<double>(lam.begin(), lam.end());
    std::sort(closed.begin(), closed.end());
    double dev = 0;
    for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(numeric[i] - closed[i]));
    tally.deviation(dev, 1e-10);
    tally.deviation(detail::six_deviation(inv, special_class_invariants(p)), 1e-10);
    if (inv.I3 <= 1e-9) {
      ++skipped;
      continue;
    }
    tally.same_negativity(lam[0], inv.I4_minus_I3sq, 1e-9);
    tally.same_negativity(lam[2], inv.I5, 1e-9);
  }
  return tally.finish(2, "special_class_ppt", clock.seconds(), "skipped_I3_zero=" + std::to_string(skipped));
}

/// Separable symmetric mixtures never show a negative sign.
inline SuiteResult separable_signs(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 3);
  const double band = tally.limit(1e-9);
  double worst = 0;
  for (int k = 0; k < cfg.random_states; ++k) {
    const auto sym = random_separable_symmetric<double>(1 + k % 4, gen);
    const auto inv = symmetric_six(sym);
    const double c_min = c_negativity_test(sym).min_eig;
    const double lowest = std::min({inv.I1, inv.I4, inv.I5, inv.I4_minus_I3sq, c_min});
    worst = std::min(worst, lowest);
    tally.require(lowest >= -band);
    tally.deviation(concurrence(sym.state()), 1e-9);
  }
  return tally.finish(3, "separable_signs", clock.seconds(), "most_negative=" + detail::short_number(worst));
}

/// PPT verdict equals the C verdict; the Korbicz minimum equals min eig C.
inline SuiteResult ppt_covariance_equivalence(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 4);
  long long entangled = 0;
  for (int k = 0; k < cfg.random_states; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const double ppt = ppt_min_eigenvalue(sym.state());
    const auto chain = ppt_equivalence_chain(sym);
    tally.deviation(std::max(chain.bordered_deviation, chain.reduced_deviation), 1e-10);
    const double c_min = detail::sym3_min_eigenvalue_closed(correlation_excess(sym.s(), sym.t()));
    tally.same_negativity(ppt, c_min, 1e-9);
    if (ppt < 0 && c_min < 0) ++entangled;

    const auto kmin = korbicz_minimum(sym.s(), sym.t());
    tally.deviation(std::abs(korbicz_witness(sym.s(), sym.t(), kmin.direction) - c_min), 1e-10);
    const auto probe = random_unit_vector<double>(gen);
    tally.require(korbicz_witness(sym.s(), sym.t(), probe) >= kmin.value - tally.limit(1e-12));
  }
  return tally.finish(4, "ppt_covariance_equivalence", clock.seconds(),
                      "entangled=" + std::to_string(entangled));
}

/// sign(xi^2 - 1) = sign(I5) on random states with |s| > 0.1 and on twisting.
inline SuiteResult squeezing_sign(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 5);
  std::uniform_int_distribution<int> pick_n(2, 20);
  int accepted = 0;
  while (accepted < cfg.small_states) {
    const auto sym = random_symmetric_state<double>(1 + accepted % 3, gen);
    if (norm(sym.s()) <= 0.1) continue;
    ++accepted;
    const int N = pick_n(gen);
    const auto inv = symmetric_six(sym);
    const auto sq = squeezing(sym.s(), sym.t(), N);
    tally.same_sign(sq.xi_sq - 1, inv.I5, 1e-9);
    tally.deviation(collective_forms(inv, sym.s(), sym.t(), N).max_deviation, 1e-10);
  }
  for (int N = 2; N <= 10; ++N) {
    for (const double x : detail::grid(0, std::numbers::pi, 101)) {
      const auto pair = ku_pair<double>({N, x});
      if (pair.invariants.I3 <= 1e-9) continue;
      tally.same_sign(squeezing(pair.s, pair.t, N).xi_sq - 1, pair.invariants.I5, 1e-9);
    }
  }
  return tally.finish(5, "squeezing_sign", clock.seconds());
}

/// Closed-form model pair data against the symmetric-subspace simulator.
inline SuiteResult oracle_concordance(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  for (int N = 2; N <= cfg.oracle_max_n; ++N) {
    for (int two_m = -N; two_m <= N; two_m += 2) {
      const DickeParams p{N, two_m};
      const auto special = dicke_special<double>(p);
      const auto pair = pair_state_of(build_dicke_state<double>(N, two_m));
      tally.deviation(detail::pair_deviation(special.s(), special.t(), pair.s(), pair.t()), 1e-9);
      tally.deviation(detail::six_deviation(dicke_pair<double>(p).invariants, symmetric_six(pair)), 1e-9);
    }
    for (const double x : detail::grid(0, std::numbers::pi, 25)) {
      const auto closed = ku_pair<double>({N, x});
      const auto pair = pair_state_of(evolve_ku<double>(N, x));
      tally.deviation(detail::pair_deviation(closed.s, closed.t, pair.s(), pair.t()), 1e-9);
      tally.deviation(detail::six_deviation(closed.invariants, symmetric_six(pair)), 1e-9);
    }
    for (const double x : detail::grid(0, std::numbers::pi, 50)) {
      const double j3 = moments_of(evolve_ku<double>(N, x)).j_mean[2];
      tally.deviation(std::abs(j3 + N / 2.0 * std::pow(std::cos(x), N - 1)), 1e-10);
    }
    if (N % 2 != 0) continue;
    for (const double x : detail::grid(0.05, 0.95, 10)) {
      const AtomicSqueezeParams p{N, x};
      const auto closed = atomic_pair<double>(p);
      const auto state = build_atomic_state<double>(N, p.theta());
      const auto pair = pair_state_of(state);
      tally.deviation(detail::pair_deviation(closed.s, closed.t, pair.s(), pair.t()), 1e-8);
      tally.deviation(r3_residual(state, p.squeeze()), 1e-8);
    }
    // Rotated |J, 0> amplitudes are the d^J_{M0}(pi/2) coefficients.
    const auto rotated = build_atomic_state<double>(N, 0.0);
    for (int k = 0; k <= N; ++k) {
      const double d = wigner_d_pi2<double>(N / 2, N / 2 - k);
      tally.deviation(std::abs(rotated.amplitudes[static_cast<std::size_t>(k)] - d), 1e-10);
    }
  }
  const double seconds = clock.seconds();
  tally.require(seconds < 30.0);
  return tally.finish(6, "oracle_concordance", seconds);
}

/// Dicke pair numbers and the per-M branches.
inline SuiteResult dicke_numbers(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  // M = 0 gives T = diag(t, t, -1/(N-1)) with t = N/(2(N-1)), so
  // I1 = -N^2 / (4 (N-1)^3); -4/27 at N = 4.
  for (int N = 2; N <= 10; N += 2) {
    const DickeParams centre = DickeParams::with_m(N, 0);
    const double n = N;
    const double expected = -n * n / (4 * (n - 1) * (n - 1) * (n - 1));
    tally.deviation(std::abs(dicke_pair<double>(centre).invariants.I1 - expected), 1e-12);
    tally.deviation(std::abs(symmetric_six(symmetric_from_special(dicke_special<double>(centre))).I1 - expected),
                    1e-12);
  }
  for (int N = 2; N <= 10; ++N) {
    for (const int two_m : {-N, N}) {
      for (const auto& inv : {dicke_pair<double>({N, two_m}).invariants,
                              symmetric_six(symmetric_from_special(dicke_special<double>({N, two_m})))}) {
        tally.deviation(std::abs(inv.I2 - 1), 1e-12);
        tally.deviation(std::abs(inv.I3 - 1), 1e-12);
        tally.deviation(std::abs(inv.I4 - 1), 1e-12);
        tally.deviation(std::abs(inv.I1), 1e-12);
        tally.deviation(std::abs(inv.I5), 1e-12);
      }
    }
    for (int two_m = -N; two_m <= N; two_m += 2) {
      const auto branch = classify(dicke_pair<double>({N, two_m}).invariants).branch;
      const int m2sq = two_m * two_m;   // (2M)^2
      PairBranch expected = PairBranch::I4_pos_combo_negative;
      if (std::abs(two_m) == N) {
        expected = PairBranch::separable_signature;
      } else if (two_m == 0) {
        expected = PairBranch::I3_zero_I1_negative;
      } else if (m2sq < N) {
        expected = PairBranch::I4_negative;
      }
      tally.require(branch == expected);
    }
  }
  return tally.finish(7, "dicke_numbers", clock.seconds());
}

/// Local unitaries leave all invariants and the classification unchanged.
inline SuiteResult local_unitary_invariance(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 8);
  for (int k = 0; k < cfg.small_states; ++k) {
    const auto state = random_two_qubit_state<double>(1 + k % 4, gen);
    const auto moved = apply_local_unitaries(state, haar_su2<double>(gen), haar_su2<double>(gen));
    const auto a = makhlin_all(state), b = makhlin_all(moved);
    double dev = 0;
    for (int i = 1; i <= 18; ++i) dev = std::max(dev, std::abs(a(i) - b(i)));
    tally.deviation(dev, 1e-9);
  }
  for (int k = 0; k < cfg.small_states; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto u = haar_su2<double>(gen);
    const auto moved = SymmetricTwoQubitState<double>::from(apply_local_unitaries(sym.state(), u, u));
    const auto a = symmetric_six(sym), b = symmetric_six(moved);
    tally.deviation(detail::six_deviation(a, b), 1e-9);
    const auto ca = classify(a), cb = classify(b);
    if (ca.branch != cb.branch && std::abs(ca.margin) > tally.limit(1e-9) && std::abs(cb.margin) > tally.limit(1e-9)) {
      tally.require(false);
    } else {
      tally.require(true);
    }
  }
  return tally.finish(8, "local_unitary_invariance", clock.seconds());
}

/// Bar-invariant identities and the collective covariance identity.
inline SuiteResult covariance_identities(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 9);
  for (int k = 0; k < cfg.small_states; ++k) {
    const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
    const auto direct = bar_invariants(sym);
    const auto via_six = bar_from_six(symmetric_six(sym));
    tally.deviation(std::abs(direct.bar1 - via_six.bar1), 1e-10);
    tally.deviation(std::abs(direct.bar2 - via_six.bar2), 1e-10);
    tally.deviation(std::abs(direct.bar3 - via_six.bar3), 1e-10);
    tally.require(direct.entangled() == c_negativity_test(sym).entangled);
  }
  const int per_n = std::max(1, cfg.small_states / 50);
  for (int N = 2; N <= cfg.identity_max_n; ++N) {
    for (int k = 0; k < per_n; ++k) {
      const auto sym = random_symmetric_state<double>(1 + k % 3, gen);
      tally.deviation(collective_criterion(sym.s(), sym.t(), N).identity_residual, 1e-12);
    }
  }
  return tally.finish(9, "covariance_identities", clock.seconds());
}

/// Qualitative shapes of the twisting and atomic I5 curves.
inline SuiteResult figure_analogues(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  const double band = tally.limit(1e-9);
  for (const int N : {4, 6, 8}) {
    const auto xs = detail::grid(0, std::numbers::pi, 201);
    double lowest = 0;
    for (const double x : xs) lowest = std::min(lowest, ku_pair<double>({N, x}).invariants.I5);
    tally.require(lowest < -band);
    tally.deviation(std::abs(ku_pair<double>({N, xs.front()}).invariants.I5), 1e-12);
    tally.deviation(std::abs(ku_pair<double>({N, xs.back()}).invariants.I5), 1e-12);
  }
  for (const int N : {4, 6, 8, 20}) {
    int negative = 0;
    for (const double x : detail::grid(0.01, 0.99, 99))
      if (atomic_pair<double>({N, x}).invariants.I5 < -band) ++negative;
    tally.require(negative > 0);
  }
  return tally.finish(10, "figure_analogues", clock.seconds());
}

/// Brute-force partial trace over the full 2^N space for N <= 6.
inline SuiteResult full_hilbert(const Config& cfg) {
  detail::Tally tally(cfg.tol_scale);
  const detail::Stopwatch clock;
  auto gen = detail::stream(cfg, 11);
  for (int N = 2; N <= testing::full_hilbert_max_n; ++N) {
    std::vector<CollectiveState<double>> states;
    for (int two_m = -N; two_m <= N; two_m += 2) states.push_back(build_dicke_state<double>(N, two_m));
    for (const double x : {0.1, 0.4, 0.9, 1.7, 2.9}) states.push_back(evolve_ku<double>(N, x));
    if (N % 2 == 0)
      for (const double x : {0.2, 0.5, 0.8}) states.push_back(build_atomic_state<double>(N, 0.5 * std::log(x)));
    for (int k = 0; k < 5; ++k) states.push_back(detail::random_collective(N, gen));
    for (const auto& s : states) tally.deviation(testing::full_hilbert_deviation(s), 1e-10);
  }
  return tally.finish(11, "full_hilbert", clock.seconds());
}

inline std::vector<SuiteResult> run_all(const Config& cfg) {
  return {bell_invariants(cfg),        special_class_ppt(cfg), separable_signs(cfg),
          ppt_covariance_equivalence(cfg), squeezing_sign(cfg),   oracle_concordance(cfg),
          dicke_numbers(cfg),          local_unitary_invariance(cfg), covariance_identities(cfg),
          figure_analogues(cfg),       full_hilbert(cfg)};
}

}  // namespace symsq::verify
