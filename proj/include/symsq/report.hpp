// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Analysis report for a single two-qubit state. The report is assembled as
 * one JSON document; the text rendering walks that same document, so both
 * formats always carry identical numbers.
 */
#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symsq/collective.hpp"
#include "symsq/covariance.hpp"
#include "symsq/invariants.hpp"
#include "symsq/io.hpp"

namespace symsq::io {

struct AnalyzeOptions {
  std::vector<int> Ns{2};
  double tol = default_tol<double>;
  bool timing = false;
};

namespace detail {

inline ordered_json nullable(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline ordered_json symmetric_section(const SymmetricTwoQubitState<double>& sym, const AnalyzeOptions& opt) {
  const auto inv = symmetric_six(sym);
  const auto flags = separability_flags(inv, opt.tol);
  const auto bar = bar_invariants(sym);
  const auto c_test = c_negativity_test(sym, opt.tol);
  const auto cls = classify(inv, std::max(opt.tol, classify_tol));

  ordered_json out;
  out["invariants"] = {{"I1", inv.I1}, {"I2", inv.I2}, {"I3", inv.I3},  {"I4", inv.I4},
                       {"I5", inv.I5}, {"I6", inv.I6}, {"I4mI3sq", inv.I4_minus_I3sq}};
  out["bar_invariants"] = {{"bar1", bar.bar1}, {"bar2", bar.bar2}, {"bar3", bar.bar3}, {"bar4", bar.bar4}};
  out["flags"] = {{"I4_negative", flags.I4_negative},
                  {"I5_negative", flags.I5_negative},
                  {"I4mI3sq_negative", flags.I4_minus_I3sq_negative},
                  {"I1_negative_I3_zero", flags.I1_negative_with_I3_zero},
                  {"C_negative", c_test.entangled}};
  out["C_min_eigenvalue"] = c_test.min_eig;
  out["classification"] = {{"branch", to_string(cls.branch)},
                           {"note", cls.collective_note},
                           {"margin", cls.margin}};

  ordered_json rows = ordered_json::array();
  for (const int N : opt.Ns) {
    const auto crit = collective_criterion(sym.s(), sym.t(), N, opt.tol);
    std::optional<double> xi_sq;
    if (inv.I3 > opt.tol) xi_sq = squeezing(sym.s(), sym.t(), N, opt.tol).xi_sq;
    rows.push_back({{"N", N},
                    {"witness_min_eigenvalue", crit.min_eig},
                    {"threshold", N / 4.0},
                    {"entangled", crit.entangled},
                    {"xi_sq", nullable(xi_sq)}});
  }
  out["collective"] = std::move(rows);
  return out;
}

}  // namespace detail

/// Throws symsq::Error when an N is invalid.
inline ordered_json analyze(const ParsedState& parsed, const AnalyzeOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto& state = parsed.state;
  for (const int N : opt.Ns)
    if (N < 2) throw Error(Errc::InvalidN, "N must be at least 2", N);

  ordered_json report;
  report["input"] = {{"kind", to_string(parsed.kind)}, {"source", parsed.echo}};
  report["bloch"] = {{"s", to_json(state.s())}, {"r", to_json(state.r())}, {"T", to_json(state.t())}};

  const auto mk = makhlin_all(state);
  ordered_json mk_json = ordered_json::array();
  for (int k = 1; k <= 18; ++k) mk_json.push_back(mk(k));
  report["makhlin"] = std::move(mk_json);

  const double conc = concurrence(state, opt.tol);
  report["ppt_min_eigenvalue"] = ppt_min_eigenvalue(state, opt.tol);
  report["concurrence"] = conc;
  report["entanglement_of_formation"] = entanglement_of_formation(conc);

  std::optional<SymmetricTwoQubitState<double>> sym;
  try {
    sym = SymmetricTwoQubitState<double>::from(state, opt.tol);
  } catch (const Error& e) {
    if (e.code() != Errc::NotSymmetric) throw;
  }
  report["symmetric"] = sym.has_value();
  report["symmetric_analysis"] = sym ? detail::symmetric_section(*sym, opt) : ordered_json(nullptr);

  if (opt.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = ms.count();
  }
  return report;
}

namespace detail {

inline void write_text(std::ostream& os, const ordered_json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_text(os, value, path.empty() ? key : path + "." + key);
  } else if (j.is_array()) {
    std::size_t k = 0;
    for (const auto& value : j) write_text(os, value, path + "[" + std::to_string(k++) + "]");
  } else {
    os << path << " = ";
    if (j.is_number_float()) {
      os << format_number(j.get<double>());
    } else if (j.is_string()) {
      os << j.get<std::string>();
    } else {
      os << j.dump();
    }
    os << '\n';
  }
}

}  // namespace detail

/// One "path = value" line per leaf, values formatted exactly as in JSON.
inline void write_report_text(std::ostream& os, const ordered_json& report) {
  detail::write_text(os, report, "");
}

}  // namespace symsq::io
