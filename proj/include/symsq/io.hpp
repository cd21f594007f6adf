// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * State files, locale-free number formatting and sweep tables.
 *
 * Requires nlohmann/json on the include path.
 */
#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "symsq/models.hpp"
#include "symsq/states.hpp"

namespace symsq::io {

using ordered_json = nlohmann::ordered_json;

/// Malformed input: syntax, missing keys or wrong shapes. Physical problems
/// with a well-formed file surface as symsq::Error instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Numbers

/// Shortest-width-independent, round-trip exact: 17 significant digits.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_number(std::string_view text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return v;
}

namespace detail {

inline void write_json(std::ostream& os, const ordered_json& j, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent >= 0) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << ordered_json(key).dump() << (indent >= 0 ? ": " : ":");
        write_json(os, value, indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        write_json(os, value, indent, depth + 1);
      }
      pad(depth);
      os << ']';
      return;
    }
    case ordered_json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_number(v) : "null");
      return;
    }
    default: os << j.dump(); return;
  }
}

}  // namespace detail

/// Like ordered_json::dump but floats always carry 17 significant digits.
inline void write_json(std::ostream& os, const ordered_json& j, int indent = 2) {
  detail::write_json(os, j, indent, 0);
}

inline std::string dump_json(const ordered_json& j, int indent = 2) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

template <std::floating_point R>
ordered_json to_json(const Vec3<R>& v) {
  return ordered_json::array({double(v[0]), double(v[1]), double(v[2])});
}

template <std::floating_point R>
ordered_json to_json(const Mat3<R>& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < 3; ++i) out.push_back(to_json(m.row(i)));
  return out;
}

// ---------------------------------------------------------------------------
// State files

enum class StateKind { rho, bloch, special };

constexpr std::string_view to_string(StateKind k) noexcept {
  switch (k) {
    case StateKind::rho: return "rho";
    case StateKind::bloch: return "bloch";
    case StateKind::special: return "special";
  }
  return "";
}

struct ParsedState {
  StateKind kind;
  TwoQubitState<double> state;
  ordered_json echo;
};

namespace detail {

inline double number_at(const nlohmann::json& j, std::string_view what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

inline Vec3<double> vec3_at(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + " must be an array of 3 numbers");
  return {number_at(j[0], what), number_at(j[1], what), number_at(j[2], what)};
}

inline Mat3<double> mat3_at(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + " must be a 3x3 array");
  Mat3<double> m;
  for (std::size_t i = 0; i < 3; ++i) m.set_row(i, vec3_at(j[i], what));
  return m;
}

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key, std::string_view where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(where) + " lacks \"" + key + "\"");
  return *it;
}

inline CMatrix<double> rho_at(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("rho must be a 4x4 array of [re, im] pairs");
  CMatrix<double> rho(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) throw ParseError("rho must be a 4x4 array of [re, im] pairs");
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& z = j[i][k];
      if (!z.is_array() || z.size() != 2) throw ParseError("rho entries must be [re, im] pairs");
      rho(i, k) = {number_at(z[0], "rho entry"), number_at(z[1], "rho entry")};
    }
  }
  return rho;
}

}  // namespace detail

/// Throws ParseError for malformed input and symsq::Error for states that
/// parse but are not physical.
inline ParsedState parse_state(const nlohmann::json& doc, double tol = default_tol<double>) {
  if (!doc.is_object() || doc.size() != 1)
    throw ParseError("state file must be an object with exactly one of rho, bloch, special");
  const auto entry = doc.items().begin();
  const std::string& key = entry.key();
  const nlohmann::json& body = entry.value();
  ordered_json echo = ordered_json::parse(doc.dump());
  if (key == "rho") {
    return {StateKind::rho, TwoQubitState<double>::from_density(detail::rho_at(body), tol), std::move(echo)};
  }
  if (key == "bloch") {
    const auto s = detail::vec3_at(detail::field(body, "s", "bloch"), "bloch.s");
    const auto r = detail::vec3_at(detail::field(body, "r", "bloch"), "bloch.r");
    const auto t = detail::mat3_at(detail::field(body, "T", "bloch"), "bloch.T");
    return {StateKind::bloch, from_bloch(s, r, t, tol), std::move(echo)};
  }
  if (key == "special") {
    SpecialClassState<double> p;
    p.a = detail::number_at(detail::field(body, "a", "special"), "special.a");
    p.b = detail::number_at(detail::field(body, "b", "special"), "special.b");
    p.c = detail::number_at(detail::field(body, "c", "special"), "special.c");
    p.d = detail::number_at(detail::field(body, "d", "special"), "special.d");
    p.validate(tol);
    return {StateKind::special, TwoQubitState<double>::from_density(p.matrix(), tol), std::move(echo)};
  }
  throw ParseError("unknown state key \"" + key + "\"");
}

inline ParsedState parse_state_text(std::string_view text, double tol = default_tol<double>) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_state(doc, tol);
}

// ---------------------------------------------------------------------------
// Sweep tables

inline constexpr std::string_view sweep_csv_header =
    "model,N,param,I1,I2,I3,I4,I5,I4mI3sq,xi_sq,branch";

template <std::floating_point R>
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow<R>>& rows) {
  os << sweep_csv_header << '\n';
  for (const auto& row : rows) {
    const auto& inv = row.invariants;
    os << to_string(row.model) << ',' << row.N << ',' << format_number(row.param);
    for (const R v : {inv.I1, inv.I2, inv.I3, inv.I4, inv.I5, inv.I4_minus_I3sq})
      os << ',' << format_number(v);
    os << ',' << (row.xi_sq ? format_number(*row.xi_sq) : std::string{}) << ','
       << to_string(row.branch) << '\n';
  }
}

template <std::floating_point R>
ordered_json sweep_json(const std::vector<SweepRow<R>>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    const auto& inv = row.invariants;
    ordered_json j;
    j["model"] = to_string(row.model);
    j["N"] = row.N;
    j["param"] = double(row.param);
    j["I1"] = double(inv.I1);
    j["I2"] = double(inv.I2);
    j["I3"] = double(inv.I3);
    j["I4"] = double(inv.I4);
    j["I5"] = double(inv.I5);
    j["I4mI3sq"] = double(inv.I4_minus_I3sq);
    j["xi_sq"] = row.xi_sq ? ordered_json(double(*row.xi_sq)) : ordered_json(nullptr);
    j["branch"] = to_string(row.branch);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace symsq::io
