// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symsq {

enum class Errc {
  NonHermitian,
  NonSquare,
  NonSymmetric,
  NonUnitary,
  NotPositive,
  InvalidDensityMatrix,
  NotSymmetric,
  ChainMismatch,
  InvalidN,
  TraceViolation,
  ZeroMeanSpin,
  ParityViolation,
  NormalizationFailure,
  DomainError,
  DegenerateUnhandled,
  NonUnitVector,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NonUnitary: return "NonUnitary";
    case Errc::NotPositive: return "NotPositive";
    case Errc::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::ChainMismatch: return "ChainMismatch";
    case Errc::InvalidN: return "InvalidN";
    case Errc::TraceViolation: return "TraceViolation";
    case Errc::ZeroMeanSpin: return "ZeroMeanSpin";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::DomainError: return "DomainError";
    case Errc::DegenerateUnhandled: return "DegenerateUnhandled";
    case Errc::NonUnitVector: return "NonUnitVector";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code. `value()` holds the offending
/// quantity when one exists (e.g. the minimum eigenvalue for NotPositive).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, double value = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        value_(value) {}

  Errc code() const noexcept { return code_; }
  double value() const noexcept { return value_; }

 private:
  Errc code_;
  double value_;
};

}  // namespace symsq
