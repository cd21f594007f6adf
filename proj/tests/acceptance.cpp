// SPDX-License-Identifier: Apache-2.0
// Acceptance runner: one PASS/FAIL line per criterion, backed by the full
// verification suites with seed 42.

#include <cmath>
#include <cstdio>
#include <string>

#include "symsq/io.hpp"
#include "symsq/models.hpp"
#include "symsq/oracle.hpp"
#include "symsq/verify.hpp"

namespace {

using symsq::io::format_number;

void line(bool pass, int id, const std::string& what) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
}

std::string summary(const symsq::verify::SuiteResult& r) {
  std::string s = r.name + " cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failures) +
                  " boundary=" + std::to_string(r.boundary) + " max_dev=" + format_number(r.max_deviation) +
                  " seconds=" + format_number(r.seconds);
  if (!r.detail.empty()) s += " " + r.detail;
  return s;
}

}  // namespace

int main() {
  const auto results = symsq::verify::run_all(symsq::verify::Config::full(42));
  bool all = true;
  for (const auto& r : results) {
    if (r.id != 7) {
      line(r.passed, r.id, summary(r));
      all = all && r.passed;
      continue;
    }
    // The stated target for N = 4, M = 0 is I1 = -16/27. Both the closed form
    // and the simulator give -N^2/(4(N-1)^3) = -4/27, so the literal target is
    // reported as failing while the corrected suite result is shown alongside.
    const symsq::DickeParams centre = symsq::DickeParams::with_m(4, 0);
    const double closed = symsq::dicke_pair<double>(centre).invariants.I1;
    const double simulated = symmetric_six(symsq::pair_state_of(symsq::build_dicke_state<double>(4, 0))).I1;
    const double stated = -16.0 / 27.0;
    const bool literal = std::abs(closed - stated) <= 1e-12 && std::abs(simulated - stated) <= 1e-12;
    line(literal && r.passed, 7,
         "I1(N=4, M=0) closed=" + format_number(closed) + " simulated=" + format_number(simulated) +
             " stated=" + format_number(stated) +
             (literal ? "" : " (stated value not reproduced; closed form and simulator agree on -4/27)") + "; " +
             summary(r));
    all = all && literal && r.passed;
  }
  return all ? 0 : 1;
}
