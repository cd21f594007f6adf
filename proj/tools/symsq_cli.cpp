// SPDX-License-Identifier: Apache-2.0
// symsq: analyze two-qubit state files, sweep the collective models and run
// the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symsq/io.hpp"
#include "symsq/models.hpp"
#include "symsq/report.hpp"
#include "symsq/verify.hpp"

namespace {

namespace io = symsq::io;

enum Exit : int {
  ok = 0,
  property_failure = 1,
  invalid_state = 2,
  parse_failure = 3,
  invalid_range = 4,
  usage = 64,
};

struct AnalyzeArgs {
  std::string path;
  std::vector<int> Ns{2};
  std::string format = "json";
  bool timing = false;
};

struct SweepArgs {
  std::string model;
  std::vector<int> Ns;
  std::string range;
  std::string out;
  std::string format;
};

struct VerifyArgs {
  std::string level = "quick";
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
};

/// SYMSQ_TOL overrides the analysis tolerance when set.
std::optional<double> env_tolerance() {
  const char* raw = std::getenv("SYMSQ_TOL");
  if (raw == nullptr || *raw == '\0') return symsq::default_tol<double>;
  const auto v = io::parse_number(raw);
  if (!v || !(*v > 0)) return std::nullopt;
  return v;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_analyze(const AnalyzeArgs& args) {
  const auto tol = env_tolerance();
  if (!tol) {
    std::cerr << "symsq: SYMSQ_TOL must be a positive number\n";
    return usage;
  }
  const auto text = read_file(args.path);
  if (!text) {
    std::cerr << "symsq: cannot read " << args.path << '\n';
    return parse_failure;
  }
  try {
    const auto parsed = io::parse_state_text(*text, *tol);
    const auto report = io::analyze(parsed, {args.Ns, *tol, args.timing});
    if (args.format == "text") {
      io::write_report_text(std::cout, report);
    } else {
      io::write_json(std::cout, report);
      std::cout << '\n';
    }
    return ok;
  } catch (const io::ParseError& e) {
    std::cerr << "symsq: parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const symsq::Error& e) {
    std::cerr << "symsq: invalid state: " << e.what() << " (value " << io::format_number(e.value()) << ")\n";
    return invalid_state;
  }
}

/// "lo:hi:steps" with locale-independent number parsing.
std::optional<symsq::ParamRange> parse_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) return std::nullopt;
  const auto lo = io::parse_number(std::string_view(text).substr(0, first));
  const auto hi = io::parse_number(std::string_view(text).substr(first + 1, second - first - 1));
  const auto steps = io::parse_number(std::string_view(text).substr(second + 1));
  if (!lo || !hi || !steps || *steps != std::floor(*steps) || *steps < 1 || *steps > 1e7) return std::nullopt;
  return symsq::ParamRange{*lo, *hi, static_cast<int>(*steps)};
}

int run_sweep(const SweepArgs& args) {
  const auto model = symsq::parse_model(args.model);
  if (!model) {
    std::cerr << "symsq: unknown model " << args.model << '\n';
    return usage;
  }
  for (const int N : args.Ns) {
    if (N < 2 || (*model == symsq::Model::atomic && N % 2 != 0)) {
      std::cerr << "symsq: N = " << N << " is not valid for " << args.model << '\n';
      return invalid_range;
    }
  }
  symsq::ParamRange range;
  if (!args.range.empty()) {
    const auto parsed = parse_range(args.range);
    if (!parsed || !parsed->valid_for(*model)) {
      std::cerr << "symsq: invalid --param-range " << args.range << '\n';
      return invalid_range;
    }
    range = *parsed;
  } else if (*model != symsq::Model::dicke) {
    std::cerr << "symsq: --param-range is required for " << args.model << '\n';
    return invalid_range;
  }

  std::vector<symsq::SweepRow<double>> rows;
  try {
    rows = symsq::sweep(*model, args.Ns, range);
  } catch (const symsq::Error& e) {
    std::cerr << "symsq: " << e.what() << '\n';
    return invalid_range;
  }

  const bool as_json = args.format == "json" ||
                       (args.format.empty() && args.out.size() >= 5 &&
                        args.out.compare(args.out.size() - 5, 5, ".json") == 0);
  std::ostringstream body;
  if (as_json) {
    io::write_json(body, io::sweep_json(rows));
    body << '\n';
  } else {
    io::write_sweep_csv(body, rows);
  }
  if (args.out.empty()) {
    std::cout << body.str();
    return ok;
  }
  std::ofstream out(args.out, std::ios::binary);
  out << body.str();
  if (!out) {
    std::cerr << "symsq: cannot write " << args.out << '\n';
    return usage;
  }
  return ok;
}

int run_verify(const VerifyArgs& args) {
  auto cfg = args.level == "full" ? symsq::verify::Config::full(args.seed)
                                  : symsq::verify::Config::quick(args.seed);
  cfg.tol_scale = args.tol_scale;
  const auto results = symsq::verify::run_all(cfg);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases << " failures=" << r.failures
              << " boundary=" << r.boundary << " max_dev=" << io::format_number(r.max_deviation);
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << '\n';
  return failed == 0 ? ok : property_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise entanglement analysis for symmetric qubit systems", "symsq"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Analyze a two-qubit state file");
  cmd_analyze->add_option("path", analyze.path, "JSON file with one of rho, bloch, special")->required();
  cmd_analyze->add_option("--N", analyze.Ns, "Collective sizes for the criterion rows (repeatable)")
      ->check(CLI::Range(2, 1 << 20));
  cmd_analyze->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_analyze->add_flag("--timing", analyze.timing, "Include wall-clock timing in the report");

  SweepArgs sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "Evaluate a model over a parameter grid");
  cmd_sweep->add_option("--model", sweep.model, "dicke, ku or atomic")->required();
  cmd_sweep->add_option("--N", sweep.Ns, "System sizes (comma separated or repeated)")
      ->required()
      ->delimiter(',');
  cmd_sweep->add_option("--param-range", sweep.range, "lo:hi:steps (ignored for dicke)");
  cmd_sweep->add_option("--out", sweep.out, "Output file; stdout when omitted");
  cmd_sweep->add_option("--format", sweep.format, "csv or json; defaults from the --out extension")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the property suites");
  cmd_verify->add_option("--level", verify.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  cmd_verify->add_option("--seed", verify.seed, "Random seed");
  // Test hook: scales every numeric limit; a negative value forces failures.
  cmd_verify->add_option("--tolerance-scale", verify.tol_scale)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (cmd_analyze->parsed()) return run_analyze(analyze);
  if (cmd_sweep->parsed()) return run_sweep(sweep);
  if (cmd_verify->parsed()) return run_verify(verify);
  return usage;
}
