#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrl/report.hpp"

namespace zrl {

enum class Command { Sieve, Zeros, Psi, Explicit, Verify, Frontier, Report };

// Not an error: --help was requested and what() is the full help text.
struct HelpRequested : std::runtime_error {
  explicit HelpRequested(const std::string& text)
      : std::runtime_error(text) {}
};

// Parsed and range-checked invocation. Every numeric field is already within
// the precondition of the operation it feeds; parse_args rejects the rest.
struct RunConfig {
  Command command = Command::Report;
  OutputFormat format = OutputFormat::Csv;
  std::string cache_path;   // zeros/explicit: zero cache; sieve: segment cache
  std::string output_path;  // empty = write to stdout
  std::string echo;         // canonical rendering of the invocation

  // sieve
  long long lo = 0;
  long long hi = 0;

  // zeros
  double height = 100.0;
  double step = kDefaultScanStep;

  // psi
  std::vector<double> xs;

  // explicit
  double x = 0.0;
  std::vector<double> heights;
  double residual_constant = 5.0;

  // verify
  std::string check;
  long long x_min = -1;  // -1 = use the check's default
  long long x_max = 1000000;
  std::vector<double> y_grid;
  std::vector<double> x_grid;  // verify (heath-brown, schoenfeld), frontier
  double eps = 0.0;
  double tolerance = 0.15;
  double c8 = 10.0;

  // frontier
  std::vector<double> beta_grid;

  // report
  bool strict = false;
};

// argv without the program name. Throws UsageError naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& args);

// Honors ZRL_CACHE_DIR for relative paths.
std::string resolve_cache_path(const std::string& path);

// Executes the command, writing data to `out` and progress/diagnostics to
// `err`. Returns the process exit status: 0 unless something errored or a
// verify/report run produced failures beyond its documented expectations.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zrl
