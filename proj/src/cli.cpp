#include "zrl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zrl/emit.hpp"
#include "zrl/errors.hpp"
#include "zrl/explicit_formula.hpp"
#include "zrl/numeric.hpp"
#include "zrl/region_verifier.hpp"
#include "zrl/zero_cache.hpp"

namespace zrl {

namespace {

// Memory guard for the dense pi table: 4 bytes per integer.
constexpr long long kMaxSweepLimit = 100'000'000;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string join_args(const std::vector<std::string>& args) {
  std::string echo = "zrl";
  for (const auto& a : args) {
    echo += ' ';
    echo += a;
  }
  if (args.empty()) echo += " report";
  return echo;
}

void write_output(const RunConfig& config, const std::string& text,
                  std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(config.output_path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::runtime_error("cannot open output file: " +
                             config.output_path);
  f << text;
  if (!f)
    throw std::runtime_error("write failed: " + config.output_path);
}

std::string json_array_text(const std::vector<ordered_json>& items) {
  ordered_json arr = ordered_json::array();
  for (const auto& j : items) arr.push_back(j);
  return json_text(arr);
}

int run_sieve(const RunConfig& c, std::ostream& out) {
  auto table = sieve_segment(static_cast<std::uint64_t>(c.lo),
                             static_cast<std::uint64_t>(c.hi));
  if (!c.cache_path.empty())
    save_prime_table(table, resolve_cache_path(c.cache_path));
  std::string text;
  if (c.format == OutputFormat::Csv) {
    std::ostringstream s;
    s << "lo,hi,prime_count\n"
      << table.lo << ',' << table.hi << ',' << table.count << '\n';
    text = s.str();
  } else {
    text = json_text({{"lo", table.lo},
                      {"hi", table.hi},
                      {"prime_count", table.count}});
  }
  write_output(c, text, out);
  return 0;
}

int run_zeros(const RunConfig& c, std::ostream& out, std::ostream& err) {
  double step = c.step;
  ZeroCatalog catalog;
  for (int attempt = 0;; ++attempt) {
    try {
      catalog = build_catalog(c.height, step);
      break;
    } catch (const RescanNeededError& e) {
      // count/density mismatch usually means the grid stepped over a close
      // pair; a finer scan is the documented remedy, three attempts max
      if (attempt >= 2) throw;
      step /= 2.0;
      err << "rescan needed (" << e.what() << "); retrying with step "
          << format_real(step) << "\n";
    }
  }
  if (!c.cache_path.empty())
    save_zero_cache(catalog, resolve_cache_path(c.cache_path));
  write_output(c,
               c.format == OutputFormat::Csv ? to_csv(catalog)
                                             : json_text(to_json(catalog)),
               out);
  return 0;
}

int run_psi(const RunConfig& c, std::ostream& out) {
  auto xs = c.xs;
  std::sort(xs.begin(), xs.end());
  auto values = chebyshev_batch(xs);
  std::string text;
  if (c.format == OutputFormat::Csv) {
    text = to_csv(values);
  } else {
    std::vector<ordered_json> items;
    for (const auto& v : values) items.push_back(to_json(v));
    text = json_array_text(items);
  }
  write_output(c, text, out);
  return 0;
}

int run_explicit(const RunConfig& c, std::ostream& out) {
  ZeroCatalog catalog;
  if (!c.cache_path.empty()) {
    catalog = load_zero_cache(resolve_cache_path(c.cache_path));
  } else {
    double need = *std::max_element(c.heights.begin(), c.heights.end());
    catalog = build_catalog(std::max(need, 10.0), kDefaultScanStep);
  }
  auto curve =
      landau_residual_curve(c.x, catalog, c.heights, c.residual_constant);
  std::string text;
  if (c.format == OutputFormat::Csv) {
    text = to_csv(curve.rows);
  } else {
    std::vector<ordered_json> items;
    for (const auto& e : curve.rows) items.push_back(to_json(e));
    ordered_json j = {{"rows", ordered_json::parse(json_array_text(items))},
                      {"within_bound", curve.within_bound}};
    text = json_text(j);
  }
  write_output(c, text, out);
  return curve.within_bound ? 0 : 1;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<SweepSummary> summaries;
  bool unexpected = false;

  if (c.check == "bhp") {
    long long x_min = c.x_min < 0 ? 10 : c.x_min;
    PiTable table(static_cast<std::uint64_t>(c.x_max));
    auto s = bhp_sweep(x_min, c.x_max, table);
    unexpected = !s.failures.empty();
    summaries.push_back(std::move(s));
  } else if (c.check == "brun-titchmarsh") {
    auto ys = c.y_grid.empty()
                  ? std::vector<double>{20.0, 100.0, 1000.0, 10000.0}
                  : c.y_grid;
    double y_max = *std::max_element(ys.begin(), ys.end());
    long long x_min = c.x_min < 0 ? 0 : c.x_min;
    PiTable table(static_cast<std::uint64_t>(
        c.x_max + static_cast<long long>(std::ceil(y_max))));
    for (double y : ys) {
      auto s = brun_titchmarsh_sweep(x_min, c.x_max, y, table);
      // the bound genuinely fails for a handful of tiny x when y is small;
      // those are documented findings, not tool errors
      if (y >= 20.0 && !s.failures.empty()) unexpected = true;
      if (y < 20.0 && !s.failures.empty())
        err << "note: " << s.failures.size() << " small-y violations at y="
            << format_real(y) << " (documented for y < 20)\n";
      summaries.push_back(std::move(s));
    }
  } else if (c.check == "heath-brown") {
    auto xs = c.x_grid.empty() ? std::vector<double>{1e4, 1e5, 1e6}
                               : c.x_grid;
    double x_max = *std::max_element(xs.begin(), xs.end());
    PiTable table(static_cast<std::uint64_t>(std::ceil(x_max)));
    auto s = heath_brown_sweep(xs, c.eps, table, c.tolerance);
    unexpected = !s.failures.empty();
    summaries.push_back(std::move(s));
  } else {  // schoenfeld; parse_args restricted the choices
    auto xs = c.x_grid.empty() ? log_half_integer_grid(100.5, 1e6, 1000)
                               : c.x_grid;
    auto [sharp, ratio] = schoenfeld_sweep(xs, c.c8);
    for (const auto& f : sharp.failures)
      if (f.x >= 100.0) unexpected = true;
    if (!ratio.failures.empty()) unexpected = true;
    if (!sharp.failures.empty() && !unexpected)
      err << "note: " << sharp.failures.size()
          << " sharp-bound violations below x=100 (documented small-x "
             "behavior)\n";
    summaries.push_back(std::move(sharp));
    summaries.push_back(std::move(ratio));
  }

  std::string text;
  if (c.format == OutputFormat::Csv) {
    std::vector<BoundCheckResult> failures;
    for (const auto& s : summaries)
      failures.insert(failures.end(), s.failures.begin(), s.failures.end());
    text = to_csv(failures);
  } else {
    std::vector<ordered_json> items;
    for (const auto& s : summaries) items.push_back(to_json(s));
    text = json_array_text(items);
  }
  write_output(c, text, out);
  return unexpected ? 1 : 0;
}

int run_frontier(const RunConfig& c, std::ostream& out) {
  auto table = beta_frontier(c.x_grid, c.beta_grid);
  write_output(c,
               c.format == OutputFormat::Csv ? to_csv(table)
                                             : json_text(to_json(table)),
               out);
  return 0;
}

int run_full_report(const RunConfig& c, std::ostream& out) {
  ReportEnv env;
  auto doc = run_report(env, c.echo);

  int passed = 0, expected_failures = 0, surprises = 0;
  for (const auto& r : doc.criteria) {
    bool as_documented = r.pass == r.expected_pass;
    if (r.pass) ++passed;
    if (!r.pass && r.expected_pass == false) ++expected_failures;
    if (!as_documented) ++surprises;
    out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " ("
        << r.name << ")";
    if (!r.pass && !r.expected_pass) out << " [expected failure, documented]";
    if (!as_documented) out << " [UNEXPECTED]";
    out << "\n    " << r.detail << "\n";
  }
  out << passed << "/" << doc.criteria.size() << " criteria pass, "
      << expected_failures << " documented expected failure"
      << (expected_failures == 1 ? "" : "s") << ", " << surprises
      << " surprise" << (surprises == 1 ? "" : "s") << "\n";

  if (!c.output_path.empty()) {
    std::ofstream f(c.output_path, std::ios::binary | std::ios::trunc);
    if (!f)
      throw std::runtime_error("cannot open output file: " + c.output_path);
    f << emit_report(doc, c.format);
    if (!f) throw std::runtime_error("write failed: " + c.output_path);
  }

  if (c.strict) return passed == static_cast<int>(doc.criteria.size()) ? 0 : 1;
  return surprises == 0 ? 0 : 1;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  config.echo = join_args(args);

  CLI::App app{"stress-tests for prime-counting bounds tied to zeta "
               "zero-free regions",
               "zrl"};
  app.require_subcommand(0, 1);

  std::string format = "csv";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", config.output_path,
                    "write results to this file instead of stdout");
  };

  auto* sieve = app.add_subcommand("sieve", "sieve a segment [lo, hi)");
  sieve->add_option("--lo", config.lo, "segment start (inclusive)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sieve->add_option("--hi", config.hi, "segment end (exclusive)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sieve->add_option("--cache", config.cache_path,
                    "save the segment bitmap here");
  add_common(sieve);

  auto* zeros =
      app.add_subcommand("zeros", "catalog critical-line zeros up to T");
  zeros->add_option("--height", config.height, "scan ceiling T")
      ->required()
      ->check(CLI::Range(10.0, 10000.0));
  zeros->add_option("--step", config.step, "scan step")
      ->check(CLI::Range(1e-6, 0.5));
  zeros->add_option("--cache", config.cache_path, "save the catalog here");
  add_common(zeros);

  auto* psi = app.add_subcommand("psi", "Chebyshev theta/psi/pi at points");
  psi->add_option("--x", config.xs, "abscissas (comma-separated)")
      ->required()
      ->delimiter(',');
  add_common(psi);

  auto* explicit_cmd = app.add_subcommand(
      "explicit", "reconstruct psi(x) from zeros up to each height");
  explicit_cmd->add_option("--x", config.x, "abscissa")->required();
  explicit_cmd
      ->add_option("--height", config.heights,
                   "truncation heights (comma-separated)")
      ->required()
      ->delimiter(',');
  explicit_cmd->add_option("--cache", config.cache_path,
                           "load the zero catalog from this cache");
  explicit_cmd
      ->add_option("--constant", config.residual_constant,
                   "residual bound constant C in C x log(x)/T")
      ->check(CLI::PositiveNumber);
  add_common(explicit_cmd);

  auto* verify = app.add_subcommand("verify", "sweep a short-interval bound");
  verify
      ->add_option("--check", config.check,
                   "which bound: bhp, brun-titchmarsh, heath-brown, "
                   "schoenfeld")
      ->required()
      ->check(CLI::IsMember(
          {"bhp", "brun-titchmarsh", "heath-brown", "schoenfeld"}));
  verify->add_option("--x-min", config.x_min, "sweep start (integer checks)");
  verify->add_option("--x-max", config.x_max, "sweep end (integer checks)");
  verify
      ->add_option("--y-grid", config.y_grid,
                   "interval lengths (brun-titchmarsh)")
      ->delimiter(',');
  verify
      ->add_option("--x-grid", config.x_grid,
                   "explicit abscissas (heath-brown, schoenfeld)")
      ->delimiter(',');
  verify->add_option("--eps", config.eps, "heath-brown epsilon")
      ->check(CLI::Range(0.0, 1.0 / 12.0));
  verify
      ->add_option("--tolerance", config.tolerance,
                   "heath-brown ratio tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--c8", config.c8, "deviation ratio ceiling")
      ->check(CLI::PositiveNumber);
  add_common(verify);

  auto* frontier = app.add_subcommand(
      "frontier", "prime-presence grid over (x, x + x^beta]");
  frontier->add_option("--x-grid", config.x_grid, "abscissas")
      ->required()
      ->delimiter(',');
  frontier->add_option("--beta-grid", config.beta_grid, "exponents")
      ->required()
      ->delimiter(',');
  add_common(frontier);

  auto* report =
      app.add_subcommand("report", "run the full self-check suite");
  report->add_flag("--strict", config.strict,
                   "nonzero exit on any failure, even documented ones");
  add_common(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.format =
      format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  if (app.got_subcommand(sieve)) {
    config.command = Command::Sieve;
    require(config.hi > config.lo, "--hi must be greater than --lo");
    require(static_cast<std::uint64_t>(config.hi) <= sieve_limit(),
            "--hi exceeds the sieve limit");
  } else if (app.got_subcommand(zeros)) {
    config.command = Command::Zeros;
  } else if (app.got_subcommand(psi)) {
    config.command = Command::Psi;
    for (double v : config.xs)
      require(v >= 0.0, "--x values must be nonnegative");
  } else if (app.got_subcommand(explicit_cmd)) {
    config.command = Command::Explicit;
    require(config.x >= 2.0, "--x must be at least 2");
    for (double t : config.heights) {
      require(t >= 0.0, "--height values must be nonnegative");
      require(t <= config.x, "--height values must not exceed --x");
    }
    if (config.cache_path.empty())
      for (double t : config.heights)
        require(t <= 10000.0,
                "--height above 10000 needs a precomputed --cache");
  } else if (app.got_subcommand(verify)) {
    config.command = Command::Verify;
    require(config.x_max >= 2, "--x-max must be at least 2");
    require(config.x_max <= kMaxSweepLimit, "--x-max is too large to table");
    require(config.x_min <= config.x_max, "--x-min must not exceed --x-max");
    if (config.check == "bhp" && config.x_min >= 0)
      require(config.x_min >= 2, "--x-min must be at least 2 for bhp");
    for (double y : config.y_grid)
      require(y >= 1.0, "--y-grid values must be at least 1");
    for (double x : config.x_grid) {
      if (config.check == "heath-brown")
        require(x >= 100.0, "--x-grid values must be at least 100");
      if (config.check == "schoenfeld")
        require(x >= 3.0, "--x-grid values must be at least 3");
    }
  } else if (app.got_subcommand(frontier)) {
    config.command = Command::Frontier;
    for (double x : config.x_grid)
      require(x >= 10.0, "--x-grid values must be at least 10");
    for (double b : config.beta_grid)
      require(b > 0.0 && b <= 1.0, "--beta-grid values must be in (0, 1]");
  } else {
    config.command = Command::Report;
  }

  require(config.step > 0.0 && config.step <= 0.5,
          "--step must be in (0, 0.5]");
  return config;
}

std::string resolve_cache_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("ZRL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Sieve: return run_sieve(config, out);
    case Command::Zeros: return run_zeros(config, out, err);
    case Command::Psi: return run_psi(config, out);
    case Command::Explicit: return run_explicit(config, out);
    case Command::Verify: return run_verify(config, out, err);
    case Command::Frontier: return run_frontier(config, out);
    case Command::Report: return run_full_report(config, out);
  }
  throw std::logic_error("run: unknown command");
}

}  // namespace zrl
