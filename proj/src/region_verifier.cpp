#include "zrl/region_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zrl/numeric.hpp"

namespace zrl {

namespace {

// Primes in (a, b]. Both query paths floor their argument the same way, so
// sweep results recompute bit-identically through the single-point entry.
std::int64_t count_open_closed(double a, double b, const PiTable* table) {
  if (table) return table->count_le(b) - table->count_le(a);
  return prime_pi(b) - prime_pi(a);
}

BoundCheckResult bhp_impl(double x, const PiTable* table) {
  if (!(x >= 2.0)) throw std::domain_error("check_bhp: requires x >= 2");
  BoundCheckResult r;
  r.check_id = CheckId::BHP;
  r.x = x;
  r.y = std::pow(x, 0.525);
  r.lhs = static_cast<double>(count_open_closed(x - r.y, x, table));
  r.rhs = 1.0;
  r.pass = r.lhs >= r.rhs;
  r.margin = r.rhs - r.lhs;
  return r;
}

BoundCheckResult bt_impl(double x, double y, const PiTable* table) {
  if (!(x >= 0.0))
    throw std::domain_error("check_brun_titchmarsh: requires x >= 0");
  if (!(y >= 1.0))
    throw std::domain_error("check_brun_titchmarsh: requires y >= 1");
  BoundCheckResult r;
  r.check_id = CheckId::BrunTitchmarsh;
  r.x = x;
  r.y = y;
  r.lhs = static_cast<double>(count_open_closed(x, x + y, table));
  r.rhs = 2.0 * y / (std::log(y) + 3.53);
  r.pass = r.lhs <= r.rhs;
  r.margin = r.rhs - r.lhs;
  return r;
}

BoundCheckResult hb_impl(double x, double eps, double tolerance,
                         const PiTable* table) {
  if (!(x >= 100.0))
    throw std::domain_error("check_heath_brown: requires x >= 100");
  if (!(eps >= 0.0 && eps <= 1.0 / 12.0))
    throw std::domain_error("check_heath_brown: requires 0 <= eps <= 1/12");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("check_heath_brown: tolerance must be > 0");
  BoundCheckResult r;
  r.check_id = CheckId::HeathBrown;
  r.x = x;
  r.y = std::pow(x, 7.0 / 12.0);
  r.eps = eps;
  r.lhs = static_cast<double>(count_open_closed(x - r.y, x, table));
  r.rhs = r.y / std::log(x);
  r.margin = r.lhs / r.rhs;
  r.pass = std::fabs(r.margin - 1.0) <= tolerance;
  return r;
}

// Shared by the single check and the batch sweep so both emit identical
// doubles for the same x and psi.
std::pair<BoundCheckResult, BoundCheckResult> schoenfeld_pair(double x,
                                                              double psi,
                                                              double c8) {
  double lg = std::log(x);
  double delta = std::fabs(psi - x);

  BoundCheckResult sharp;
  sharp.check_id = CheckId::Schoenfeld;
  sharp.x = x;
  sharp.lhs = delta;
  sharp.rhs = std::sqrt(x) * lg * lg / (8.0 * kPi);
  sharp.pass = sharp.lhs < sharp.rhs;
  sharp.margin = sharp.rhs - sharp.lhs;

  BoundCheckResult ratio;
  ratio.check_id = CheckId::Cor8;
  ratio.x = x;
  ratio.lhs = delta;
  ratio.rhs = std::pow(x, 21.0 / 40.0);
  ratio.margin = ratio.lhs / ratio.rhs;
  ratio.pass = ratio.margin <= c8;
  return {sharp, ratio};
}

void check_schoenfeld_args(double x, double c8) {
  if (!(x >= 3.0))
    throw std::domain_error("check_schoenfeld_cor8: requires x >= 3");
  if (!(c8 > 0.0))
    throw std::invalid_argument("check_schoenfeld_cor8: c8 must be > 0");
}

}  // namespace

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::BHP: return "bhp";
    case CheckId::BrunTitchmarsh: return "brun-titchmarsh";
    case CheckId::HeathBrown: return "heath-brown";
    case CheckId::Schoenfeld: return "schoenfeld";
    case CheckId::Cor8: return "cor8";
  }
  throw std::logic_error("to_string: unknown CheckId");
}

BoundCheckResult check_bhp(double x) { return bhp_impl(x, nullptr); }

BoundCheckResult check_bhp(double x, const PiTable& table) {
  return bhp_impl(x, &table);
}

BoundCheckResult check_brun_titchmarsh(double x, double y) {
  return bt_impl(x, y, nullptr);
}

BoundCheckResult check_brun_titchmarsh(double x, double y,
                                       const PiTable& table) {
  return bt_impl(x, y, &table);
}

BoundCheckResult check_heath_brown(double x, double eps, double tolerance) {
  return hb_impl(x, eps, tolerance, nullptr);
}

BoundCheckResult check_heath_brown(double x, double eps, const PiTable& table,
                                   double tolerance) {
  return hb_impl(x, eps, tolerance, &table);
}

std::pair<BoundCheckResult, BoundCheckResult> check_schoenfeld_cor8(
    double x, double c8) {
  check_schoenfeld_args(x, c8);
  return schoenfeld_pair(x, chebyshev_values(x).psi, c8);
}

ProofChainReport proof_chain(double x, double beta, double alpha,
                             double c_alpha) {
  if (!(x >= 10.0)) throw std::domain_error("proof_chain: requires x >= 10");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("proof_chain: requires beta in (0, 1]");
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::domain_error("proof_chain: requires alpha in [1/2, 1]");
  if (!(c_alpha > 0.0))
    throw std::invalid_argument("proof_chain: C_alpha must be > 0");

  ProofChainReport rep;
  rep.x = x;
  rep.beta = beta;
  rep.alpha = alpha;
  rep.c_alpha = c_alpha;
  rep.y = std::pow(x, beta);
  rep.theta_diff = interval_census(x, rep.y).log_sum;
  double lg = std::log(x);
  rep.trivial_bound = rep.y * lg * lg * lg;
  rep.alpha_bound = rep.y + c_alpha * std::pow(x, alpha) * lg * lg;
  rep.holds_3 = rep.theta_diff < rep.trivial_bound;
  rep.holds_45 = rep.trivial_bound <= rep.alpha_bound;
  rep.positive = rep.theta_diff > 0.0;
  return rep;
}

FrontierTable beta_frontier(std::vector<double> x_grid,
                            std::vector<double> beta_grid) {
  for (double x : x_grid)
    if (!(x >= 10.0))
      throw std::domain_error("beta_frontier: requires every x >= 10");
  for (double b : beta_grid)
    if (!(b > 0.0 && b <= 1.0))
      throw std::domain_error("beta_frontier: requires every beta in (0, 1]");

  std::sort(x_grid.begin(), x_grid.end());
  std::sort(beta_grid.begin(), beta_grid.end());

  FrontierTable table;
  table.cells.reserve(x_grid.size() * beta_grid.size());
  for (double x : x_grid) {
    for (double b : beta_grid) {
      double y = std::pow(x, b);
      bool has = count_open_closed(x, x + y, nullptr) >= 1;
      table.cells.push_back({x, b, has});
    }
  }
  table.x_grid = std::move(x_grid);
  table.beta_grid = std::move(beta_grid);
  return table;
}

SweepSummary bhp_sweep(long long x_min, long long x_max,
                       const PiTable& table) {
  if (x_min < 2 || x_min > x_max)
    throw std::invalid_argument("bhp_sweep: requires 2 <= x_min <= x_max");
  if (static_cast<std::uint64_t>(x_max) > table.limit())
    throw std::invalid_argument("bhp_sweep: table does not cover x_max");

  SweepSummary s;
  s.check_id = CheckId::BHP;
  s.x_min = static_cast<double>(x_min);
  s.x_max = static_cast<double>(x_max);
  s.worst_margin = -std::numeric_limits<double>::infinity();
  for (long long x = x_min; x <= x_max; ++x) {
    auto r = bhp_impl(static_cast<double>(x), &table);
    ++s.total;
    // margin = 1 - count, so larger means emptier intervals
    s.worst_margin = std::max(s.worst_margin, r.margin);
    if (!r.pass) s.failures.push_back(r);
  }
  return s;
}

SweepSummary brun_titchmarsh_sweep(long long x_min, long long x_max, double y,
                                   const PiTable& table) {
  if (x_min < 0 || x_min > x_max)
    throw std::invalid_argument(
        "brun_titchmarsh_sweep: requires 0 <= x_min <= x_max");
  if (!(y >= 1.0))
    throw std::domain_error("brun_titchmarsh_sweep: requires y >= 1");
  if (static_cast<double>(x_max) + y > static_cast<double>(table.limit()))
    throw std::invalid_argument(
        "brun_titchmarsh_sweep: table does not cover x_max + y");

  SweepSummary s;
  s.check_id = CheckId::BrunTitchmarsh;
  s.x_min = static_cast<double>(x_min);
  s.x_max = static_cast<double>(x_max);
  s.y = y;
  s.worst_margin = std::numeric_limits<double>::infinity();
  for (long long x = x_min; x <= x_max; ++x) {
    auto r = bt_impl(static_cast<double>(x), y, &table);
    ++s.total;
    s.worst_margin = std::min(s.worst_margin, r.margin);
    if (!r.pass) s.failures.push_back(r);
  }
  return s;
}

SweepSummary heath_brown_sweep(const std::vector<double>& xs, double eps,
                               const PiTable& table, double tolerance) {
  if (xs.empty())
    throw std::invalid_argument("heath_brown_sweep: empty abscissa list");

  SweepSummary s;
  s.check_id = CheckId::HeathBrown;
  s.x_min = *std::min_element(xs.begin(), xs.end());
  s.x_max = *std::max_element(xs.begin(), xs.end());
  s.worst_margin = 1.0;
  for (double x : xs) {
    auto r = hb_impl(x, eps, tolerance, &table);
    ++s.total;
    if (std::fabs(r.margin - 1.0) > std::fabs(s.worst_margin - 1.0))
      s.worst_margin = r.margin;
    if (!r.pass) s.failures.push_back(r);
  }
  return s;
}

std::pair<SweepSummary, SweepSummary> schoenfeld_sweep(
    const std::vector<double>& xs, double c8) {
  if (xs.empty())
    throw std::invalid_argument("schoenfeld_sweep: empty abscissa list");
  for (double x : xs) check_schoenfeld_args(x, c8);

  // One sieve pass over the sorted abscissas, results kept in input order.
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> sorted(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) sorted[i] = xs[order[i]];
  auto values = chebyshev_batch(sorted);
  std::vector<double> psi(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    psi[order[i]] = values[i].psi;

  SweepSummary sharp;
  sharp.check_id = CheckId::Schoenfeld;
  sharp.x_min = sorted.front();
  sharp.x_max = sorted.back();
  sharp.worst_margin = std::numeric_limits<double>::infinity();
  SweepSummary ratio = sharp;
  ratio.check_id = CheckId::Cor8;
  ratio.worst_margin = -std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto [a, b] = schoenfeld_pair(xs[i], psi[i], c8);
    ++sharp.total;
    ++ratio.total;
    sharp.worst_margin = std::min(sharp.worst_margin, a.margin);
    ratio.worst_margin = std::max(ratio.worst_margin, b.margin);
    if (!a.pass) sharp.failures.push_back(a);
    if (!b.pass) ratio.failures.push_back(b);
  }
  return {sharp, ratio};
}

}  // namespace zrl
