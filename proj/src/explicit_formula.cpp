#include "zrl/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "zrl/errors.hpp"
#include "zrl/numeric.hpp"
#include "zrl/prime_core.hpp"

namespace zrl {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t spf = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      spf = d;
      break;
    }
  if (spf == 0) return true;  // prime
  while (n % spf == 0) n /= spf;
  return n == 1;
}

void check_abscissa(double x) {
  if (!(x >= 2.0))
    throw std::domain_error("truncated_psi: x must be >= 2");
  if (x == std::floor(x) && is_prime_power(static_cast<std::uint64_t>(x)))
    throw std::domain_error(
        "truncated_psi: x sits on a jump (prime power); evaluate at a "
        "half-integer instead");
}

double reconstruct(double x, const ZeroCatalog& catalog, double T,
                   std::int64_t& zeros_used) {
  double lx = std::log(x);
  double sq = std::sqrt(x);
  NeumaierSum osc;
  std::int64_t pairs = 0;
  for (const auto& z : catalog.zeros) {
    if (z.ordinate > T) break;
    double g = z.ordinate;
    double phase = g * lx;
    // 2 Re(x^rho / rho) for rho = 1/2 + i gamma
    osc.add(2.0 * sq * (0.5 * std::cos(phase) + g * std::sin(phase)) /
            (0.25 + g * g));
    ++pairs;
  }
  zeros_used = 2 * pairs;
  return x - osc.value() - kLog2Pi - 0.5 * std::log1p(-1.0 / (x * x));
}

}  // namespace

ExplicitEvaluation truncated_psi(double x, const ZeroCatalog& catalog, double T,
                                 double C) {
  check_abscissa(x);
  if (!(T >= 0.0) || T > x)
    throw std::invalid_argument(
        "truncated_psi: need 0 <= T <= x; the remainder bound fails beyond x");
  if (T > catalog.height) throw CatalogTooShortError(T, catalog.height);

  ExplicitEvaluation e;
  e.x = x;
  e.height = T;
  e.reconstructed = reconstruct(x, catalog, T, e.zeros_used);
  e.sieve_truth = chebyshev_values(x).psi;
  e.residual = std::abs(e.reconstructed - e.sieve_truth);
  e.bound = C * x * std::log(x) / T;  // +inf at T = 0, by design
  return e;
}

LandauCurve landau_residual_curve(double x, const ZeroCatalog& catalog,
                                  const std::vector<double>& T_grid, double C) {
  LandauCurve curve;
  curve.rows.reserve(T_grid.size());
  curve.within_bound = true;
  for (double T : T_grid) {
    curve.rows.push_back(truncated_psi(x, catalog, T, C));
    if (!(curve.rows.back().residual <= curve.rows.back().bound))
      curve.within_bound = false;
  }
  return curve;
}

OscillationReport delta_scan(double x_lo, double x_hi, std::int64_t samples) {
  if (!(x_lo >= 2.0) || !(x_lo < x_hi) ||
      static_cast<std::uint64_t>(x_hi) > sieve_limit())
    throw std::domain_error("delta_scan: need 2 <= x_lo < x_hi <= sieve limit");
  if (samples < 2) throw std::invalid_argument("delta_scan: samples must be >= 2");

  auto n_hi = static_cast<std::uint64_t>(std::floor(x_hi));

  // proper prime powers p^k <= x_hi, k >= 2, sorted ascending
  std::vector<std::pair<std::uint64_t, double>> powers;
  for_each_prime(2, iroot(n_hi, 2) + 1, [&](std::uint64_t p) {
    double lp = std::log(static_cast<double>(p));
    unsigned __int128 q = static_cast<unsigned __int128>(p) * p;
    while (q <= n_hi) {
      powers.emplace_back(static_cast<std::uint64_t>(q), lp);
      q *= p;
    }
  });
  std::sort(powers.begin(), powers.end());

  // half-integer grid, clamped inside the range, deduplicated
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t j = 0; j < samples; ++j) {
    double v = x_lo + (x_hi - x_lo) * static_cast<double>(j) /
                          static_cast<double>(samples - 1);
    double h = snap_half_integer(v);
    if (h < x_lo) h += 1.0;
    if (h > x_hi) h -= 1.0;
    if (h >= x_lo && h <= x_hi) grid.push_back(h);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  OscillationReport rep;
  rep.x_lo = x_lo;
  rep.x_hi = x_hi;
  rep.min_norm = std::numeric_limits<double>::infinity();
  rep.max_norm = -std::numeric_limits<double>::infinity();
  rep.extremum_locations = {0.0, 0.0};

  NeumaierSum psi_run;
  int prev_sign = 0;
  auto record = [&](double pos, double delta) {
    if (pos < x_lo || pos > x_hi) return;
    ++rep.sample_count;
    double norm = delta / std::sqrt(pos);
    if (norm < rep.min_norm) {
      rep.min_norm = norm;
      rep.extremum_locations[0] = pos;
    }
    if (norm > rep.max_norm) {
      rep.max_norm = norm;
      rep.extremum_locations[1] = pos;
    }
    int sign = delta > 0.0 ? 1 : (delta < 0.0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) ++rep.sign_changes;
      prev_sign = sign;
    }
  };

  std::size_t ip = 0;  // next proper power
  std::size_t ig = 0;  // next grid point
  auto jump = [&](std::uint64_t q, double logp) {
    double pos = static_cast<double>(q);
    record(pos, psi_run.value() - pos);  // value approaching the jump
    psi_run.add(logp);
    record(pos, psi_run.value() - pos);  // value at the jump
  };
  auto drain_until = [&](double limit) {
    // replay queued powers and grid points strictly below the next prime
    for (;;) {
      double next_power = ip < powers.size()
                              ? static_cast<double>(powers[ip].first)
                              : std::numeric_limits<double>::infinity();
      double next_grid = ig < grid.size()
                             ? grid[ig]
                             : std::numeric_limits<double>::infinity();
      if (next_power >= limit && next_grid >= limit) break;
      if (next_power < next_grid) {
        jump(powers[ip].first, powers[ip].second);
        ++ip;
      } else {
        record(next_grid, psi_run.value() - next_grid);
        ++ig;
      }
    }
  };

  for_each_prime(2, n_hi + 1, [&](std::uint64_t p) {
    drain_until(static_cast<double>(p));
    jump(p, std::log(static_cast<double>(p)));
  });
  drain_until(std::numeric_limits<double>::infinity());

  return rep;
}

EnvelopeReport error_envelope(const std::vector<double>& x_grid, double alpha,
                              double c) {
  for (double x : x_grid)
    if (!(x >= 3.0))
      throw std::domain_error("error_envelope: every x must be >= 3");
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::domain_error("error_envelope: alpha must lie in [1/2, 1]");
  if (!(c > 0.0)) throw std::domain_error("error_envelope: c must be positive");

  // batch the sieve truth in ascending order, then restore input order
  std::vector<std::size_t> order(x_grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x_grid[a] < x_grid[b]; });
  std::vector<double> sorted;
  sorted.reserve(x_grid.size());
  for (std::size_t i : order) sorted.push_back(x_grid[i]);
  auto values = chebyshev_batch(sorted);

  EnvelopeReport rep;
  rep.rows.resize(x_grid.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    double x = sorted[r];
    double lx = std::log(x);
    ErrorEnvelopeRow row;
    row.x = x;
    row.delta_abs = std::abs(values[r].psi - x);
    row.model_alpha = std::pow(x, alpha) * lx * lx;
    row.model_subexp =
        x * std::exp(-c * std::pow(lx, 0.6) * std::pow(std::log(lx), -0.2));
    row.model_2140 = std::pow(x, 21.0 / 40.0);
    row.model_rh = std::sqrt(x) * lx * lx / (8.0 * kPi);
    rep.rows[order[r]] = row;
    rep.sup_ratio_2140 = std::max(rep.sup_ratio_2140, row.delta_abs / row.model_2140);
    rep.sup_ratio_rh = std::max(rep.sup_ratio_rh, row.delta_abs / row.model_rh);
  }
  return rep;
}

}  // namespace zrl
