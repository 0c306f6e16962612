#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zrl/prime_core.hpp"

namespace zrl {

enum class CheckId { BHP, BrunTitchmarsh, HeathBrown, Schoenfeld, Cor8 };

// Stable identifiers, also the CLI --check spellings.
std::string to_string(CheckId id);

// One evaluated inequality. margin is rhs - lhs for the count and size
// checks (BHP, Brun-Titchmarsh, Schoenfeld); for the asymptotic checks
// (HeathBrown, Cor8) it is the ratio lhs/rhs, since those have no sharp
// pass line of their own. y and eps are zero where not applicable.
struct BoundCheckResult {
  CheckId check_id = CheckId::BHP;
  double x = 0.0;
  double y = 0.0;
  double eps = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  double margin = 0.0;
};

// Does (x - x^0.525, x] contain a prime? lhs = count, rhs = 1.
BoundCheckResult check_bhp(double x);
BoundCheckResult check_bhp(double x, const PiTable& table);

// pi(x+y) - pi(x) <= 2y / (log y + 3.53). Fails for some tiny x and y;
// those failures are real and reported as found.
BoundCheckResult check_brun_titchmarsh(double x, double y);
BoundCheckResult check_brun_titchmarsh(double x, double y,
                                       const PiTable& table);

// Count in (x - x^{7/12}, x] against x^{7/12}/log x. Asymptotic statement,
// so pass means the ratio is within `tolerance` of 1 and margin stores the
// ratio itself. eps only gates the uniform range (0 <= eps <= 1/12).
BoundCheckResult check_heath_brown(double x, double eps,
                                   double tolerance = 0.15);
BoundCheckResult check_heath_brown(double x, double eps, const PiTable& table,
                                   double tolerance = 0.15);

// First: |psi(x) - x| < sqrt(x) log^2 x / (8 pi), a sharp pass/fail.
// Second: the same deviation against x^{21/40}; the implied constant is
// unspecified, so margin records the ratio and pass just means ratio <= c8.
std::pair<BoundCheckResult, BoundCheckResult> check_schoenfeld_cor8(
    double x, double c8 = 10.0);

// The inequality chain theta(x+y) - theta(x) in (0, y log^3 x], compared
// against y + C x^alpha log^2 x, with y = x^beta. holds_45 is the step that
// is expected to fail once y log^3 x outgrows the alpha term; the report
// exists to show exactly where.
struct ProofChainReport {
  double x = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  double c_alpha = 0.0;
  double y = 0.0;
  double theta_diff = 0.0;
  double trivial_bound = 0.0;
  double alpha_bound = 0.0;
  bool holds_3 = false;   // theta_diff < trivial_bound
  bool holds_45 = false;  // trivial_bound <= alpha_bound
  bool positive = false;  // theta_diff > 0
};

ProofChainReport proof_chain(double x, double beta, double alpha,
                             double c_alpha);

// Grid of "does (x, x + x^beta] contain a prime", ordered by x then beta.
struct FrontierCell {
  double x = 0.0;
  double beta = 0.0;
  bool has_prime = false;
};

struct FrontierTable {
  std::vector<double> x_grid;     // sorted ascending
  std::vector<double> beta_grid;  // sorted ascending
  std::vector<FrontierCell> cells;
};

FrontierTable beta_frontier(std::vector<double> x_grid,
                            std::vector<double> beta_grid);

// Sweep rollup. Failures keep full results (in sweep order) so every one is
// recomputable via the single-point entry points; worst_margin is the margin
// of the closest-to-failing (or furthest-into-failure) point per the check's
// own orientation.
struct SweepSummary {
  CheckId check_id = CheckId::BHP;
  double x_min = 0.0;
  double x_max = 0.0;
  double y = 0.0;  // fixed interval length, 0 where not applicable
  long long total = 0;
  std::vector<BoundCheckResult> failures;
  double worst_margin = 0.0;
};

// Integer x in [x_min, x_max]; the table must cover x_max.
SweepSummary bhp_sweep(long long x_min, long long x_max, const PiTable& table);

// Integer x in [x_min, x_max] at fixed y; the table must cover x_max + y.
SweepSummary brun_titchmarsh_sweep(long long x_min, long long x_max, double y,
                                   const PiTable& table);

// Heath-Brown over explicit abscissas (one sieve query pair per point).
SweepSummary heath_brown_sweep(const std::vector<double>& xs, double eps,
                               const PiTable& table, double tolerance = 0.15);

// Both Schoenfeld results over explicit abscissas, one sieve pass total.
// first = sharp bound (worst = smallest margin), second = x^{21/40} ratio
// (worst = largest ratio, the reported sup).
std::pair<SweepSummary, SweepSummary> schoenfeld_sweep(
    const std::vector<double>& xs, double c8 = 10.0);

}  // namespace zrl
