#pragma once

#include <cstdint>
#include <vector>

#include "zrl/zeta_engine.hpp"

namespace zrl {

// Reconstruction of psi(x) from zeros up to height T, against sieve truth.
struct ExplicitEvaluation {
  double x = 0;
  double height = 0;
  std::int64_t zeros_used = 0;  // conjugate pairs count double
  double reconstructed = 0;
  double sieve_truth = 0;
  double residual = 0;
  double bound = 0;  // C x log(x) / T
};

inline constexpr double kDefaultResidualConstant = 5.0;

// psi(x) ~= x - sum over zeros 1/2 + i gamma with 0 < gamma <= T of
// 2 Re(x^rho / rho), minus log 2pi and the trivial-zero tail
// 0.5 log(1 - x^-2). Conjugate pairs are folded so the sum is exactly real.
// x must avoid prime powers (jump points); half-integers are the intended
// abscissas. Requires T <= x and T <= catalog.height.
ExplicitEvaluation truncated_psi(double x, const ZeroCatalog& catalog, double T,
                                 double C = kDefaultResidualConstant);

struct LandauCurve {
  std::vector<ExplicitEvaluation> rows;
  bool within_bound = false;  // residual <= bound at every grid point
};
LandauCurve landau_residual_curve(double x, const ZeroCatalog& catalog,
                                  const std::vector<double>& T_grid,
                                  double C = kDefaultResidualConstant);

// Extrema of (psi(x) - x)/sqrt(x) and zero crossings of psi(x) - x over
// [x_lo, x_hi], sampled at every prime-power jump (both one-sided values)
// plus `samples` half-integer grid points.
struct OscillationReport {
  double x_lo = 0;
  double x_hi = 0;
  std::int64_t sample_count = 0;
  double min_norm = 0;
  double max_norm = 0;
  std::int64_t sign_changes = 0;
  std::vector<double> extremum_locations;  // argmin, argmax
};
OscillationReport delta_scan(double x_lo, double x_hi, std::int64_t samples);

// |psi(x) - x| next to the four comparison envelopes.
struct ErrorEnvelopeRow {
  double x = 0;
  double delta_abs = 0;
  double model_alpha = 0;   // x^alpha log^2 x
  double model_subexp = 0;  // x exp(-c (log x)^(3/5) (log log x)^(-1/5))
  double model_2140 = 0;    // x^(21/40)
  double model_rh = 0;      // (8 pi)^-1 sqrt(x) log^2 x
};
struct EnvelopeReport {
  std::vector<ErrorEnvelopeRow> rows;
  double sup_ratio_2140 = 0;  // sup |delta| / x^(21/40) over the grid
  double sup_ratio_rh = 0;    // sup |delta| / rh envelope over the grid
};
inline constexpr double kDefaultSubexpC = 0.1;

EnvelopeReport error_envelope(const std::vector<double>& x_grid, double alpha,
                              double c = kDefaultSubexpC);

}  // namespace zrl
