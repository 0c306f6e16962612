#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zrl {

// One refined critical-line zero. bracket is the coarse scan interval the
// sign change was found in; tolerance is the achieved bisection half-width.
struct ZeroRecord {
  int index = 0;  // 1-based
  double ordinate = 0;
  double bracket_lo = 0;
  double bracket_hi = 0;
  double tolerance = 0;
};

struct ZeroCatalog {
  std::vector<ZeroRecord> zeros;
  double height = 0;  // scan completed up to this t
  double scan_step = 0;
};

struct RegionScanResult {
  double height = 0;
  std::int64_t sign_change_count = 0;
  double rvm_estimate = 0;
  double discrepancy = 0;
};

inline constexpr double kDefaultZetaTol = 1e-10;
inline constexpr double kDefaultScanStep = 0.1;

// zeta via the alternating series (valid on Re(s) > 0), accelerated so the
// term count grows linearly in |Im s|. Absolute error <= tol.
std::complex<double> eta_zeta(std::complex<double> s, double tol = kDefaultZetaTol);

// Phase of the functional-equation rotation, asymptotic expansion through the
// t^-3 term. Absolute error <= 1e-8 for t >= 10; degrades toward t = 1.
double riemann_siegel_theta(double t);

// Z(t) = e^(i theta(t)) zeta(1/2 + it), real up to the phase error. The 1e-6
// imaginary-residue guard applies from t = 10 where the phase expansion is
// trustworthy; below that the real part is returned as computed.
double hardy_z(double t, double tol = kDefaultZetaTol);

// Scan Z on [1, T] at the given step, bisect every sign change to 1e-9
// half-width. Throws RescanNeededError when the count is irreconcilable with
// rvm_count (a close pair straddled one step).
ZeroCatalog build_catalog(double T, double step = kDefaultScanStep);

// Smooth zero-count estimate (T/2pi) log(T/(2pi e)) + 7/8.
double rvm_count(double T);

// Catalog count vs smooth estimate at height T; discrepancy < 1 means every
// zero up to T is accounted for by a critical-line sign change.
RegionScanResult verify_on_line(double T, double step = kDefaultScanStep);

}  // namespace zrl
