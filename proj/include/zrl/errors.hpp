#pragma once

#include <stdexcept>
#include <string>

namespace zrl {

// zeta has its simple pole at s = 1.
struct PoleError : std::domain_error {
  PoleError() : std::domain_error("zeta pole at s = 1") {}
};

// The alternating-series prefactor 1 - 2^(1-s) vanishes at s = 1 + 2*pi*i*k/log 2
// for integer k != 0. Those points are regular for zeta itself but the series
// representation degenerates there, so evaluation is refused.
struct PrefactorZeroError : std::domain_error {
  explicit PrefactorZeroError(long long k)
      : std::domain_error("eta prefactor 1 - 2^(1-s) vanishes near s = 1 + 2*pi*i*" +
                          std::to_string(k) + "/log 2; representation degenerates"),
        k(k) {}
  long long k;
};

// Zero scan found a count irreconcilable with the smooth estimate; the step
// was too coarse and the scan needs to be repeated finer.
struct RescanNeededError : std::runtime_error {
  explicit RescanNeededError(double discrepancy)
      : std::runtime_error("zero count disagrees with smooth estimate by " +
                           std::to_string(discrepancy) + "; rescan with a finer step"),
        discrepancy(discrepancy) {}
  double discrepancy;
};

// Truncation height exceeds what the catalog covers.
struct CatalogTooShortError : std::invalid_argument {
  CatalogTooShortError(double T, double height)
      : std::invalid_argument("truncation height " + std::to_string(T) +
                              " exceeds catalog height " + std::to_string(height)) {}
};

// Cache file rejected; line is 1-based (0 when the problem is not line-local).
struct CacheError : std::runtime_error {
  CacheError(const std::string& what, long line)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line(line) {}
  long line;
};

// Command-line rejection; message names the offending flag or value.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zrl
