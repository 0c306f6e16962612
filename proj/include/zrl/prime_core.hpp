#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zrl {

// Primality bitmap for [lo, hi), one bit per integer, set iff prime.
struct PrimeTable {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // exclusive
  std::vector<std::uint64_t> bits;
  std::uint64_t count = 0;

  bool is_prime(std::uint64_t n) const {
    if (n < lo || n >= hi) return false;
    std::uint64_t i = n - lo;
    return (bits[i >> 6] >> (i & 63)) & 1u;
  }
};

// (x, theta(x), psi(x), pi(x)). Right-continuous convention: sums include
// p^k == x. All three vanish below 2.
struct ChebyshevValue {
  double x = 0;
  double theta = 0;
  double psi = 0;
  std::int64_t pi_count = 0;
};

// Primes in the half-open interval (x, x+y].
struct IntervalCensus {
  double x = 0;
  double y = 0;
  std::int64_t prime_count = 0;
  double log_sum = 0;
};

// Sieve ceiling, default 1e9. Guards against accidentally huge ranges; the
// math does not depend on it.
std::uint64_t sieve_limit();
void set_sieve_limit(std::uint64_t limit);

PrimeTable sieve_segment(std::uint64_t lo, std::uint64_t hi);

// Streams primes in [lo, hi) ascending in fixed-size segments (2^20 odd
// entries each). The single producer for every log-sum in the library, so
// summation order is deterministic.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

std::int64_t prime_pi(double x);
ChebyshevValue chebyshev_values(double x);

// One sieve pass for many abscissas; xs must be ascending. Element i is
// bit-identical to chebyshev_values(xs[i]).
std::vector<ChebyshevValue> chebyshev_batch(const std::vector<double>& xs);

// Cross-check path: psi(x) = sum over k >= 1 of theta(floor(x)^(1/k)),
// the finitely many k with 2^k <= x. Agrees with chebyshev_values().psi to
// ~1e-9 relative; kept separate precisely so the agreement is a real check.
double psi_via_theta_roots(double x);

IntervalCensus interval_census(double x, double y);

// Dense cumulative pi over [0, limit], O(1) count queries for the sweeps.
// Query semantics identical to prime_pi (floor at the boundary).
class PiTable {
 public:
  explicit PiTable(std::uint64_t limit);
  std::int64_t count_le(double x) const;
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> cum_;
};

// Binary segment cache: magic "ZRL1", lo and hi as little-endian u64, then
// the odd-only bitmap packed LSB-first (bit j covers first_odd + 2j). A pure
// optimization; load_prime_table must reproduce sieve_segment exactly.
void save_prime_table(const PrimeTable& t, const std::string& path);
PrimeTable load_prime_table(const std::string& path);

}  // namespace zrl
