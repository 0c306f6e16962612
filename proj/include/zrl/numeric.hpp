#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace zrl {

// Neumaier's variant of compensated summation. Keeps log-sums accurate to
// ~1 ulp regardless of term count; the sweep code relies on a deterministic
// (ascending) add order so results are bit-identical run to run.
class NeumaierSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// x^k over uint64 with saturation at `cap` to dodge overflow. Used for exact
// integer root correction; cap is always < 2^63 here.
inline std::uint64_t pow_saturating(std::uint64_t x, unsigned k, std::uint64_t cap) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= x;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Exact floor(n^(1/k)). Floating pow seeds the estimate; integer correction
// removes the rounding slop at perfect-power boundaries.
inline std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0 || n == 0) return k == 0 ? 1 : 0;
  if (k == 1) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (r > 0 && pow_saturating(r, k, n) > n) --r;
  while (pow_saturating(r + 1, k, n) <= n) ++r;
  return r;
}

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const double kLog2Pi = std::log(2.0 * kPi);

// Nearest half-integer at or below the usual rounding of v - 1/2, i.e. the
// grid point round(v - 0.5) + 0.5. Evaluation abscissas avoid integers so the
// step functions are sampled away from their jumps.
inline double snap_half_integer(double v) { return std::round(v - 0.5) + 0.5; }

// log-spaced half-integer sampling grid over [lo, hi], deduplicated where the
// spacing drops under 1. lo and hi should themselves be half-integers.
inline std::vector<double> log_half_integer_grid(double lo, double hi,
                                                 int points) {
  if (points <= 1) return {snap_half_integer(lo)};
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double v = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    double x = snap_half_integer(v);
    if (x > hi) x = snap_half_integer(hi - 0.5);
    if (xs.empty() || x > xs.back()) xs.push_back(x);
  }
  return xs;
}

}  // namespace zrl
