#include "zrl/oracle.hpp"

#include <cmath>

namespace zrl::oracle {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t pi_trial(std::uint64_t n) {
  std::int64_t c = 0;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (is_prime_trial(i)) ++c;
  return c;
}

double theta_trial(std::uint64_t n) {
  double s = 0.0;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (is_prime_trial(i)) s += std::log(static_cast<double>(i));
  return s;
}

double psi_trial(std::uint64_t n) {
  double s = 0.0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!is_prime_trial(i)) continue;
    for (unsigned __int128 q = i; q <= n; q *= i)
      s += std::log(static_cast<double>(i));
  }
  return s;
}

SweepValues sweep_trial(std::uint64_t limit) {
  SweepValues v;
  v.pi.assign(limit + 1, 0);
  v.theta.assign(limit + 1, 0.0);
  v.psi.assign(limit + 1, 0.0);
  std::int64_t pi = 0;
  double theta = 0.0, psi = 0.0;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    if (n >= 2) {
      // smallest factor decides both primality and prime-power-ness
      std::uint64_t spf = 0;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) { spf = d; break; }
      if (spf == 0) {
        ++pi;
        double l = std::log(static_cast<double>(n));
        theta += l;
        psi += l;
      } else {
        // n = spf^k exactly makes n a proper prime power
        std::uint64_t m = n;
        while (m % spf == 0) m /= spf;
        if (m == 1) psi += std::log(static_cast<double>(spf));
      }
    }
    v.pi[n] = pi;
    v.theta[n] = theta;
    v.psi[n] = psi;
  }
  return v;
}

std::complex<double> zeta_dirichlet(std::complex<double> s) {
  // direct sum to M, then integral + half-term Euler-Maclaurin correction;
  // M = 20000 keeps the tail error near 1e-13 for sigma >= 2
  constexpr int M = 20000;
  std::complex<double> sum = 0.0;
  for (int n = 1; n <= M; ++n)
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  double lM = std::log(static_cast<double>(M));
  std::complex<double> tail =
      std::exp((1.0 - s) * lM) / (s - 1.0) + 0.5 * std::exp(-s * lM);
  return sum + tail;
}

std::complex<double> log_gamma(std::complex<double> z) {
  // push Re(z) past 12 for Stirling, then unwind the shift
  std::complex<double> shift = 0.0;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const double B[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                      1.0 / 1188, -691.0 / 360360, 7.0 / 156};
  std::complex<double> w = 1.0 / z;
  std::complex<double> w2 = w * w;
  std::complex<double> series = 0.0;
  std::complex<double> pw = w;
  for (double b : B) {
    series += b * pw;
    pw *= w2;
  }
  std::complex<double> lg =
      (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI) + series;
  return lg - shift;
}

double phase_via_log_gamma(double t) {
  std::complex<double> lg = log_gamma(std::complex<double>(0.25, t / 2.0));
  return lg.imag() - 0.5 * t * std::log(M_PI);
}

}  // namespace zrl::oracle
