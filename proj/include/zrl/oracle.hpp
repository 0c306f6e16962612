#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Independent reference implementations, deliberately naive and sharing no
// code with the main modules. Tests and the self-check report compare the
// fast paths against these; production code must never call them.
namespace zrl::oracle {

bool is_prime_trial(std::uint64_t n);

std::int64_t pi_trial(std::uint64_t n);
double theta_trial(std::uint64_t n);  // plain left-to-right sum of log p
double psi_trial(std::uint64_t n);    // direct prime-power enumeration

// Walks 2..limit once, recording pi/theta/psi after every integer. Backs the
// exhaustive small-range comparison without re-dividing per abscissa.
struct SweepValues {
  std::vector<std::int64_t> pi;
  std::vector<double> theta;
  std::vector<double> psi;
};
SweepValues sweep_trial(std::uint64_t limit);

// Dirichlet series with Euler-Maclaurin tail, valid for Re(s) > 1.
std::complex<double> zeta_dirichlet(std::complex<double> s);

// log Gamma by shifted Stirling; reference for the zeta phase function.
std::complex<double> log_gamma(std::complex<double> z);

// Phase of the completed zeta on the critical line via log_gamma:
// Im log Gamma(1/4 + it/2) - t/2 log pi.
double phase_via_log_gamma(double t);

}  // namespace zrl::oracle
