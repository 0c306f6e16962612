#include "zrl/zeta_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zrl/errors.hpp"
#include "zrl/numeric.hpp"

namespace zrl {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;
const double kLnAccelBase = std::log(3.0 + std::sqrt(8.0));

// Terms needed so 3(1+2|t|) e^(pi|t|/2) / (3+sqrt 8)^n <= tol_eta, plus a
// small safety margin. Linear in |t|: about 0.9|t| + 30 at tol 1e-10.
int accel_terms(double t_abs, double tol_eta) {
  double need = (kPi * t_abs / 2.0 + std::log(3.0 * (1.0 + 2.0 * t_abs)) -
                 std::log(tol_eta)) /
                kLnAccelBase;
  int n = static_cast<int>(std::ceil(need)) + 4;
  return n < 8 ? 8 : n;
}

}  // namespace

std::complex<double> eta_zeta(std::complex<double> s, double tol) {
  if (!(tol > 0)) throw std::domain_error("eta_zeta: tol must be positive");
  if (!(s.real() > 0)) throw std::domain_error("eta_zeta: Re(s) must be positive");

  // The prefactor 1 - 2^(1-s) vanishes at s = 1 + 2 pi i k / log 2. k = 0 is
  // the pole of zeta itself; other k are artifacts of this representation.
  long long k = std::llround(s.imag() * kLn2 / (2.0 * kPi));
  std::complex<double> singular(1.0, 2.0 * kPi * static_cast<double>(k) / kLn2);
  if (std::abs(s - singular) < 1e-8) {
    if (k == 0) throw PoleError();
    throw PrefactorZeroError(k);
  }

  std::complex<double> pref = 1.0 - std::exp((1.0 - s) * kLn2);
  double tol_eta = tol * std::abs(pref);
  int n = accel_terms(std::abs(s.imag()), tol_eta);
  if (s.real() < 0.5) n += 8;  // published error bound assumes sigma >= 1/2

  // Chebyshev-coefficient acceleration. The weights are 1 - d_k/d_n where
  // d_k = n * sum_{i<=k} T_i and T_{i+1}/T_i = 4(n+i)(n-i)/((2i+1)(2i+2)),
  // T_0 = 1/n. d_n grows like (3+sqrt 8)^n and overflows double near n = 400
  // (heights near 1e4 need n ~ 9000), so prefix sums are carried as
  // mantissa-exponent pairs and only the ratios ever materialize.
  std::vector<double> mant(static_cast<std::size_t>(n) + 1);
  std::vector<int> expo(static_cast<std::size_t>(n) + 1);
  double term_m = 1.0 / n;
  int term_e = 0;
  double sum_m = 0.0;
  int sum_e = 0;
  for (int i = 0; i <= n; ++i) {
    if (sum_m == 0.0) {
      sum_m = term_m;
      sum_e = term_e;
    } else if (term_e > sum_e) {
      sum_m = std::ldexp(sum_m, sum_e - term_e) + term_m;
      sum_e = term_e;
    } else {
      sum_m += std::ldexp(term_m, term_e - sum_e);
    }
    int norm;
    sum_m = std::frexp(sum_m, &norm);
    sum_e += norm;
    mant[static_cast<std::size_t>(i)] = sum_m;
    expo[static_cast<std::size_t>(i)] = sum_e;
    if (i < n) {
      term_m *= 4.0 * (n + i) * static_cast<double>(n - i) /
                ((2.0 * i + 1.0) * (2.0 * i + 2.0));
      term_m = std::frexp(term_m, &norm);
      term_e += norm;
    }
  }

  NeumaierSum acc_re, acc_im;
  double dn_m = mant[static_cast<std::size_t>(n)];
  int dn_e = expo[static_cast<std::size_t>(n)];
  for (int j = 0; j < n; ++j) {
    double w = 1.0 - std::ldexp(mant[static_cast<std::size_t>(j)] / dn_m,
                                expo[static_cast<std::size_t>(j)] - dn_e);
    std::complex<double> term =
        w * std::exp(-s * std::log(static_cast<double>(j + 1)));
    if (j & 1) term = -term;
    acc_re.add(term.real());
    acc_im.add(term.imag());
  }
  return std::complex<double>(acc_re.value(), acc_im.value()) / pref;
}

double riemann_siegel_theta(double t) {
  if (!(t >= 1.0))
    throw std::domain_error("riemann_siegel_theta: expansion unreliable below t = 1");
  double u = t / (2.0 * kPi);
  return 0.5 * t * std::log(u) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t);
}

double hardy_z(double t, double tol) {
  if (!(t >= 1.0)) throw std::domain_error("hardy_z: t must be >= 1");
  std::complex<double> z = eta_zeta(std::complex<double>(0.5, t), tol);
  std::complex<double> rot =
      std::exp(std::complex<double>(0.0, riemann_siegel_theta(t)));
  std::complex<double> w = rot * z;
  if (t >= 10.0 && std::abs(w.imag()) > 1e-6)
    throw std::runtime_error("hardy_z: imaginary residue " +
                             std::to_string(w.imag()) + " exceeds guard at t = " +
                             std::to_string(t));
  return w.real();
}

ZeroCatalog build_catalog(double T, double step) {
  if (!(T >= 10.0 && T <= 1e4))
    throw std::domain_error("build_catalog: height must be in [10, 1e4]");
  if (!(step > 0.0 && step <= 0.5))
    throw std::domain_error("build_catalog: step must be in (0, 0.5]");

  ZeroCatalog cat;
  cat.height = T;
  cat.scan_step = step;

  double prev_t = 1.0;
  double prev_z = hardy_z(prev_t);
  auto steps = static_cast<long>(std::ceil((T - 1.0) / step));
  for (long i = 1; i <= steps; ++i) {
    double t = 1.0 + step * static_cast<double>(i);
    if (t > T) t = T;
    double z = hardy_z(t);
    if ((prev_z < 0.0 && z > 0.0) || (prev_z > 0.0 && z < 0.0)) {
      double a = prev_t, b = t, fa = prev_z;
      for (int it = 0; it < 64 && (b - a) * 0.5 > 1e-9; ++it) {
        double m = 0.5 * (a + b);
        double fm = hardy_z(m);
        if (fm == 0.0) {
          a = m;
          b = m;
          break;
        }
        if ((fa < 0.0) != (fm < 0.0))
          b = m;
        else {
          a = m;
          fa = fm;
        }
      }
      ZeroRecord r;
      r.index = static_cast<int>(cat.zeros.size()) + 1;
      r.ordinate = 0.5 * (a + b);
      r.bracket_lo = prev_t;
      r.bracket_hi = t;
      r.tolerance = 0.5 * (b - a);
      cat.zeros.push_back(r);
    }
    prev_t = t;
    prev_z = z;
  }

  for (std::size_t i = 1; i < cat.zeros.size(); ++i)
    if (cat.zeros[i].ordinate - cat.zeros[i - 1].ordinate < 1e-6)
      throw std::logic_error("build_catalog: duplicate ordinate near " +
                             std::to_string(cat.zeros[i].ordinate));

  double disc = std::abs(static_cast<double>(cat.zeros.size()) - rvm_count(T));
  if (disc > 1.0) throw RescanNeededError(disc);
  return cat;
}

double rvm_count(double T) {
  if (!(T >= 10.0)) throw std::domain_error("rvm_count: T must be >= 10");
  double u = T / (2.0 * kPi);
  return u * (std::log(u) - 1.0) + 0.875;
}

RegionScanResult verify_on_line(double T, double step) {
  ZeroCatalog cat = build_catalog(T, step);
  RegionScanResult r;
  r.height = T;
  r.sign_change_count = static_cast<std::int64_t>(cat.zeros.size());
  r.rvm_estimate = rvm_count(T);
  r.discrepancy = std::abs(static_cast<double>(r.sign_change_count) - r.rvm_estimate);
  return r;
}

}  // namespace zrl
