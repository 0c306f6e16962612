#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>

#include "zrl/errors.hpp"
#include "zrl/numeric.hpp"
#include "zrl/oracle.hpp"
#include "zrl/zeta_engine.hpp"

using namespace zrl;
using cd = std::complex<double>;

TEST_CASE("eta_zeta closed forms and Dirichlet cross-check") {
  CHECK(std::abs(eta_zeta(cd(2, 0)) - kPi * kPi / 6.0) < 1e-10);
  CHECK(std::abs(eta_zeta(cd(3, 0)) - 1.2020569031595943) < 1e-10);
  CHECK(std::abs(eta_zeta(cd(2, 5)) -
                 cd(0.85096294362426296, 0.098996946134831347)) < 1e-10);
  for (cd s : {cd(2, 0), cd(3, 0), cd(2, 5), cd(4, -3), cd(2.5, 30)})
    CHECK(std::abs(eta_zeta(s) - oracle::zeta_dirichlet(s)) < 1e-8);
}

TEST_CASE("eta_zeta vanishes at the first critical zero") {
  CHECK(std::abs(eta_zeta(cd(0.5, 14.134725))) < 1e-4);
}

TEST_CASE("eta_zeta rejects the pole, its prefactor artifacts, and sigma <= 0") {
  CHECK_THROWS_AS(eta_zeta(cd(1, 0)), PoleError);
  CHECK_THROWS_AS(eta_zeta(cd(1.0 + 1e-12, 0)), PoleError);
  double t1 = 2.0 * kPi / 0.6931471805599453;  // first prefactor artifact
  CHECK_THROWS_AS(eta_zeta(cd(1.0, t1)), PrefactorZeroError);
  try {
    eta_zeta(cd(1.0, -2 * t1));
    FAIL("expected PrefactorZeroError");
  } catch (const PrefactorZeroError& e) {
    CHECK(e.k == -2);
  }
  CHECK_THROWS_AS(eta_zeta(cd(0, 5)), std::domain_error);
  CHECK_THROWS_AS(eta_zeta(cd(-1, 5)), std::domain_error);
  CHECK_THROWS_AS(eta_zeta(cd(2, 0), 0.0), std::domain_error);
  // near but not at the artifact: still evaluable, just more terms
  CHECK(std::isfinite(eta_zeta(cd(1.0, t1 + 1e-3)).real()));
}

TEST_CASE("eta_zeta conjugate symmetry") {
  for (cd s : {cd(0.5, 14.1), cd(0.7, 25), cd(2, 5), cd(1.5, 100), cd(0.9, 3)}) {
    cd a = eta_zeta(std::conj(s));
    cd b = std::conj(eta_zeta(s));
    CHECK(std::abs(a - b) < 2e-10);  // twice the default tol
  }
}

TEST_CASE("eta_zeta accuracy holds at large heights") {
  // reference values from 30-digit arithmetic
  cd z100 = eta_zeta(cd(0.5, 100));
  CHECK(std::abs(z100 - cd(2.6926198856813241, -0.020386029602598162)) < 1e-8);
  cd z500 = eta_zeta(cd(0.5, 500));
  CHECK(std::abs(std::abs(z500) - 1.4724478510550853) < 1e-8);
}

TEST_CASE("riemann_siegel_theta matches the log-gamma reference") {
  for (double t : {10.0, 17.8456, 50.0, 100.0, 1000.0, 10000.0})
    CHECK(std::abs(riemann_siegel_theta(t) - oracle::phase_via_log_gamma(t)) < 1e-8);
  CHECK(riemann_siegel_theta(100.0) ==
        doctest::Approx(87.97216523178722).epsilon(1e-10));
  // first Gram point: the phase root
  CHECK(std::abs(riemann_siegel_theta(17.8455995404109)) < 1e-9);
  CHECK(riemann_siegel_theta(200.0) > riemann_siegel_theta(100.0));
  CHECK_THROWS_AS(riemann_siegel_theta(0.5), std::domain_error);
}

TEST_CASE("hardy_z values, reality, and modulus") {
  CHECK(hardy_z(10.0) == doctest::Approx(-1.54919454618102).epsilon(1e-7));
  CHECK(std::abs(hardy_z(14.134725)) < 1e-4);
  for (double t : {20.0, 50.0, 90.0}) {
    double z_mod = std::abs(eta_zeta(cd(0.5, t)));
    CHECK(std::abs(std::abs(hardy_z(t)) - z_mod) < 1e-6);
  }
  CHECK_THROWS_AS(hardy_z(0.99), std::domain_error);
}

TEST_CASE("build_catalog finds the known zeros") {
  auto cat15 = build_catalog(15.0, 0.1);
  REQUIRE(cat15.zeros.size() == 1);
  CHECK(cat15.zeros[0].ordinate == doctest::Approx(14.13472514173469).epsilon(1e-9));
  CHECK(cat15.zeros[0].tolerance <= 1e-9);
  CHECK(cat15.zeros[0].bracket_lo <= cat15.zeros[0].ordinate);
  CHECK(cat15.zeros[0].ordinate <= cat15.zeros[0].bracket_hi);

  CHECK(build_catalog(10.0, 0.1).zeros.empty());

  auto cat = build_catalog(100.0, 0.1);
  REQUIRE(cat.zeros.size() == 29);
  CHECK(cat.height == 100.0);
  CHECK(cat.scan_step == 0.1);
  for (std::size_t i = 0; i < cat.zeros.size(); ++i) {
    const auto& z = cat.zeros[i];
    CHECK(z.index == static_cast<int>(i) + 1);
    CHECK(z.tolerance <= 1e-9);
    CHECK(z.bracket_lo <= z.ordinate);
    CHECK(z.ordinate <= z.bracket_hi);
    CHECK(std::abs(hardy_z(z.ordinate)) < 1e-6);
    if (i > 0) CHECK(z.ordinate - cat.zeros[i - 1].ordinate > 1e-6);
    CHECK(z.ordinate < cat.height);
  }
  // second of the classical ordinates as a spot value
  CHECK(cat.zeros[1].ordinate == doctest::Approx(21.022039638771555).epsilon(1e-9));
}

TEST_CASE("build_catalog is deterministic") {
  auto a = build_catalog(50.0, 0.1);
  auto b = build_catalog(50.0, 0.1);
  REQUIRE(a.zeros.size() == b.zeros.size());
  for (std::size_t i = 0; i < a.zeros.size(); ++i) {
    CHECK(std::memcmp(&a.zeros[i].ordinate, &b.zeros[i].ordinate, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.zeros[i].tolerance, &b.zeros[i].tolerance, sizeof(double)) == 0);
  }
}

TEST_CASE("build_catalog parameter validation") {
  CHECK_THROWS_AS(build_catalog(5.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(build_catalog(10001.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(build_catalog(100.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(build_catalog(100.0, 0.6), std::domain_error);
}

TEST_CASE("rvm_count pinned values") {
  CHECK(rvm_count(100.0) == doctest::Approx(29.00234358732535).epsilon(1e-12));
  CHECK(rvm_count(50.0) == doctest::Approx(9.422781789846384).epsilon(1e-12));
  CHECK(rvm_count(10.0) < 1.0);
  CHECK_THROWS_AS(rvm_count(9.9), std::domain_error);
}

TEST_CASE("verify_on_line accounts for every zero") {
  auto r100 = verify_on_line(100.0, 0.1);
  CHECK(r100.sign_change_count == 29);
  CHECK(r100.discrepancy < 0.5);
  CHECK(r100.discrepancy ==
        std::abs(static_cast<double>(r100.sign_change_count) - r100.rvm_estimate));

  auto r50 = verify_on_line(50.0, 0.1);
  CHECK(r50.sign_change_count == 10);
  CHECK(r50.rvm_estimate == doctest::Approx(9.422781789846384).epsilon(1e-12));
  CHECK(r50.discrepancy < 1.0);

  auto r10 = verify_on_line(10.0, 0.1);
  CHECK(r10.sign_change_count == 0);
  CHECK(r10.rvm_estimate < 1.0);
}
