#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zrl/errors.hpp"
#include "zrl/explicit_formula.hpp"
#include "zrl/numeric.hpp"
#include "zrl/oracle.hpp"
#include "zrl/prime_core.hpp"
#include "zrl/zeta_engine.hpp"

using namespace zrl;

namespace {
// one catalog to height 500 shared across cases; building it is the
// expensive part of this suite
const ZeroCatalog& catalog500() {
  static ZeroCatalog cat = build_catalog(500.0, 0.1);
  return cat;
}
}  // namespace

TEST_CASE("zero-free truncation is elementary arithmetic") {
  auto e = truncated_psi(2.5, catalog500(), 0.0);
  CHECK(e.zeros_used == 0);
  CHECK(e.reconstructed == doctest::Approx(0.7492996271630435).epsilon(1e-12));
  CHECK(e.sieve_truth == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(e.residual == doctest::Approx(0.0561524466).epsilon(1e-6));
  CHECK(std::isinf(e.bound));
}

TEST_CASE("reconstruction at x = 100.5 with 29 zero pairs") {
  auto e = truncated_psi(100.5, catalog500(), 100.0);
  CHECK(e.zeros_used == 58);
  CHECK(e.sieve_truth == doctest::Approx(94.0453112293574).epsilon(1e-10));
  CHECK(e.residual <= e.bound);
  CHECK(e.bound == doctest::Approx(5.0 * 100.5 * std::log(100.5) / 100.0).epsilon(1e-12));
  // pinned against an independent high-precision zero table
  CHECK(e.residual == doctest::Approx(1.8851570517).epsilon(1e-3));
}

TEST_CASE("residuals shrink as the truncation height grows") {
  // pinned against an independent high-precision zero table
  auto e = truncated_psi(1000.5, catalog500(), 100.0);
  CHECK(e.residual == doctest::Approx(2.070756).epsilon(1e-3));

  double mean_low = 0.0, mean_high = 0.0;
  for (double x : {500.5, 1000.5, 5000.5}) {
    mean_low += truncated_psi(x, catalog500(), 50.0).residual / 3.0;
    mean_high += truncated_psi(x, catalog500(), 500.0).residual / 3.0;
  }
  // end-to-end decay holds; intermediate heights fluctuate (T = 100 is
  // worse than T = 50 at these abscissas, so no per-step assertion)
  CHECK(mean_high < mean_low);
  CHECK(mean_low == doctest::Approx(1.9132).epsilon(2e-3));
  CHECK(mean_high == doctest::Approx(0.5344).epsilon(2e-3));
}

TEST_CASE("truncated_psi rejects bad abscissas and heights") {
  CHECK_THROWS_AS(truncated_psi(1.9, catalog500(), 0.0), std::domain_error);
  CHECK_THROWS_AS(truncated_psi(8.0, catalog500(), 5.0), std::domain_error);  // 2^3
  CHECK_THROWS_AS(truncated_psi(97.0, catalog500(), 50.0), std::domain_error);
  CHECK_NOTHROW(truncated_psi(100.0, catalog500(), 50.0));  // 100 is not a prime power
  CHECK_THROWS_AS(truncated_psi(100.5, catalog500(), 200.0), std::invalid_argument);
  CHECK_THROWS_AS(truncated_psi(1000.5, catalog500(), 501.0), CatalogTooShortError);
}

TEST_CASE("landau_residual_curve matches pointwise evaluation") {
  auto curve = landau_residual_curve(1000.5, catalog500(), {50.0, 100.0, 200.0, 500.0});
  REQUIRE(curve.rows.size() == 4);
  CHECK(curve.within_bound);
  for (const auto& row : curve.rows) CHECK(row.residual <= row.bound);

  auto single = truncated_psi(1000.5, catalog500(), 200.0);
  CHECK(curve.rows[2].reconstructed == single.reconstructed);
  CHECK(curve.rows[2].residual == single.residual);
  CHECK(curve.rows[2].zeros_used == single.zeros_used);

  CHECK_THROWS_AS(landau_residual_curve(100.5, catalog500(), {200.0}),
                  std::invalid_argument);
}

TEST_CASE("delta_scan on a range small enough to check by hand") {
  auto rep = delta_scan(2.0, 30.0, 2);
  // the global minimum of (psi - x)/sqrt(x) sits at the left edge of 2
  CHECK(rep.min_norm == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rep.extremum_locations[0] == 2.0);
  CHECK(rep.min_norm <= rep.max_norm);
  // psi first overtakes x at 19 (theta(19) plus 4,8,16,9 gives 19.2657),
  // then drops back under before the jump at 23: exactly two crossings
  CHECK(rep.sign_changes == 2);
  auto ref = oracle::sweep_trial(30);
  CHECK(rep.max_norm ==
        doctest::Approx((ref.psi[19] - 19.0) / std::sqrt(19.0)).epsilon(1e-12));
  CHECK(rep.extremum_locations[1] == 19.0);

  // prime powers in [2,30]: 2,3,4,5,7,8,9,11,13,16,17,19,23,25,27,29 -> 16
  // jumps, two samples each, plus the snapped grid points 2.5 and 29.5
  CHECK(rep.sample_count == 2 * 16 + 2);

  // at-jump value at 29 equals the sweep's running psi there
  auto again = delta_scan(29.0, 30.0, 2);
  CHECK(again.max_norm ==
        doctest::Approx((ref.psi[29] - 29.0) / std::sqrt(29.0)).epsilon(1e-12));
}

TEST_CASE("delta_scan oscillation statistics to 1e5") {
  auto rep = delta_scan(2.0, 100000.0, 100);
  CHECK(rep.min_norm == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rep.min_norm > -3.0);
  CHECK(rep.max_norm < 3.0);
  CHECK(rep.max_norm > 0.0);      // psi does overtake x below 1e5
  CHECK(rep.sign_changes >= 2);   // and comes back
  CHECK(rep.extremum_locations[1] == 24137.0);
}

TEST_CASE("delta_scan validates its range") {
  CHECK_THROWS_AS(delta_scan(1.0, 30.0, 2), std::domain_error);
  CHECK_THROWS_AS(delta_scan(30.0, 30.0, 2), std::domain_error);
  CHECK_THROWS_AS(delta_scan(2.0, 30.0, 1), std::invalid_argument);
}

TEST_CASE("error envelopes are pure arithmetic plus the sieve") {
  auto rep = error_envelope({1e6}, 0.5, 0.1);
  REQUIRE(rep.rows.size() == 1);
  const auto& row = rep.rows[0];
  CHECK(row.delta_abs == doctest::Approx(413.40250436915085).epsilon(1e-9));
  CHECK(row.model_rh == doctest::Approx(7594.409628469952).epsilon(1e-12));
  CHECK(row.model_2140 == doctest::Approx(1412.5375446227547).epsilon(1e-12));
  CHECK(row.model_alpha == doctest::Approx(190868.33197722232).epsilon(1e-12));
  CHECK(row.model_subexp == doctest::Approx(671363.3765335575).epsilon(1e-12));
  // alpha = 1/2 envelope is exactly 8 pi times the rh envelope
  CHECK(row.model_alpha == doctest::Approx(row.model_rh * 8.0 * kPi).epsilon(1e-12));
  CHECK(rep.sup_ratio_2140 == doctest::Approx(row.delta_abs / row.model_2140).epsilon(1e-12));

  // rows come back in input order even when the grid is unsorted
  auto two = error_envelope({1000.5, 100.5}, 0.6, 0.2);
  CHECK(two.rows[0].x == 1000.5);
  CHECK(two.rows[1].x == 100.5);

  CHECK_THROWS_AS(error_envelope({2.9}, 0.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(error_envelope({10.0}, 0.49, 0.1), std::domain_error);
  CHECK_THROWS_AS(error_envelope({10.0}, 1.01, 0.1), std::domain_error);
  CHECK_THROWS_AS(error_envelope({10.0}, 0.5, 0.0), std::domain_error);
}
