// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "borwein/bounds.hpp"
#include "borwein/predict.hpp"
#include "borwein/qseries.hpp"
#include "borwein/signcheck.hpp"

using namespace borwein;

TEST_CASE("dominant peak identification") {
  // Borwein family: single candidate at 2pi/3
  PeakSet borwein = dominant_peaks(borwein_spec(50, 1), 50, 0.97);
  REQUIRE(borwein.peaks.size() == 1);
  CHECK(borwein.peaks[0].dominant);
  CHECK(borwein.peaks[0].theta == doctest::Approx(2.0 * M_PI / 3.0));

  // mod-7 family: three co-dominant pairs
  PeakSet seven = dominant_peaks(mod_family_infinite_spec(7, 1), 100,
                                 std::exp(std::log(0.5) / (7.0 * 100.0)));
  REQUIRE(seven.peaks.size() == 3);
  CHECK(seven.dominant_ells() == std::vector<std::int64_t>{1, 2, 3});

  // a K=2 single-offset family peaks at pi
  ProductSpec q2{2, {{Rational(1), 1, kInfinite}}, ""};
  PeakSet two = dominant_peaks(q2, 80, 0.99);
  REQUIRE(two.peaks.size() == 1);
  CHECK(two.peaks[0].theta == doctest::Approx(M_PI));
  CHECK(two.peaks[0].dominant);
}

TEST_CASE("argument contribution endpoints") {
  // s = 1 kills every contribution
  CHECK(peak_argument_contribution(1.0, 3, 2.0 * M_PI / 3.0, 1.0) == 0.0);
  // the Borwein instance at s = 0 is -pi/18
  CHECK(peak_argument_contribution(1.0, 3, 2.0 * M_PI / 3.0, 0.0) ==
        doctest::Approx(-M_PI / 18.0).epsilon(1e-14));
  CHECK_THROWS(peak_argument_contribution(3.0, 3, 2.0 * M_PI / 3.0, 0.5));  // cot pole
}

TEST_CASE("K=3 contribution matches the closed-form argument approximation") {
  // -(1/3) arctan((1-s) cot(pi/3)/(1+s)) == -pi/18 + (1/3) arctan(sqrt3 s/(2+s))
  for (double s : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const double lhs = peak_argument_contribution(1.0, 3, 2.0 * M_PI / 3.0, s);
    const double rhs = -M_PI / 18.0 + std::atan(std::sqrt(3.0) * s / (2.0 + s)) / 3.0;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // and against arg_approx with s = r^{3n}
  const std::int64_t n = 40;
  for (double r : {0.9, 0.99, 0.999}) {
    const double s = std::pow(r, 3.0 * n);
    CHECK(peak_argument_contribution(1.0, 3, 2.0 * M_PI / 3.0, s) ==
          doctest::Approx(arg_approx(n, r)).epsilon(1e-10));
  }
}

TEST_CASE("general target anchors for the mod-7 family") {
  ProductSpec spec = mod_family_infinite_spec(7, 1);
  CHECK(general_target(spec, 5, 0.0) ==
        doctest::Approx(2.0 * std::sqrt(7.0) * std::cos(3.0 * M_PI / 7.0)).epsilon(1e-10));
  CHECK(general_target(spec, 5, 1.0) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("sign change roots") {
  ProductSpec seven = mod_family_infinite_spec(7, 1);
  auto scan5 = sign_change_root(seven, 5);
  REQUIRE(scan5.roots.size() == 1);
  CHECK(scan5.roots[0] == doctest::Approx(0.6089).epsilon(8e-4));
  auto scan0 = sign_change_root(seven, 0);
  CHECK(scan0.roots.empty());

  ProductSpec three = borwein_spec(60, 1);
  auto scan = sign_change_root(three, 0);
  CHECK(scan.roots.empty());
}

TEST_CASE("fraction at the root: worked value and the center limit") {
  ProductSpec seven = mod_family_infinite_spec(7, 1);
  CHECK(fraction_at_root(seven, 0.6089) == doctest::Approx(0.30214).epsilon(2e-3));
  auto scan = sign_change_root(seven, 5);
  REQUIRE(!scan.roots.empty());
  CHECK(fraction_at_root(seven, scan.roots[0]) == doctest::Approx(0.30214).epsilon(2e-3));
  // s0 -> 1 pushes the sign change to the central coefficient
  CHECK(fraction_at_root(seven, 0.999999) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(fraction_at_root(borwein_spec(10, 1), 0.999999) ==
        doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("general target is real by conjugate pairing") {
  // the formula is already real-valued; check it is finite and continuous in s
  ProductSpec spec = mod_family_infinite_spec(5, 1);
  double prev = general_target(spec, 2, 0.0);
  for (int i = 1; i <= 64; ++i) {
    const double s = i / 64.0;
    const double cur = general_target(spec, 2, s);
    CHECK(std::isfinite(cur));
    CHECK(std::abs(cur - prev) < 0.5);
    prev = cur;
  }
}

TEST_CASE("predictor agrees with exact scans across moduli") {
  // Residues that the grid scan declares sign-change-free must match the
  // exact coefficient signs in the saddle-covered window [K n, deg/2].
  for (std::int64_t K : {3, 4, 5, 6, 7}) {
    ProductSpec spec = mod_family_infinite_spec(K, 1);
    const std::int64_t n = 9;
    TruncatedSeries p =
        general_product(mod_family_spec(K, n, 1), K * (K - 1) * n * n / 2);
    const std::int64_t degree = *p.exact_degree();
    for (std::int64_t res = 0; res < K; ++res) {
      auto scan = sign_change_root(spec, res);
      if (!scan.roots.empty()) continue;  // sign change predicted: skip
      const double refsign = general_target(spec, res, 0.5);
      if (std::abs(refsign) < 1e-9) continue;  // degenerate-flat target
      for (std::int64_t m = K * n; m <= degree / 2; ++m) {
        if (m % K != res) continue;
        const int sgn = mpz_sgn(p.coeff(m).get_mpz_t());
        if (sgn == 0) continue;
        CHECK(sgn == (refsign > 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("K=7 prediction matches the empirical sign change at n = 12") {
  const std::int64_t n = 12;
  TruncatedSeries p = general_product(mod_family_spec(7, n, 1), 21 * n * n);
  auto change = first_sign_change(p, 7, 5);
  REQUIRE(change.has_value());
  const double empirical = static_cast<double>(*change) / (3.0 * n * n);
  ProductSpec spec = mod_family_infinite_spec(7, 1);
  auto scan = sign_change_root(spec, 5);
  REQUIRE(!scan.roots.empty());
  const double predicted = fraction_at_root(spec, scan.roots[0]);
  CHECK(std::abs(empirical - predicted) / predicted < 0.10);
}
