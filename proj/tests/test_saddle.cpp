// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "borwein/kernels.hpp"
#include "borwein/saddle.hpp"

using namespace borwein;
using Complex = std::complex<double>;

namespace {

// Printed closed forms for the low-order kernels, used as an independent
// check of the generated numerator tables.
Complex u2_ref(Complex z) { const Complex d = 1.0 + z + z * z; return z * (1.0 + 4.0 * z + z * z) / (d * d); }
Complex v2_ref(Complex z) { const Complex d = 1.0 + z + z * z; return z * (1.0 - z * z) / (d * d); }
Complex u3_ref(Complex z) {
  const Complex d = 1.0 + z + z * z;
  return z * (1.0 - z * z) * (1.0 + 7.0 * z + z * z) / (d * d * d);
}
Complex v3_ref(Complex z) {
  const Complex d = 1.0 + z + z * z;
  return z * (1.0 - z - 6.0 * z * z - z * z * z + z * z * z * z) / (d * d * d);
}
Complex u4_ref(Complex z) {
  const Complex d = 1.0 + z + z * z;
  const Complex z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z, z6 = z5 * z;
  return z * (1.0 + 12.0 * z - 12.0 * z2 - 56.0 * z3 - 12.0 * z4 + 12.0 * z5 + z6) / (d * d * d * d);
}
Complex v4_ref(Complex z) {
  const Complex d = 1.0 + z + z * z;
  const Complex z2 = z * z, z3 = z2 * z, z4 = z3 * z;
  return z * (1.0 - z2) * (1.0 - 4.0 * z - 21.0 * z2 - 4.0 * z3 + z4) / (d * d * d * d);
}

Complex random_unit_disc(std::mt19937& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  return std::polar(radius(rng), angle(rng));
}

// log P_n(r e^{i theta}) summed over the 2n binomial factors.
Complex log_p(std::int64_t n, double r, double theta) {
  Complex s{};
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (k % 3 == 0) continue;
    const double rk = std::pow(r, static_cast<double>(k));
    s += std::log(Complex(1.0 - rk * std::cos(k * theta), -rk * std::sin(k * theta)));
  }
  return s;
}

}  // namespace

TEST_CASE("base kernels match their defining rational functions") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = random_unit_disc(rng);
    const Complex d = 1.0 + z + z * z;
    // relative tolerance: the functions blow up near the poles at z = w, w^2
    auto close = [](Complex a, Complex b) { return std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)); };
    CHECK(close(kernel_u(1, z), z * (1.0 + 2.0 * z) / d));
    CHECK(close(kernel_v(1, z), z / d));
    CHECK(close(kernel_u(2, z), u2_ref(z)));
    CHECK(close(kernel_v(2, z), v2_ref(z)));
    CHECK(close(kernel_u(3, z), u3_ref(z)));
    CHECK(close(kernel_v(3, z), v3_ref(z)));
    CHECK(close(kernel_u(4, z), u4_ref(z)));
    CHECK(close(kernel_v(4, z), v4_ref(z)));
  }
}

TEST_CASE("higher kernels satisfy the z d/dz recurrence numerically") {
  std::mt19937 rng(19);
  for (int j = 1; j < 8; ++j) {
    for (int trial = 0; trial < 25; ++trial) {
      Complex z = 0.8 * random_unit_disc(rng);
      const double h = 1e-6;
      // z d/dz f(z) by central differences along the radial direction
      const Complex zp = z * (1.0 + h), zm = z * (1.0 - h);
      const Complex expect_u = (kernel_u(j, zp) - kernel_u(j, zm)) / (2.0 * h);
      const Complex expect_v = (kernel_v(j, zp) - kernel_v(j, zm)) / (2.0 * h);
      CHECK(std::abs(kernel_u(j + 1, z) - expect_u) < 2e-4 * (1.0 + std::abs(expect_u)));
      CHECK(std::abs(kernel_v(j + 1, z) - expect_v) < 2e-4 * (1.0 + std::abs(expect_v)));
    }
  }
}

TEST_CASE("x_sum special values at r = 1") {
  for (std::int64_t n : {1, 5, 40, 400}) {
    CHECK(x_sum(0, n, 1.0) == doctest::Approx(2.0 * n).epsilon(1e-14));
    CHECK(x_sum(1, n, 1.0) == doctest::Approx(3.0 * n * n).epsilon(1e-14));
  }
}

TEST_CASE("x_sum closed form agrees with direct summation") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> rdist(0.01, 1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const int j = static_cast<int>(rng() % 9);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 200);
    const double r = rdist(rng);
    const double a = x_sum(j, n, r);
    const double b = x_sum_direct(j, n, r);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
  // exercise the closed-form branch explicitly for every order: needs
  // 3n(1-r^3) >= 30(j+1), so take n = 2000 and r = 0.98
  for (int j = 0; j <= 8; ++j) {
    for (double r : {0.5, 0.9, 0.98}) {
      const double a = x_sum(j, 2000, r);
      const double b = x_sum_direct(j, 2000, r);
      CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
    CHECK(x_sum(j, 5000, 0.994) == doctest::Approx(x_sum_direct(j, 5000, 0.994)).epsilon(1e-11));
  }
}

TEST_CASE("x_sum is increasing in n and r") {
  for (int j : {0, 1, 2, 4}) {
    CHECK(x_sum(j, 50, 0.9) < x_sum(j, 51, 0.9));
    CHECK(x_sum(j, 50, 0.9) < x_sum(j, 50, 0.91));
    CHECK(x_sum(j, 400, 0.99) < x_sum(j, kInfiniteN, 0.99));
  }
}

TEST_CASE("x_sum floors on the admissible radius range") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int64_t n : {400, 700, 1500, 3000, 5000}) {
    for (int delta : {1, 2, 3}) {
      const double r0 = r_floor(n, delta);
      for (int trial = 0; trial < 10; ++trial) {
        const double r = r0 + (1.0 - r0) * unit(rng);
        const double sqn = std::sqrt(static_cast<double>(n));
        CHECK(x_sum(0, n, r) > 0.95 * sqn);
        CHECK(x_sum(1, n, r) > 1.35 * n);
        CHECK(x_sum(3, n, r) > 16.0 * n * n);
        CHECK(x_sum(4, n, r) > 94.0 * n * n * sqn);
      }
    }
  }
  // the worked instance: X_0(400, r_0(delta=3)) exceeds 0.95 sqrt(400) = 19
  const double r0 = r_floor(400, 3);
  CHECK(x_sum(0, 400, r0 * (1 + 1e-12)) > 19.0);
}

TEST_CASE("theta-derivatives of log P_n decompose into U and V sums") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> rdist(0.3, 0.999);
  std::uniform_real_distribution<double> tdist(-0.4, 0.4);
  for (int trial = 0; trial < 12; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 39);
    const double r = rdist(rng);
    const double theta = 2.0 * M_PI / 3.0 + tdist(rng);
    const Complex z = std::polar(r, theta - 2.0 * M_PI / 3.0);
    const double h = 1e-4;
    // first derivative
    const Complex d1 = (log_p(n, r, theta + h) - log_p(n, r, theta - h)) / (2.0 * h);
    const Complex d1_pred =
        0.5 * Complex(0, 1) * u_sum(1, n, z) + std::sqrt(3.0) / 2.0 * v_sum(1, n, z);
    CHECK(std::abs(d1 - d1_pred) < 1e-5 * (1.0 + std::abs(d1)));
    // second derivative
    const Complex d2 =
        (log_p(n, r, theta + h) - 2.0 * log_p(n, r, theta) + log_p(n, r, theta - h)) / (h * h);
    const Complex d2_pred =
        -0.5 * u_sum(2, n, z) + std::sqrt(3.0) / 2.0 * Complex(0, 1) * v_sum(2, n, z);
    CHECK(std::abs(d2 - d2_pred) < 1e-4 * (1.0 + std::abs(d2)));
  }
}

TEST_CASE("v_sum vanishes at the origin") {
  for (int j = 1; j <= 4; ++j) CHECK(std::abs(v_sum(j, 25, Complex(0, 0))) == 0.0);
}

TEST_CASE("solve_radius endpoints and monotonicity") {
  // center: m = 3 delta n^2 / 2 gives exactly r = 1
  CHECK(solve_radius(20, 600, 1) == 1.0);
  CHECK(solve_radius(100, 3 * 100 * 100, 2) == 1.0);

  // residual at the solution
  for (std::int64_t n : {50, 400}) {
    for (int delta : {1, 2, 3}) {
      const std::int64_t m = 3 * n;
      const double r = solve_radius(n, m, delta);
      const double residual = saddle_equation_lhs(n, r) - 2.0 * static_cast<double>(m) / delta;
      CHECK(std::abs(residual) <= std::max(1e-12 * 2.0 * m / delta, 1e-9) * 1.01);
      // u_sum(1,n,r) equals the lhs restricted to the same k set
      CHECK(u_sum(1, n, r) == doctest::Approx(saddle_equation_lhs(n, r)).epsilon(1e-12));
    }
  }

  // monotone in m
  const double r1 = solve_radius(100, 300, 1);
  const double r2 = solve_radius(100, 600, 1);
  const double r3 = solve_radius(100, 15000, 1);
  CHECK(r1 < r2);
  CHECK(r2 < r3);

  // the radius lands in (r0, 1] on the theorem range
  const double r = solve_radius(400, 1200, 1);
  CHECK(r > r_floor(400, 1));
  CHECK(r <= 1.0);
  CHECK_THROWS(solve_radius(10, 0, 1));
  CHECK_THROWS(solve_radius(10, 300, 1));
}

TEST_CASE("cutoff limits and the log-ratio inequality") {
  // r -> 1 limit of theta_0 is 10/(81 n)
  CHECK(cutoff_theta0(25, 1.0) == doctest::Approx(10.0 / (81.0 * 25)).epsilon(1e-14));
  // r_0 at the worked point
  CHECK(r_floor(400, 3) == doctest::Approx(std::exp(-std::sqrt(12.0 / 10800.0))).epsilon(1e-15));
  // (1 - r0^3)/(1 - r0^{3n}) <= -3 log r0 for n in [4, 1000]
  for (std::int64_t n = 4; n <= 1000; n = (n < 20 ? n + 1 : n + 37)) {
    for (int delta : {1, 2, 3}) {
      const double r0 = r_floor(n, delta);
      const double lhs = (1.0 - std::pow(r0, 3.0)) /
                         (1.0 - std::pow(r0, 3.0 * static_cast<double>(n)));
      CHECK(lhs <= -3.0 * std::log(r0) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("saddle context bundles a consistent snapshot") {
  SaddleContext ctx = SaddleContext::solve(400, 1200, 2);
  CHECK(ctx.r > ctx.r0);
  CHECK(ctx.r <= 1.0);
  CHECK(ctx.g > 0.0);
  CHECK(ctx.g == doctest::Approx(0.5 * 2 * u_sum(2, 400, ctx.r)).epsilon(1e-13));
  for (int j = 0; j <= 4; ++j)
    CHECK(ctx.x[static_cast<std::size_t>(j)] ==
          doctest::Approx(x_sum(j, 400, ctx.r)).epsilon(1e-13));
  // g sits inside the derivative-lemma bracket [(1/3) d X2, (3/5) d X2)
  CHECK(ctx.g >= 2 * ctx.x[2] / 3.0 * (1 - 1e-12));
  CHECK(ctx.g < 0.6 * 2 * ctx.x[2]);
}
