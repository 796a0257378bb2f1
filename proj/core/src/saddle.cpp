// SPDX-License-Identifier: Apache-2.0
#include "borwein/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "borwein/kernels.hpp"

namespace borwein {

namespace {

constexpr int kMaxXOrder = 8;

// Eulerian numbers A(j, k) for the closed forms of sum k^j x^k.
const std::vector<std::vector<double>>& eulerian() {
  static const auto table = [] {
    std::vector<std::vector<std::int64_t>> a(kMaxXOrder + 1);
    a[0] = {1};
    for (int n = 1; n <= kMaxXOrder; ++n) {
      a[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), 0);
      const auto& prev = a[static_cast<std::size_t>(n - 1)];
      for (int k = 0; k < n; ++k) {
        std::int64_t v = 0;
        if (static_cast<std::size_t>(k) < prev.size())
          v += (k + 1) * prev[static_cast<std::size_t>(k)];
        if (k >= 1 && static_cast<std::size_t>(k - 1) < prev.size())
          v += (n - k) * prev[static_cast<std::size_t>(k - 1)];
        a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = v;
      }
    }
    std::vector<std::vector<double>> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i].assign(a[i].begin(), a[i].end());
    return d;
  }();
  return table;
}

// sum_{i>=0} i^j x^i for 0 < x < 1.
double geometric_moment(int j, double x) {
  if (j == 0) return 1.0 / (1.0 - x);
  const auto& e = eulerian()[static_cast<std::size_t>(j)];
  double s = 0.0;
  for (std::size_t k = e.size(); k-- > 0;) s = s * x + e[k];
  double p = 1.0 - x;
  double denom = p;
  for (int i = 0; i < j; ++i) denom *= p;
  return x * s / denom;
}

// sum_{k=1}^{N} k^j x^k by full-minus-tail closed form.
double power_sum_closed(int j, std::int64_t N, double x) {
  double full = geometric_moment(j, x);
  if (j == 0) full -= 1.0;
  double tail = 0.0;
  const double np1 = static_cast<double>(N + 1);
  double binom = 1.0;
  for (int m = 0; m <= j; ++m) {
    // binom = C(j, m)
    tail += binom * std::pow(np1, j - m) * geometric_moment(m, x);
    binom = binom * (j - m) / (m + 1);
  }
  tail *= std::pow(x, np1);
  return full - tail;
}

double x_sum_infinite(int j, double r) {
  double a = geometric_moment(j, r);
  double b = geometric_moment(j, r * r * r);
  if (j == 0) {
    a -= 1.0;
    b -= 1.0;
  }
  return a - std::pow(3.0, j) * b;
}

}  // namespace

double x_sum_direct(int j, std::int64_t n, double r) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (k % 3 == 0) continue;
    s += std::pow(static_cast<double>(k), j) * std::pow(r, static_cast<double>(k));
  }
  return s;
}

double x_sum(int j, std::int64_t n, double r) {
  if (j < 0 || j > kMaxXOrder) throw std::invalid_argument("x_sum: j must be in [0, 8]");
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("x_sum: r must satisfy 0 < r <= 1");
  if (n == kInfiniteN) {
    if (r == 1.0) throw std::domain_error("x_sum: infinite sum diverges at r = 1");
    return x_sum_infinite(j, r);
  }
  if (n < 1) throw std::invalid_argument("x_sum: n must be >= 1 or infinite");
  const double one_minus_r3 = -std::expm1(3.0 * std::log1p(r - 1.0));
  // The closed form subtracts two nearly equal 1/(1-x)^{j+1}-sized terms when
  // n(1-r^3) is small; fall back to the O(n) sum there and for small n.
  if (3 * n <= 3000 || one_minus_r3 < 1e-4 ||
      static_cast<double>(3 * n) * one_minus_r3 < 30.0 * (j + 1)) {
    return x_sum_direct(j, n, r);
  }
  return power_sum_closed(j, 3 * n, r) - std::pow(3.0, j) * power_sum_closed(j, n, r * r * r);
}

std::complex<double> u_sum(int j, std::int64_t n, std::complex<double> z) {
  std::complex<double> s{};
  for (std::int64_t k = 1; k <= n; ++k) {
    const double a = static_cast<double>(3 * k - 2);
    const double b = static_cast<double>(3 * k - 1);
    s += std::pow(a, j) * kernel_u(j, std::pow(z, a)) + std::pow(b, j) * kernel_u(j, std::pow(z, b));
  }
  return s;
}

std::complex<double> v_sum(int j, std::int64_t n, std::complex<double> z) {
  std::complex<double> s{};
  for (std::int64_t k = 1; k <= n; ++k) {
    const double a = static_cast<double>(3 * k - 2);
    const double b = static_cast<double>(3 * k - 1);
    s += std::pow(a, j) * kernel_v(j, std::pow(z, a)) - std::pow(b, j) * kernel_v(j, std::pow(z, b));
  }
  return s;
}

double u_sum(int j, std::int64_t n, double r) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double a = static_cast<double>(3 * k - 2);
    const double b = static_cast<double>(3 * k - 1);
    s += std::pow(a, j) * kernel_u(j, std::pow(r, a)) + std::pow(b, j) * kernel_u(j, std::pow(r, b));
  }
  return s;
}

double v_sum(int j, std::int64_t n, double r) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double a = static_cast<double>(3 * k - 2);
    const double b = static_cast<double>(3 * k - 1);
    s += std::pow(a, j) * kernel_v(j, std::pow(r, a)) - std::pow(b, j) * kernel_v(j, std::pow(r, b));
  }
  return s;
}

double saddle_equation_lhs(std::int64_t n, double r) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (k % 3 == 0) continue;
    s += static_cast<double>(k) * kernel_u(1, std::pow(r, static_cast<double>(k)));
  }
  return s;
}

double solve_radius(std::int64_t n, std::int64_t m, int delta) {
  if (n < 1 || delta < 1 || delta > 3) throw std::invalid_argument("solve_radius: bad n or delta");
  const std::int64_t degree = 3 * delta * n * n;
  if (m <= 0 || m >= degree) throw std::domain_error("solve_radius: m outside (0, 3*delta*n^2)");
  const double target = 2.0 * static_cast<double>(m) / delta;
  if (2 * m == degree) return 1.0;  // u_1(1) = 1 makes the LHS exactly 3n^2

  const double tol = std::max(1e-12 * target, 1e-9);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double value = saddle_equation_lhs(n, mid);
    if (std::abs(value - target) <= tol) return mid;
    (value < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cutoff_theta0(std::int64_t n, double r) {
  if (n < 1) throw std::invalid_argument("cutoff_theta0: n must be >= 1");
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("cutoff_theta0: r must be in (0, 1]");
  constexpr double kC0 = 10.0 / 81.0;
  if (r == 1.0) return kC0 * 3.0 / static_cast<double>(3 * n);
  const double lr = std::log(r);
  return kC0 * (-std::expm1(3.0 * lr)) / (-std::expm1(3.0 * static_cast<double>(n) * lr));
}

double r_floor(std::int64_t n, int delta) {
  if (n < 1 || delta < 1 || delta > 3) throw std::invalid_argument("r_floor: bad n or delta");
  return std::exp(-std::sqrt(4.0 * delta / (27.0 * static_cast<double>(n))));
}

SaddleContext SaddleContext::solve(std::int64_t n, std::int64_t m, int delta) {
  SaddleContext ctx;
  ctx.n = n;
  ctx.m = m;
  ctx.delta = delta;
  ctx.r = solve_radius(n, m, delta);
  ctx.r0 = r_floor(n, delta);
  ctx.theta0 = cutoff_theta0(n, ctx.r);
  ctx.g = 0.5 * delta * u_sum(2, n, ctx.r);
  for (int j = 0; j <= 4; ++j) ctx.x[static_cast<std::size_t>(j)] = x_sum(j, n, ctx.r);
  return ctx;
}

}  // namespace borwein
