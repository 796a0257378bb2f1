// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace borwein {

/// Sentinel n for the infinite sums X_j(infinity, r).
inline constexpr std::int64_t kInfiniteN = -1;

/// X_j(n, r) = sum of k^j r^k over k <= 3n with 3 not dividing k.
/// Evaluated by a hardwired closed form away from r = 1 and by direct
/// summation where the closed form cancels badly; j in [0, 8], 0 < r <= 1.
double x_sum(int j, std::int64_t n, double r);

/// Direct-summation reference for x_sum (finite n only).
double x_sum_direct(int j, std::int64_t n, double r);

/// U_j(n, z) = sum_k ((3k-2)^j u_j(z^{3k-2}) + (3k-1)^j u_j(z^{3k-1})).
std::complex<double> u_sum(int j, std::int64_t n, std::complex<double> z);
/// V_j(n, z) = sum_k ((3k-2)^j v_j(z^{3k-2}) - (3k-1)^j v_j(z^{3k-1})).
std::complex<double> v_sum(int j, std::int64_t n, std::complex<double> z);

double u_sum(int j, std::int64_t n, double r);
double v_sum(int j, std::int64_t n, double r);

/// Left-hand side of the radius equation: sum_{3 !| k <= 3n} k u_1(r^k).
double saddle_equation_lhs(std::int64_t n, double r);

/// Unique r in (0, 1] with sum_{3 !| k} k u_1(r^k) = 2m/delta, found by
/// bisection (the left side is strictly increasing in r). Requires
/// 0 < m < 3*delta*n^2; m at the half-degree gives exactly r = 1.
double solve_radius(std::int64_t n, std::int64_t m, int delta);

/// theta_0 = (10/81) (1-r^3)/(1-r^{3n}), with the r -> 1 limit 10/(81 n).
double cutoff_theta0(std::int64_t n, double r);

/// r_0 = exp(-sqrt(4 delta / (27 n))).
double r_floor(std::int64_t n, int delta);

/// Radius, cutoff and cached X_j values for one (n, m, delta) site.
struct SaddleContext {
  std::int64_t n{0};
  std::int64_t m{0};
  int delta{1};
  double r{0};
  double r0{0};
  double theta0{0};
  double g{0};  // -Re d^2/dtheta^2 log Q_n at theta = 2pi/3, = (delta/2) U_2(n,r)
  std::array<double, 5> x{};  // X_0..X_4 at (n, r)

  static SaddleContext solve(std::int64_t n, std::int64_t m, int delta);
};

}  // namespace borwein
