// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace borwein {

/// Constants of the Gaussian-approximation lemma for the peak of
/// log(e^{-imx} Q_n(r e^{i(x+2pi/3)}) / Q_n(r e^{2pi i/3})) on [-x0, x0].
struct GaussianApproxInputs {
  double f1{0};                  // first derivative at 0 (real by saddle choice)
  std::complex<double> f2{0};    // second derivative at 0
  double f3{0};                  // averaged third-derivative sup
  double f4{0};                  // averaged fourth-derivative sup
  double g{0};                   // -Re f2 (the Gaussian curvature)
  double x0{0};                  // half-width of the peak window
  double mu3{0};                 // x0 f3 / (3g), must stay below 1
  double mu4{0};                 // x0 sqrt(f4 / (8g)), must stay below 1
};

/// Worst-case inputs from the derivative-bound lemma:
/// f1 <= (7/40) d X0, g in [(1/3) d X2, (3/5) d X2), |Im f2| <= (1/3) d X1,
/// f3 <= (2/3) d X3, f4 <= (18/25) d X4, with x0 = theta_0 and g taken at
/// its lower bound (the conservative direction). Requires n >= 400 and
/// r in (r_0, 1].
GaussianApproxInputs fj_bounds(std::int64_t n, double r, int delta);

/// The five-term relative-error bound of the Gaussian approximation lemma,
/// times cosh(f1 x0). mu3/mu4 of 0 are fine (their terms vanish); values
/// >= 1 are a precondition failure (shrink x0).
double gaussian_error_bound(const GaussianApproxInputs& in, std::int64_t beta_grid = 20000);

/// Closed-form peak error bound:
///   (146.2/d + 6.46 + 0.124 d) X1/X2 + 7.222 / sqrt(d X2),
/// decreasing in r. Requires n >= 400.
double peak_error_bound(std::int64_t n, double r, int delta);

/// Closed-form tail error bound (erf-normalized rho-integral plus the far
/// remainder); decreasing in r for n > 546.
double tail_error_bound(std::int64_t n, double r, int delta);

/// arg P_n(r e^{2pi i/3}) as the exact alternating arctan sum; lies in
/// (-pi/18, 0] and increases with r.
double arg_exact(std::int64_t n, double r);

/// -pi/18 + (1/3) arctan(sqrt(3) r^{3n} / (2 + r^{3n})).
double arg_approx(std::int64_t n, double r);

/// Uniform positive lower bound for |2 cos(arg Q_n - 2m pi/3)|:
/// 2 min(1/2, cos(7pi/18)) for delta=1, 2 cos(4pi/9) for delta=2, and 1 for
/// delta=3 with m = 0,1 mod 3 (m = 2 mod 3 is not provable this way).
double cos_floor(int delta, std::int64_t m);

struct ErrorBudget {
  double eps0{0};
  double eps1{0};
  double cos_floor{0};
  double margin{0};  // cos_floor - eps0 - eps1
  bool verdict{false};
};

/// Evaluates both closed-form bounds at r = solve_radius(n, m, delta) and
/// compares against the cosine floor. verdict == true certifies the sign of
/// [q^m] Q_n. Requires n >= 547 and 3n <= m <= 3*delta*n^2/2.
ErrorBudget final_inequality(std::int64_t n, std::int64_t m, int delta);

struct MStar {
  double r_star{0};
  std::int64_t m_star{0};
};

/// Smallest r* with eps0(r) + eps1(r) < cos floor for all r in [r*, 1]
/// (both bounds are decreasing in r for n > 546), translated into the
/// coefficient threshold m* = ceil((delta/2) sum k u_1(r*^k)), rounded up.
/// nullopt when even r = 1 fails the inequality.
std::optional<MStar> mstar(std::int64_t n, int delta);

/// log Q_n(r e^{i theta}) summed factor by factor (principal branches; each
/// factor 1 - r^k e^{ik theta} has positive real part).
std::complex<double> log_q(std::int64_t n, int delta, double r, double theta);

struct ContourEstimate {
  double value{0};          // real part: the coefficient estimate
  double imag_residual{0};  // should vanish for real-coefficient series
};

/// Trapezoidal Cauchy-integral estimate of [q^m] Q_n on the circle of
/// radius r with num_points nodes (>= 4*3*delta*n^2 recommended).
ContourEstimate contour_coefficient(std::int64_t n, std::int64_t m, int delta, double r,
                                    std::int64_t num_points);

/// Same integral restricted to [theta_lo, theta_hi], by adaptive quadrature.
/// Summing the peak and tail pieces reproduces the full-circle value.
ContourEstimate contour_integral(std::int64_t n, std::int64_t m, int delta, double r,
                                 double theta_lo, double theta_hi, double abs_tol = 1e-12);

/// Direct quadrature of the defining peak-error integral (the audit route,
/// independent of the closed-form bound).
double eps0_quadrature(std::int64_t n, std::int64_t m, int delta, double r);

/// Direct quadrature of the defining tail-error integral.
double eps1_quadrature(std::int64_t n, int delta, double r);

}  // namespace borwein
