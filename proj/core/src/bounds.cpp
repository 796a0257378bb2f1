// SPDX-License-Identifier: Apache-2.0
#include "borwein/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "borwein/certify.hpp"
#include "borwein/quadrature.hpp"
#include "borwein/saddle.hpp"
#include "borwein/special.hpp"

namespace borwein {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoPiThirds = 2.0 * M_PI / 3.0;

void check_delta(int delta) {
  if (delta < 1 || delta > 3) throw std::invalid_argument("delta must be in {1, 2, 3}");
}

// (1 - r^a)/(1 - r^b) without cancellation, with the r -> 1 limit a/b.
double pow_ratio(double r, double a, double b) {
  if (r == 1.0) return a / b;
  const double lr = std::log(r);
  return std::expm1(a * lr) / std::expm1(b * lr);
}

double phi_tail(std::int64_t n, double r, double rho) {
  const double dip = 1.0 - std::sqrt(1.0 / (1.0 + 18.0 * rho * rho));
  if (r == 1.0) return static_cast<double>(n) / 18.0 * dip;
  const double r3 = r * r * r;
  return r3 * (1.0 + r3) / 6.0 * dip * pow_ratio(r, 0.5 * static_cast<double>(n), 3.0);
}

}  // namespace

GaussianApproxInputs fj_bounds(std::int64_t n, double r, int delta) {
  check_delta(delta);
  if (n < 400) throw std::domain_error("fj_bounds: the derivative lemma needs n >= 400");
  const double r0 = r_floor(n, delta);
  if (!(r > r0) || r > 1.0) throw std::domain_error("fj_bounds: r must be in (r0, 1]");
  const double d = delta;
  GaussianApproxInputs in;
  const double x0v = x_sum(0, n, r);
  const double x1v = x_sum(1, n, r);
  const double x2v = x_sum(2, n, r);
  const double x3v = x_sum(3, n, r);
  const double x4v = x_sum(4, n, r);
  in.f1 = 7.0 / 40.0 * d * x0v;
  in.g = d * x2v / 3.0;  // lower end of [(1/3) d X2, (3/5) d X2)
  in.f2 = {-in.g, d * x1v / 3.0};
  in.f3 = 2.0 / 3.0 * d * x3v;
  in.f4 = 18.0 / 25.0 * d * x4v;
  in.x0 = cutoff_theta0(n, r);
  in.mu3 = in.x0 * in.f3 / (3.0 * in.g);
  in.mu4 = in.x0 * std::sqrt(in.f4 / (8.0 * in.g));
  return in;
}

double gaussian_error_bound(const GaussianApproxInputs& in, std::int64_t beta_grid) {
  if (!(in.g > 0.0)) throw std::domain_error("gaussian_error_bound: g must be positive");
  if (in.mu3 >= 1.0 || in.mu4 >= 1.0 || in.mu3 < 0.0 || in.mu4 < 0.0)
    throw std::domain_error("gaussian_error_bound: mu3/mu4 outside [0, 1); shrink x0");
  const double g = in.g;
  double total = (std::abs(in.f2.imag()) + in.f1 * in.f1) / (2.0 * g);
  if (in.f3 > 0.0) {
    const double b1 = beta(1, in.mu3, beta_grid);
    total += 4.0 * in.f3 * in.f3 * b1 / (9.0 * kSqrtPi * g * g * g);
    if (in.f1 != 0.0) {
      const double b2 = beta(2, in.mu3, beta_grid);
      total += 4.0 * in.f1 * in.f3 * b2 / (3.0 * kSqrtPi * g * g);
    }
  }
  if (in.f4 > 0.0) {
    const double b3 = beta(3, in.mu4, beta_grid);
    total += in.f4 * b3 / (3.0 * kSqrtPi * g * g);
    if (in.f1 != 0.0) {
      const double b4 = beta(4, in.mu4, beta_grid);
      total += std::sqrt(2.0) * in.f1 * in.f4 * b4 / (3.0 * kSqrtPi * std::pow(g, 2.5));
    }
  }
  return std::cosh(in.f1 * in.x0) * total;
}

double peak_error_bound(std::int64_t n, double r, int delta) {
  check_delta(delta);
  if (n < 400) throw std::domain_error("peak_error_bound: needs n >= 400");
  const double r0 = r_floor(n, delta);
  if (!(r > r0) || r > 1.0) throw std::domain_error("peak_error_bound: r must be in (r0, 1]");
  const double d = delta;
  const double x1v = x_sum(1, n, r);
  const double x2v = x_sum(2, n, r);
  return (146.2 / d + 6.46 + 0.124 * d) * x1v / x2v + 7.222 / std::sqrt(d * x2v);
}

double tail_error_bound(std::int64_t n, double r, int delta) {
  check_delta(delta);
  if (n < 1) throw std::invalid_argument("tail_error_bound: n must be >= 1");
  const double r0 = r_floor(n, delta);
  if (!(r > r0) || r > 1.0) throw std::domain_error("tail_error_bound: r must be in (r0, 1]");
  const double log_r0 = std::sqrt(4.0 * delta / (27.0 * static_cast<double>(n)));  // = -log r0
  if ((1.0 + 12.0) * log_r0 >= std::sqrt(3.0))
    throw std::domain_error("tail_error_bound: n too small, rho-exponent pole");
  const double d = delta;
  const double ratio = (r == 1.0) ? static_cast<double>(n) : pow_ratio(r, 3.0 * n, 3.0);
  const double pref =
      std::sqrt(54.0 * d / (5.0 * M_PI)) / erf(std::sqrt(40.0 * d * ratio / 243.0));
  auto integrand = [&](double rho) {
    return std::exp(0.8 * d / (std::sqrt(3.0) - (1.0 + 3.0 * rho) * log_r0) -
                    d * phi_tail(n, r, rho));
  };
  const double integral = adaptive_simpson(integrand, 10.0 / 81.0, 4.0, 1e-9);
  const double main_part = 4.0 * std::sqrt(ratio) * integral;
  const double far_part =
      2.0 * M_PI * std::pow(ratio, 1.5) * std::exp(5.44 * d - d * phi_tail(n, r, 4.0));
  return pref * (main_part + far_part);
}

double arg_exact(std::int64_t n, double r) {
  if (n < 1) throw std::invalid_argument("arg_exact: n must be >= 1");
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("arg_exact: r must be in (0, 1]");
  // arg(1 - r^x e^{2pi i/3}) = -arctan(sqrt3 r^x/(2 + r^x)); the pair at
  // 3k-2, 3k-1 contributes their difference.
  double s = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double ra = std::pow(r, static_cast<double>(3 * k - 2));
    const double rb = std::pow(r, static_cast<double>(3 * k - 1));
    s += std::atan(std::sqrt(3.0) * ra / (2.0 + ra)) - std::atan(std::sqrt(3.0) * rb / (2.0 + rb));
  }
  return -s;
}

double arg_approx(std::int64_t n, double r) {
  if (n < 1) throw std::invalid_argument("arg_approx: n must be >= 1");
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("arg_approx: r must be in (0, 1]");
  const double s = std::pow(r, static_cast<double>(3 * n));
  return -M_PI / 18.0 + std::atan(std::sqrt(3.0) * s / (2.0 + s)) / 3.0;
}

double cos_floor(int delta, std::int64_t m) {
  check_delta(delta);
  switch (delta) {
    case 1: return 2.0 * std::min(0.5, std::cos(7.0 * M_PI / 18.0));
    case 2: return 2.0 * std::cos(4.0 * M_PI / 9.0);
    default: break;
  }
  const std::int64_t res = ((m % 3) + 3) % 3;
  if (res == 2)
    throw std::domain_error("cos_floor: delta=3 with m = 2 mod 3 has no positive floor");
  return 1.0;
}

ErrorBudget final_inequality(std::int64_t n, std::int64_t m, int delta) {
  check_delta(delta);
  if (n < 547) throw std::domain_error("final_inequality: needs n >= 547");
  if (m < 3 * n || 2 * m > 3 * delta * n * n)
    throw std::domain_error("final_inequality: m outside [3n, 3*delta*n^2/2]");
  const double r = solve_radius(n, m, delta);
  ErrorBudget budget;
  budget.eps0 = peak_error_bound(n, r, delta);
  budget.eps1 = tail_error_bound(n, r, delta);
  budget.cos_floor = cos_floor(delta, m);
  budget.margin = budget.cos_floor - budget.eps0 - budget.eps1;
  budget.verdict = budget.margin > 0.0;
  return budget;
}

std::optional<MStar> mstar(std::int64_t n, int delta) {
  check_delta(delta);
  if (n < 547) throw std::domain_error("mstar: monotonicity of the tail bound needs n > 546");
  const double floor_value = cos_floor(delta, 0);
  auto excess = [&](double r) {
    return peak_error_bound(n, r, delta) + tail_error_bound(n, r, delta) - floor_value;
  };
  if (excess(1.0) >= 0.0) return std::nullopt;  // bound too weak even at the center
  const double r0 = r_floor(n, delta);
  double lo = r0 * (1.0 + 1e-14), hi = 1.0;
  if (excess(lo) < 0.0) {
    hi = lo;  // the whole admissible range already satisfies the inequality
  } else {
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (excess(mid) >= 0.0 ? lo : hi) = mid;
    }
  }
  MStar out;
  out.r_star = hi;
  out.m_star = static_cast<std::int64_t>(
      std::ceil(0.5 * static_cast<double>(delta) * saddle_equation_lhs(n, hi)));
  return out;
}

std::complex<double> log_q(std::int64_t n, int delta, double r, double theta) {
  check_delta(delta);
  std::complex<double> s{};
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (k % 3 == 0) continue;
    const double rk = std::pow(r, static_cast<double>(k));
    s += std::log(std::complex<double>(1.0 - rk * std::cos(k * theta), -rk * std::sin(k * theta)));
  }
  return static_cast<double>(delta) * s;
}

ContourEstimate contour_coefficient(std::int64_t n, std::int64_t m, int delta, double r,
                                    std::int64_t num_points) {
  check_delta(delta);
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("contour_coefficient: r must be in (0, 1]");
  if (num_points < 4) throw std::invalid_argument("contour_coefficient: too few points");
  const double mlogr = static_cast<double>(m) * std::log(r);
  std::complex<double> acc{};
  for (std::int64_t i = 0; i < num_points; ++i) {
    const double theta = -M_PI + 2.0 * M_PI * static_cast<double>(i) / num_points;
    acc += std::exp(log_q(n, delta, r, theta) -
                    std::complex<double>(mlogr, static_cast<double>(m) * theta));
  }
  acc /= static_cast<double>(num_points);
  return {acc.real(), acc.imag()};
}

ContourEstimate contour_integral(std::int64_t n, std::int64_t m, int delta, double r,
                                 double theta_lo, double theta_hi, double abs_tol) {
  check_delta(delta);
  const double mlogr = static_cast<double>(m) * std::log(r);
  auto f = [&](double theta) {
    return std::exp(log_q(n, delta, r, theta) -
                    std::complex<double>(mlogr, static_cast<double>(m) * theta));
  };
  const std::complex<double> acc =
      adaptive_simpson_complex(f, theta_lo, theta_hi, abs_tol) / (2.0 * M_PI);
  return {acc.real(), acc.imag()};
}

double eps0_quadrature(std::int64_t n, std::int64_t m, int delta, double r) {
  check_delta(delta);
  const double theta0 = cutoff_theta0(n, r);
  const double g = 0.5 * delta * u_sum(2, n, r);
  const std::complex<double> log_peak = log_q(n, delta, r, kTwoPiThirds);
  auto f = [&](double t) {
    const std::complex<double> ratio = std::exp(log_q(n, delta, r, t + kTwoPiThirds) - log_peak);
    return ratio * std::exp(std::complex<double>(0.0, -static_cast<double>(m) * t)) -
           std::exp(-0.5 * g * t * t);
  };
  const std::complex<double> integral = adaptive_simpson_complex(f, -theta0, theta0, 1e-13);
  const double pref = std::sqrt(g) / (std::sqrt(2.0 * M_PI) * erf(theta0 * std::sqrt(0.5 * g)));
  return 2.0 * pref * std::abs(integral);
}

double eps1_quadrature(std::int64_t n, int delta, double r) {
  check_delta(delta);
  const double theta0 = cutoff_theta0(n, r);
  const double g = 0.5 * delta * u_sum(2, n, r);
  const double log_peak = log_q(n, delta, r, kTwoPiThirds).real();
  auto f = [&](double t) { return std::exp(log_q(n, delta, r, t).real() - log_peak); };
  // the tail integrand is tiny but broad; 1e-10 keeps the result far inside
  // the 1e-6 slack that the fundamental-inequality check allows
  const double tol = 1e-10;
  double integral = adaptive_simpson(f, -kTwoPiThirds + theta0, kTwoPiThirds - theta0, tol);
  integral += adaptive_simpson(f, kTwoPiThirds + theta0, M_PI, tol);
  integral += adaptive_simpson(f, -M_PI, -kTwoPiThirds - theta0, tol);
  const double pref = std::sqrt(g) / (std::sqrt(2.0 * M_PI) * erf(theta0 * std::sqrt(0.5 * g)));
  return pref * integral;
}

}  // namespace borwein
