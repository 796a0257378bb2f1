// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace borwein {

/// Adaptive Simpson integration with an absolute-error budget.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
  struct Rec {
    static double go(F& f, double a, double m, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const double delta = left + right - whole;
      if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
      return go(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             go(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  };
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return Rec::go(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Complex-valued variant; the error control is on |.|.
template <typename F>
std::complex<double> adaptive_simpson_complex(F&& f, double a, double b, double abs_tol,
                                              int max_depth = 40) {
  using C = std::complex<double>;
  struct Rec {
    static C go(F& f, double a, double m, double b, C fa, C fm, C fb, C whole, double tol,
                int depth) {
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const C flm = f(lm), frm = f(rm);
      const C left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const C right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const C delta = left + right - whole;
      if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
      return go(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
             go(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
  };
  const double m = 0.5 * (a + b);
  const C fa = f(a), fm = f(m), fb = f(b);
  const C whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return Rec::go(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Gauss-Legendre rule; nodes and weights are generated once by Newton
/// iteration on the Legendre polynomial.
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double c = 0.5 * (b - a), d = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(c * nodes_[i] + d);
    return c * s;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Shared 64-point rule, plenty for the entire integrands used here.
const GaussLegendre& gauss64();

}  // namespace borwein
