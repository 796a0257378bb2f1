// SPDX-License-Identifier: Apache-2.0
#include "borwein/quadrature.hpp"

#include <stdexcept>

namespace borwein {

GaussLegendre::GaussLegendre(int order) {
  if (order < 2) throw std::invalid_argument("GaussLegendre: order must be >= 2");
  const int n = order;
  nodes_.resize(static_cast<std::size_t>(n));
  weights_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-angle initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes_[static_cast<std::size_t>(i)] = -x;
    nodes_[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights_[static_cast<std::size_t>(i)] = w;
    weights_[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

const GaussLegendre& gauss64() {
  static const GaussLegendre rule(64);
  return rule;
}

}  // namespace borwein
