// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace borwein {

inline constexpr std::int64_t kDefaultGrid = 100000;   // CI-speed default
inline constexpr std::int64_t kStrictGrid = 1000000;   // matches the reference computation

/// Grid-plus-derivative upper bound for sup f on [lo, hi]:
///   certified_sup = max over grid of f  +  (hi-lo)/grid_points * derivative_bound.
struct GridCertificate {
  double lo{0};
  double hi{0};
  std::int64_t grid_points{0};
  double grid_max{0};
  double derivative_bound{0};
  double certified_sup{0};
};

/// The derivative bound must majorize |f'| on [lo, hi]; it is the caller's
/// analytic input, not something this routine can check.
GridCertificate certified_sup(const std::function<double(double)>& f, double derivative_bound,
                              double lo, double hi, std::int64_t grid_points);

/// beta_i(mu), i = 1..4: suprema over w > 0 of erf-normalized perturbed
/// Gaussian integrals. Certified by a w-grid on [0, 80] with local derivative
/// majorants plus an analytic series bound for the w > 80 tail.
double beta(int i, double mu, std::int64_t grid_points = kDefaultGrid);

/// The region S_rho = { R e^{i Theta} : 0 <= R <= 1, |Theta| <= rho(-log R)/(1-R) }.
struct RegionS {
  double rho{0};
  bool contains(std::complex<double> z) const;
  /// Upper boundary point at radius R (angle capped at pi).
  std::complex<double> boundary(double R) const;
};

/// Certified sup of |u_j(z)/z| (kind 'u') or |v_j(z)/z| (kind 'v') over
/// S_rho. The maximum-modulus principle moves the sup to the boundary curve,
/// which is gridded in R with an analytic Lipschitz majorant.
double sup_kernel_on_region(int j, char kind, double rho,
                            std::int64_t grid_points = kDefaultGrid);

/// |sum_{k=1}^n (f(3k-2) - f(3k-1))| bound from the offset Maclaurin formula:
/// |f(3n)-f(0)|/3 + 2|f''(3n)-f''(0)|/3 + (11n/96) sup|f''''|.
double maclaurin_alt_bound(double f_at_0, double f_at_3n, double fpp_at_0, double fpp_at_3n,
                           double sup_f4, std::int64_t n);

/// One entry of the appendix inequality suite: the inequality's observed
/// worst value against its threshold.
struct AppendixCheck {
  std::string name;
  bool pass{false};
  double observed{0};
  double threshold{0};
};

/// Runs every appendix inequality as a randomized/grid test (these are
/// checks, not proofs). The seed fixes the random draws; grid_points sizes
/// the function grids and beta_grid the beta evaluations inside the
/// integral-inequality checks.
std::vector<AppendixCheck> appendix_suite(std::uint64_t seed,
                                          std::int64_t grid_points = kDefaultGrid,
                                          std::int64_t beta_grid = 20000);

}  // namespace borwein
