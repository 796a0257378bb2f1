// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace borwein {

/// Error function, series for small |x| and continued fraction beyond,
/// absolute accuracy ~1e-15 on the ranges used here.
double erf(double x);

/// Log-gamma via a Lanczos fit, x > 0.
double log_gamma(double x);

/// Gamma(x), x > 0.
double gamma_fn(double x);

/// Lower incomplete gamma gamma(s, a) = int_0^a e^-t t^{s-1} dt, s > 0,
/// a >= 0. Series for a < s+1, continued fraction otherwise.
double lower_gamma(double s, double a);

}  // namespace borwein
