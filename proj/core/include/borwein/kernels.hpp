// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace borwein {

/// Highest derivative order of the log-derivative kernels kept on hand.
inline constexpr int kMaxKernelOrder = 8;

/// u_j(z) = (z d/dz)^{j-1} z(1+2z)/(1+z+z^2), j in [1, kMaxKernelOrder].
std::complex<double> kernel_u(int j, std::complex<double> z);
/// v_j(z) = (z d/dz)^{j-1} z/(1+z+z^2).
std::complex<double> kernel_v(int j, std::complex<double> z);

double kernel_u(int j, double x);
double kernel_v(int j, double x);

/// Numerator coefficients (ascending powers of z) of u_j over (1+z+z^2)^j.
/// Exposed so the generated closed forms can be checked against the printed
/// low-order ones.
std::span<const std::int64_t> kernel_u_numerator(int j);
std::span<const std::int64_t> kernel_v_numerator(int j);

}  // namespace borwein
