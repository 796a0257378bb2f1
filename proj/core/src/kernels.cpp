// SPDX-License-Identifier: Apache-2.0
#include "borwein/kernels.hpp"

#include <stdexcept>
#include <vector>

namespace borwein {

namespace {

// Numerators N_j with u_j = N_j/(1+z+z^2)^j follow the exact recurrence
//   N_{j+1} = z N_j' (1+z+z^2) - j z N_j (1+2z),
// and the same for v_j starting from N_1 = z. Coefficients stay far inside
// int64 range up to j = 8 (max magnitude < 5e5).
std::vector<std::vector<std::int64_t>> generate(std::vector<std::int64_t> n1) {
  std::vector<std::vector<std::int64_t>> table;
  table.push_back({});  // unused j = 0 slot
  table.push_back(std::move(n1));
  for (int j = 1; j < kMaxKernelOrder; ++j) {
    const auto& nj = table.back();
    const std::size_t deg = nj.size() - 1;
    // z*N' has coefficients i*nj[i]; multiply by (1+z+z^2):
    std::vector<std::int64_t> next(deg + 3, 0);
    for (std::size_t i = 0; i <= deg; ++i) {
      const std::int64_t zi = static_cast<std::int64_t>(i) * nj[i];
      next[i] += zi;
      next[i + 1] += zi;
      next[i + 2] += zi;
    }
    // minus j*z*N*(1+2z): contributes at powers i+1 and i+2.
    for (std::size_t i = 0; i <= deg; ++i) {
      next[i + 1] -= j * nj[i];
      next[i + 2] -= 2 * j * nj[i];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    table.push_back(std::move(next));
  }
  return table;
}

const std::vector<std::vector<std::int64_t>>& u_table() {
  static const auto table = generate({0, 1, 2});  // z(1+2z)
  return table;
}

const std::vector<std::vector<std::int64_t>>& v_table() {
  static const auto table = generate({0, 1});  // z
  return table;
}

void check_order(int j) {
  if (j < 1 || j > kMaxKernelOrder)
    throw std::invalid_argument("kernel order must be in [1, 8]");
}

template <typename T>
T horner(std::span<const std::int64_t> coeffs, T z) {
  T acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + static_cast<double>(coeffs[i]);
  return acc;
}

template <typename T>
T eval(const std::vector<std::vector<std::int64_t>>& table, int j, T z) {
  check_order(j);
  const T den = T(1) + z + z * z;
  T denp = den;
  for (int i = 1; i < j; ++i) denp *= den;
  return horner<T>(table[static_cast<std::size_t>(j)], z) / denp;
}

}  // namespace

std::complex<double> kernel_u(int j, std::complex<double> z) { return eval(u_table(), j, z); }
std::complex<double> kernel_v(int j, std::complex<double> z) { return eval(v_table(), j, z); }
double kernel_u(int j, double x) { return eval(u_table(), j, x); }
double kernel_v(int j, double x) { return eval(v_table(), j, x); }

std::span<const std::int64_t> kernel_u_numerator(int j) {
  check_order(j);
  return u_table()[static_cast<std::size_t>(j)];
}

std::span<const std::int64_t> kernel_v_numerator(int j) {
  check_order(j);
  return v_table()[static_cast<std::size_t>(j)];
}

}  // namespace borwein
