// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace borwein {

/// Exact rational, used for q-shifted-factorial offsets. No floating point
/// enters the spec layer.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // normalizes, den > 0

  bool is_integer() const noexcept { return den == 1; }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

/// Sentinel length for (a; q^K)_infinity factors.
inline constexpr std::int64_t kInfinite = -1;

/// One block (q^offset; q^K)_length^multiplicity of a product.
/// Negative multiplicity means division; such factors always have constant
/// term 1 here since offsets are positive.
struct ProductFactor {
  Rational offset;
  int multiplicity{1};
  std::int64_t length{kInfinite};
};

/// Symbolic description of prod_j (q^{alpha_j}; q^K)_{n_j}^{delta_j}.
/// Offsets are reduced mod K into (0, K]; the offset K itself is legal and
/// denotes the (q^K; q^K)-type block.
struct ProductSpec {
  std::int64_t modulus{1};
  std::vector<ProductFactor> factors;
  std::string label;

  /// Throws std::invalid_argument on a malformed spec.
  void validate() const;
};

/// P_n^delta = ((q;q)_{3n}/(q^3;q^3)_n)^delta as a reduced spec
/// (offsets 1 and 2 mod 3, length n).
ProductSpec borwein_spec(std::int64_t n, int delta);

/// P_infinity^delta.
ProductSpec borwein_infinite_spec(int delta);

/// (q;q)_{Kn}^delta / (q^K;q^K)_n^delta, reduced to offsets 1..K-1.
ProductSpec mod_family_spec(std::int64_t K, std::int64_t n, int delta);

/// Infinite-product variant of mod_family_spec.
ProductSpec mod_family_infinite_spec(std::int64_t K, int delta);

}  // namespace borwein
