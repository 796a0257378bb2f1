// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace borwein {

using BigInt = mpz_class;

/// A power series known exactly up to (and including) q^trunc.
///
/// Coefficients above `trunc` are *unknown*, not zero. When the object is a
/// complete polynomial, `exact_degree` records its degree; the stored
/// coefficients above it are then genuinely zero.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t trunc);

  /// The series 1 + 0q + 0q^2 + ...
  static TruncatedSeries one(std::int64_t trunc);

  std::int64_t trunc() const noexcept { return trunc_; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  const BigInt& coeff(std::int64_t m) const;
  BigInt& coeff(std::int64_t m);

  std::optional<std::int64_t> exact_degree() const noexcept { return exact_degree_; }
  void set_exact_degree(std::int64_t degree);
  void clear_exact_degree() noexcept { exact_degree_.reset(); }

  /// Marks the series as a complete polynomial, scanning for the top nonzero
  /// coefficient. A zero polynomial is left without an exact degree.
  void mark_exact();

  /// Copy of the series cut down to truncation order t (t <= trunc).
  TruncatedSeries truncated(std::int64_t t) const;

  /// In-place multiplication by the sparse binomial (1 - q^k), k >= 1.
  void mul_one_minus_qk(std::int64_t k);
  /// In-place division by (1 - q^k). Always valid on a truncated series.
  void div_one_minus_qk(std::int64_t k);

  /// Shifts coefficients up by q^s, dropping anything past trunc.
  void shift_up(std::int64_t s);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  void negate();

  /// Schoolbook product; the result carries truncation min(t1, t2).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Forward-substitution division: *this / divisor, where divisor has
  /// constant term 1. Result truncation is min of the two.
  TruncatedSeries divided_by(const TruncatedSeries& divisor) const;

  /// Multiplicative inverse (constant term must be 1).
  TruncatedSeries inverse() const;

  bool operator==(const TruncatedSeries& rhs) const;

  /// True when exact_degree is set and coeff(m) == coeff(deg - m) for all m.
  bool is_palindromic() const;
  /// coeff(m) == sign * coeff(deg - m) for all m, sign in {+1, -1}.
  bool is_palindromic_with_sign(int sign) const;

  std::string label;

 private:
  std::vector<BigInt> coeffs_;  // size trunc_ + 1
  std::int64_t trunc_;
  std::optional<std::int64_t> exact_degree_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);

}  // namespace borwein
