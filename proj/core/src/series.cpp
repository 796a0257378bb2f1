// SPDX-License-Identifier: Apache-2.0
#include "borwein/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace borwein {

TruncatedSeries::TruncatedSeries(std::int64_t trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("TruncatedSeries: trunc must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

TruncatedSeries TruncatedSeries::one(std::int64_t trunc) {
  TruncatedSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt& TruncatedSeries::coeff(std::int64_t m) const {
  if (m < 0 || m > trunc_) throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation");
  return coeffs_[static_cast<std::size_t>(m)];
}

BigInt& TruncatedSeries::coeff(std::int64_t m) {
  if (m < 0 || m > trunc_) throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation");
  return coeffs_[static_cast<std::size_t>(m)];
}

void TruncatedSeries::set_exact_degree(std::int64_t degree) {
  if (degree < 0 || degree > trunc_) throw std::invalid_argument("set_exact_degree: degree beyond truncation");
  if (coeffs_[static_cast<std::size_t>(degree)] == 0)
    throw std::invalid_argument("set_exact_degree: leading coefficient is zero");
  for (std::int64_t m = degree + 1; m <= trunc_; ++m)
    if (coeffs_[static_cast<std::size_t>(m)] != 0)
      throw std::invalid_argument("set_exact_degree: nonzero coefficient above claimed degree");
  exact_degree_ = degree;
}

void TruncatedSeries::mark_exact() {
  for (std::int64_t m = trunc_; m >= 0; --m) {
    if (coeffs_[static_cast<std::size_t>(m)] != 0) {
      exact_degree_ = m;
      return;
    }
  }
  exact_degree_.reset();
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t t) const {
  if (t < 0 || t > trunc_) throw std::invalid_argument("truncated: order outside [0, trunc]");
  TruncatedSeries out(t);
  std::copy_n(coeffs_.begin(), static_cast<std::size_t>(t) + 1, out.coeffs_.begin());
  if (exact_degree_ && *exact_degree_ <= t) out.exact_degree_ = exact_degree_;
  out.label = label;
  return out;
}

void TruncatedSeries::mul_one_minus_qk(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("mul_one_minus_qk: k must be >= 1");
  // Descending index order so that coeff[i-k] is still the old value.
  for (std::int64_t i = trunc_; i >= k; --i)
    coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - k)];
  exact_degree_.reset();
}

void TruncatedSeries::div_one_minus_qk(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("div_one_minus_qk: k must be >= 1");
  for (std::int64_t i = k; i <= trunc_; ++i)
    coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(i - k)];
  exact_degree_.reset();
}

void TruncatedSeries::shift_up(std::int64_t s) {
  if (s < 0) throw std::invalid_argument("shift_up: shift must be >= 0");
  if (s == 0) return;
  for (std::int64_t i = trunc_; i >= s; --i)
    coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i - s)];
  for (std::int64_t i = 0; i < std::min(s, trunc_ + 1); ++i) coeffs_[static_cast<std::size_t>(i)] = 0;
  exact_degree_.reset();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  const std::int64_t t = std::min(trunc_, rhs.trunc_);
  coeffs_.resize(static_cast<std::size_t>(t) + 1);
  trunc_ = t;
  for (std::int64_t i = 0; i <= t; ++i)
    coeffs_[static_cast<std::size_t>(i)] += rhs.coeffs_[static_cast<std::size_t>(i)];
  exact_degree_.reset();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  const std::int64_t t = std::min(trunc_, rhs.trunc_);
  coeffs_.resize(static_cast<std::size_t>(t) + 1);
  trunc_ = t;
  for (std::int64_t i = 0; i <= t; ++i)
    coeffs_[static_cast<std::size_t>(i)] -= rhs.coeffs_[static_cast<std::size_t>(i)];
  exact_degree_.reset();
  return *this;
}

void TruncatedSeries::negate() {
  for (auto& c : coeffs_) c = -c;
  // Degree is preserved under negation.
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries out(t);
  BigInt tmp;
  for (std::int64_t i = 0; i <= t; ++i) {
    const BigInt& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (std::int64_t j = 0; i + j <= t; ++j) {
      const BigInt& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      tmp = ai * bj;
      out.coeffs_[static_cast<std::size_t>(i + j)] += tmp;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& divisor) const {
  if (divisor.coeffs_[0] != 1)
    throw std::invalid_argument("divided_by: divisor constant term must be 1");
  const std::int64_t t = std::min(trunc_, divisor.trunc_);
  TruncatedSeries out(t);
  for (std::int64_t i = 0; i <= t; ++i) {
    BigInt s = coeffs_[static_cast<std::size_t>(i)];
    for (std::int64_t j = 1; j <= i; ++j) {
      const BigInt& bj = divisor.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      s -= bj * out.coeffs_[static_cast<std::size_t>(i - j)];
    }
    out.coeffs_[static_cast<std::size_t>(i)] = std::move(s);
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  return one(trunc_).divided_by(*this);
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
  return trunc_ == rhs.trunc_ && coeffs_ == rhs.coeffs_;
}

bool TruncatedSeries::is_palindromic() const { return is_palindromic_with_sign(+1); }

bool TruncatedSeries::is_palindromic_with_sign(int sign) const {
  if (!exact_degree_) throw std::logic_error("is_palindromic: exact degree unknown");
  const std::int64_t d = *exact_degree_;
  for (std::int64_t m = 0; 2 * m <= d; ++m) {
    const BigInt& lo = coeffs_[static_cast<std::size_t>(m)];
    const BigInt& hi = coeffs_[static_cast<std::size_t>(d - m)];
    if (sign > 0 ? (lo != hi) : (lo != -hi)) return false;
  }
  return true;
}

}  // namespace borwein
