// SPDX-License-Identifier: Apache-2.0
#include "borwein/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace borwein {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

void ProductSpec::validate() const {
  if (modulus < 1) throw std::invalid_argument("ProductSpec: modulus must be positive");
  for (const auto& f : factors) {
    if (f.offset.num <= 0) throw std::invalid_argument("ProductSpec: offsets must be positive");
    if (f.multiplicity == 0) throw std::invalid_argument("ProductSpec: zero multiplicity factor");
    if (f.length != kInfinite && f.length < 0)
      throw std::invalid_argument("ProductSpec: negative factor length");
  }
}

namespace {

// Reduce an integer offset into (0, K]; K stays K rather than wrapping to 0,
// so (q^K;q^K)-type blocks keep a positive smallest exponent.
std::int64_t reduce_offset(std::int64_t a, std::int64_t K) {
  const std::int64_t r = ((a - 1) % K + K) % K + 1;
  return r;
}

struct ExpandedFactor {
  std::int64_t offset;  // integer offset, in (0, K]
  int multiplicity;
  std::int64_t terms;   // number of binomials with exponent <= trunc
};

std::vector<ExpandedFactor> expand_factors(const ProductSpec& spec, std::int64_t trunc) {
  spec.validate();
  const std::int64_t K = spec.modulus;
  std::vector<ExpandedFactor> out;
  for (const auto& f : spec.factors) {
    if (!f.offset.is_integer())
      throw std::invalid_argument(
          "general_product: non-integral offset cannot be materialized as a power series");
    const std::int64_t a = reduce_offset(f.offset.num, K);
    // Cap at the least L with smallest new exponent a + LK > trunc.
    std::int64_t cap = (a > trunc) ? 0 : (trunc - a) / K + 1;
    if (f.length != kInfinite) cap = std::min(cap, f.length);
    out.push_back({a, f.multiplicity, cap});
  }
  std::sort(out.begin(), out.end(), [](const ExpandedFactor& x, const ExpandedFactor& y) {
    return x.offset < y.offset;
  });
  return out;
}

}  // namespace

TruncatedSeries borwein_poly(std::int64_t n, int delta, std::optional<std::int64_t> trunc) {
  if (n < 1) throw std::invalid_argument("borwein_poly: n must be >= 1");
  if (delta < 1 || delta > 3) throw std::invalid_argument("borwein_poly: delta must be in {1,2,3}");
  const std::int64_t degree = 3 * delta * n * n;
  const std::int64_t t = trunc.value_or(degree);
  TruncatedSeries s = TruncatedSeries::one(t);
  for (std::int64_t k = 1; k <= 3 * n; ++k) {
    if (k % 3 == 0 || k > t) continue;
    for (int d = 0; d < delta; ++d) s.mul_one_minus_qk(k);
  }
  if (t >= degree) s.set_exact_degree(degree);
  return s;
}

TruncatedSeries general_product(const ProductSpec& spec, std::int64_t trunc) {
  if (trunc < 0) throw std::invalid_argument("general_product: trunc must be >= 0");
  const std::int64_t K = spec.modulus;
  TruncatedSeries s = TruncatedSeries::one(trunc);
  for (const auto& f : expand_factors(spec, trunc)) {
    const int reps = f.multiplicity > 0 ? f.multiplicity : -f.multiplicity;
    for (std::int64_t i = 0; i < f.terms; ++i) {
      const std::int64_t e = f.offset + i * K;
      for (int d = 0; d < reps; ++d) {
        if (f.multiplicity > 0)
          s.mul_one_minus_qk(e);
        else
          s.div_one_minus_qk(e);
      }
    }
  }
  // A finite spec may be a complete polynomial; detect and record its degree.
  bool finite = true;
  std::int64_t degree = 0;
  for (const auto& f : spec.factors) {
    if (f.length == kInfinite) {
      finite = false;
      break;
    }
    const std::int64_t a = reduce_offset(f.offset.num, K);
    degree += f.multiplicity * (a * f.length + K * f.length * (f.length - 1) / 2);
  }
  if (finite && degree >= 0 && degree <= trunc) {
    bool poly = s.coeff(degree) != 0;
    for (std::int64_t m = degree + 1; poly && m <= trunc; ++m) poly = s.coeff(m) == 0;
    if (poly) s.set_exact_degree(degree);
  }
  s.label = spec.label;
  return s;
}

TruncatedSeries theta_difference_bbg(std::int64_t trunc) {
  if (trunc < 0) throw std::invalid_argument("theta_difference_bbg: trunc must be >= 0");
  TruncatedSeries s(trunc);
  // a^2+ab+b^2 >= (a^2+b^2)/2, so |a|,|b| <= ceil(sqrt(trunc))+2 covers every
  // lattice point with exponent <= trunc for both sums.
  const std::int64_t B =
      static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(trunc)))) + 2;
  for (std::int64_t a = -B; a <= B; ++a) {
    for (std::int64_t b = -B; b <= B; ++b) {
      const std::int64_t quad = a * a + a * b + b * b;
      std::int64_t e = 3 * quad;
      if (e >= 0 && e <= trunc) s.coeff(e) += 1;
      e = 3 * (quad + a + b) + 1;
      if (e >= 0 && e <= trunc) s.coeff(e) -= 1;
    }
  }
  s.label = "bbg_theta_difference";
  return s;
}

namespace {

// prod over listed offsets of (q^a; q^27)_inf, truncated.
TruncatedSeries triple_pochhammer_27(std::initializer_list<std::int64_t> offsets,
                                     std::int64_t trunc) {
  ProductSpec spec{27, {}, ""};
  for (std::int64_t a : offsets) spec.factors.push_back({Rational(a), 1, kInfinite});
  return general_product(spec, trunc);
}

}  // namespace

TruncatedSeries andrews_mod3_infinite(std::int64_t trunc) {
  TruncatedSeries t1 = triple_pochhammer_27({12, 15, 27}, trunc);
  TruncatedSeries t2 = triple_pochhammer_27({6, 21, 27}, trunc);
  TruncatedSeries t3 = triple_pochhammer_27({3, 24, 27}, trunc);
  t2.shift_up(1);
  t3.shift_up(2);
  t1 -= t2;
  t1 -= t3;
  t1.label = "andrews_mod3_numerator";
  return t1;
}

TruncatedSeries kane_square_numerator(std::int64_t trunc) {
  TruncatedSeries s = TruncatedSeries::one(trunc);
  for (std::int64_t k = 1; k <= trunc; ++k) {
    s.mul_one_minus_qk(k);
    s.mul_one_minus_qk(k);
  }
  for (std::int64_t k = 3; k <= trunc; k += 3) s.div_one_minus_qk(k);
  s.label = "kane_square_numerator";
  return s;
}

TruncatedSeries qbinomial(std::int64_t A, std::int64_t B, std::optional<std::int64_t> trunc) {
  if (A < 0) throw std::invalid_argument("qbinomial: A must be >= 0");
  if (B < 0 || B > A) {
    TruncatedSeries zero(trunc.value_or(0));
    return zero;
  }
  const std::int64_t degree = B * (A - B);
  TruncatedSeries s = TruncatedSeries::one(degree);
  // [A choose B]_q = prod_{i=1}^{B} (1 - q^{A-B+i})/(1 - q^i). Numerator
  // binomials with exponent beyond the buffer act as the identity on the
  // truncated ring, and the end result is a polynomial of exactly this degree.
  for (std::int64_t i = 1; i <= B; ++i) {
    if (A - B + i <= degree) s.mul_one_minus_qk(A - B + i);
    s.div_one_minus_qk(i);
  }
  s.set_exact_degree(degree);
  if (trunc && *trunc != degree) {
    if (*trunc < degree) return s.truncated(*trunc);
    TruncatedSeries wide(*trunc);
    for (std::int64_t m = 0; m <= degree; ++m) wide.coeff(m) = s.coeff(m);
    wide.set_exact_degree(degree);
    return wide;
  }
  return s;
}

TruncatedSeries bressoud_sum(std::int64_t M, std::int64_t N, std::int64_t K,
                             std::int64_t alphaK, std::int64_t betaK) {
  if (M < 0 || N < 0) throw std::invalid_argument("bressoud_sum: M, N must be >= 0");
  if (K < 1) throw std::invalid_argument("bressoud_sum: K must be positive");
  if (alphaK <= 0 || betaK <= 0)
    throw std::invalid_argument("bressoud_sum: alpha and beta must be positive");

  // Contributing j satisfy 0 <= M + Kj <= M + N.
  const std::int64_t j_lo = -(M / K);
  const std::int64_t j_hi = N / K;

  std::int64_t max_needed = 0;
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const std::int64_t twice = j * ((alphaK + betaK) * j + (alphaK - betaK));
    if (twice % 2 != 0)
      throw std::invalid_argument("bressoud_sum: non-integral exponent for contributing j");
    const std::int64_t e = twice / 2;
    if (e < 0) throw std::invalid_argument("bressoud_sum: negative exponent for contributing j");
    const std::int64_t b = M + K * j;
    max_needed = std::max(max_needed, e + b * (M + N - b));
  }

  TruncatedSeries acc(max_needed);
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const std::int64_t e = j * ((alphaK + betaK) * j + (alphaK - betaK)) / 2;
    TruncatedSeries term = qbinomial(M + N, M + K * j, max_needed);
    term.shift_up(e);
    if (((j % 2) + 2) % 2 == 1) term.negate();
    acc += term;
  }
  acc.mark_exact();
  return acc;
}

std::vector<TruncatedSeries> residue_decompose(const TruncatedSeries& s, std::int64_t K) {
  if (K < 1) throw std::invalid_argument("residue_decompose: K must be positive");
  if (s.trunc() < K - 1)
    throw std::invalid_argument("residue_decompose: truncation too short for K components");
  std::vector<TruncatedSeries> out;
  out.reserve(static_cast<std::size_t>(K));
  for (std::int64_t r = 0; r < K; ++r) {
    const std::int64_t t = (s.trunc() - r) / K;
    TruncatedSeries comp(t);
    for (std::int64_t j = 0; j <= t; ++j) comp.coeff(j) = s.coeff(j * K + r);
    out.push_back(std::move(comp));
  }
  return out;
}

ProductSpec borwein_spec(std::int64_t n, int delta) {
  ProductSpec spec{3,
                   {{Rational(1), delta, n}, {Rational(2), delta, n}},
                   "borwein_n" + std::to_string(n) + "_d" + std::to_string(delta)};
  return spec;
}

ProductSpec borwein_infinite_spec(int delta) {
  ProductSpec spec{3,
                   {{Rational(1), delta, kInfinite}, {Rational(2), delta, kInfinite}},
                   "borwein_inf_d" + std::to_string(delta)};
  return spec;
}

ProductSpec mod_family_spec(std::int64_t K, std::int64_t n, int delta) {
  ProductSpec spec{K, {}, "mod" + std::to_string(K) + "_n" + std::to_string(n) + "_d" +
                              std::to_string(delta)};
  for (std::int64_t a = 1; a < K; ++a) spec.factors.push_back({Rational(a), delta, n});
  return spec;
}

ProductSpec mod_family_infinite_spec(std::int64_t K, int delta) {
  ProductSpec spec{K, {}, "mod" + std::to_string(K) + "_inf_d" + std::to_string(delta)};
  for (std::int64_t a = 1; a < K; ++a) spec.factors.push_back({Rational(a), delta, kInfinite});
  return spec;
}

}  // namespace borwein
