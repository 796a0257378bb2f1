// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "borwein/product_spec.hpp"
#include "borwein/series.hpp"

namespace borwein {

/// The Borwein polynomial power P_n^delta(q), delta in {1,2,3}.
/// Full degree is 3*delta*n^2; omitting trunc computes the whole polynomial.
TruncatedSeries borwein_poly(std::int64_t n, int delta,
                             std::optional<std::int64_t> trunc = {});

/// Exact expansion of a ProductSpec up to q^trunc. Infinite factor lengths
/// are capped at the least L whose smallest new exponent exceeds trunc.
TruncatedSeries general_product(const ProductSpec& spec, std::int64_t trunc);

/// sum q^{3(a^2+ab+b^2)} - q * sum q^{3(a^2+ab+b^2+a+b)} over integer (a,b),
/// i.e. the cubic theta difference equal to (q;q)_inf^3/(q^3;q^3)_inf.
TruncatedSeries theta_difference_bbg(std::int64_t trunc);

/// Andrews' mod-3 numerator
///   (q^12,q^15,q^27;q^27)_inf - q (q^6,q^21,q^27;q^27)_inf
///                             - q^2 (q^3,q^24,q^27;q^27)_inf,
/// which equals P_inf(q) * (q^3;q^3)_inf.
TruncatedSeries andrews_mod3_infinite(std::int64_t trunc);

/// Kane's series (q;q)_inf^2 / (q^3;q^3)_inf.
TruncatedSeries kane_square_numerator(std::int64_t trunc);

/// The alternating q-binomial sum
///   sum_j (-1)^j q^{j(K(alpha+beta)j + K(alpha-beta))/2} [M+N choose M+Kj]_q
/// with alpha = alphaK/K and beta = betaK/K. Rejects parameter choices that
/// produce non-integral exponents.
TruncatedSeries bressoud_sum(std::int64_t M, std::int64_t N, std::int64_t K,
                             std::int64_t alphaK, std::int64_t betaK);

/// Gaussian binomial [A choose B]_q; zero polynomial when B < 0 or B > A.
TruncatedSeries qbinomial(std::int64_t A, std::int64_t B,
                          std::optional<std::int64_t> trunc = {});

/// Splits s into K series, component r holding coeff(jK + r) at index j.
/// Requires s.trunc() >= K - 1 so every component owns at least one value.
std::vector<TruncatedSeries> residue_decompose(const TruncatedSeries& s,
                                               std::int64_t K);

}  // namespace borwein
