// SPDX-License-Identifier: Apache-2.0
#include "borwein/signcheck.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "borwein/parallel.hpp"

namespace borwein {

namespace {
int sign_of(const BigInt& c) { return mpz_sgn(c.get_mpz_t()); }
}  // namespace

const char* to_string(SignExpectation e) {
  switch (e) {
    case SignExpectation::kNonNeg: return "nonneg";
    case SignExpectation::kNonPos: return "nonpos";
    case SignExpectation::kZero: return "zero";
    case SignExpectation::kFree: return "free";
  }
  return "?";
}

std::vector<Violation> verify_pattern(const TruncatedSeries& s, const SignRule& rule) {
  if (rule.modulus < 1 || rule.residue_segments.size() != static_cast<std::size_t>(rule.modulus))
    throw std::invalid_argument("verify_pattern: rule must carry one segment list per residue");
  std::int64_t lo = 0, hi = s.trunc();
  if (rule.m_range) {
    lo = rule.m_range->first;
    hi = rule.m_range->second;
    if (lo < 0 || hi > s.trunc() || lo > hi)
      throw std::invalid_argument("verify_pattern: m_range exceeds the series truncation");
  }
  std::vector<Violation> out;
  for (std::int64_t m = lo; m <= hi; ++m) {
    const BigInt& c = s.coeff(m);
    const int sgn = sign_of(c);
    if (sgn == 0) continue;  // zero counts as both signs
    const std::int64_t r = m % rule.modulus;
    for (const auto& seg : rule.residue_segments[static_cast<std::size_t>(r)]) {
      if (m < seg.lo || m > seg.hi) continue;
      const bool bad = (seg.expected == SignExpectation::kNonNeg && sgn < 0) ||
                       (seg.expected == SignExpectation::kNonPos && sgn > 0) ||
                       (seg.expected == SignExpectation::kZero);
      if (bad) {
        out.push_back({m, r, c, seg.expected});
        break;  // one report per index is enough
      }
    }
  }
  return out;
}

SignRule borwein_rule(int K) {
  if (K != 3 && K != 5) throw std::invalid_argument("borwein_rule: K must be 3 or 5");
  SignRule rule;
  rule.modulus = K;
  rule.residue_segments.assign(static_cast<std::size_t>(K), {});
  const std::int64_t whole = std::numeric_limits<std::int64_t>::max();
  rule.residue_segments[0] = {{0, whole, SignExpectation::kNonNeg}};
  for (int r = 1; r < K; ++r)
    rule.residue_segments[static_cast<std::size_t>(r)] = {{0, whole, SignExpectation::kNonPos}};
  return rule;
}

SignRule mod4_rule(std::int64_t n, int delta) {
  if (n < 1 || delta < 1 || delta > 3) throw std::invalid_argument("mod4_rule: bad parameters");
  const std::int64_t D = 6 * delta * n * n;
  const bool even_n = (n % 2 == 0);
  SignRule rule;
  rule.modulus = 4;
  rule.residue_segments.assign(4, {});
  rule.residue_segments[0] = {{0, D, SignExpectation::kNonNeg}};
  rule.residue_segments[2] = {{0, D, SignExpectation::kNonPos}};

  // Conjectured half ranges, written as bounds on the 4m+r index itself.
  const std::int64_t hi1 =
      even_n ? (6 * delta * n * n - 8) / 2 + 1 : (6 * delta * n * n - 8 + 2 * delta) / 2 + 1;
  const std::int64_t chi3 = (delta == 3) ? 1 : 0;
  const std::int64_t hi3 = even_n ? (6 * delta * n * n - 8) / 2 + 3
                                  : (6 * delta * n * n - 6 * delta + 8 * chi3) / 2 + 3;
  rule.residue_segments[1] = {{0, hi1, SignExpectation::kNonPos}};
  rule.residue_segments[3] = {{0, hi3, SignExpectation::kNonNeg}};

  // (Skew-)palindromy c_m = (-1)^{delta n} c_{D-m} mirrors each half range
  // onto the top of the polynomial, flipping the sign when delta*n is odd.
  const bool flip = ((delta * n) % 2 != 0);
  auto mirrored = [&](const SignSegment& seg) {
    SignExpectation e = seg.expected;
    if (flip)
      e = (e == SignExpectation::kNonNeg) ? SignExpectation::kNonPos : SignExpectation::kNonNeg;
    return SignSegment{D - seg.hi, D - seg.lo, e};
  };
  for (int r : {1, 3}) {
    const SignSegment low = rule.residue_segments[static_cast<std::size_t>(r)][0];
    const std::int64_t ur = ((D - r) % 4 + 4) % 4;  // residue class of mirrored indices
    rule.residue_segments[static_cast<std::size_t>(ur)].push_back(mirrored(low));
  }
  return rule;
}

SignRule mod7_rule() {
  SignRule rule;
  rule.modulus = 7;
  rule.residue_segments.assign(7, {});
  const std::int64_t whole = std::numeric_limits<std::int64_t>::max();
  rule.residue_segments[0] = {{0, whole, SignExpectation::kNonNeg}};
  for (int r : {1, 3, 4, 6})
    rule.residue_segments[static_cast<std::size_t>(r)] = {{0, whole, SignExpectation::kNonPos}};
  // residues 2 and 5 change sign in the interior and stay free here
  return rule;
}

std::optional<std::int64_t> first_sign_change(const TruncatedSeries& s, std::int64_t K,
                                              std::int64_t residue, bool negative_first) {
  for (std::int64_t j = 0; j * K + residue <= s.trunc(); ++j) {
    const int sgn = sign_of(s.coeff(j * K + residue));
    if ((negative_first && sgn > 0) || (!negative_first && sgn < 0)) return j;
  }
  return std::nullopt;
}

bool ScanReport::clean() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ScanEntry& e) { return e.violations.empty(); });
}

ScanReport scan_family(const std::function<TruncatedSeries(std::int64_t)>& make_series,
                       const std::function<SignRule(std::int64_t)>& make_rule,
                       std::int64_t n_lo, std::int64_t n_hi,
                       std::optional<std::int64_t> m_limit, std::string family_name) {
  if (n_lo > n_hi) throw std::invalid_argument("scan_family: empty n range");
  ScanReport report;
  report.family = std::move(family_name);
  report.entries.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(n_lo, n_hi + 1, [&](std::int64_t n) {
    TruncatedSeries s = make_series(n);
    SignRule rule = make_rule(n);
    std::int64_t hi = s.trunc();
    if (m_limit) hi = std::min(hi, *m_limit);
    if (rule.m_range)
      rule.m_range = {std::max<std::int64_t>(0, rule.m_range->first),
                      std::min(hi, rule.m_range->second)};
    else
      rule.m_range = {0, hi};
    // Segments live in absolute index space already; clip to what exists.
    for (auto& segs : rule.residue_segments)
      for (auto& seg : segs) seg.hi = std::min(seg.hi, s.trunc());
    ScanEntry& entry = report.entries[static_cast<std::size_t>(n - n_lo)];
    entry.n = n;
    entry.checked_lo = rule.m_range->first;
    entry.checked_hi = rule.m_range->second;
    entry.violations = verify_pattern(s, rule);
  });
  return report;
}

}  // namespace borwein
