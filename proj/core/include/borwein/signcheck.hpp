// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borwein/series.hpp"

namespace borwein {

enum class SignExpectation { kNonNeg, kNonPos, kZero, kFree };

const char* to_string(SignExpectation e);

/// Sign constraint on one residue class, valid on an inclusive range of
/// absolute coefficient indices. A residue may carry several segments
/// (the mod-4 conjecture flips sign across the middle of the polynomial).
struct SignSegment {
  std::int64_t lo{0};
  std::int64_t hi{0};
  SignExpectation expected{SignExpectation::kFree};
};

struct SignRule {
  std::int64_t modulus{1};
  std::vector<std::vector<SignSegment>> residue_segments;  // size == modulus
  /// Inclusive index interval to check; nullopt means the full truncation.
  std::optional<std::pair<std::int64_t, std::int64_t>> m_range;
};

/// A coefficient that strictly contradicts its expectation. Zero never
/// violates kNonNeg/kNonPos; any nonzero violates kZero.
struct Violation {
  std::int64_t index{0};
  std::int64_t residue{0};
  BigInt coeff;
  SignExpectation expected{SignExpectation::kFree};
};

/// Violations sorted by index; empty iff the pattern holds on the range.
/// Throws if the requested range exceeds the truncation.
std::vector<Violation> verify_pattern(const TruncatedSeries& s, const SignRule& rule);

/// The +-- (K=3) and +---- (K=5) rules over the full index range.
SignRule borwein_rule(int K);

/// Mod-4 rule for (q;q)_{4n}^delta/(q^4;q^4)_n^delta: residues 0 and 2 are
/// constrained everywhere, residues 1 and 3 on their conjectured half ranges
/// plus the mirrored halves induced by (skew-)palindromy.
SignRule mod4_rule(std::int64_t n, int delta);

/// Mod-7 rule: residue 0 nonnegative, residues 1,3,4,6 nonpositive,
/// residues 2 and 5 free (they change sign in the interior).
SignRule mod7_rule();

/// First index j >= 0 with coeff(jK + residue) < 0 (or > 0 when
/// negative_first), scanning the stored range. nullopt if no sign change.
std::optional<std::int64_t> first_sign_change(const TruncatedSeries& s, std::int64_t K,
                                              std::int64_t residue, bool negative_first = false);

struct ScanEntry {
  std::int64_t n{0};
  std::int64_t checked_lo{0};
  std::int64_t checked_hi{0};
  std::vector<Violation> violations;
};

struct ScanReport {
  std::string family;
  std::vector<ScanEntry> entries;
  bool clean() const;
};

/// Runs verify_pattern over a family of series indexed by n, in parallel,
/// with deterministic (n, m)-ordered output. m_limit truncates the checked
/// range for the large-n regime.
ScanReport scan_family(const std::function<TruncatedSeries(std::int64_t)>& make_series,
                       const std::function<SignRule(std::int64_t)>& make_rule,
                       std::int64_t n_lo, std::int64_t n_hi,
                       std::optional<std::int64_t> m_limit = {},
                       std::string family_name = {});

}  // namespace borwein
