// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "borwein/product_spec.hpp"

namespace borwein {

struct Peak {
  std::int64_t ell{0};       // candidate root-of-unity index, 1 <= ell <= K/2
  double theta{0};           // 2 pi ell / K
  double log_magnitude{0};   // log |Q_n(r e^{i theta})|
  bool dominant{false};
};

/// Candidate peaks come in conjugate pairs; only the representative with
/// positive angle is listed.
struct PeakSet {
  std::int64_t modulus{0};
  std::int64_t n{0};
  double r{0};
  std::vector<Peak> peaks;
  std::vector<std::int64_t> dominant_ells() const;
};

/// Evaluates log |Q_n| at every candidate angle 2 pi ell / K and flags the
/// dominant subset. Peaks within a factor e^{-0.01 n} of the maximum count
/// as co-dominant (heuristic threshold; the asymptotic gap is exponential).
PeakSet dominant_peaks(const ProductSpec& spec, std::int64_t n, double r);

/// Argument contribution of one factor pair (q^a, q^{K-a}; q^K)_n at the
/// peak angle theta, as a function of s = r^{Kn}:
///   -((K - 2a)/K) arctan((1-s) cot(a theta/2) / (1+s)).
double peak_argument_contribution(double alpha, std::int64_t K, double theta, double s);

/// Sum over dominant peak pairs of 2 cos(m theta_ell + sum_j arg terms); its
/// sign predicts the coefficient sign for the residue class m mod K at the
/// radius regime encoded by s = r^{Kn} in [0, 1].
double general_target(const ProductSpec& spec, std::int64_t m_residue, double s);

struct SignChangeScan {
  std::vector<double> roots;  // zeros of general_target in s, to 1e-8
  bool ambiguous{false};      // more than one root found
};

/// Scans s over a 1024-point grid and bisects each sign change.
SignChangeScan sign_change_root(const ProductSpec& spec, std::int64_t m_residue);

/// Predicted m/deg fraction of the sign change at root s0: the continuum
/// limit of the approximate saddle relation, averaged over the dominant
/// peaks. Approaches 1/2 as s0 -> 1 (the central coefficient).
double fraction_at_root(const ProductSpec& spec, double s0);

}  // namespace borwein
