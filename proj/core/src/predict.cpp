// SPDX-License-Identifier: Apache-2.0
#include "borwein/predict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "borwein/quadrature.hpp"

namespace borwein {

namespace {

// Offsets grouped into {a, K-a} orbits with a <= K/2. general_target needs
// the pairing to apply the per-pair argument formula; offsets divisible by K
// carry no argument at the peak angles and are dropped here.
struct Orbit {
  double alpha;     // representative offset in (0, K/2]
  int multiplicity; // per-side multiplicity
};

std::vector<Orbit> pair_orbits(const ProductSpec& spec) {
  spec.validate();
  const std::int64_t K = spec.modulus;
  std::map<std::int64_t, int> mult;  // reduced integer offset -> total multiplicity
  for (const auto& f : spec.factors) {
    if (!f.offset.is_integer())
      throw std::invalid_argument("predict: offsets must be integral");
    const std::int64_t a = ((f.offset.num - 1) % K + K) % K + 1;
    mult[a] += f.multiplicity;
  }
  std::vector<Orbit> orbits;
  for (auto [a, m] : mult) {
    if (m == 0) continue;
    if (a == K) continue;  // (q^K;q^K) blocks are real-positive at every peak angle
    const std::int64_t partner = K - a;
    if (a > partner) continue;  // handled from the smaller side
    const int pm = mult.count(partner) ? mult[partner] : 0;
    if (a == partner) {
      orbits.push_back({static_cast<double>(a), m});  // self-paired (K even); no arg anyway
      continue;
    }
    if (pm != m)
      throw std::invalid_argument(
          "predict: offsets must pair as (a, K-a) with equal multiplicities");
    orbits.push_back({static_cast<double>(a), m});
  }
  return orbits;
}

// Representative scale for dominance scans: interior regime with r^{Kn} = 1/2.
constexpr std::int64_t kScanN = 200;

double interior_radius(std::int64_t K, std::int64_t n) {
  return std::exp(std::log(0.5) / (static_cast<double>(K) * static_cast<double>(n)));
}

double log_magnitude_at(const ProductSpec& spec, std::int64_t n, double r, double theta) {
  const std::int64_t K = spec.modulus;
  double s = 0.0;
  for (const auto& f : spec.factors) {
    const std::int64_t a = ((f.offset.num - 1) % K + K) % K + 1;
    const std::int64_t len = (f.length == kInfinite) ? n : std::min<std::int64_t>(f.length, n);
    for (std::int64_t i = 0; i < len; ++i) {
      const double e = static_cast<double>(a + i * K);
      const double re = std::pow(r, e);
      s += f.multiplicity * 0.5 *
           std::log(1.0 - 2.0 * re * std::cos(e * theta) + re * re);
    }
  }
  return s;
}

}  // namespace

std::vector<std::int64_t> PeakSet::dominant_ells() const {
  std::vector<std::int64_t> out;
  for (const auto& p : peaks)
    if (p.dominant) out.push_back(p.ell);
  return out;
}

PeakSet dominant_peaks(const ProductSpec& spec, std::int64_t n, double r) {
  spec.validate();
  if (!(r > 0.0) || r >= 1.0) throw std::domain_error("dominant_peaks: r must be in (0, 1)");
  const std::int64_t K = spec.modulus;
  PeakSet set;
  set.modulus = K;
  set.n = n;
  set.r = r;
  double best = -std::numeric_limits<double>::infinity();
  for (std::int64_t ell = 1; ell <= K / 2; ++ell) {
    Peak p;
    p.ell = ell;
    p.theta = 2.0 * M_PI * static_cast<double>(ell) / static_cast<double>(K);
    p.log_magnitude = log_magnitude_at(spec, n, r, p.theta);
    best = std::max(best, p.log_magnitude);
    set.peaks.push_back(p);
  }
  const double tolerance = 0.01 * static_cast<double>(n);
  for (auto& p : set.peaks) p.dominant = (p.log_magnitude >= best - tolerance);
  return set;
}

double peak_argument_contribution(double alpha, std::int64_t K, double theta, double s) {
  if (s < 0.0 || s > 1.0) throw std::domain_error("peak_argument_contribution: s must be in [0, 1]");
  const double half = 0.5 * alpha * theta;
  const double sh = std::sin(half);
  if (std::abs(sh) < 1e-12)
    throw std::domain_error("peak_argument_contribution: cot pole at alpha*theta/2 = k*pi");
  const double cot = std::cos(half) / sh;
  return -(static_cast<double>(K) - 2.0 * alpha) / static_cast<double>(K) *
         std::atan((1.0 - s) * cot / (1.0 + s));
}

double general_target(const ProductSpec& spec, std::int64_t m_residue, double s) {
  const std::int64_t K = spec.modulus;
  const auto orbits = pair_orbits(spec);
  const PeakSet peaks = dominant_peaks(spec, kScanN, interior_radius(K, kScanN));
  double total = 0.0;
  for (const auto& p : peaks.peaks) {
    if (!p.dominant) continue;
    double arg = static_cast<double>(m_residue) * p.theta;
    for (const auto& orb : orbits)
      arg -= orb.multiplicity * peak_argument_contribution(orb.alpha, K, p.theta, s);
    total += 2.0 * std::cos(arg);
  }
  return total;
}

SignChangeScan sign_change_root(const ProductSpec& spec, std::int64_t m_residue) {
  SignChangeScan scan;
  constexpr int kGrid = 1024;
  double prev_s = 0.0;
  double prev_v = general_target(spec, m_residue, 0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double s = static_cast<double>(i) / kGrid;
    const double v = general_target(spec, m_residue, s);
    if (prev_v == 0.0 || prev_v * v < 0.0) {
      double lo = prev_s, hi = s, flo = prev_v;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = general_target(spec, m_residue, mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      scan.roots.push_back(0.5 * (lo + hi));
    }
    prev_s = s;
    prev_v = v;
  }
  scan.ambiguous = scan.roots.size() > 1;
  return scan;
}

double fraction_at_root(const ProductSpec& spec, double s0) {
  if (!(s0 > 0.0) || s0 >= 1.0) throw std::domain_error("fraction_at_root: s0 must be in (0, 1)");
  spec.validate();
  const std::int64_t K = spec.modulus;
  const PeakSet peaks = dominant_peaks(spec, kScanN, interior_radius(K, kScanN));

  // Offsets with their multiplicities (all of them this time; a = K included
  // since it contributes to both m and the degree).
  std::map<std::int64_t, int> mult;
  for (const auto& f : spec.factors) {
    const std::int64_t a = ((f.offset.num - 1) % K + K) % K + 1;
    mult[a] += f.multiplicity;
  }
  int mult_total = 0;
  for (auto [a, m] : mult) mult_total += m;
  if (mult_total <= 0) throw std::domain_error("fraction_at_root: degenerate spec");

  // Dominant angles, counted with both conjugates.
  struct Pair {
    double c;  // cos(theta_ell * a)
    int weight;
  };
  std::vector<Pair> pairs;
  int peak_count = 0;
  for (const auto& p : peaks.peaks) {
    if (!p.dominant) continue;
    const bool self_conjugate = (2 * p.ell == K);
    const int conj = self_conjugate ? 1 : 2;
    peak_count += conj;
    for (auto [a, m] : mult)
      pairs.push_back({std::cos(p.theta * static_cast<double>(a)), m * conj});
  }

  // g(x, c) = (x^2 - x c)/(1 - 2 x c + x^2) is the per-term saddle kernel;
  // u * g(s0^u, c) has a finite limit at u = 0 (0 for c != 1, 1/log s0 for
  // the c = 1 pole).
  const double log_s0 = std::log(s0);
  auto integrand = [&](double u) {
    double total = 0.0;
    if (u < 1e-9) {
      for (const auto& pr : pairs)
        if (pr.c > 1.0 - 1e-12) total += pr.weight / log_s0;
      return total;
    }
    const double x = std::exp(u * log_s0);
    for (const auto& pr : pairs) {
      const double denom = 1.0 - 2.0 * x * pr.c + x * x;
      total += pr.weight * u * (x * x - x * pr.c) / denom;
    }
    return total;
  };
  const double integral = adaptive_simpson(integrand, 0.0, 1.0, 1e-9);
  return 2.0 * integral / (static_cast<double>(peak_count) * static_cast<double>(mult_total));
}

}  // namespace borwein
