// SPDX-License-Identifier: Apache-2.0
#include "borwein/io.hpp"

#include <ostream>

namespace borwein {

void write_csv(const TruncatedSeries& s, std::ostream& out) {
  out << "m,coefficient\n";
  for (std::int64_t m = 0; m <= s.trunc(); ++m)
    out << m << ',' << s.coeff(m).get_str() << '\n';
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::int64_t m = 0; m <= s.trunc(); ++m) coeffs.push_back(s.coeff(m).get_str());
  nlohmann::json j{{"label", s.label}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
  if (s.exact_degree())
    j["exact_degree"] = *s.exact_degree();
  else
    j["exact_degree"] = nullptr;
  return j;
}

nlohmann::json violation_to_json(const Violation& v) {
  return {{"m", v.index},
          {"residue", v.residue},
          {"coeff", v.coeff.get_str()},
          {"expected", to_string(v.expected)}};
}

nlohmann::json scan_report_to_json(const ScanReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : e.violations) violations.push_back(violation_to_json(v));
    entries.push_back({{"n", e.n},
                       {"checked_range", {e.checked_lo, e.checked_hi}},
                       {"violations", std::move(violations)}});
  }
  return {{"family", report.family}, {"entries", std::move(entries)}};
}

}  // namespace borwein
