// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "borwein/series.hpp"
#include "borwein/signcheck.hpp"

namespace borwein {

/// CSV rows "m,coefficient" with decimal coefficient text.
void write_csv(const TruncatedSeries& s, std::ostream& out);

/// JSON envelope {label, trunc, exact_degree, coeffs}; coefficients are
/// decimal strings, never binary.
nlohmann::json series_to_json(const TruncatedSeries& s);

nlohmann::json violation_to_json(const Violation& v);
nlohmann::json scan_report_to_json(const ScanReport& report);

}  // namespace borwein
