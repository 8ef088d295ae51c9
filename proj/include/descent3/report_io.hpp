#pragma once

#include <string>

#include "descent3/report.hpp"

namespace descent3 {

/// One JSON object whose keys are the AnalysisReport field names. Big integers are
/// decimal strings, rationals "p/q", forms "[a,b,c,d]". indent < 0 gives one line.
std::string report_to_json(const AnalysisReport& r, int indent = -1);
/// Inverse of report_to_json. Throws ParseError.
AnalysisReport report_from_json(const std::string& text);

std::string report_csv_header();
std::string report_to_csv(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

std::string monic_status_name(MonicStatus s);
std::string tri_name(Tri t);

}  // namespace descent3
