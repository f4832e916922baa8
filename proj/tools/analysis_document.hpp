#pragma once

// Machine-readable abundance report (the `analyze --json` output) and its
// reader.

#include <string>

#include "json.hpp"

#include "ucf/family.hpp"

namespace ucf::cli {

struct AnalysisDocument {
  AbundanceReport report;
  bool union_closed = false;
  bool twin_free = false;
};

AnalysisDocument make_analysis_document(const SetFamily& family);

/// Keys: m, k, n, f, contains_empty, union_closed, twin_free, abundant,
/// at_least_half, frequencies, strict_minority_rest.
nlohmann::ordered_json to_json(const AnalysisDocument& doc);

/// Throws ucf::Error(ParseError) on a missing or mistyped key.
AnalysisDocument analysis_from_json(const nlohmann::json& j);
AnalysisDocument parse_analysis_document(const std::string& text);

std::string format_analysis_table(const AnalysisDocument& doc);

}  // namespace ucf::cli
