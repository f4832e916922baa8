#include "analysis_document.hpp"

#include <iomanip>
#include <sstream>

namespace ucf::cli {
namespace {

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

AnalysisDocument make_analysis_document(const SetFamily& family) {
  return {analyze(family), is_union_closed(family), is_twin_free(family)};
}

nlohmann::ordered_json to_json(const AnalysisDocument& doc) {
  const AbundanceReport& r = doc.report;
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["n"] = r.n_max;
  j["f"] = r.f;
  j["contains_empty"] = r.contains_empty;
  j["union_closed"] = doc.union_closed;
  j["twin_free"] = doc.twin_free;
  j["abundant"] = r.abundant;
  j["at_least_half"] = r.at_least_half;
  j["frequencies"] = r.freq;
  j["strict_minority_rest"] = r.strict_minority_rest;
  return j;
}

AnalysisDocument analysis_from_json(const nlohmann::json& j) {
  try {
    AnalysisDocument doc;
    AbundanceReport& r = doc.report;
    r.m = j.at("m").get<std::size_t>();
    r.k = j.at("k").get<int>();
    r.n_max = j.at("n").get<int>();
    r.f = j.at("f").get<int>();
    r.contains_empty = j.at("contains_empty").get<bool>();
    doc.union_closed = j.at("union_closed").get<bool>();
    doc.twin_free = j.at("twin_free").get<bool>();
    r.abundant = j.at("abundant").get<std::vector<Element>>();
    r.at_least_half = j.at("at_least_half").get<std::vector<Element>>();
    r.freq = j.at("frequencies").get<std::vector<std::size_t>>();
    r.strict_minority_rest = j.at("strict_minority_rest").get<bool>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("analysis document: ") + e.what());
  }
}

AnalysisDocument parse_analysis_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("analysis document: ") + e.what());
  }
  return analysis_from_json(j);
}

std::string format_analysis_table(const AnalysisDocument& doc) {
  const AbundanceReport& r = doc.report;
  std::ostringstream out;
  out << std::boolalpha << std::left;
  const auto row = [&out](const char* key, const auto& value) { out << std::setw(22) << key << value << '\n'; };
  row("m", r.m);
  row("k", r.k);
  row("n", r.n_max);
  row("f", r.f);
  row("contains_empty", r.contains_empty);
  row("union_closed", doc.union_closed);
  row("twin_free", doc.twin_free);
  row("strict_minority_rest", r.strict_minority_rest);
  row("abundant", join(r.abundant));
  row("at_least_half", join(r.at_least_half));
  out << '\n' << std::setw(10) << "element" << "count\n";
  for (std::size_t e = 0; e < r.freq.size(); ++e) out << std::setw(10) << e << r.freq[e] << '\n';
  return out.str();
}

}  // namespace ucf::cli
