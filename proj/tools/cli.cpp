#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "analysis_document.hpp"
#include "ucf/conjectures.hpp"
#include "ucf/constructions.hpp"
#include "ucf/dual_analysis.hpp"
#include "ucf/family_io.hpp"
#include "ucf/search.hpp"

namespace ucf::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SetFamily load(const std::string& path, std::istream& in) {
  if (path == "-") return read_family(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_family(file);
}

int verdict(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << '\n';
  return value ? kSuccess : kPropertyFalse;
}

// --- build ------------------------------------------------------------------

struct BuildArgs {
  std::string id;
  std::optional<int> k;
  std::optional<int> n;
  std::string out_path;
};

int do_build(const BuildArgs& a, std::ostream& out) {
  const auto id = parse_construction_id(a.id);
  if (!id) throw UsageError("unknown construction '" + a.id + "'");
  ConstructionSpec spec{*id};
  if (is_parametric(*id)) {
    if (!a.k || !a.n) throw UsageError("construction '" + a.id + "' needs --k and --n");
    spec.k = *a.k;
    spec.n = *a.n;
  }
  const SetFamily family = build(spec);
  if (a.out_path.empty()) {
    write_family(out, family);
    return kSuccess;
  }
  std::ofstream file(a.out_path);
  if (!file) throw UsageError("cannot write '" + a.out_path + "'");
  write_family(file, family);
  return kSuccess;
}

// --- check / analyze / dual / bounds -----------------------------------------

struct CheckArgs {
  std::string file;
  bool union_closed = false;
  bool twin_free = false;
};

int do_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
  const SetFamily family = load(a.file, in);
  bool ok = true;
  if (a.union_closed) {
    const bool v = is_union_closed(family);
    out << "union_closed " << (v ? "true" : "false") << '\n';
    ok = ok && v;
  }
  if (a.twin_free) {
    const bool v = is_twin_free(family);
    out << "twin_free " << (v ? "true" : "false") << '\n';
    ok = ok && v;
  }
  return ok ? kSuccess : kPropertyFalse;
}

int do_analyze(const std::string& path, bool json, std::istream& in, std::ostream& out) {
  const AnalysisDocument doc = make_analysis_document(load(path, in));
  if (json) {
    out << to_json(doc).dump(2) << '\n';
  } else {
    out << format_analysis_table(doc);
  }
  return kSuccess;
}

int do_bounds(const std::string& path, std::istream& in, std::ostream& out) {
  const BoundReport r = check_theorem5(load(path, in));
  out << "k " << r.k << "\nn " << r.n << "\nf " << r.f << '\n';
  const auto line = [&out](const char* label, bool applicable, bool holds, const std::string& bound) {
    out << label << ' ';
    if (!applicable) {
      out << "inapplicable\n";
    } else {
      out << (holds ? "holds" : "FAILS") << " (f >= " << bound << ")\n";
    }
  };
  line("statement1", r.stmt1_applicable, r.stmt1_holds, std::to_string(r.k));
  line("statement2", r.stmt2_applicable, r.stmt2_holds, std::to_string(r.k - 1));
  line("statement3", true, r.stmt3_holds, std::to_string(r.stmt3_bound));
  return r.all_hold() ? kSuccess : kPropertyFalse;
}

// --- inequality ---------------------------------------------------------------

struct InequalityArgs {
  int k = 0;
  std::optional<int> n;
  std::optional<int> cap;
  bool verbose = false;
};

int do_inequality(const InequalityArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n.has_value() == a.cap.has_value()) throw UsageError("give exactly one of --n and --cap");
  if (a.n) {
    const Stmt2Sides sides = stmt2_sides(a.k, *a.n);
    if (a.verbose) out << "lhs " << sides.lhs << "\nrhs " << sides.rhs << '\n';
    return verdict(out, sides.lhs > sides.rhs);
  }
  try {
    out << stmt2_holds_from(a.k, *a.cap) << '\n';
    return kSuccess;
  } catch (const Error& e) {
    if (e.code() != Errc::NotFound) throw;
    err << e.what() << '\n';
    return kPropertyFalse;
  }
}

// --- search / audit -------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  int k_min = 1;
  bool exact = false;
  bool empty = false;
  unsigned jobs = 1;
  std::string strategy = "auto";
  bool json = false;
};

std::vector<std::vector<Element>> as_lists(const SetFamily& f) {
  std::vector<std::vector<Element>> out;
  for (MemberSet s : f) out.push_back(s.elements());
  return out;
}

int do_search(const SearchArgs& a, std::ostream& out) {
  EnumFilter filter;
  filter.n = a.n;
  filter.k_min = a.k_min;
  filter.bound = a.exact ? SizeBound::Exact : SizeBound::AtMost;
  filter.allow_empty_set = a.empty;
  if (a.strategy == "filter") {
    filter.strategy = EnumStrategy::SubfamilyFilter;
  } else if (a.strategy == "closure") {
    filter.strategy = EnumStrategy::GeneratorClosure;
  } else {
    filter.strategy = a.n <= kMaxFilterGround ? EnumStrategy::SubfamilyFilter : EnumStrategy::GeneratorClosure;
  }

  const SearchReport report = min_f_search(filter, std::max(1U, a.jobs));
  if (a.json) {
    nlohmann::ordered_json j;
    j["total_families"] = report.total_families;
    j["min_f"] = report.min_f ? nlohmann::ordered_json(*report.min_f) : nlohmann::ordered_json(nullptr);
    auto& table = j["min_f_by_kn"] = nlohmann::ordered_json::array();
    for (const auto& [kn, f] : report.min_f_by_kn) table.push_back({{"k", kn.first}, {"n", kn.second}, {"min_f", f}});
    auto& wit = j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses) wit.push_back(as_lists(w));
    out << j.dump(2) << '\n';
    return kSuccess;
  }

  out << "families " << report.total_families << '\n';
  out << "min_f " << (report.min_f ? std::to_string(*report.min_f) : "none") << '\n';
  out << "k n min_f\n";
  for (const auto& [kn, f] : report.min_f_by_kn) out << kn.first << ' ' << kn.second << ' ' << f << '\n';
  out << "witnesses " << report.witnesses.size() << '\n';
  for (const auto& w : report.witnesses) {
    const char* sep = "";
    for (MemberSet s : w) {
      out << sep << format_set(s);
      sep = " ";
    }
    out << '\n';
  }
  return kSuccess;
}

int do_audit(int n, const std::string& id_text, std::ostream& out) {
  const auto id = parse_conjecture(id_text);
  if (!id) throw UsageError("unknown conjecture '" + id_text + "'");
  return verdict(out, universal_audit(n, *id));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, check and search union-closed set families", "ucf"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "Write a named construction as a family document");
  build_cmd->add_option("id", build_args.id, "p83 p94bar q95 r106 pnk rnkbar pplus2kn pplusk1kn smallk")->required();
  build_cmd->add_option("--k", build_args.k, "Smallest set size parameter");
  build_cmd->add_option("--n", build_args.n, "Largest set size parameter");
  build_cmd->add_option("--out", build_args.out_path, "Output file (default stdout)");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Exit 0 iff every requested property holds");
  check_cmd->add_option("file", check_args.file, "Family document, '-' for stdin")->required();
  check_cmd->add_flag("--union-closed", check_args.union_closed);
  check_cmd->add_flag("--twin-free", check_args.twin_free);

  std::string analyze_file;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Abundance report");
  analyze_cmd->add_option("file", analyze_file, "Family document, '-' for stdin")->required();
  analyze_cmd->add_flag("--json", analyze_json, "Emit the JSON analysis document");

  std::string dual_file;
  auto* dual_cmd = app.add_subcommand("dual", "Write the dual (complement) family");
  dual_cmd->add_option("file", dual_file, "Family document, '-' for stdin")->required();

  std::string bounds_file;
  auto* bounds_cmd = app.add_subcommand("bounds", "Check the lower bounds on the number of abundant elements");
  bounds_cmd->add_option("file", bounds_file, "Family document, '-' for stdin")->required();

  InequalityArgs ineq_args;
  auto* ineq_cmd = app.add_subcommand("inequality", "Evaluate the two-abundant-element binomial inequality");
  ineq_cmd->add_option("--k", ineq_args.k)->required();
  ineq_cmd->add_option("--n", ineq_args.n, "Evaluate at one n");
  ineq_cmd->add_option("--cap", ineq_args.cap, "Find the threshold n0 <= cap");
  ineq_cmd->add_flag("--verbose", ineq_args.verbose, "Also print both sides");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive minimum-f search");
  search_cmd->add_option("--n", search_args.n, "Largest set size bound")->required();
  search_cmd->add_option("--k-min", search_args.k_min, "Minimum non-empty set size");
  search_cmd->add_flag("--exact", search_args.exact, "Largest set size exactly n");
  search_cmd->add_flag("--empty", search_args.empty, "Also include families containing the empty set");
  search_cmd->add_option("--jobs", search_args.jobs, "Worker threads");
  search_cmd->add_option("--strategy", search_args.strategy, "auto, filter or closure")
      ->check(CLI::IsMember({"auto", "filter", "closure"}));
  search_cmd->add_flag("--json", search_args.json);

  int audit_n = 0;
  std::string audit_id;
  auto* audit_cmd = app.add_subcommand("audit", "Check a conjecture on every family with largest set <= n");
  audit_cmd->add_option("--n", audit_n)->required();
  audit_cmd->add_option("--conjecture", audit_id,
                        "frankl poonen3 poonen4 cuihu2 frankl-a poonen3-b poonen4-c cuihu2-d")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (build_cmd->parsed()) return do_build(build_args, out);
    if (check_cmd->parsed()) return do_check(check_args, in, out);
    if (analyze_cmd->parsed()) return do_analyze(analyze_file, analyze_json, in, out);
    if (dual_cmd->parsed()) {
      write_family(out, dual(load(dual_file, in)));
      return kSuccess;
    }
    if (bounds_cmd->parsed()) return do_bounds(bounds_file, in, out);
    if (ineq_cmd->parsed()) return do_inequality(ineq_args, out, err);
    if (search_cmd->parsed()) return do_search(search_args, out);
    if (audit_cmd->parsed()) return do_audit(audit_n, audit_id, out);
  } catch (const UsageError& e) {
    err << "ucf: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "ucf: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ucf::cli
