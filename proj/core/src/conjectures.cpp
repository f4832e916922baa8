#include "ucf/conjectures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "ucf/search.hpp"

namespace ucf {
namespace {

void require_strict_class(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "the family has no sets");
  if (!is_union_closed(family)) throw Error(Errc::NotUnionClosed, "the family is not union-closed");
  if (family.contains_empty_set()) throw Error(Errc::ContainsEmptySet, "the family contains the empty set");
}

bool in_every_set(const SetFamily& family, Element x, bool skip_empty) {
  return std::all_of(family.begin(), family.end(),
                     [=](MemberSet s) { return (skip_empty && s.empty()) || s.contains(x); });
}

/// Number of subsets of M containing one fixed element of M.
std::size_t half_powerset(MemberSet top) {
  return std::size_t{1} << (top.size() - 1);
}

bool is_empty_only(const SetFamily& family) {
  return family.size() == 1 && family.contains_empty_set();
}

void require_precondition(bool ok, const char* what) {
  if (!ok) throw Error(Errc::PreconditionViolated, what);
}

}  // namespace

std::string_view name(Conjecture id) noexcept {
  switch (id) {
    case Conjecture::Frankl: return "frankl";
    case Conjecture::Poonen3: return "poonen3";
    case Conjecture::Poonen4: return "poonen4";
    case Conjecture::CuiHu2: return "cuihu2";
    case Conjecture::FranklA: return "frankl-a";
    case Conjecture::Poonen3B: return "poonen3-b";
    case Conjecture::Poonen4C: return "poonen4-c";
    case Conjecture::CuiHu2D: return "cuihu2-d";
  }
  return "?";
}

std::optional<Conjecture> parse_conjecture(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '-' || c == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  static constexpr std::array<std::pair<std::string_view, Conjecture>, 8> kNames{{
      {"frankl", Conjecture::Frankl},
      {"poonen3", Conjecture::Poonen3},
      {"poonen4", Conjecture::Poonen4},
      {"cuihu2", Conjecture::CuiHu2},
      {"frankla", Conjecture::FranklA},
      {"poonen3b", Conjecture::Poonen3B},
      {"poonen4c", Conjecture::Poonen4C},
      {"cuihu2d", Conjecture::CuiHu2D},
  }};
  for (const auto& [k, id] : kNames) {
    if (k == key) return id;
  }
  return std::nullopt;
}

bool is_original_form(Conjecture id) noexcept {
  return id == Conjecture::FranklA || id == Conjecture::Poonen3B || id == Conjecture::Poonen4C ||
         id == Conjecture::CuiHu2D;
}

Verdict frankl_holds(const SetFamily& family) {
  require_strict_class(family);
  return {analyze(family).f >= 1, true};
}

Verdict poonen3_holds(const SetFamily& family) {
  require_strict_class(family);
  const AbundanceReport r = analyze(family);
  if (r.f != 1) return {true, false};
  return {in_every_set(family, r.abundant.front(), false), true};
}

Verdict poonen4_holds(const SetFamily& family) {
  require_strict_class(family);
  const AbundanceReport r = analyze(family);
  if (r.f != 1 || !is_twin_free(family)) return {true, false};
  const Element x = r.abundant.front();
  // Distinct subsets of M that all contain x fill the whole half of 2^M
  // exactly when there are 2^(|M|-1) of them.
  const bool is_star = in_every_set(family, x, false) && family.size() == half_powerset(family.union_of_all());
  return {is_star, true};
}

Verdict cuihu2_holds(const SetFamily& family) {
  require_strict_class(family);
  const AbundanceReport r = analyze(family);
  if (r.k < 2) return {true, false};
  return {r.f >= 2, true};
}

Verdict original_holds(Conjecture id, const SetFamily& family) {
  if (!is_original_form(id)) throw Error(Errc::BadParams, "not an original-form conjecture");
  if (family.empty()) throw Error(Errc::EmptyFamily, "the family has no sets");
  if (!is_union_closed(family)) throw Error(Errc::NotUnionClosed, "the family is not union-closed");
  if ((id == Conjecture::FranklA || id == Conjecture::CuiHu2D) && is_empty_only(family)) {
    throw Error(Errc::IllegalInput, "the family {∅} is excluded");
  }

  const AbundanceReport r = analyze(family);
  const auto& half = r.at_least_half;
  switch (id) {
    case Conjecture::FranklA:
      return {!half.empty(), true};
    case Conjecture::Poonen3B:
      if (half.size() != 1) return {true, false};
      return {in_every_set(family, half.front(), true), true};
    case Conjecture::Poonen4C: {
      // The separation hypothesis ranges over pairs of M, i.e. twin-freeness.
      if (half.size() != 1 || !is_twin_free(family)) return {true, false};
      const Element x = half.front();
      const MemberSet top = family.union_of_all();
      if (top.size() == 1) {
        // F is {{x}} or {∅, {x}}; both are the only union-closed families on M = {x}.
        return {top == MemberSet().with(x), true};
      }
      const bool is_star = family.contains_empty_set() && in_every_set(family, x, true) &&
                           family.size() == half_powerset(top) + 1;
      return {is_star, true};
    }
    case Conjecture::CuiHu2D:
      if (r.k < 2) return {true, false};
      return {half.size() >= 2, true};
    default:
      break;
  }
  throw Error(Errc::BadParams, "not an original-form conjecture");
}

Verdict evaluate(Conjecture id, const SetFamily& family) {
  switch (id) {
    case Conjecture::Frankl: return frankl_holds(family);
    case Conjecture::Poonen3: return poonen3_holds(family);
    case Conjecture::Poonen4: return poonen4_holds(family);
    case Conjecture::CuiHu2: return cuihu2_holds(family);
    default: return original_holds(id, family);
  }
}

SetFamily strip_empty(const SetFamily& family) {
  std::vector<MemberSet> out;
  for (MemberSet s : family) {
    if (!s.empty()) out.push_back(s);
  }
  return make_family_unchecked(family.ground(), std::move(out));
}

SetFamily add_empty(const SetFamily& family) {
  if (family.contains_empty_set()) throw Error(Errc::AlreadyPresent, "the family already contains ∅");
  std::vector<MemberSet> out(family.begin(), family.end());
  out.emplace_back();
  return make_family_unchecked(family.ground(), std::move(out));
}

bool empty_set_transfer_holds(const SetFamily& family) {
  const SetFamily without = strip_empty(family);
  if (without.empty()) return true;
  const SetFamily with = add_empty(without);
  const auto abundant = analyze(without).abundant;
  const auto half = analyze(with).at_least_half;
  return std::includes(half.begin(), half.end(), abundant.begin(), abundant.end());
}

SetFamily replace_min_set_without(const SetFamily& family, Element x) {
  require_precondition(!family.empty(), "the family has no sets");
  require_precondition(is_union_closed(family), "the family is not union-closed");
  require_precondition(!family.contains_empty_set(), "the family contains the empty set");
  require_precondition(x >= 0 && x < family.ground_size() && in_every_set(family, x, false),
                       "the element is not in every set");
  const MemberSet smallest = family[0];
  require_precondition(smallest.size() >= 2, "the smallest set has fewer than 2 elements");

  std::vector<MemberSet> out(family.begin(), family.end());
  out.front() = smallest.without(x);
  return make_family_unchecked(family.ground(), std::move(out));
}

SetFamily saturate_element(const SetFamily& family, Element y) {
  require_precondition(!family.empty(), "the family has no sets");
  require_precondition(is_union_closed(family), "the family is not union-closed");
  require_precondition(!family.contains_empty_set(), "the family contains the empty set");
  require_precondition(y >= 0 && y < family.ground_size() && family.union_of_all().contains(y),
                       "the element is not in the largest set");

  std::vector<MemberSet> out;
  out.reserve(family.size());
  for (MemberSet s : family) {
    const MemberSet grown = s.with(y);
    out.push_back(family.contains(grown) ? s : grown);
  }
  return make_family_unchecked(family.ground(), std::move(out));
}

SetFamily add_singleton(const SetFamily& family, Element y) {
  if (y < 0 || y >= family.ground_size()) throw Error(Errc::MaskOverflow, "element outside the ground set");
  const MemberSet single = MemberSet().with(y);
  if (family.contains(single)) throw Error(Errc::AlreadyPresent, "{y} is already a member");
  std::vector<MemberSet> out(family.begin(), family.end());
  out.push_back(single);
  SetFamily result = make_family_unchecked(family.ground(), std::move(out));
  if (!is_union_closed(result)) throw Error(Errc::NotClosedAfterAdd, "adding {y} breaks union-closure");
  return result;
}

bool universal_audit(int n, Conjecture id) {
  if (n < 1 || n > kMaxFilterGround) {
    throw Error(Errc::BadParams, "audits are exhaustive only for 1 <= n <= 4");
  }
  EnumFilter filter;
  filter.n = n;
  filter.allow_empty_set = is_original_form(id);
  const bool skips_empty_only = id == Conjecture::FranklA || id == Conjecture::CuiHu2D;

  bool ok = true;
  for_each_ucf(filter, [&](const SetFamily& f) {
    if (!ok || (skips_empty_only && is_empty_only(f))) return;
    ok = evaluate(id, f).holds;
  });
  return ok;
}

}  // namespace ucf
