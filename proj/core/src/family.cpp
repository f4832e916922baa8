#include "ucf/family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace ucf {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateSet: return "DuplicateSet";
    case Errc::MaskOverflow: return "MaskOverflow";
    case Errc::NotUnionClosed: return "NotUnionClosed";
    case Errc::NotIntersectionClosed: return "NotIntersectionClosed";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::ContainsEmptySet: return "ContainsEmptySet";
    case Errc::BadParams: return "BadParams";
    case Errc::BadMarkedSet: return "BadMarkedSet";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotACrew: return "NotACrew";
    case Errc::NotFound: return "NotFound";
    case Errc::AlreadyPresent: return "AlreadyPresent";
    case Errc::NotClosedAfterAdd: return "NotClosedAfterAdd";
    case Errc::IllegalInput: return "IllegalInput";
    case Errc::InfeasibleBound: return "InfeasibleBound";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

GroundSize::GroundSize(int n) : n_(n) {
  if (n < 1 || n > kMaxGround) {
    throw Error(Errc::BadParams, "ground size must be in [1, 64], got " + std::to_string(n));
  }
}

MemberSet MemberSet::of(std::initializer_list<Element> elements) {
  return of(std::span<const Element>(elements.begin(), elements.size()));
}

MemberSet MemberSet::of(std::span<const Element> elements) {
  Mask m = 0;
  for (Element e : elements) {
    if (e < 0 || e >= kMaxGround) {
      throw Error(Errc::MaskOverflow, "element " + std::to_string(e) + " outside [0, 64)");
    }
    m |= Mask{1} << e;
  }
  return MemberSet(m);
}

std::vector<Element> MemberSet::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

MemberSet element_range(Element first, Element last) {
  MemberSet s;
  for (Element e = first; e <= last; ++e) s = s.with(e);
  return s;
}

SetFamily::SetFamily(GroundSize ground, std::vector<MemberSet> sets)
    : SetFamily(canonicalize(std::move(sets), ground)) {}

bool SetFamily::contains(MemberSet s) const noexcept {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

MemberSet SetFamily::union_of_all() const noexcept {
  Mask m = 0;
  for (MemberSet s : sets_) m |= s.bits;
  return MemberSet(m);
}

SetFamily canonicalize(std::vector<MemberSet> sets, GroundSize ground) {
  for (MemberSet s : sets) {
    if (!ground.fits(s.bits)) {
      throw Error(Errc::MaskOverflow, "set has an element outside the ground set of size " +
                                          std::to_string(ground.value()));
    }
  }
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw Error(Errc::DuplicateSet, "the same set was supplied twice");
  }
  return make_family_unchecked(ground, std::move(sets));
}

SetFamily make_family_unchecked(GroundSize ground, std::vector<MemberSet> sets) {
  if (!std::is_sorted(sets.begin(), sets.end())) std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamily(SetFamily::Trusted{}, ground, std::move(sets));
}

bool is_union_closed(const SetFamily& family) {
  const auto sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const MemberSet u = sets[i] | sets[j];
      // Comparable sets close trivially.
      if (u == sets[i] || u == sets[j]) continue;
      if (!family.contains(u)) return false;
    }
  }
  return true;
}

bool is_intersection_closed(const SetFamily& family) {
  const auto sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const MemberSet x = sets[i] & sets[j];
      if (x == sets[i] || x == sets[j]) continue;
      if (!family.contains(x)) return false;
    }
  }
  return true;
}

SetFamily union_closure(const SetFamily& family) {
  std::vector<MemberSet> closed(family.begin(), family.end());
  std::unordered_set<Mask> seen;
  for (MemberSet s : closed) seen.insert(s.bits);
  // Every new union is combined with everything found before it, so each
  // unordered pair of the final family is visited once.
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Mask u = closed[i].bits | closed[j].bits;
      if (seen.insert(u).second) closed.emplace_back(u);
    }
  }
  return make_family_unchecked(family.ground(), std::move(closed));
}

SetFamily dual(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "dual of an empty family");
  if (!is_union_closed(family)) throw Error(Errc::NotUnionClosed, "dual needs a union-closed family");
  return dual(family, family.union_of_all());
}

SetFamily dual(const SetFamily& family, MemberSet frame) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "dual of an empty family");
  std::vector<MemberSet> out;
  out.reserve(family.size());
  for (MemberSet s : family) {
    if (!s.subset_of(frame)) throw Error(Errc::PreconditionViolated, "member set outside the dual frame");
    out.push_back(frame.without(s));
  }
  return make_family_unchecked(family.ground(), std::move(out));
}

std::vector<std::size_t> frequency(const SetFamily& family) {
  std::vector<std::size_t> count(static_cast<std::size_t>(family.ground_size()), 0);
  for (MemberSet s : family) {
    for (Mask m = s.bits; m != 0; m &= m - 1) ++count[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return count;
}

AbundanceReport analyze(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "cannot analyze an empty family");

  AbundanceReport r;
  r.m = family.size();
  r.contains_empty = family.contains_empty_set();
  r.freq = frequency(family);

  // Canonical order puts the smallest sets first and the largest last.
  const auto sets = family.sets();
  const std::size_t first_nonempty = r.contains_empty ? 1 : 0;
  r.k = first_nonempty < sets.size() ? sets[first_nonempty].size() : 0;
  r.n_max = sets.back().size();

  // An element of the support that is not abundant sits at exactly half
  // unless it is a strict minority; absent elements never reach half.
  r.strict_minority_rest = true;
  for (Element e = 0; e < family.ground_size(); ++e) {
    const std::size_t twice = 2 * r.freq[static_cast<std::size_t>(e)];
    if (twice > r.m) r.abundant.push_back(e);
    if (twice >= r.m) r.at_least_half.push_back(e);
    if (twice == r.m) r.strict_minority_rest = false;
  }
  r.f = static_cast<int>(r.abundant.size());
  return r;
}

std::vector<std::pair<Element, Element>> twins(const SetFamily& family) {
  // Partition refinement: two occurring elements are twins iff no member set
  // separates them.
  const MemberSet support = family.support();
  std::vector<Mask> classes;
  if (!support.empty()) classes.push_back(support.bits);
  std::vector<Mask> next;
  for (MemberSet s : family) {
    bool all_singletons = true;
    next.clear();
    for (Mask c : classes) {
      const Mask in = c & s.bits;
      const Mask out = c & ~s.bits;
      if (in != 0) next.push_back(in);
      if (out != 0) next.push_back(out);
    }
    classes.swap(next);
    for (Mask c : classes) all_singletons = all_singletons && std::has_single_bit(c);
    if (all_singletons) break;
  }

  std::vector<std::pair<Element, Element>> out;
  for (Mask c : classes) {
    const auto members = MemberSet(c).elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_twin_free(const SetFamily& family) { return twins(family).empty(); }

SetFamily collapse_twins(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "collapse_twins on an empty family");
  if (!is_union_closed(family)) throw Error(Errc::NotUnionClosed, "collapse_twins needs a union-closed family");
  if (family.contains_empty_set()) {
    throw Error(Errc::ContainsEmptySet, "collapse_twins needs a family without the empty set");
  }

  SetFamily current = family;
  for (auto pairs = twins(current); !pairs.empty(); pairs = twins(current)) {
    const Element drop = pairs.front().second;
    std::vector<MemberSet> next;
    next.reserve(current.size());
    for (MemberSet s : current) next.push_back(s.without(drop));
    current = make_family_unchecked(current.ground(), std::move(next));
  }
  return current;
}

}  // namespace ucf
