#include "ucf/dual_analysis.hpp"

#include <algorithm>
#include <string>

namespace ucf {

RankProfile rank_profile(const SetFamily& family, MemberSet marked) {
  if (!family.ground().fits(marked.bits)) {
    throw Error(Errc::BadMarkedSet, "marked set leaves the ground set");
  }
  RankProfile p;
  p.marked = marked;
  p.histogram.assign(static_cast<std::size_t>(marked.size()) + 1, 0);
  for (MemberSet s : family) {
    const int rank = (s & marked).size();
    ++p.histogram[static_cast<std::size_t>(rank)];
    p.total_rank += static_cast<std::size_t>(rank);
  }
  p.doubled_surplus = 2 * static_cast<std::int64_t>(p.total_rank) -
                      static_cast<std::int64_t>(marked.size()) * static_cast<std::int64_t>(family.size());
  return p;
}

bool surplus_identity_check(const SetFamily& family, MemberSet marked) {
  if (marked.size() != 6) throw Error(Errc::BadMarkedSet, "the surplus identity needs |X| = 6");
  for (MemberSet s : family) {
    if (s.size() > 4) throw Error(Errc::PreconditionViolated, "a set has more than 4 elements");
  }
  const RankProfile p = rank_profile(family, marked);

  std::int64_t direct = 0;
  for (MemberSet s : family) direct += (s & marked).size() - 3;

  const auto r = [&p](int i) { return static_cast<std::int64_t>(p.r(i)); };
  const std::int64_t from_histogram = r(4) - r(2) - 2 * r(1) - 3 * r(0);
  return direct == from_histogram && 2 * direct == p.doubled_surplus;
}

std::vector<std::pair<Element, Element>> DominationRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < dominators_.size(); ++a) {
    for (Element b : MemberSet(dominators_[a]).elements()) out.emplace_back(static_cast<Element>(a), b);
  }
  return out;
}

DominationRelation dominated_pairs(const SetFamily& family) {
  const GroundSize ground = family.ground();
  // Start from "dominated by every other element" and intersect with each
  // set containing a; elements in no set keep the full relation.
  std::vector<Mask> dom(static_cast<std::size_t>(ground.value()));
  for (Element a = 0; a < ground.value(); ++a) {
    dom[static_cast<std::size_t>(a)] = MemberSet(ground.full_mask()).without(a).bits;
  }
  for (MemberSet s : family) {
    for (Element a : s.elements()) dom[static_cast<std::size_t>(a)] &= s.bits;
  }
  return DominationRelation(std::move(dom));
}

bool singleton_or_dominated_check(const SetFamily& family) {
  if (!is_intersection_closed(family)) {
    throw Error(Errc::NotIntersectionClosed, "singleton_or_dominated_check needs an intersection-closed family");
  }
  const DominationRelation rel = dominated_pairs(family);
  for (Element a : family.support().elements()) {
    if (!family.contains(MemberSet().with(a)) && !rel.is_dominated(a)) return false;
  }
  return true;
}

MemberSet heavy_elements(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "heavy_elements of an empty family");
  const auto freq = frequency(family);
  MemberSet heavy;
  for (std::size_t e = 0; e < freq.size(); ++e) {
    if (2 * freq[e] >= family.size()) heavy = heavy.with(static_cast<Element>(e));
  }
  return heavy;
}

SetFamily relevant_sets(const SetFamily& family, MemberSet crew) {
  if (crew.size() != 6) throw Error(Errc::NotACrew, "a crew has exactly 6 elements");
  if (!crew.subset_of(heavy_elements(family))) {
    throw Error(Errc::NotACrew, "every crew element must lie in at least half of the sets");
  }
  const DominationRelation rel = dominated_pairs(family);
  std::vector<std::pair<Element, Element>> inside;
  for (auto [a, b] : rel.pairs()) {
    if (crew.contains(a) && crew.contains(b)) inside.emplace_back(a, b);
  }

  std::vector<MemberSet> out;
  for (MemberSet s : family) {
    if ((s & crew).size() != 4) continue;
    const bool respects = std::all_of(inside.begin(), inside.end(),
                                      [s](auto pair) { return s.contains(pair.first) == s.contains(pair.second); });
    if (respects) out.push_back(s);
  }
  return make_family_unchecked(family.ground(), std::move(out));
}

BoundReport check_theorem5(const SetFamily& family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "bounds need a nonempty family");
  if (!is_union_closed(family)) throw Error(Errc::NotUnionClosed, "bounds need a union-closed family");
  if (family.contains_empty_set()) throw Error(Errc::ContainsEmptySet, "bounds need a family without the empty set");

  const AbundanceReport a = analyze(family);
  BoundReport r;
  r.k = a.k;
  r.n = a.n_max;
  r.f = a.f;
  r.stmt1_applicable = r.k >= r.n - 3;
  r.stmt1_holds = r.f >= r.k;
  r.stmt2_applicable = r.k == r.n - 4;
  r.stmt2_holds = r.f >= r.k - 1;
  r.stmt3_bound = std::min(r.n, 2 * r.k - r.n + 1);
  r.stmt3_holds = r.f >= r.stmt3_bound;
  return r;
}

}  // namespace ucf
