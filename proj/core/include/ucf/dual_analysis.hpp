#pragma once

// Counting objects on intersection-closed (dual) families, and the checker
// for the three lower bounds on the number of abundant elements.

#include <cstdint>
#include <utility>
#include <vector>

#include "ucf/family.hpp"

namespace ucf {

/// Histogram of r(A) = |A & X| over a family, for a marked set X.
struct RankProfile {
  MemberSet marked;
  /// histogram[i] = number of sets of rank i, for i = 0..|X|.
  std::vector<std::size_t> histogram;
  /// Sum of r(A) over all sets.
  std::size_t total_rank = 0;
  /// 2 * total_rank - |X| * |D|. For |X| = 6 this is twice the surplus.
  std::int64_t doubled_surplus = 0;

  [[nodiscard]] int width() const noexcept { return marked.size(); }
  [[nodiscard]] std::size_t r(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < histogram.size() ? histogram[static_cast<std::size_t>(i)] : 0;
  }
};

/// Throws BadMarkedSet if X is not inside the ground set.
RankProfile rank_profile(const SetFamily& family, MemberSet marked);

/// Checks sum(r(A) - 3) == r4 - r2 - 2 r1 - 3 r0 against the histogram and
/// the stored doubled surplus. Requires |X| = 6 (BadMarkedSet) and every set
/// of size <= 4 (PreconditionViolated).
bool surplus_identity_check(const SetFamily& family, MemberSet marked);

/// a is dominated by b when a != b and b lies in every set containing a.
class DominationRelation {
 public:
  explicit DominationRelation(std::vector<Mask> dominators) : dominators_(std::move(dominators)) {}

  [[nodiscard]] bool dominated_by(Element a, Element b) const {
    return MemberSet(dominators_.at(static_cast<std::size_t>(a))).contains(b);
  }
  [[nodiscard]] MemberSet dominators_of(Element a) const {
    return MemberSet(dominators_.at(static_cast<std::size_t>(a)));
  }
  [[nodiscard]] bool is_dominated(Element a) const { return !dominators_of(a).empty(); }
  /// Ordered pairs (a, b), a dominated by b, ascending.
  [[nodiscard]] std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const DominationRelation&, const DominationRelation&) = default;

 private:
  std::vector<Mask> dominators_;
};

DominationRelation dominated_pairs(const SetFamily& family);

/// Every occurring element has its singleton in the family or is dominated.
/// Throws NotIntersectionClosed.
bool singleton_or_dominated_check(const SetFamily& family);

/// Elements in at least half of the sets. Throws EmptyFamily.
MemberSet heavy_elements(const SetFamily& family);

/// Rank-4 sets meeting every domination pair inside the crew in 0 or 2
/// elements. Throws NotACrew unless |X| = 6 and X is heavy.
SetFamily relevant_sets(const SetFamily& family, MemberSet crew);

struct BoundReport {
  int k = 0;
  int n = 0;
  int f = 0;
  bool stmt1_applicable = false;  // k >= n - 3
  bool stmt1_holds = false;       // f >= k
  bool stmt2_applicable = false;  // k == n - 4
  bool stmt2_holds = false;       // f >= k - 1
  int stmt3_bound = 0;            // min(n, 2k - n + 1)
  bool stmt3_holds = false;

  /// Inapplicable statements do not count against the result.
  [[nodiscard]] bool all_hold() const noexcept {
    return (!stmt1_applicable || stmt1_holds) && (!stmt2_applicable || stmt2_holds) && stmt3_holds;
  }
};

/// Requires a nonempty union-closed family without the empty set.
BoundReport check_theorem5(const SetFamily& family);

}  // namespace ucf
