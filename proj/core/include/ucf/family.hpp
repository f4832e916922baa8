#pragma once

// Finite set families over a ground set {0, ..., n-1} with n <= 64.
//
// Every member set is one machine word. A SetFamily is always held in
// canonical order: ascending by cardinality, then by the numeric value of
// the mask. Two families are equal iff their ground sizes and canonical
// lists agree.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ucf/error.hpp"

namespace ucf {

using Mask = std::uint64_t;
using Element = int;

inline constexpr int kMaxGround = 64;

/// Size of the ground set {0, ..., n-1}; 1 <= n <= 64.
class GroundSize {
 public:
  explicit GroundSize(int n);

  [[nodiscard]] int value() const noexcept { return n_; }
  /// Mask with bits 0..n-1 set.
  [[nodiscard]] Mask full_mask() const noexcept {
    return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }
  [[nodiscard]] bool fits(Mask m) const noexcept { return (m & ~full_mask()) == 0; }

  friend bool operator==(GroundSize, GroundSize) = default;

 private:
  int n_;
};

/// One member set, encoded as a bit vector. Ordered canonically.
struct MemberSet {
  Mask bits = 0;

  constexpr MemberSet() = default;
  constexpr explicit MemberSet(Mask m) : bits(m) {}

  static MemberSet of(std::initializer_list<Element> elements);
  static MemberSet of(std::span<const Element> elements);

  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits == 0; }
  [[nodiscard]] constexpr bool contains(Element e) const noexcept {
    return ((bits >> e) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(MemberSet other) const noexcept {
    return (bits & ~other.bits) == 0;
  }
  [[nodiscard]] std::vector<Element> elements() const;

  constexpr MemberSet operator|(MemberSet o) const noexcept { return MemberSet(bits | o.bits); }
  constexpr MemberSet operator&(MemberSet o) const noexcept { return MemberSet(bits & o.bits); }
  constexpr MemberSet without(MemberSet o) const noexcept { return MemberSet(bits & ~o.bits); }
  constexpr MemberSet with(Element e) const noexcept { return MemberSet(bits | (Mask{1} << e)); }
  constexpr MemberSet without(Element e) const noexcept {
    return MemberSet(bits & ~(Mask{1} << e));
  }

  friend constexpr bool operator==(MemberSet, MemberSet) = default;
  friend constexpr std::strong_ordering operator<=>(MemberSet a, MemberSet b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits <=> b.bits;
  }
};

/// Contiguous range [first, last] as a set; empty when first > last.
MemberSet element_range(Element first, Element last);

class SetFamily {
 public:
  /// Validating constructor; see canonicalize().
  SetFamily(GroundSize ground, std::vector<MemberSet> sets);

  [[nodiscard]] GroundSize ground() const noexcept { return ground_; }
  [[nodiscard]] int ground_size() const noexcept { return ground_.value(); }
  [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
  [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
  [[nodiscard]] std::span<const MemberSet> sets() const noexcept { return sets_; }
  [[nodiscard]] auto begin() const noexcept { return sets_.begin(); }
  [[nodiscard]] auto end() const noexcept { return sets_.end(); }
  [[nodiscard]] const MemberSet& operator[](std::size_t i) const { return sets_[i]; }

  [[nodiscard]] bool contains(MemberSet s) const noexcept;
  [[nodiscard]] bool contains_empty_set() const noexcept {
    return !sets_.empty() && sets_.front().empty();
  }
  /// Union of all member sets; the largest set when the family is union-closed.
  [[nodiscard]] MemberSet union_of_all() const noexcept;
  /// Elements that occur in at least one member set.
  [[nodiscard]] MemberSet support() const noexcept { return union_of_all(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  struct Trusted {};
  SetFamily(Trusted, GroundSize ground, std::vector<MemberSet> sets)
      : ground_(ground), sets_(std::move(sets)) {}
  friend SetFamily make_family_unchecked(GroundSize, std::vector<MemberSet>);

  GroundSize ground_;
  std::vector<MemberSet> sets_;
};

/// Sorts into canonical order. Throws DuplicateSet or MaskOverflow.
SetFamily canonicalize(std::vector<MemberSet> sets, GroundSize ground);

/// Sorts and deduplicates without range checks; callers guarantee every mask
/// fits the ground set.
SetFamily make_family_unchecked(GroundSize ground, std::vector<MemberSet> sets);

// Structural predicates.
bool is_union_closed(const SetFamily& family);
bool is_intersection_closed(const SetFamily& family);

/// Smallest union-closed superfamily.
SetFamily union_closure(const SetFamily& family);

/// {M \ A : A in F} with M the largest set. Requires a nonempty union-closed
/// family.
SetFamily dual(const SetFamily& family);

/// {M \ A : A in F} for an explicit frame M. An involution for fixed M, so
/// dual(dual(F), M) == F with M = F.union_of_all(). Throws EmptyFamily, and
/// PreconditionViolated when a member set leaves the frame.
SetFamily dual(const SetFamily& family, MemberSet frame);

/// count[e] = number of member sets containing e, for e in 0..n-1.
std::vector<std::size_t> frequency(const SetFamily& family);

struct AbundanceReport {
  std::size_t m = 0;
  /// Smallest non-empty set size (0 if the family has no non-empty set).
  int k = 0;
  int n_max = 0;
  int f = 0;
  bool contains_empty = false;
  std::vector<std::size_t> freq;
  std::vector<Element> abundant;
  std::vector<Element> at_least_half;
  bool strict_minority_rest = false;

  /// Size of a smallest member, counting the empty set when present.
  [[nodiscard]] int smallest_size() const noexcept { return contains_empty ? 0 : k; }
};

/// Throws EmptyFamily.
AbundanceReport analyze(const SetFamily& family);

/// Twin pairs (a < b) among elements that occur in some member set.
std::vector<std::pair<Element, Element>> twins(const SetFamily& family);
bool is_twin_free(const SetFamily& family);

/// Removes the larger element of the lexicographically first twin pair until
/// none remain. Requires a nonempty union-closed family without the empty set.
SetFamily collapse_twins(const SetFamily& family);

}  // namespace ucf
