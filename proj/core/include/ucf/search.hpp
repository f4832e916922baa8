#pragma once

// Exhaustive enumeration of labeled union-closed families over small ground
// sets.
//
// Two independent strategies are available:
//
//  * SubfamilyFilter walks every subfamily of the 2^n - 1 non-empty subsets
//    of {0..n-1} (one bit per subset) and keeps the union-closed ones. It is
//    the brute-force reference and is limited to n <= 4.
//
//  * GeneratorClosure decides membership of each subset in canonical order;
//    adding a set immediately adds its unions with everything already
//    present. Those unions come strictly later in canonical order, so every
//    union-closed family is produced exactly once with no deduplication.
//    Limited to n <= 5.
//
// The candidate space of either strategy can be split into contiguous parts.
// Concatenating the parts in order reproduces the single-threaded sequence,
// which is what makes the parallel drivers deterministic.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ucf/family.hpp"

namespace ucf {

enum class SizeBound { AtMost, Exact };
enum class EnumStrategy { SubfamilyFilter, GeneratorClosure };

inline constexpr int kMaxFilterGround = 4;
inline constexpr int kMaxClosureGround = 5;
inline constexpr std::size_t kWitnessCap = 16;

struct EnumFilter {
  /// Largest-set size: an upper bound or an exact value, per `bound`.
  int n = 1;
  SizeBound bound = SizeBound::AtMost;
  /// Minimum size of a non-empty member set.
  int k_min = 1;
  /// Also emit each family together with the empty set (and {∅} alone).
  bool allow_empty_set = false;
  /// Smallest non-empty set exactly k_min and largest set exactly n.
  bool require_exact_kn = false;
  EnumStrategy strategy = EnumStrategy::SubfamilyFilter;
};

using FamilyVisitor = std::function<void(const SetFamily&)>;

/// Throws InfeasibleBound when n is outside the strategy's range.
void validate(const EnumFilter& filter);

/// Visits every matching family once, in the strategy's deterministic order.
void for_each_ucf(const EnumFilter& filter, const FamilyVisitor& visit);

/// Visits the families of part `part` out of `parts` equal slices of the
/// candidate space.
void for_each_ucf_in_part(const EnumFilter& filter, std::size_t part, std::size_t parts,
                          const FamilyVisitor& visit);

/// Collects every matching family; `jobs` worker threads share the parts.
std::vector<SetFamily> enumerate_ucf(const EnumFilter& filter, unsigned jobs = 1);

/// Lexicographic order on canonical set lists, used to sort witnesses.
bool family_less(const SetFamily& a, const SetFamily& b);

struct SearchReport {
  std::uint64_t total_families = 0;
  std::optional<int> min_f;
  /// Families attaining min_f, in family_less order, at most kWitnessCap.
  std::vector<SetFamily> witnesses;
  /// (smallest set size, largest set size) -> min f. The smallest size is 0
  /// for families holding the empty set.
  std::map<std::pair<int, int>, int> min_f_by_kn;

  void add(const SetFamily& family);
  /// Associative; merging parts in any grouping gives the same report.
  void merge(const SearchReport& other);
};

SearchReport min_f_search(const EnumFilter& filter, unsigned jobs = 1);

/// Every empty-set-free union-closed family with largest set at most
/// `n_bound` satisfies all applicable abundance bounds.
bool verify_theorem5_exhaustive(int n_bound, unsigned jobs = 1);

}  // namespace ucf
