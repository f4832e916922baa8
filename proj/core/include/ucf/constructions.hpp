#pragma once

// Builders for the named union-closed families with few abundant elements.
//
// An (f,k,n)-construction is a union-closed family with exactly f abundant
// elements whose smallest and largest sets have sizes k and n.

#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucf/family.hpp"

namespace ucf {

using BigInt = boost::multiprecision::cpp_int;

enum class ConstructionId {
  P83,        // (2,3,8)
  P94Bar,     // (3,4,9): P83 with element 8 added everywhere
  Q95,        // (4,5,9)
  R106,       // (5,6,10)
  Pnk,        // parametric extension of P83
  RnkBar,     // R106 padded with n-10 universal elements, k = n-4
  PPlus2kn,   // (2,k,n) from P(12,4) with disjoint padding blocks
  PPlusK1kn,  // (k-1,k,n) from P83
  SmallK,     // (2,k,n) for 0 <= k <= 3
};

struct ConstructionSpec {
  ConstructionId id;
  int k = 0;
  int n = 0;
};

[[nodiscard]] std::string_view name(ConstructionId id) noexcept;
/// Case-insensitive; accepts the canonical names plus a few aliases.
[[nodiscard]] std::optional<ConstructionId> parse_construction_id(std::string_view text);
/// Whether the builder takes (k, n).
[[nodiscard]] bool is_parametric(ConstructionId id) noexcept;

SetFamily build_p83();
SetFamily build_p94bar();
SetFamily build_q95();
SetFamily build_r106();

/// A: {0,1} c A, |A| >= k. E: subsets of the evens below 2*floor(n/2) that
/// contain 0, |E| >= k. O: the same on the odds with 1. Requires n >= k >= 3.
SetFamily build_pnk(int k, int n);

/// Requires k = n - 4 and n >= 10.
SetFamily build_rnkbar(int k, int n);

/// Requires k >= 4 and k + 8*ceil(k/2) - 8 <= n <= 64.
SetFamily build_pplus_2kn(int k, int n);

/// Requires 0 <= k <= 3 and n >= 3 (n >= 8 when k = 3).
SetFamily build_small_k(int k, int n);

/// Requires 3 <= k <= n - 5, 9 <= n <= 64.
SetFamily build_pplus_k1kn(int k, int n);

/// Dispatch. RnkBar with (k, n) = (5, 9) yields Q95.
SetFamily build(const ConstructionSpec& spec);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

struct Stmt2Sides {
  BigInt lhs;  // sum_{i=k-1}^{h-1} C(h-1, i), h = floor(n/2)
  BigInt rhs;  // C(n-3, k-3) + C(h-2, k-2)
};

/// Requires n >= k >= 3.
Stmt2Sides stmt2_sides(int k, int n);

/// True iff build_pnk(k, n) leaves every element other than 0 and 1 in
/// strictly fewer than half the sets. Requires n >= k >= 3.
bool inequality_stmt2(int k, int n);

/// Smallest n0 in [k, n_cap] such that the inequality holds for every n in
/// [n0, n_cap]. Throws NotFound if it fails at n_cap itself.
int stmt2_holds_from(int k, int n_cap);

/// Sufficient exponential-versus-polynomial witness:
/// k - 1 <= (h - 1) / 2 and 2^(h-2) > (n-3)^(k-3) + (h-2)^(k-2).
/// When it holds, so does inequality_stmt2(k, n).
bool stmt2_certificate(int k, int n);

}  // namespace ucf
