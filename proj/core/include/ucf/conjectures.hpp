#pragma once

// Per-family predicates for the union-closed conjectures and the family
// transformations that relate them.
//
// The strict forms (Frankl, Poonen3, Poonen4, CuiHu2) apply to union-closed
// families without the empty set and count an element when it lies in more
// than half of the sets. The original forms (FranklA, Poonen3B, Poonen4C,
// CuiHu2D) allow the empty set and use "at least half".
//
// Each predicate is conditional: when its hypotheses fail it holds
// vacuously. The returned Verdict says which case applied.

#include <optional>
#include <string_view>

#include "ucf/family.hpp"

namespace ucf {

enum class Conjecture { Frankl, Poonen3, Poonen4, CuiHu2, FranklA, Poonen3B, Poonen4C, CuiHu2D };

[[nodiscard]] std::string_view name(Conjecture id) noexcept;
[[nodiscard]] std::optional<Conjecture> parse_conjecture(std::string_view text);
[[nodiscard]] bool is_original_form(Conjecture id) noexcept;

struct Verdict {
  bool holds = true;
  bool hypotheses_met = false;

  explicit operator bool() const noexcept { return holds; }
};

// Strict forms. Throw NotUnionClosed, EmptyFamily or ContainsEmptySet.
Verdict frankl_holds(const SetFamily& family);
Verdict poonen3_holds(const SetFamily& family);
Verdict poonen4_holds(const SetFamily& family);
Verdict cuihu2_holds(const SetFamily& family);

/// Original forms. Throws NotUnionClosed, EmptyFamily, and IllegalInput for
/// {∅} under FranklA or CuiHu2D.
Verdict original_holds(Conjecture id, const SetFamily& family);

/// Dispatches on the form.
Verdict evaluate(Conjecture id, const SetFamily& family);

SetFamily strip_empty(const SetFamily& family);
/// Throws AlreadyPresent.
SetFamily add_empty(const SetFamily& family);

/// Elements abundant in F \ {∅} lie in at least half of the sets of F ∪ {∅}.
/// Vacuous when F \ {∅} is empty.
bool empty_set_transfer_holds(const SetFamily& family);

/// Replaces the first smallest set S by S \ {x}. Requires a union-closed
/// family without ∅ in which x is universal and |S| >= 2.
SetFamily replace_min_set_without(const SetFamily& family, Element x);

/// Replaces every A with A ∪ {y} whenever A ∪ {y} is not already a member.
/// Requires a union-closed family without ∅ whose largest set contains y.
SetFamily saturate_element(const SetFamily& family, Element y);

/// Adds {y}. Throws AlreadyPresent, or NotClosedAfterAdd when the result is
/// not union-closed.
SetFamily add_singleton(const SetFamily& family, Element y);

/// Whether the conjecture holds for every family in its class whose largest
/// set has at most n elements. Requires 1 <= n <= 4 (BadParams otherwise).
bool universal_audit(int n, Conjecture id);

}  // namespace ucf
