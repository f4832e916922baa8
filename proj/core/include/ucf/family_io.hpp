#pragma once

// Text format for set families:
//
//   # comment lines start with '#'
//   ground 8
//   0 1 2
//   empty
//
// The first non-blank, non-comment line declares the ground size. Every
// later one is a member set: strictly increasing decimal elements in [0, n),
// or the token "empty". Duplicate sets are rejected.

#include <iosfwd>
#include <string>
#include <string_view>

#include "ucf/family.hpp"

namespace ucf {

/// Throws ParseError (the message names the 1-based line) or MaskOverflow.
SetFamily parse_family(std::string_view text);
SetFamily read_family(std::istream& in);

/// Canonical order, one set per line, "empty" for ∅.
std::string emit_family(const SetFamily& family);
void write_family(std::ostream& out, const SetFamily& family);

/// "{0,1,2}" style rendering for diagnostics and reports.
std::string format_set(MemberSet s);

}  // namespace ucf
