#pragma once

#include <initializer_list>
#include <vector>

#include "ucf/family.hpp"

namespace testing_helpers {

inline ucf::SetFamily fam(int n, std::initializer_list<std::initializer_list<ucf::Element>> sets) {
  std::vector<ucf::MemberSet> out;
  for (const auto& s : sets) out.push_back(ucf::MemberSet::of(s));
  return ucf::SetFamily(ucf::GroundSize(n), std::move(out));
}

inline ucf::MemberSet set(std::initializer_list<ucf::Element> s) { return ucf::MemberSet::of(s); }

}  // namespace testing_helpers
