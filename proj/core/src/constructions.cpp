#include "ucf/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace ucf {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadParams, what);
}

std::string params(int k, int n) {
  return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

/// All S with base <= S <= universe and |S| >= min_size.
void append_between(std::vector<MemberSet>& out, MemberSet base, MemberSet universe, int min_size) {
  const Mask free = universe.without(base).bits;
  Mask sub = 0;
  do {
    const MemberSet s(base.bits | sub);
    if (s.size() >= min_size) out.push_back(s);
    sub = (sub - free) & free;
  } while (sub != 0);
}

MemberSet evens_below(int h) {
  MemberSet s;
  for (int i = 0; i < h; ++i) s = s.with(2 * i);
  return s;
}

MemberSet odds_below(int h) {
  MemberSet s;
  for (int i = 0; i < h; ++i) s = s.with(2 * i + 1);
  return s;
}

/// Applies `grow` to every set and re-canonicalizes over a larger ground.
template <typename Grow>
SetFamily extend(const SetFamily& base, int n, Grow grow) {
  std::vector<MemberSet> out;
  out.reserve(base.size());
  for (MemberSet s : base) out.push_back(grow(s));
  return canonicalize(std::move(out), GroundSize(n));
}

// Callers only pass non-negative values.
int ceil_half(int x) { return (x + 1) / 2; }
int floor_half(int x) { return x / 2; }

}  // namespace

std::string_view name(ConstructionId id) noexcept {
  switch (id) {
    case ConstructionId::P83: return "p83";
    case ConstructionId::P94Bar: return "p94bar";
    case ConstructionId::Q95: return "q95";
    case ConstructionId::R106: return "r106";
    case ConstructionId::Pnk: return "pnk";
    case ConstructionId::RnkBar: return "rnkbar";
    case ConstructionId::PPlus2kn: return "pplus2kn";
    case ConstructionId::PPlusK1kn: return "pplusk1kn";
    case ConstructionId::SmallK: return "smallk";
  }
  return "?";
}

std::optional<ConstructionId> parse_construction_id(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '-' || c == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  static constexpr std::array<std::pair<std::string_view, ConstructionId>, 12> kNames{{
      {"p83", ConstructionId::P83},
      {"p94bar", ConstructionId::P94Bar},
      {"q95", ConstructionId::Q95},
      {"r106", ConstructionId::R106},
      {"pnk", ConstructionId::Pnk},
      {"rnkbar", ConstructionId::RnkBar},
      {"pplus2kn", ConstructionId::PPlus2kn},
      {"pplus23", ConstructionId::PPlus2kn},
      {"pplusk1kn", ConstructionId::PPlusK1kn},
      {"pplus4", ConstructionId::PPlusK1kn},
      {"smallk", ConstructionId::SmallK},
      {"small", ConstructionId::SmallK},
  }};
  for (const auto& [k, id] : kNames) {
    if (k == key) return id;
  }
  return std::nullopt;
}

bool is_parametric(ConstructionId id) noexcept {
  switch (id) {
    case ConstructionId::Pnk:
    case ConstructionId::RnkBar:
    case ConstructionId::PPlus2kn:
    case ConstructionId::PPlusK1kn:
    case ConstructionId::SmallK:
      return true;
    default:
      return false;
  }
}

SetFamily build_p83() {
  std::vector<MemberSet> sets;
  append_between(sets, MemberSet::of({0, 1}), element_range(0, 7), 3);
  for (auto s : {MemberSet::of({0, 2, 4}), MemberSet::of({0, 2, 6}), MemberSet::of({0, 4, 6}),
                 MemberSet::of({0, 2, 4, 6}), MemberSet::of({1, 3, 5}), MemberSet::of({1, 3, 7}),
                 MemberSet::of({1, 5, 7}), MemberSet::of({1, 3, 5, 7})}) {
    sets.push_back(s);
  }
  return canonicalize(std::move(sets), GroundSize(8));
}

SetFamily build_p94bar() {
  return extend(build_p83(), 9, [](MemberSet s) { return s.with(8); });
}

SetFamily build_q95() {
  std::vector<MemberSet> sets;
  append_between(sets, element_range(0, 5), element_range(0, 8), 0);
  append_between(sets, MemberSet::of({0, 1, 2}), MemberSet::of({0, 1, 2, 3, 6, 7, 8}), 5);
  for (auto s : {MemberSet::of({0, 1, 3, 4, 5}), MemberSet::of({0, 2, 3, 4, 5}),
                 MemberSet::of({1, 2, 3, 4, 5})}) {
    sets.push_back(s);
  }
  return canonicalize(std::move(sets), GroundSize(9));
}

SetFamily build_r106() {
  const MemberSet core = element_range(0, 4);
  std::vector<MemberSet> sets;
  append_between(sets, core, element_range(0, 9), 6);
  // G_i drops core element i and keeps three of the five tail elements, chosen
  // cyclically so that each tail element lies in exactly three of the G_i.
  for (int i = 0; i < 5; ++i) {
    MemberSet tail;
    for (int step = 2; step <= 4; ++step) tail = tail.with(5 + (i + step) % 5);
    const MemberSet g = core.without(i) | tail;
    sets.push_back(g);
    for (Element t : tail.elements()) sets.push_back(g.without(t));
  }
  return canonicalize(std::move(sets), GroundSize(10));
}

SetFamily build_pnk(int k, int n) {
  require(k >= 3 && n >= k && n <= kMaxGround, "pnk needs n >= k >= 3 and n <= 64 " + params(k, n));
  const int h = n / 2;
  std::vector<MemberSet> sets;
  append_between(sets, MemberSet::of({0, 1}), element_range(0, n - 1), k);
  append_between(sets, MemberSet::of({0}), evens_below(h), k);
  append_between(sets, MemberSet::of({1}), odds_below(h), k);
  return make_family_unchecked(GroundSize(n), std::move(sets));
}

SetFamily build_rnkbar(int k, int n) {
  require(k == n - 4 && n >= 10 && n <= kMaxGround, "rnkbar needs k = n - 4 and 10 <= n <= 64 " + params(k, n));
  const MemberSet padding = element_range(10, n - 1);
  return extend(build_r106(), n, [padding](MemberSet s) { return s | padding; });
}

SetFamily build_pplus_2kn(int k, int n) {
  require(k >= 4 && n >= k + 8 * ceil_half(k) - 8 && n <= kMaxGround,
          "pplus2kn needs k >= 4 and k + 8*ceil(k/2) - 8 <= n <= 64 " + params(k, n));
  const int wide = ceil_half(k - 4);
  const int narrow = floor_half(k - 4);

  // Blocks A_2..A_11 are laid out contiguously from element 12 upward.
  std::array<MemberSet, 12> block{};
  Element next = 12;
  for (int i = 2; i <= 11; ++i) {
    int size = wide;
    if (i == 10) size = narrow;
    if (i == 11) size = n - 12 - 8 * wide - narrow;
    block[static_cast<std::size_t>(i)] = element_range(next, next + size - 1);
    next += size;
  }

  return extend(build_pnk(4, 12), n, [&block](MemberSet s) {
    MemberSet grown = s;
    for (int i = 2; i <= 11; ++i) {
      if (s.contains(i)) grown = grown | block[static_cast<std::size_t>(i)];
    }
    return grown;
  });
}

SetFamily build_small_k(int k, int n) {
  require(k >= 0 && k <= 3 && n >= 3 && n <= kMaxGround && (k < 3 || n >= 8),
          "smallk needs 0 <= k <= 3, 3 <= n <= 64, and n >= 8 when k = 3 " + params(k, n));
  const MemberSet all = element_range(0, n - 1);
  switch (k) {
    case 0:
      return canonicalize({MemberSet(), MemberSet::of({0}), MemberSet::of({1}), MemberSet::of({0, 1}), all},
                          GroundSize(n));
    case 1:
      return canonicalize({MemberSet::of({0}), MemberSet::of({1}), MemberSet::of({0, 1}), all}, GroundSize(n));
    case 2:
      return canonicalize({MemberSet::of({0, 1}), all}, GroundSize(n));
    default: {
      const MemberSet padding = element_range(8, n - 1);
      return extend(build_p83(), n, [padding](MemberSet s) { return s.contains(2) ? s | padding : s; });
    }
  }
}

SetFamily build_pplus_k1kn(int k, int n) {
  require(k >= 3 && n - 5 >= k && n >= 9 && n <= kMaxGround,
          "pplusk1kn needs 3 <= k <= n - 5 and 9 <= n <= 64 " + params(k, n));
  const MemberSet with_two = element_range(8, n - 1);
  const MemberSet without_two = element_range(8, k + 4);
  return extend(build_p83(), n, [&](MemberSet s) { return s | (s.contains(2) ? with_two : without_two); });
}

SetFamily build(const ConstructionSpec& spec) {
  switch (spec.id) {
    case ConstructionId::P83: return build_p83();
    case ConstructionId::P94Bar: return build_p94bar();
    case ConstructionId::Q95: return build_q95();
    case ConstructionId::R106: return build_r106();
    case ConstructionId::Pnk: return build_pnk(spec.k, spec.n);
    case ConstructionId::RnkBar:
      if (spec.k == 5 && spec.n == 9) return build_q95();
      return build_rnkbar(spec.k, spec.n);
    case ConstructionId::PPlus2kn: return build_pplus_2kn(spec.k, spec.n);
    case ConstructionId::PPlusK1kn: return build_pplus_k1kn(spec.k, spec.n);
    case ConstructionId::SmallK: return build_small_k(spec.k, spec.n);
  }
  throw Error(Errc::BadParams, "unknown construction id");
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Stmt2Sides stmt2_sides(int k, int n) {
  require(k >= 3 && n >= k, "inequality needs n >= k >= 3 " + params(k, n));
  const int h = n / 2;
  Stmt2Sides sides;
  for (int i = k - 1; i <= h - 1; ++i) sides.lhs += binomial(h - 1, i);
  sides.rhs = binomial(n - 3, k - 3) + binomial(h - 2, k - 2);
  return sides;
}

bool inequality_stmt2(int k, int n) {
  const auto sides = stmt2_sides(k, n);
  return sides.lhs > sides.rhs;
}

int stmt2_holds_from(int k, int n_cap) {
  require(k >= 3 && n_cap >= k, "threshold scan needs n_cap >= k >= 3 " + params(k, n_cap));
  int n0 = n_cap + 1;
  while (n0 - 1 >= k && inequality_stmt2(k, n0 - 1)) --n0;
  if (n0 > n_cap) {
    throw Error(Errc::NotFound, "inequality fails at the cap " + params(k, n_cap));
  }
  return n0;
}

bool stmt2_certificate(int k, int n) {
  require(k >= 3 && n >= k, "certificate needs n >= k >= 3 " + params(k, n));
  const int h = n / 2;
  if (2 * (k - 1) > h - 1) return false;
  const BigInt lhs = BigInt(1) << (h - 2);
  const BigInt rhs = boost::multiprecision::pow(BigInt(n - 3), static_cast<unsigned>(k - 3)) +
                     boost::multiprecision::pow(BigInt(h - 2), static_cast<unsigned>(k - 2));
  return lhs > rhs;
}

}  // namespace ucf
