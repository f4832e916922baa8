#include "ucf/family_io.hpp"

#include <charconv>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace ucf {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::optional<int> to_int(std::string_view word) {
  int value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  std::optional<GroundSize> ground;
  std::vector<MemberSet> sets;
  std::unordered_set<Mask> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t cut = text.find('\n');
    const std::string_view raw = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view() : text.substr(cut + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);

    if (!ground) {
      if (words.size() != 2 || words[0] != "ground") fail(Errc::ParseError, line_no, "expected 'ground <n>'");
      const auto n = to_int(words[1]);
      if (!n || *n < 1 || *n > kMaxGround) fail(Errc::ParseError, line_no, "ground size must be in [1, 64]");
      ground.emplace(*n);
      continue;
    }

    MemberSet s;
    if (words.size() == 1 && words[0] == "empty") {
      // the empty set
    } else {
      int previous = -1;
      for (std::string_view w : words) {
        const auto e = to_int(w);
        if (!e || *e < 0) fail(Errc::ParseError, line_no, "'" + std::string(w) + "' is not an element");
        if (*e <= previous) fail(Errc::ParseError, line_no, "elements must be strictly increasing");
        if (*e >= ground->value()) {
          fail(Errc::MaskOverflow, line_no, "element " + std::to_string(*e) + " is outside the ground set");
        }
        s = s.with(*e);
        previous = *e;
      }
    }
    if (!seen.insert(s.bits).second) fail(Errc::ParseError, line_no, "duplicate set");
    sets.push_back(s);
  }

  if (!ground) throw Error(Errc::ParseError, "missing 'ground <n>' header");
  return make_family_unchecked(*ground, std::move(sets));
}

SetFamily read_family(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_family(text);
}

std::string emit_family(const SetFamily& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "ground " << family.ground_size() << '\n';
  for (MemberSet s : family) {
    if (s.empty()) {
      out << "empty\n";
      continue;
    }
    const char* sep = "";
    for (Element e : s.elements()) {
      out << sep << e;
      sep = " ";
    }
    out << '\n';
  }
}

std::string format_set(MemberSet s) {
  std::string out = "{";
  const char* sep = "";
  for (Element e : s.elements()) {
    out += sep;
    out += std::to_string(e);
    sep = ",";
  }
  return out + "}";
}

}  // namespace ucf
