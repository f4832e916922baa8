#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucf {

enum class Errc {
  DuplicateSet,
  MaskOverflow,
  NotUnionClosed,
  NotIntersectionClosed,
  EmptyFamily,
  ContainsEmptySet,
  BadParams,
  BadMarkedSet,
  PreconditionViolated,
  NotACrew,
  NotFound,
  AlreadyPresent,
  NotClosedAfterAdd,
  IllegalInput,
  InfeasibleBound,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ucf
