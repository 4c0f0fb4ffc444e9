#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mspread {

enum class ErrorKind {
  ZeroIdeal,
  UnitGenerator,
  AmbientMismatch,
  DegreeBound,
  BadParameter,
  Overflow,
  EmptySet,
  ShapeMismatch,
  BadAmbient,
  SupportOverlap,
  NotMinimal,
  DegreeMismatch,
  NotSmoothInput,
  WellDefinednessViolation,
  TooLarge,
  SyntaxError,
  NegativeExponent,
  WidthMismatch,
  InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `line()` is nonzero only for
/// errors produced while parsing an ideal file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace mspread
