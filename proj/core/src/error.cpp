#include "monospread/error.hpp"

namespace mspread {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::UnitGenerator: return "UnitGenerator";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DegreeBound: return "DegreeBound";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadAmbient: return "BadAmbient";
    case ErrorKind::SupportOverlap: return "SupportOverlap";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSmoothInput: return "NotSmoothInput";
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& what, std::size_t line) {
  std::string msg(to_string(kind));
  if (line != 0) msg += " (line " + std::to_string(line) + ")";
  msg += ": ";
  msg += what;
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::size_t line)
    : std::runtime_error(decorate(kind, what, line)), kind_(kind), line_(line) {}

}  // namespace mspread
