#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bhk {

enum class ErrorCode {
  SingularMatrix,
  NoPositiveWeights,
  ParseError,
  ShapeError,
  NotInvertibleShape,
  NotSubgroup,
  JMismatch,
  TooLarge,
  InvarianceViolation,
  DegenerateConfig,
  ResourceLimit,
  NotGorenstein,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure surfaced by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse errors also report the byte offset into the input.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace bhk
