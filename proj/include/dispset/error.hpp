#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dispset {

enum class ErrorCode {
  UnknownLeaf,
  WouldEmptyNetwork,
  NoSuchArc,
  NotReticulationArc,
  NotTreeChild,
  NotNormal,
  LeafSetMismatch,
  SyntaxError,
  HybridArityError,
  ValidationError,
  TooManyReticulations,
  IncompleteSwitching,
  GenerationExhausted,
  NoEligibleArc,
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

// Base of every error thrown by the library. The code is the stable part;
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  // Byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dispset
