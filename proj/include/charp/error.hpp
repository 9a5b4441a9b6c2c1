#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

enum class ErrorCode {
  NotPrime,
  DuplicateVariable,
  EmptyVariableList,
  InvalidVariable,
  SyntaxError,
  UnknownVariable,
  RingMismatch,
  ZeroPolynomial,
  UnitPolynomial,
  ResourceLimit,
  OutOfInterval,
  PartsMismatch,
  Undecidable,
  InvalidArgument,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

/// Base of every error raised by the library. The code is the stable,
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorCode::ResourceLimit, what) {}
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace charp
