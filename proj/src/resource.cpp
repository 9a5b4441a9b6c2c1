#include "charp/resource.hpp"

#include "charp/error.hpp"

namespace charp {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
}

Limits& limits() {
  static Limits instance;
  return instance;
}

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget)
    : previous_(t_deadline) {
  auto next = std::chrono::steady_clock::now() + budget;
  if (!t_deadline || next < *t_deadline) t_deadline = next;
}

ScopedDeadline::~ScopedDeadline() { t_deadline = previous_; }

void check_deadline() {
  if (t_deadline && std::chrono::steady_clock::now() > *t_deadline)
    throw ResourceLimit("timeout: deadline exceeded");
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::EmptyVariableList: return "EmptyVariableList";
    case ErrorCode::InvalidVariable: return "InvalidVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnitPolynomial: return "UnitPolynomial";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::PartsMismatch: return "PartsMismatch";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace charp
