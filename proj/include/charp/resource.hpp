#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace charp {

/// Process-wide tunables for the guards that turn runaway computations into
/// ResourceLimit errors. Read at call time; set once at startup.
struct Limits {
  /// Largest exponent a Frobenius power may create in one variable.
  std::uint64_t max_frobenius_exponent = std::uint64_t{1} << 40;
  /// Iteration bound for fixed-point chains (Cartier chains, HSL chains).
  unsigned chain_bound = 64;
  /// Largest p^e allowed for a full grid scan of the unit interval.
  std::uint64_t max_grid = 1'000'000;
  /// Candidate evaluations allowed while certifying jumps inside one cell.
  unsigned max_certify_steps = 4096;
};

Limits& limits();

/// Cooperative per-thread deadline. Long loops call check_deadline(), which
/// throws ResourceLimit once the deadline installed by ScopedDeadline passed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace charp
