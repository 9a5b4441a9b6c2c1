#pragma once

#include "charp/error.hpp"
#include "charp/frobenius.hpp"

#include <vector>

namespace charp {

/// Chain I_0 = (1), I_{l+1} = (f^(p-1) I_l)^[1/p], so I_l = tau(f^(1-1/p^l)).
/// hsl is the first index where the chain repeats, but at least 1.
struct HslReport {
  unsigned hsl = 1;
  std::vector<Ideal> chain;
  Ideal stabilized;
};

/// Thrown when the chain is still moving after l_max steps; carries the
/// partial chain (stabilized holds the last ideal reached).
class HslLimitExceeded : public ResourceLimit {
 public:
  HslLimitExceeded(const std::string& what, HslReport partial)
      : ResourceLimit(what), partial_(std::move(partial)) {}
  const HslReport& partial() const { return partial_; }

 private:
  HslReport partial_;
};

/// (f^(p-1) I)^[1/p].
Ideal cartier_step(const PowerLadder& f, const Ideal& ideal);
Ideal cartier_step(const Polynomial& f, const Ideal& ideal);

HslReport hsl_number(const Polynomial& f, unsigned l_max = 64);

/// binomial(n + M, n) + 1.
Integer hsl_upper_bound(unsigned n, unsigned M);

}  // namespace charp
