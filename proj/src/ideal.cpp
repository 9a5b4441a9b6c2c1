#include "charp/ideal.hpp"

#include "charp/groebner.hpp"

#include <sstream>

namespace charp {

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  auto state = std::make_shared<State>();
  state->gens.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_monomial()) state->monomial = false;
    state->gens.push_back(std::move(g));
  }
  state_ = std::move(state);
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::one(ring)}); }

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {}); }

const std::vector<Polynomial>& Ideal::canonical() const {
  std::call_once(state_->once, [this] {
    const auto& gens = state_->gens;
    if (state_->monomial) {
      std::vector<Monomial> monomials;
      monomials.reserve(gens.size());
      for (const auto& g : gens) monomials.emplace_back(g.lead_exponents());
      state_->canon = minimalize_monomials(ring_, std::move(monomials));
    } else {
      state_->canon = buchberger(ring_, gens);
    }
  });
  return state_->canon;
}

bool Ideal::is_unit() const {
  for (const auto& g : state_->gens)
    if (g.is_constant()) return true;
  const auto& c = canonical();
  return c.size() == 1 && c.front().is_constant();
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : canonical()) out.push_back(g.str());
  return out;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& g : canonical()) {
    if (!first) os << ", ";
    os << g.str();
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace charp
