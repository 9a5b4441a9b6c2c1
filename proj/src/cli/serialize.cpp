#include "charp/serialize.hpp"

#include "charp/parser.hpp"

namespace charp {

Json to_json(const Rational& r) { return r.fraction(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidArgument, "rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const Ideal& ideal) {
  Json out = Json::array();
  for (auto& g : ideal.generator_strings()) out.push_back(std::move(g));
  return out;
}

Ideal ideal_from_json(const Ring& ring, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "ideal must be an array of generators");
  std::vector<Polynomial> gens;
  for (const auto& g : j) {
    if (!g.is_string()) fail(ErrorCode::InvalidArgument, "generator must be a string");
    gens.push_back(parse_poly(ring, g.get<std::string>()));
  }
  return Ideal(ring, std::move(gens));
}

Json to_json(const JumpCertificate& c) {
  Json j;
  j["value"] = to_json(c.value);
  j["status"] = to_string(c.status);
  j["tauAt"] = to_json(c.tau_at);
  j["tauLeft"] = to_json(c.tau_left);
  if (c.cell_lo) j["cellLo"] = to_json(*c.cell_lo);
  return j;
}

Json to_json(const std::vector<JumpCertificate>& jumps) {
  Json arr = Json::array();
  for (const auto& c : jumps) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const FptResult& r) {
  Json j;
  j["certified"] = r.certified;
  if (r.certified) j["fpt"] = to_json(r.certificate->value);
  j["lo"] = to_json(r.lo);
  j["hi"] = to_json(r.hi);
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  return j;
}

Json to_json(const HslReport& r) {
  Json j;
  j["hsl"] = r.hsl;
  Json chain = Json::array();
  for (const auto& I : r.chain) chain.push_back(to_json(I));
  j["chain"] = std::move(chain);
  return j;
}

Json error_json(ErrorCode code, const std::string& message) {
  Json inner;
  inner["code"] = to_string(code);
  inner["message"] = message;
  Json j;
  j["error"] = std::move(inner);
  return j;
}

std::string ideal_text(const Json& gens) {
  std::string s = "(";
  bool first = true;
  for (const auto& g : gens) {
    if (!first) s += ", ";
    s += g.get<std::string>();
    first = false;
  }
  return s + ")";
}

}  // namespace charp
