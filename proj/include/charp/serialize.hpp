#pragma once

#include "charp/error.hpp"
#include "charp/hsl.hpp"
#include "charp/testideal.hpp"

#include <json.hpp>

namespace charp {

/// Insertion-ordered, so the same report always dumps to the same bytes.
using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings, never as floats.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// An ideal is the list of its reduced Groebner basis generators.
Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Ring& ring, const Json& j);

Json to_json(const JumpCertificate& c);
Json to_json(const FptResult& r);
Json to_json(const HslReport& r);
Json to_json(const std::vector<JumpCertificate>& jumps);

Json error_json(ErrorCode code, const std::string& message);

/// "(g1, g2)" from a generator list.
std::string ideal_text(const Json& gens);

}  // namespace charp
