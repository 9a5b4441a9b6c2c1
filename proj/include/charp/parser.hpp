#pragma once

#include "charp/polynomial.hpp"

#include <string_view>
#include <vector>

namespace charp {

/// Parses the polynomial grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := integer | var | factor '^' nonneg-integer | '(' expr ')'
///
/// Whitespace is ignored, integers are arbitrary precision and reduced mod p.
/// A single leading sign on an expression is also accepted. Throws
/// SyntaxError (with byte offset) or Error(UnknownVariable).
Polynomial parse_poly(const Ring& ring, std::string_view text);

/// Comma-separated generator list, optionally wrapped in parentheses:
/// "(x^2, y)" or "x^2, y".
std::vector<Polynomial> parse_poly_list(const Ring& ring, std::string_view text);

}  // namespace charp
