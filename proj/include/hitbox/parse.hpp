#pragma once

#include <string_view>

#include "hitbox/poly.hpp"

namespace hitbox {

/// Parses the polynomial grammar: integer or a/b literals, variables T and
/// X, operators + - * ^ and parentheses. Whitespace is ignored.
///
///   3*X^4 - 4*X^3 + 1 + 3*T^2
///
/// Throws ParseError carrying the offending character position.
BiPoly parse_bipoly(std::string_view text);

/// Parses a polynomial in X only; a T anywhere is a ParseError.
QPoly parse_xpoly(std::string_view text);

}  // namespace hitbox
