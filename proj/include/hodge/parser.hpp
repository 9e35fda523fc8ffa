#pragma once

#include <cstddef>
#include <string>

#include "hodge/polynomial.hpp"

namespace hodge {

// Parse failure with the 1-based character position of the offending token.
struct ParseError : Error {
  ParseError(std::size_t position, const std::string& msg)
      : Error("parse error at position " + std::to_string(position) + ": " + msg),
        pos(position) {}
  std::size_t pos;
};

// Grammar: sums/differences of products of powers; atoms are integer or
// a/b rational literals, ring variables, and parenthesized expressions.
// Multiplication is always explicit (*); exponents are nonnegative integer
// literals after ^. Unary minus is allowed before any factor.
Polynomial parse_polynomial(const Ring& ring, const std::string& text,
                            MonomialOrder order = MonomialOrder::degrevlex());

}  // namespace hodge
