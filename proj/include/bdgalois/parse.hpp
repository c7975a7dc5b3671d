#pragma once

#include "bdgalois/rational.hpp"
#include "bdgalois/rational_function.hpp"

#include <string>

namespace bdgalois {

// Parses the canonical text grammar for rational functions: integer literals,
// + - * / ^ (nonnegative integer exponents), the variable ('x' or 'z'),
// parentheses. print -> parse round-trips exactly.
RationalFunction<Rational> parse_rational_function(const std::string& text);

}  // namespace bdgalois
