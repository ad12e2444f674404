#ifndef GALWALKS_EXPR_HPP
#define GALWALKS_EXPR_HPP

#include <string>
#include <vector>

#include "galwalks/frac.hpp"

namespace gw {

// Rational-expression parser: +, -, *, /, ^ (non-negative integer powers),
// parentheses, integer literals, and the listed variable names.
Frac parse_expr(const std::string& text, const std::vector<std::string>& allowed_vars);

// Canonical text: terms in descending lex order, fixed variable order
// X, Y, t, Z then parameters; fractions printed as (num)/(den).
std::string to_string(const Poly& p);
std::string to_string(const Frac& f);

}  // namespace gw

#endif
