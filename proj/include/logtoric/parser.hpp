#pragma once

#include <string>
#include <vector>

#include "logtoric/integers.hpp"
#include "logtoric/laurent.hpp"

namespace logtoric {

// Parses a polynomial over the given variable names into a Laurent
// polynomial whose exponent lattice has one coordinate per name, in order.
// Grammar: integer literals, variable names, + - * ^ and parentheses;
// exponents are integer literals (optionally parenthesized and signed), and
// a negative exponent requires a one-term base.  Whitespace is ignored.
// Errors are ParseError with the 0-based character offset: unknown variable
// names, non-integer exponents, unbalanced parentheses, and unexpected end
// of input (reported at the last consumed character).
LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& var_names);

// Renders p over the variable names so that parsing the result again yields
// the identical term map.  Terms appear in the deterministic order of the
// term map; integer coefficients print bare, non-integer rationals as
// num/den (which parse_polynomial does not accept).
std::string polynomial_str(const LaurentPolynomial& p,
                           const std::vector<std::string>& var_names);

}  // namespace logtoric
