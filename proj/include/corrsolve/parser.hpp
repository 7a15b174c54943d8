#ifndef CORRSOLVE_PARSER_HPP
#define CORRSOLVE_PARSER_HPP

#include <string>
#include <string_view>

#include "corrsolve/bipoly.hpp"

namespace corrsolve {

// Parses the polynomial grammar
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := 'x' | 'y' | rational-literal | '(' expr ')'
// with rational literals "a" or "a/b" (integers) and case-insensitive
// variables. Multiplication must be explicit. Throws parse_error with the
// offending position.
BiPoly parse_bipoly(std::string_view text);

// Deterministic graded-lex rendering; parse_bipoly(print_canonical(p)) == p.
std::string print_canonical(const BiPoly& p);

} // namespace corrsolve

#endif
