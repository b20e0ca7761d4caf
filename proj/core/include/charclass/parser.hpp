#ifndef CHARCLASS_PARSER_HPP
#define CHARCLASS_PARSER_HPP

#include <string>

#include "charclass/polynomial.hpp"

namespace charclass {

// Parses the CLI polynomial syntax: identifiers for variables, `^` for
// powers, `*` optional between factors, integer or rational coefficients,
// `+`/`-` and parentheses. Example: "x0^3 - 2*x1^2*x2".
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx, const Field& field);

}  // namespace charclass

#endif
