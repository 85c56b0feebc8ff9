#pragma once

// Expression parser for elements of K = F((pi)).
//
// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 'y' | 'pi' | 'g' | '(' expr ')'
// 'g' is the multiplicative generator of GF(q) fixed by the field
// construction. Negative exponents require an invertible (single-term)
// base. Whitespace is ignored.

#include <string>

#include "swanlab/laurent.hpp"

namespace swanlab {

LaurentElem parse_element(const std::string& src, const FieldConfig& F);

// Same grammar, then requires the value to lie in F (no pi support).
ResidueElem parse_residue_element(const std::string& src,
                                  const FieldConfig& F);

}  // namespace swanlab
