#pragma once

#include "apolar/multipoly.hpp"

#include <string_view>

namespace apolar {

// "x:3,y:2" declares x0..x2 and y0,y1. Labels use letters, '_' and '\''.
VarSpace parse_groups(std::string_view text);

// Polynomial text: terms joined by '+'/'-', each an optional rational coefficient and
// powers separated by '*' or whitespace, e.g. "-2/5 x0^2*y1 + x1 y0". '#' starts a
// comment running to end of line. All terms must share one multidegree.
// Throws ParseError carrying the 1-based line and column of the offending token.
MultiPoly parse_polynomial(std::string_view text, const VarSpace& space);

} // namespace apolar
