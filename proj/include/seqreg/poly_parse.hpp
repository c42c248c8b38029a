#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqreg/poly.hpp"

namespace seqreg {

/// Parses the textual polynomial syntax: integer or rational coefficients,
/// `^` for powers, `*` optional between factors, parentheses, and the
/// declared variable names. Errors are ParseError positioned at
/// (line, column + offset within text).
Poly parse_poly(std::string_view text, Field field, const std::vector<std::string>& vars, int line = 1,
                int column = 1);

}  // namespace seqreg
