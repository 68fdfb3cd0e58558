#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topzeta/newton_polytope.hpp"

namespace topzeta {

// Parses polynomial text over the variables x, y, z:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [coeff ['*']] factor ('*' factor)*
//   coeff  := uint ['/' uint]
//   factor := var ['^' uint]
// Whitespace is ignored; like monomials are collected and zero coefficients
// dropped. The ambient dimension is 3 when z occurs in the text, else 2.
// An explicit variable list overrides both the allowed names and the
// coordinate order.
//
// Throws ParseError, ZeroPolynomialError, OriginInSupportError.
SupportedPoly parse_polynomial(std::string_view text,
                               std::optional<std::vector<std::string>> variables = std::nullopt);

}  // namespace topzeta
