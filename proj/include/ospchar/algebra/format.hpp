#pragma once

#include <string>
#include <string_view>

#include "ospchar/algebra/laurent.hpp"

namespace ospchar {

/// Parses the canonical text form (`3*x1^2*y1 - x1^-1 + 1`). Whitespace is
/// free; terms may repeat and appear in any order. Variables must belong to
/// `vars`.
LaurentPolynomial parse_polynomial(std::string_view text, const VarSetPtr& vars);

/// `{"vars":[...],"terms":[{"c":"<decimal>","e":[...]}]}` with terms in
/// canonical order. Output is byte-stable.
std::string to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(std::string_view json);

}  // namespace ospchar
