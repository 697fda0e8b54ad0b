#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "severi/base_field.hpp"

namespace severi {

/// A polynomial with rational coefficients in a fixed number of named
/// variables, as read from text. No field reduction has happened yet.
struct RationalPoly {
  int nvars = 0;
  std::map<std::vector<int>, Scalar> terms;
};

/// Maps identifiers (including aliases such as X/Y/Z) to variable slots.
using VariableTable = std::map<std::string, int, std::less<>>;

/// Grammar: sums of products of factors; a factor is an integer, an
/// identifier from `vars`, or a parenthesized expression, each optionally
/// raised to a nonnegative integer power. Division is only allowed by
/// constants, so `p/q` coefficients and `(1/2)*t` both parse.
RationalPoly parse_rational_poly(std::string_view text, const VariableTable& vars, int nvars);

}  // namespace severi
