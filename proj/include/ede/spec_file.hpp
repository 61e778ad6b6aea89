#pragma once

#include <string>
#include <string_view>

#include "ede/reduction.hpp"

namespace ede {

// Parses the JSON equation file:
//
//   {"p": 2, "r": 1, "t": 1,
//    "ring": "scalar" | {"companion": {"n", "rho", "minpoly_numerators": [...]}},
//    "equations": [{"summands": [{"poly_coeff"?, "Q", "P": [...]}]}]}
//
// Polynomials are strings in the gf_poly text format; poly_coeff uses the t
// unknowns as its variables. In a companion ring Q and each P entry may also
// be a list of xi-coefficients, lowest power first. ParseError messages carry
// line:column for JSON syntax errors and a field path otherwise.
SystemSpec parse_spec(std::string_view text);
SystemSpec load_spec_file(const std::string& path);

}  // namespace ede
