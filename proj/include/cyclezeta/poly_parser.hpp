#pragma once

#include <string_view>

#include "cyclezeta/polynomial.hpp"

namespace cyclezeta {

// Variable vocabulary accepted by the parser.
//   Affine:        z1..z9 (bare z means z1), one polynomial variable each.
//   Pairs:         X1..X9, Y1..Y9; Xi is variable 2(i-1), Yi is 2(i-1)+1.
//   FunctionField: t only.
enum class VarStyle { Affine, Pairs, FunctionField };

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | variable | '(' expr ')'
// Whitespace is ignored. `nvars` is the number of z variables (Affine),
// pairs (Pairs) or 1 (FunctionField); 0 infers it from the largest index.
IntPoly parse_poly(std::string_view text, VarStyle style, int nvars = 0);

}  // namespace cyclezeta
