#pragma once

#include "pshnd/polynomial.hpp"

#include <string>
#include <string_view>

namespace pshnd {

// Expression language over the four formal variables.
//
//   expr   := term (("+" | "-") term)*
//   term   := unary ("*" unary)*
//   unary  := "-" unary | power
//   power  := atom ("^" nat)?
//   atom   := "z" | "zb" | "w" | "wb" | "i" | "nsq" | number
//           | ("Re" | "Im" | "conj" | "abs2") "(" expr ")"
//           | "(" expr ")"
//   number := nat ("/" nat)?
//
// No implicit multiplication. "^" requires a non-negative integer literal.
// nsq is z*zb + w*wb. Whitespace between tokens is ignored; input is
// UTF-8 and error columns count code points, 1-based.
MixedPolynomial parse(std::string_view src);

// Parses a source that must have the shape sign1*abs2(f1) +- abs2(f2) ...
// with each abs2 argument free of zb/wb after expansion. Anything else is
// rejected. Unary minus chains collapse into the sign.
ModulusCombination parse_modulus_combination(std::string_view src);

// Canonical one-line rendering, term by term in canonical term order.
// parse(format(p)) == p.
std::string format(const MixedPolynomial& p);
std::string format(const HolomorphicPolynomial& p);

}  // namespace pshnd
