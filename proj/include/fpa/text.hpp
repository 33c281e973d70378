#pragma once

// Text forms. Expressions follow
//
//   expr   := term (("+" | "-") term)*
//   term   := "-"? factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := rational | "x" nat | "{" expr "," expr "}" | "[" expr "," expr "]" | "(" expr ")"
//
// with rational := int ("/" nat)?. Whitespace is ignored between tokens.
// Printing uses square brackets for basis Lie monomials and orders terms by
// the canonical monomial order, so parse_expr(format_expr(f), n) == f.

#include <string>
#include <string_view>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/poisson_poly.hpp"

namespace fpa {

/// Throws ParseError with the offending offset and the expected tokens.
PoissonPoly parse_expr(std::string_view text, int n);
std::string format_expr(const PoissonPoly& f);

/// "f1 ; f2 ; ..." with exactly n images in generator order.
Derivation parse_derivation(std::string_view text, int n);
/// "x2 d/dx1 + 0 d/dx2"; images with several terms or a leading sign are
/// parenthesized.
std::string format_derivation(const Derivation& d);

/// "x1 -> e1; x2 -> e2", each generator exactly once, in any order.
Endomorphism parse_endomorphism(std::string_view text, int n);
std::string format_endomorphism(const Endomorphism& theta);

}  // namespace fpa
