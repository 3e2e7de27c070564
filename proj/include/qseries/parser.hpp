#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qseries/ast.hpp"
#include "qseries/identity.hpp"

namespace qseries {

// Identity language
// -----------------
//
//   identity := [ "@" name ] expr ( "==" | "~=" ) expr
//   expr     := term { ("+" | "-") term }
//   term     := factor { ("*" | "/") factor }
//   factor   := "-" factor | atom [ "^" power ]
//   power    := "(" rational ")" | rational
//   atom     := "q" [ "^" power ] | rational | "sqrt2" | "{" a+b*sqrt2 "}"
//             | "eta" "(" rational ")" | "etaq" "(" rational ":" rational { "," rational ":" rational } ")"
//             | "poch" "(" sign "," rational "," rational ")"
//             | "f" "(" [sign] "q" [ "^" power ] "," [sign] "q" [ "^" power ] ")"
//             | ("phi" | "psi" | "H" | "I" | "G1" | "G2" | "G3") "(" rational ")"
//             | ("T1N" | "R") "(" int ")"
//             | "root" "(" expr "," int ")" | "subst" "(" expr "," rational ")"
//             | "lambert" "(" int "," int "," int "," weight "," "[" signed-int { "," signed-int } "]" ")"
//             | ("psi11l" | "psi11r") "(" rational "," rational "," rational ")"
//             | "(" expr ")"
//   rational := [ "-" ] int [ "/" int ]      (no whitespace inside a literal)
//   weight   := "unit" | "linear" | "legendre" "(" int ")"
//
// Function arguments are the substitution multiplier r: phi(2) is phi(q^2), H(1/2) is h(q^{1/2}).
// "~=" marks an identity that holds up to sign. '#' starts a comment.

ExprPtr parse_expr(std::string_view text);

/// Parses exactly one identity. The id defaults to "user" when no "@name" is given.
Identity parse_identity(std::string_view text);

/// Parses a sequence of identities (e.g. a whole file). Unnamed ones get "identity-<n>".
std::vector<Identity> parse_identities(std::string_view text);

/// Text that parses back to a structurally equal tree.
std::string render(const Expr& expr);
std::string render(const Identity& identity);

}  // namespace qseries
