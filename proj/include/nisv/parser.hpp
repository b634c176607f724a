#pragma once

#include "nisv/halfplane.hpp"
#include "nisv/symbols.hpp"

#include <string>

namespace nisv {

/// Parse a disc symbol from the plain-text mini-grammar:
///
///   expr    := term ('*' term)*
///   term    := factor ('^' INT)?
///   factor  := NUMBER | 'i' | 'z'
///            | 'blaschke(' cnum [',' cnum] ')'     zero a [, unimodular lambda]
///            | 'phi(' NUMBER ')'                   singular inner phi^t
///            | 'conj(' expr ')'                    conjugate on the circle
///            | 'conjz' ('^' INT)?                  conj(z)^k shorthand
///            | 'compose(' expr ',' expr ')'
///            | 'rat(' rational-in-z ')'
///            | '(' expr ')'
///   cnum    := NUMBER | NUMBER ('+'|'-') NUMBER 'i' | 'i' | 'expi(' NUMBER ')'
///
/// rational-in-z uses +, -, *, ^, parentheses, numbers, and the variable z.
SymbolExpr parse_symbol(const std::string& text);

/// Parse a half-plane function in the variable s: a rational expression with
/// +, -, *, /, ^ and optional 'exp(-D*s)' delay factors. Example:
/// "(s+3)/((1+s)*(s+2))*exp(-1.5*s)".
HalfPlaneRational parse_halfplane(const std::string& text);

/// Parse a complex number: "0.5", "1+2i", "-i", "expi(1.047)".
Cplx parse_complex(const std::string& text);

/// Parse a bare rational expression in the given variable, e.g. "(z+3)/((z+2))".
RationalFn parse_rational(const std::string& text, char var);

} // namespace nisv
