#pragma once

#include <string>
#include <vector>

#include "quadpreper/dynatomic.hpp"
#include "quadpreper/qfield.hpp"

namespace quadpreper {

// Element grammar used everywhere (CLI, files):
//   a | a/b | (a/b)+(c/d)*sqrt(D)
// The parser is forgiving about whitespace and accepts a leading '-' on each
// rational; the printer (QuadElem::str) emits the grammar bit-exactly.

QuadElem parse_elem(const std::string& text);
// convenience: parse an element that must live in (or embed into) k
QuadElem parse_elem(const std::string& text, const FieldDesc& k);

Rational parse_rational(const std::string& text);

// Univariate polynomial expressions over Q in one free variable (any
// identifier): sums/differences/products/powers and parenthesized groups,
// e.g. "-u*(u^2+1)*(u^2-2*u-1)" or "t^6+2*t^5+5*t^4+10*t^3+10*t^2+4*t+1".
// The '*' between a coefficient and a variable may be omitted.
UniPoly parse_unipoly(const std::string& text);

// printer for rational-coefficient UniPoly: descending powers, exact
std::string unipoly_str(const UniPoly& f, const std::string& var = "x");

}  // namespace quadpreper
