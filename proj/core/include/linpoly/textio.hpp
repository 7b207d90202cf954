/*
   Copyright 2026 linpoly contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINPOLY_TEXTIO_HPP
#define LINPOLY_TEXTIO_HPP

#include <string>

#include "linpoly/monomials.hpp"
#include "linpoly/poly.hpp"
#include "linpoly/ratfun.hpp"

namespace linpoly {

/**
 * Field description text:
 *   "GF(2)", "GF(9)"                      prime or auto-towered prime power
 *   "GF(2)[g]/(g^2 + g + 1)"              explicit modulus (nestable)
 *   "GF(2)(t)"                            rational function field over the above
 */
struct FieldDesc {
    FieldCtx ctx;
    bool rational = false;
};

FieldDesc parse_field(const std::string& text);

/// Polynomial text over a finite field, e.g. "x^4 + (g + 1)*x^2 + g".
/// The main variable defaults to "x"; tower generator names are in scope.
Poly<FFElem> parse_poly_ff(const std::string& text, const FieldCtx& ctx, const std::string& var = "x");

/// Polynomial text over GF(q)(t), e.g. "x^24 + x + t" or "(t^88 + t^65)*x^512".
Poly<RatFun> parse_poly_rat(const std::string& text, const FieldCtx& coeff_field,
                            const std::string& var = "x");

std::string elem_to_text(const FFElem& a);
std::string ratfun_to_text(const RatFun& a);

/// Canonical printing: descending exponents, " + " separators, composite
/// coefficients parenthesized, unit coefficients omitted.  Round-trips
/// through the matching parser.
std::string poly_to_text(const Poly<FFElem>& f, const std::string& var = "x");
std::string poly_to_text(const Poly<RatFun>& f, const std::string& var = "x");

/// Homogeneous form text over variables x1..xn, e.g. "x1^2*x2 + x2^3".
std::string form_to_text(const std::vector<FFElem>& coeffs, const MonomialBasis& basis);

}  // namespace linpoly

#endif
