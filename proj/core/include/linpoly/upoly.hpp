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

#ifndef LINPOLY_UPOLY_HPP
#define LINPOLY_UPOLY_HPP

#include <random>

#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

using PolyF = Poly<FFElem>;

/// Coefficient field of a nonzero polynomial over FFElem.
FieldCtx poly_ctx(const PolyF& f);

/// x^(|ctx|^k) mod f, by k successive |ctx|-power steps of the residue.
PolyF frobenius_power_mod(const PolyF& f, u32 k);

/// Irreducibility over the (finite) coefficient field, by the q-power
/// residue criterion with early exit on small-degree factors.
bool is_irreducible(const PolyF& f);

/// Distinct-degree factorization degrees: (degree, number of irreducible
/// factors of that degree), ascending.  Requires f squarefree.
std::vector<std::pair<u32, u32>> ddf_degrees(const PolyF& f);

/// All roots of f lying in E (coefficients are embedded into E first),
/// distinct, sorted in the canonical element order.
std::vector<FFElem> roots_in(const PolyF& f, const FieldCtx& E, u64 seed = kDefaultSeed);

/// Coefficient-wise embedding into an extension field.
PolyF embed_poly(const PolyF& f, const FieldCtx& E);

/// Uniformly random polynomial of degree exactly d (monic when requested).
PolyF random_poly(const FieldCtx& ctx, u32 d, std::mt19937_64& rng, bool monic = false);

}  // namespace linpoly

#endif
