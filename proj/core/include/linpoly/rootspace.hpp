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

#ifndef LINPOLY_ROOTSPACE_HPP
#define LINPOLY_ROOTSPACE_HPP

#include <optional>

#include "linpoly/linearize.hpp"
#include "linpoly/linpoly.hpp"
#include "linpoly/monomials.hpp"

namespace linpoly {

/**
 * A q-polynomial together with its splitting field and root space: the
 * GF(q)-vector space of roots, an ordered basis, and the tower data needed
 * to expand elements of E in coordinates.
 *
 * When the coefficient field is GF(q) itself and L(x)/x is irreducible, the
 * basis is the q-power orbit alpha, alpha^q, ..., alpha^(q^(n-1)) of the
 * canonical-first nonzero root (provenance "special"); otherwise a greedy
 * independent subset of the canonically sorted roots (provenance "generic").
 */
struct RootSpace {
    LinPolyF L;
    u64 q = 0;
    u32 n = 0;               // q-degree of L
    FieldCtx F;              // coefficient field
    FieldCtx Fq;             // the GF(q) tower level inside F
    FieldCtx E;              // splitting field
    u32 D = 0;               // [E : F]
    bool m_irreducible = false;  // whether L(x)/x is irreducible over F
    std::vector<FFElem> roots;   // all q^n roots, canonically sorted
    std::vector<FFElem> basis;   // v_1..v_n
    std::string basis_provenance;  // "special" | "generic"

    bool is_root(const FFElem& v) const;
};

/// Build the splitting field and root space of L over F.  Requires a
/// nonzero a_0 (distinct roots) and F_q to be a tower level of F.
RootSpace splitting_field(const LinPolyF& L, const FieldCtx& F, const Caps& caps = {},
                          u64 seed = kDefaultSeed);

/// Matrix over GF(q) of the Frobenius generator v -> v^|F| of Gal(E/F) in
/// the root-space basis; row i holds the coordinates of basis[i]^|F|.
Matrix<FFElem> frobenius_matrix(const RootSpace& rs);

/// Coefficient-field selector for evaluation maps: forms over GF(q) or over
/// the full coefficient field F.
enum class CoeffSel { subfield, full };

struct EvalMapReport {
    u32 n = 0;
    u64 r = 0;
    FieldCtx K;                       // GF(q) for subfield forms, F for full
    MonomialBasis monomials;          // graded-lex decreasing
    Matrix<FFElem> matrix;            // rows = monomials, cols = E-over-K coordinates
    std::vector<std::vector<FFElem>> kernel;  // forms (coefficient vectors over K) evaluating to 0
    bool injective = false;
    std::string basis_provenance;
};

/// Evaluate every degree-r monomial in the basis roots, expand over K, and
/// compute the kernel of the evaluation map.
EvalMapReport eval_map_kernel(const RootSpace& rs, u64 r, CoeffSel sel, const Caps& caps = {});

struct PairDependenceReport {
    FFElem alpha, beta;
    FieldCtx K;
    std::optional<u32> m;      // smallest m with alpha^m, ..., beta^m dependent over K
    u32 cap = 0;               // search bound when no dependence was found
    FFElem gamma;              // alpha / beta
    u32 gamma_degree = 0;      // degree of the minimal polynomial of gamma over K
    u64 bound = 0;             // q^k + 1 for the gap index k of L
    bool degree_matches_m = false;
};

/// Search m = 2..cap for the first K-dependence among alpha^m, ...,
/// beta^m and cross-check against the minimal-polynomial degree of
/// gamma = alpha/beta.
PairDependenceReport min_pair_dependence(const RootSpace& rs, const FFElem& alpha, const FFElem& beta,
                                         CoeffSel sel, u32 cap);

struct DirectSumReport {
    std::vector<u32> dims;  // dims of the images for r = 0..q-1
    u32 total = 0;          // rank of the combined span
    bool is_direct = false;
};

/// Span dimensions of the evaluation images for r = 0..q-1 inside E and
/// whether their sum is direct.  Requires F = GF(q), L(x)/x irreducible,
/// and the special basis.
DirectSumReport direct_sum_check(const RootSpace& rs);

}  // namespace linpoly

#endif
