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

#ifndef LINPOLY_SYMMOD_HPP
#define LINPOLY_SYMMOD_HPP

#include "linpoly/monomials.hpp"
#include "linpoly/rootspace.hpp"

namespace linpoly {

/**
 * Substitution action of an invertible matrix g over GF(q) on homogeneous
 * forms: P^g(x_1..x_n) = P(g x_1, ..., g x_n) with g x_i = sum_j g_ij x_j.
 * This is a right action: (P^g)^h = P^(gh).  Coefficient vectors are indexed
 * by `basis`; coefficients may live in any tower extension of g's field.
 */
std::vector<FFElem> gl_act(const Matrix<FFElem>& g, const std::vector<FFElem>& coeffs,
                           const MonomialBasis& basis);

/// Matrix A of the gl_act action of g on the degree-r form space, in column
/// convention: A * coeffs = coefficients of the image form (column i is the
/// image of the i-th basis monomial).
Matrix<FFElem> action_matrix(const Matrix<FFElem>& g, const MonomialBasis& basis);

enum class SpinVerdict { irreducible, reducible, inconclusive };

struct SpinResult {
    u32 span_dim = 0;  // dim of the submodule generated by the last seed
    SpinVerdict verdict = SpinVerdict::inconclusive;
    std::vector<std::vector<FFElem>> witness;  // basis of a proper invariant subspace, when reducible
};

/**
 * Spin seed vectors to the submodule they generate under an algebra of
 * matrices acting on K^dim.  "reducible" comes with a proper nonzero
 * invariant-subspace witness; "irreducible" is only certified by exhaustive
 * seeding over all nonzero vectors up to scalar (requires q^dim small);
 * anything else is "inconclusive".
 */
SpinResult spin_submodule(const std::vector<std::vector<FFElem>>& seeds,
                          const std::vector<Matrix<FFElem>>& generators, u32 dim,
                          bool exhaustive_seeding = false);

/// A small generating set of GL(2, p): both elementary shears plus a
/// diagonal with a generator of GF(p)*.
std::vector<Matrix<FFElem>> gl2_generators(u64 p);

/// The p^n x C(n+r-1, r) matrix with rows indexed by points of GF(p)^n and
/// columns by exponent vectors, entries multinomial(r; k) * prod i_j^(k_j),
/// together with its rank.  Requires r | p - 1.
std::pair<Matrix<FFElem>, u32> multinomial_rank(u32 n, u64 p, u64 r);

/**
 * End-to-end symmetric-power witness for a p-polynomial L and r | p - 1:
 * extract P with P(x^r) = L(x)/x, take its minimal linearized multiple L_P,
 * and check each degree-r monomial in the root basis of L against L_P.
 * The root-space dimension of L_P is compared with the form-space dimension
 * and with injectivity of the degree-r evaluation map.
 */
struct SymWitnessReport {
    LinPolyF L;
    u64 r = 0;
    Poly<FFElem> P;
    LinPolyF L_P;
    u32 dim_roots_LP = 0;      // q-degree of L_P = dim of its root space
    u64 dim_forms = 0;         // C(n+r-1, r)
    bool eval_injective = false;
    bool monomials_all_roots = false;
    std::vector<bool> monomial_root_checks;  // per monomial of the basis
    bool dims_consistent = false;  // dim_roots_LP == dim_forms exactly when injective
};

SymWitnessReport symmetric_power_witness(const LinPolyF& L, u64 r, const Caps& caps = {},
                                         u64 seed = kDefaultSeed);

}  // namespace linpoly

#endif
