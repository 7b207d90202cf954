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

#ifndef LINPOLY_LINEARIZE_HPP
#define LINPOLY_LINEARIZE_HPP

#include "linpoly/linpoly.hpp"

namespace linpoly {

/**
 * Minimal q-linearized multiple of f, found by growing the residue matrix
 * x^(q^i) mod f one row per q-powering step and stopping at the first
 * linear dependence.  The q-degree d is minimal by construction, with d <=
 * deg f, and the residues below d form a full-rank minimality certificate.
 */
template <class K>
struct LinearizationReport {
    Poly<K> f;
    u64 q;
    u32 d;
    LinPoly<K> lin;                // monic, f | lin_decode(lin)
    std::vector<K> dependence;     // b_0..b_d with b_d = 1
    u32 residues_computed;         // trace length of the q-powering scan
};

template <class K>
struct AffineMultipleReport {
    Poly<K> f;
    u64 q;
    u32 dprime;      // minimal affine q-degree
    LinPoly<K> lin;  // L with f | lin_decode(L) + constant
    K constant;
};

namespace detail {

template <class K>
std::vector<K> residue_coords(const Poly<K>& r, std::size_t m, const K& zero) {
    std::vector<K> v(m, zero);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r[i];
    return v;
}

}  // namespace detail

template <class K>
LinearizationReport<K> min_linearized_multiple(const Poly<K>& f, u64 q) {
    if (f.deg() < 1) throw std::invalid_argument("linearization requires deg f >= 1");
    const std::size_t m = std::size_t(f.deg());
    const K zero = f.lead().zero();
    u64 p = characteristic_of(f.lead());
    if (q != p && power_exponent(q, p) == 0)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of the characteristic " +
                                    std::to_string(p));

    SpanTracker<K> span(m, zero);
    Poly<K> r = Poly<K>::x(f.lead().one()) % f;
    u32 i = 0;
    while (true) {
        auto dep = span.add(detail::residue_coords(r, m, zero));
        if (dep) {
            // x^(q^i) = sum_{j<i} b_j x^(q^j) mod f
            std::vector<K> coeffs = std::move(*dep);
            for (K& c : coeffs) c = -c;
            coeffs.push_back(zero.one());
            LinPoly<K> L(q, std::move(coeffs));
            return {f, q, i, L, L.coeffs(), i + 1};
        }
        if (i == m) throw std::logic_error("no dependence among m+1 residues in an m-dimensional space");
        r = Poly<K>::pow_mod(r, q, f);
        ++i;
    }
}

template <class K>
AffineMultipleReport<K> min_affine_multiple(const Poly<K>& f, u64 q) {
    if (f.deg() < 1) throw std::invalid_argument("linearization requires deg f >= 1");
    const std::size_t m = std::size_t(f.deg());
    const K zero = f.lead().zero();
    u64 p = characteristic_of(f.lead());
    if (q != p && power_exponent(q, p) == 0)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of the characteristic " +
                                    std::to_string(p));

    SpanTracker<K> span(m, zero);
    // the constant residue rides along as column zero of the scan
    std::vector<K> one_vec(m, zero);
    one_vec[0] = zero.one();
    span.add(std::move(one_vec));

    Poly<K> r = Poly<K>::x(f.lead().one()) % f;
    u32 i = 0;
    while (true) {
        auto dep = span.add(detail::residue_coords(r, m, zero));
        if (dep) {
            // x^(q^i) = c*1 + sum_{j<i} b_j x^(q^j) mod f
            std::vector<K> combo = std::move(*dep);
            K constant = -combo[0];
            std::vector<K> coeffs(combo.begin() + 1, combo.end());
            for (K& c : coeffs) c = -c;
            coeffs.push_back(zero.one());
            LinPoly<K> L(q, std::move(coeffs));
            return {f, q, i, L, constant};
        }
        if (i == m) throw std::logic_error("no dependence among m+2 residues in an m-dimensional space");
        r = Poly<K>::pow_mod(r, q, f);
        ++i;
    }
}

/// Dimension of the GF(q)-span of the roots of a squarefree f in a splitting
/// field built from its factor degrees.  Independent oracle for the minimal
/// q-degree reported by min_linearized_multiple.
u32 root_span_dim(const Poly<FFElem>& f, u64 q, u64 seed = kDefaultSeed);

}  // namespace linpoly

#endif
