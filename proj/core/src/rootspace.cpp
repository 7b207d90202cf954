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

#include "linpoly/rootspace.hpp"

#include <algorithm>
#include <numeric>

#include "linpoly/splitting.hpp"

namespace linpoly {

bool RootSpace::is_root(const FFElem& v) const {
    return std::binary_search(roots.begin(), roots.end(), v,
                              [](const FFElem& a, const FFElem& b) { return a.cmp(b) < 0; });
}

RootSpace splitting_field(const LinPolyF& L, const FieldCtx& F, const Caps& caps, u64 seed) {
    if (L.coeff(0).is_zero())
        throw std::invalid_argument("splitting_field: a_0 = 0 means repeated roots; not a root space");
    for (const FFElem& c : L.coeffs())
        if (c.ctx() != F) throw std::invalid_argument("coefficients do not lie in the stated field");

    RootSpace rs;
    rs.L = L;
    rs.q = L.q();
    rs.n = L.qdeg();
    rs.F = F;
    rs.Fq = F.subfield_level(rs.q);  // throws when GF(q) is not a tower level

    u128 nroots = ipow_u128(rs.q, rs.n);
    if (nroots > caps.max_roots)
        throw CapExceeded("root space size q^n = " + to_string_u128(nroots) + " exceeds cap " +
                          std::to_string(caps.max_roots));

    PolyF decoded = lin_decode(L);
    PolyF M = decoded / PolyF::x(FFElem::one(F));
    rs.m_irreducible = M.deg() >= 1 && is_irreducible(M);

    if (rs.m_irreducible) {
        // E = F[x]/(M); the nonzero roots are the Galois orbit of the class of x
        rs.D = u32(M.deg());
        FFElem first_root;
        if (rs.D == 1) {
            rs.E = F;
            first_root = -(M.monic()[0]);
        } else {
            rs.E = FieldCtxImpl::extension_unchecked(F, M.monic().coeffs(), fresh_gen_name(F));
            first_root = rs.E.gen();
        }
        rs.roots.reserve(std::size_t(nroots));
        rs.roots.push_back(FFElem::zero(rs.E));
        FFElem v = first_root;
        for (u32 i = 0; i < rs.D; ++i) {
            rs.roots.push_back(v);
            if (i + 1 < rs.D) v = v.pow(F.cardinality());
        }
    } else {
        u32 D = 1;
        for (auto [deg, cnt] : ddf_degrees(M)) D = u32(std::lcm(D, deg));
        rs.D = D;
        rs.E = splitting_extension(F, D);
        rs.roots = roots_in(decoded, rs.E, seed);
    }

    std::sort(rs.roots.begin(), rs.roots.end());
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
    if (rs.roots.size() != std::size_t(nroots))
        throw std::logic_error("splitting field does not contain the full root space");

    // basis selection
    if (rs.m_irreducible && F.cardinality() == u128(rs.q)) {
        FFElem alpha = rs.roots[1];  // canonical-first nonzero root (roots[0] = 0)
        rs.basis.reserve(rs.n);
        FFElem v = alpha;
        for (u32 i = 0; i < rs.n; ++i) {
            rs.basis.push_back(v);
            if (i + 1 < rs.n) v = v.pow(rs.q);
        }
        rs.basis_provenance = "special";
    } else {
        SpanTracker<FFElem> span(rs.E.dim_over(rs.Fq), FFElem::zero(rs.Fq));
        for (const FFElem& root : rs.roots) {
            if (span.rank() == rs.n) break;
            std::size_t before = span.rank();
            span.add(coords_over(root, rs.Fq));
            if (span.rank() > before) rs.basis.push_back(root);
        }
        rs.basis_provenance = "generic";
    }

    // invariants: basis independent, all roots inside its span
    SpanTracker<FFElem> check(rs.E.dim_over(rs.Fq), FFElem::zero(rs.Fq));
    for (const FFElem& v : rs.basis)
        if (check.add(coords_over(v, rs.Fq))) throw std::logic_error("root-space basis is dependent");
    if (check.rank() != rs.n) throw std::logic_error("root-space basis has wrong size");
    for (const FFElem& root : rs.roots)
        if (!check.in_span(coords_over(root, rs.Fq)))
            throw std::logic_error("root outside the span of the chosen basis");
    return rs;
}

Matrix<FFElem> frobenius_matrix(const RootSpace& rs) {
    SpanTracker<FFElem> span(rs.E.dim_over(rs.Fq), FFElem::zero(rs.Fq));
    for (const FFElem& v : rs.basis) span.add(coords_over(v, rs.Fq));
    Matrix<FFElem> out(rs.n, rs.n, FFElem::zero(rs.Fq));
    for (u32 i = 0; i < rs.n; ++i) {
        FFElem image = rs.basis[i].pow(rs.F.cardinality());
        auto combo = span.add(coords_over(image, rs.Fq));
        if (!combo) throw std::logic_error("Frobenius image escapes the root space");
        for (u32 j = 0; j < rs.n; ++j) out.at(i, j) = (*combo)[j];
    }
    return out;
}

namespace {

// values of all degree-r monomials on the basis, in basis order
std::vector<FFElem> monomial_values(const RootSpace& rs, const MonomialBasis& basis) {
    const u64 r = basis.r();
    std::vector<std::vector<FFElem>> pow(rs.n);
    for (u32 i = 0; i < rs.n; ++i) {
        pow[i].reserve(r + 1);
        pow[i].push_back(FFElem::one(rs.E));
        for (u64 e = 1; e <= r; ++e) pow[i].push_back(pow[i].back() * rs.basis[i]);
    }
    std::vector<FFElem> out;
    out.reserve(basis.size());
    for (std::size_t mi = 0; mi < basis.size(); ++mi) {
        FFElem v = FFElem::one(rs.E);
        const std::vector<u32>& e = basis.exponents(mi);
        for (u32 i = 0; i < rs.n; ++i)
            if (e[i]) v = v * pow[i][e[i]];
        out.push_back(v);
    }
    return out;
}

}  // namespace

EvalMapReport eval_map_kernel(const RootSpace& rs, u64 r, CoeffSel sel, const Caps& caps) {
    if (r < 1) throw std::invalid_argument("evaluation map needs r >= 1");
    EvalMapReport rep{rs.n,
                      r,
                      sel == CoeffSel::subfield ? rs.Fq : rs.F,
                      MonomialBasis::make(rs.n, r, caps),
                      Matrix<FFElem>(0, 0, FFElem::zero(rs.E)),
                      {},
                      false,
                      rs.basis_provenance};
    const FieldCtx& K = rep.K;
    const u32 cols = rs.E.dim_over(K);
    std::vector<FFElem> values = monomial_values(rs, rep.monomials);

    Matrix<FFElem> M(values.size(), cols, FFElem::zero(K));
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<FFElem> c = coords_over(values[i], K);
        for (u32 j = 0; j < cols; ++j) M.at(i, j) = c[j];
    }
    rep.matrix = M;
    // forms combining monomials to zero = left kernel = kernel of the transpose
    auto res = rref_kernel(M.transpose());
    rep.kernel = std::move(res.kernel);
    rep.injective = rep.kernel.empty();
    return rep;
}

PairDependenceReport min_pair_dependence(const RootSpace& rs, const FFElem& alpha, const FFElem& beta,
                                         CoeffSel sel, u32 cap) {
    if (!rs.is_root(alpha) || !rs.is_root(beta))
        throw std::invalid_argument("pair dependence requires roots of L");
    {
        SpanTracker<FFElem> ind(rs.E.dim_over(rs.Fq), FFElem::zero(rs.Fq));
        if (ind.add(coords_over(alpha, rs.Fq)) || ind.add(coords_over(beta, rs.Fq)))
            throw std::invalid_argument("alpha and beta must be linearly independent over GF(q)");
    }
    PairDependenceReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.K = sel == CoeffSel::subfield ? rs.Fq : rs.F;
    rep.cap = cap;
    rep.gamma = alpha / beta;
    rep.bound = ipow_u128(rs.q, gap_index(rs.L)) > u128(UINT64_MAX)
                    ? UINT64_MAX
                    : u64(ipow_u128(rs.q, gap_index(rs.L))) + 1;

    const u32 cols = rs.E.dim_over(rep.K);
    for (u32 m = 2; m <= cap && !rep.m; ++m) {
        SpanTracker<FFElem> span(cols, FFElem::zero(rep.K));
        FFElem ap = alpha.pow(m);
        FFElem ratio = beta / alpha;  // alpha^(m-i) beta^i = alpha^m ratio^i
        bool dependent = false;
        for (u32 i = 0; i <= m && !dependent; ++i) {
            dependent = span.add(coords_over(ap, rep.K)).has_value();
            ap = ap * ratio;
        }
        if (dependent) rep.m = m;
    }

    // degree over K of the minimal polynomial of gamma
    SpanTracker<FFElem> pows(cols, FFElem::zero(rep.K));
    FFElem g = FFElem::one(rs.E);
    for (u32 k = 0;; ++k) {
        if (pows.add(coords_over(g, rep.K))) {
            rep.gamma_degree = k;
            break;
        }
        g = g * rep.gamma;
        if (k > rs.E.dim()) throw std::logic_error("minimal polynomial search exceeded the field degree");
    }
    rep.degree_matches_m = rep.m && *rep.m == rep.gamma_degree;
    return rep;
}

DirectSumReport direct_sum_check(const RootSpace& rs) {
    if (rs.basis_provenance != "special" || rs.F.cardinality() != u128(rs.q))
        throw std::invalid_argument(
            "direct sum check requires F = GF(q), irreducible L(x)/x and the special basis");
    DirectSumReport rep;
    const u32 cols = rs.E.dim_over(rs.Fq);
    SpanTracker<FFElem> all(cols, FFElem::zero(rs.Fq));
    u32 sum = 0;
    for (u64 r = 0; r < rs.q; ++r) {
        std::vector<FFElem> values;
        if (r == 0) {
            values.push_back(FFElem::one(rs.E));
        } else {
            values = monomial_values(rs, MonomialBasis::make(rs.n, r));
        }
        SpanTracker<FFElem> part(cols, FFElem::zero(rs.Fq));
        for (const FFElem& v : values) {
            auto c = coords_over(v, rs.Fq);
            part.add(c);
            all.add(std::move(c));
        }
        rep.dims.push_back(u32(part.rank()));
        sum += u32(part.rank());
    }
    rep.total = u32(all.rank());
    rep.is_direct = rep.total == sum;
    return rep;
}

}  // namespace linpoly
