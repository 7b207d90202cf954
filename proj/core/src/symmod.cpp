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

#include "linpoly/symmod.hpp"

#include <map>

namespace linpoly {

namespace {

using ExpMap = std::map<std::vector<u32>, FFElem>;

void add_term(ExpMap& m, const std::vector<u32>& e, const FFElem& c) {
    auto it = m.find(e);
    if (it == m.end())
        m.emplace(e, c);
    else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// multiply a homogeneous exponent map by the linear form sum_j row[j] x_j
ExpMap mul_linear(const ExpMap& m, const std::vector<FFElem>& row) {
    ExpMap out;
    for (const auto& [e, c] : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            std::vector<u32> e2 = e;
            ++e2[j];
            add_term(out, e2, c * row[j]);
        }
    }
    return out;
}

}  // namespace

std::vector<FFElem> gl_act(const Matrix<FFElem>& g, const std::vector<FFElem>& coeffs,
                           const MonomialBasis& basis) {
    const u32 n = basis.n();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("action matrix must be n x n");
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector does not match basis");
    if (det(g).is_zero()) throw std::invalid_argument("substitution matrix is singular");

    const FieldCtx K = coeffs.front().ctx();
    // rows of g as linear forms with coefficients lifted into K
    std::vector<std::vector<FFElem>> rows(n);
    for (u32 i = 0; i < n; ++i) {
        rows[i].reserve(n);
        for (u32 j = 0; j < n; ++j) rows[i].push_back(embed(g.at(i, j), K));
    }

    std::vector<FFElem> out(basis.size(), FFElem::zero(K));
    for (std::size_t mi = 0; mi < basis.size(); ++mi) {
        if (coeffs[mi].is_zero()) continue;
        ExpMap acc;
        acc.emplace(std::vector<u32>(n, 0), FFElem::one(K));
        const std::vector<u32>& e = basis.exponents(mi);
        for (u32 i = 0; i < n; ++i)
            for (u32 k = 0; k < e[i]; ++k) acc = mul_linear(acc, rows[i]);
        for (const auto& [e2, c] : acc) out[basis.index_of(e2)] += coeffs[mi] * c;
    }
    return out;
}

Matrix<FFElem> action_matrix(const Matrix<FFElem>& g, const MonomialBasis& basis) {
    const FieldCtx K = g.zero().ctx();
    Matrix<FFElem> out(basis.size(), basis.size(), FFElem::zero(K));
    std::vector<FFElem> unit(basis.size(), FFElem::zero(K));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        unit[i] = FFElem::one(K);
        std::vector<FFElem> img = gl_act(g, unit, basis);
        for (std::size_t j = 0; j < basis.size(); ++j) out.at(j, i) = img[j];  // column i = image
        unit[i] = FFElem::zero(K);
    }
    return out;
}

namespace {

// smallest subspace containing seed and closed under the generators
std::vector<std::vector<FFElem>> spin_one(const std::vector<FFElem>& seed,
                                          const std::vector<Matrix<FFElem>>& gens, u32 dim,
                                          const FFElem& zero) {
    SpanTracker<FFElem> span(dim, zero);
    std::vector<std::vector<FFElem>> basis;
    std::vector<std::vector<FFElem>> work{seed};
    while (!work.empty() && span.rank() < dim) {
        std::vector<FFElem> v = std::move(work.back());
        work.pop_back();
        if (span.add(v)) continue;  // already in the span
        basis.push_back(v);
        for (const auto& g : gens) work.push_back(g.apply(v));
    }
    return basis;
}

}  // namespace

SpinResult spin_submodule(const std::vector<std::vector<FFElem>>& seeds,
                          const std::vector<Matrix<FFElem>>& generators, u32 dim,
                          bool exhaustive_seeding) {
    if (generators.empty()) throw std::invalid_argument("spin requires at least one generator");
    const FFElem zero = generators.front().zero();
    const FieldCtx K = zero.ctx();

    SpinResult res;
    auto consider = [&](const std::vector<FFElem>& seed) -> bool {
        auto basis = spin_one(seed, generators, dim, zero);
        res.span_dim = u32(basis.size());
        if (!basis.empty() && basis.size() < dim) {
            res.verdict = SpinVerdict::reducible;
            res.witness = std::move(basis);
            return true;
        }
        return false;
    };

    if (exhaustive_seeding) {
        const u64 q = K.cardinality_u64();
        if (ipow_u128(q, dim) > (u128(1) << 20))
            throw CapExceeded("exhaustive seeding infeasible: q^dim exceeds 2^20");
        // all nonzero vectors up to scalar: leading coordinate normalized to 1
        std::vector<FFElem> v(dim, FFElem::zero(K));
        for (u32 lead = 0; lead < dim; ++lead) {
            u64 tail = dim - lead - 1;
            u128 combos = ipow_u128(q, u32(tail));
            for (u128 idx = 0; idx < combos; ++idx) {
                std::fill(v.begin(), v.end(), FFElem::zero(K));
                v[lead] = FFElem::one(K);
                u128 rest = idx;
                for (u64 j = 0; j < tail; ++j) {
                    v[lead + 1 + j] = FFElem::from_index(K, u64(rest % q));
                    rest /= q;
                }
                if (consider(v)) return res;
            }
        }
        res.verdict = SpinVerdict::irreducible;
        res.span_dim = dim;
        return res;
    }

    for (const auto& seed : seeds)
        if (consider(seed)) return res;
    res.verdict = SpinVerdict::inconclusive;
    return res;
}

std::vector<Matrix<FFElem>> gl2_generators(u64 p) {
    FieldCtx F = FieldCtx::prime(p);
    auto mat = [&](i64 a, i64 b, i64 c, i64 d) {
        Matrix<FFElem> m(2, 2, FFElem::zero(F));
        m.at(0, 0) = FFElem::from_int(F, a);
        m.at(0, 1) = FFElem::from_int(F, b);
        m.at(1, 0) = FFElem::from_int(F, c);
        m.at(1, 1) = FFElem::from_int(F, d);
        return m;
    };
    std::vector<Matrix<FFElem>> gens{mat(1, 1, 0, 1), mat(1, 0, 1, 1)};
    if (p > 2) {
        // a multiplicative generator of GF(p)* on the first coordinate
        for (u64 c = 2; c < p; ++c) {
            if (mult_order(FFElem::from_int(F, i64(c))) == p - 1) {
                gens.push_back(mat(i64(c), 0, 0, 1));
                break;
            }
        }
    }
    return gens;
}

std::pair<Matrix<FFElem>, u32> multinomial_rank(u32 n, u64 p, u64 r) {
    FieldCtx F = FieldCtx::prime(p);
    if (r < 1 || (p - 1) % r != 0)
        throw std::invalid_argument("r must divide p - 1 for the multinomial point matrix");
    if (ipow_u128(p, n) > (u128(1) << 20)) throw CapExceeded("point count p^n too large");
    MonomialBasis basis = MonomialBasis::make(n, r);
    const u64 npoints = u64(ipow_u128(p, n));

    // multinomial coefficients r! / prod k_i! taken mod p
    std::vector<u64> multi(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto& k = basis.exponents(c);
        u64 m = 1, rem = r;
        for (u32 i = 0; i < n; ++i) {
            m *= binomial_u64(rem, k[i]);
            rem -= k[i];
        }
        multi[c] = m % p;
        if (multi[c] == 0)
            throw std::logic_error("multinomial coefficient divisible by p with r <= p - 1");
    }

    Matrix<FFElem> M(npoints, basis.size(), FFElem::zero(F));
    for (u64 row = 0; row < npoints; ++row) {
        u64 idx = row;
        std::vector<u64> pt(n);
        for (u32 i = 0; i < n; ++i) {
            pt[i] = idx % p;
            idx /= p;
        }
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto& k = basis.exponents(c);
            u64 v = multi[c];
            for (u32 i = 0; i < n && v; ++i) {
                u64 f = k[i] == 0 ? 1 : powmod_u64(pt[i], k[i], p);  // 0^0 = 1
                v = mulmod_u64(v, f, p);
            }
            M.at(row, c) = FFElem::from_int(F, i64(v));
        }
    }
    u32 rank = u32(rref_kernel(M).rank);
    return {std::move(M), rank};
}

SymWitnessReport symmetric_power_witness(const LinPolyF& L, u64 r, const Caps& caps, u64 seed) {
    const u64 p = characteristic_of(L.coeff(0));
    if (L.q() != p)
        throw std::invalid_argument("unsupported: q != p (the construction is restricted to prime q)");
    if (L.coeff(0).is_zero()) throw std::invalid_argument("a_0 = 0: repeated roots");
    if (r < 1 || (p - 1) % r != 0) throw std::invalid_argument("r must divide p - 1");

    SymWitnessReport rep;
    rep.L = L;
    rep.r = r;
    rep.P = projective_extract(L, r);
    auto lr = min_linearized_multiple(rep.P, p);
    rep.L_P = lr.lin;
    rep.dim_roots_LP = lr.d;
    rep.dim_forms = hom_dim(L.qdeg(), r);

    RootSpace rs = splitting_field(L, poly_ctx(rep.P), caps, seed);
    EvalMapReport eval = eval_map_kernel(rs, r, CoeffSel::subfield, caps);
    rep.eval_injective = eval.injective;

    rep.monomials_all_roots = true;
    for (std::size_t i = 0; i < eval.monomials.size(); ++i) {
        FFElem value = FFElem::one(rs.E);
        const auto& e = eval.monomials.exponents(i);
        for (u32 j = 0; j < rs.n; ++j)
            for (u32 k = 0; k < e[j]; ++k) value = value * rs.basis[j];
        bool ok = eval_lin(rep.L_P, value).is_zero();
        rep.monomial_root_checks.push_back(ok);
        rep.monomials_all_roots = rep.monomials_all_roots && ok;
    }
    rep.dims_consistent = rep.dim_roots_LP <= rep.dim_forms &&
                          ((rep.dim_roots_LP == rep.dim_forms) == rep.eval_injective);
    return rep;
}

}  // namespace linpoly
