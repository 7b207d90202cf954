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

#include "linpoly/upoly.hpp"

#include <algorithm>
#include <mutex>

#include "linpoly/field_impl.hpp"
#include "linpoly/textio.hpp"

namespace linpoly {

FieldCtx poly_ctx(const PolyF& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial carries no field context");
    return f[0].ctx();
}

namespace {

PolyF x_poly(const FieldCtx& ctx) { return PolyF::x(FFElem::one(ctx)); }

// r -> r^|ctx| mod f, one Frobenius step of a residue
PolyF frobenius_step(const PolyF& r, const PolyF& f) {
    return PolyF::pow_mod(r, poly_ctx(f).cardinality(), f);
}

}  // namespace

PolyF frobenius_power_mod(const PolyF& f, u32 k) {
    PolyF r = x_poly(poly_ctx(f)) % f;
    for (u32 i = 0; i < k; ++i) r = frobenius_step(r, f);
    return r;
}

bool is_irreducible(const PolyF& f) {
    if (f.deg() < 1) throw std::invalid_argument("irreducibility requires degree >= 1");
    const FieldCtx ctx = poly_ctx(f);
    const u32 d = u32(f.deg());
    if (d == 1) return true;
    const PolyF fm = f.monic();
    const PolyF x = x_poly(ctx);

    // any proper factorization has a factor of degree <= d/2, and a factor of
    // degree dividing i shows up as a nontrivial gcd with x^(q^i) - x
    PolyF r = x % fm;
    for (u32 i = 1; i <= d / 2; ++i) {
        r = frobenius_step(r, fm);
        if (!PolyF::gcd(r - x, fm).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<u32, u32>> ddf_degrees(const PolyF& f) {
    if (f.deg() < 1) throw std::invalid_argument("ddf requires degree >= 1");
    const FieldCtx ctx = poly_ctx(f);
    PolyF g = f.monic();
    PolyF der = g.derivative();
    PolyF sq = der.is_zero() ? g : PolyF::gcd(g, der);
    if (!sq.is_one())
        throw std::invalid_argument("ddf requires a squarefree polynomial; gcd(f, f') = " + poly_to_text(sq));

    std::vector<std::pair<u32, u32>> out;
    const PolyF x = x_poly(ctx);
    PolyF r = x % g;
    u32 k = 0;
    while (g.deg() > 0) {
        ++k;
        if (2 * k > u32(g.deg())) {
            out.emplace_back(u32(g.deg()), 1);  // remaining factor is irreducible
            break;
        }
        r = frobenius_step(r, g);
        PolyF d = PolyF::gcd(r - x, g);
        if (d.deg() > 0) {
            out.emplace_back(k, u32(d.deg()) / k);
            g = g / d;
            r = r % g;
        }
    }
    return out;
}

PolyF embed_poly(const PolyF& f, const FieldCtx& E) {
    if (f.is_zero()) return f;
    std::vector<FFElem> c;
    c.reserve(f.coeffs().size());
    for (const FFElem& v : f.coeffs()) c.push_back(embed(v, E));
    return PolyF(std::move(c));
}

namespace {

FFElem random_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::vector<u64> d(ctx.dim());
    for (u64& v : d) v = rng() % ctx.characteristic();
    return FFElem(ctx, std::move(d));
}

// all roots of a product of distinct monic linear factors, by halving splits
void split_linear(const PolyF& g, const FieldCtx& E, std::mt19937_64& rng, std::vector<FFElem>& out) {
    if (g.deg() <= 0) return;
    if (g.deg() == 1) {
        out.push_back(-g[0]);  // monic: root of x + c
        return;
    }
    const u128 card = E.cardinality();
    PolyF h;
    while (true) {
        // random affine polynomial a*x + b
        FFElem a = random_elem(E, rng);
        if (a.is_zero()) continue;
        PolyF probe(std::vector<FFElem>{random_elem(E, rng), a});
        if (E.characteristic() == 2) {
            // absolute trace of probe: probe + probe^2 + ... + probe^(2^(dim-1))
            PolyF s = probe % g, term = s;
            for (u32 i = 1; i < E.dim(); ++i) {
                term = PolyF::pow_mod(term, 2, g);
                s = (s + term) % g;
            }
            h = s;
        } else {
            h = PolyF::pow_mod(probe, (card - 1) / 2, g) - PolyF::constant(FFElem::one(E));
        }
        PolyF w = PolyF::gcd(h.is_zero() ? g : h, g);
        if (w.deg() > 0 && w.deg() < g.deg()) {
            split_linear(w, E, rng, out);
            split_linear(g / w, E, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FFElem> roots_in(const PolyF& f, const FieldCtx& E, u64 seed) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial are undefined");
    PolyF g = embed_poly(f, E).monic();
    if (g.deg() == 0) return {};
    // gcd with x^|E| - x isolates the E-rational part, with multiplicity 1
    PolyF r = frobenius_power_mod(g, 1);
    PolyF lin = PolyF::gcd(r - x_poly(E), g);
    std::vector<FFElem> out;
    std::mt19937_64 rng(seed);
    split_linear(lin, E, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

PolyF random_poly(const FieldCtx& ctx, u32 d, std::mt19937_64& rng, bool monic) {
    std::vector<FFElem> c;
    c.reserve(d + 1);
    for (u32 i = 0; i < d; ++i) c.push_back(random_elem(ctx, rng));
    if (monic) {
        c.push_back(FFElem::one(ctx));
    } else {
        FFElem lead = random_elem(ctx, rng);
        while (lead.is_zero()) lead = random_elem(ctx, rng);
        c.push_back(lead);
    }
    return PolyF(std::move(c));
}

// ---------------------------------------------------------------------------
// deterministic-first irreducible modulus (declared in field.hpp)

PolyF find_irreducible(const FieldCtx& ctx, u32 d) {
    if (d < 1) throw std::invalid_argument("irreducible degree must be >= 1");
    const FieldCtxImpl* impl = ctx.impl();
    {
        std::lock_guard<std::mutex> lock(impl->cache_mu);
        auto it = impl->irreducible_cache.find(d);
        if (it != impl->irreducible_cache.end()) {
            std::vector<FFElem> c;
            for (const auto& dig : it->second) c.emplace_back(ctx, dig);
            return PolyF(std::move(c));
        }
    }
    PolyF result;
    if (d == 1) {
        result = PolyF::x(FFElem::one(ctx));  // lex-smallest monic linear: x
    } else {
        // Lexicographic scan over coefficient vectors (c_0, ..., c_{d-1}),
        // most significant first in the canonical element order.  c_0 = 0 is
        // skipped: such polynomials are divisible by x.
        const u64 q = ctx.cardinality_u64();
        std::vector<FFElem> c(d + 1, FFElem::zero(ctx));
        c[d] = FFElem::one(ctx);
        bool found = false;
        for (u64 c0 = 1; c0 < q && !found; ++c0) {
            c[0] = FFElem::from_index(ctx, c0);
            std::vector<u64> odo(d - 1, 0);  // indices for c_1..c_{d-1}, last varies fastest
            while (true) {
                for (u32 i = 1; i < d; ++i) c[i] = FFElem::from_index(ctx, odo[i - 1]);
                PolyF cand{std::vector<FFElem>(c)};
                if (is_irreducible(cand)) {
                    result = cand;
                    found = true;
                    break;
                }
                u32 pos = d - 1;
                while (pos >= 1 && ++odo[pos - 1] == q) {
                    odo[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) break;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found (impossible over a finite field)");
    }
    std::vector<std::vector<u64>> digits;
    for (const FFElem& v : result.coeffs()) digits.push_back(v.digits());
    std::lock_guard<std::mutex> lock(impl->cache_mu);
    impl->irreducible_cache.emplace(d, std::move(digits));
    return result;
}

}  // namespace linpoly
