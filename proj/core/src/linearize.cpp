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

#include "linpoly/linearize.hpp"

#include <numeric>

#include "linpoly/splitting.hpp"

namespace linpoly {

std::string fresh_gen_name(const FieldCtx& ctx) {
    auto used = [&](const std::string& name) {
        for (const FieldCtxImpl* a = ctx.impl(); a; a = a->base.impl())
            if (a->gen_name == name) return true;
        return false;
    };
    if (!used("w")) return "w";
    for (int i = 2;; ++i) {
        std::string name = "w" + std::to_string(i);
        if (!used(name)) return name;
    }
}

FieldCtx splitting_extension(const FieldCtx& ctx, u32 degree) {
    if (degree <= 1) return ctx;
    return FieldCtxImpl::extension_unchecked(ctx, find_irreducible(ctx, degree).coeffs(),
                                             fresh_gen_name(ctx));
}

u32 root_span_dim(const Poly<FFElem>& f, u64 q, u64 seed) {
    if (f.deg() < 1) throw std::invalid_argument("root span requires deg f >= 1");
    const FieldCtx ctx = poly_ctx(f);
    u64 p = ctx.characteristic();
    if (q != p && power_exponent(q, p) == 0)
        throw std::invalid_argument("q is not a power of the characteristic");

    PolyF g = f.monic();
    PolyF der = g.derivative();
    PolyF sq = der.is_zero() ? g : PolyF::gcd(g, der);
    if (!sq.is_one())
        throw std::invalid_argument("root_span_dim requires a squarefree polynomial (distinct roots)");

    u32 D = 1;
    for (auto [deg, cnt] : ddf_degrees(g)) D = u32(std::lcm(D, deg));
    FieldCtx E = splitting_extension(ctx, D);

    std::vector<FFElem> roots = roots_in(g, E, seed);
    if (roots.size() != std::size_t(g.deg()))
        throw std::logic_error("splitting field did not contain all roots");

    FieldCtx Fq = E.subfield_level(q);
    SpanTracker<FFElem> span(E.dim_over(Fq), FFElem::zero(Fq));
    for (const FFElem& r : roots) span.add(coords_over(r, Fq));
    return u32(span.rank());
}

}  // namespace linpoly
