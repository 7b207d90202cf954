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

#include "linpoly/linpoly.hpp"

namespace linpoly {

FFElem coeff_q_power(const FFElem& a, u64 q, u32 times) {
    FFElem r = a;
    for (u32 k = 0; k < times; ++k) r = r.pow(q);
    return r;
}

RatFun coeff_q_power(const RatFun& a, u64 q, u32 times) {
    auto poly_pow = [](const Poly<FFElem>& f, u64 e) {
        Poly<FFElem> r = Poly<FFElem>::constant(FFElem::one(poly_ctx(f)));
        Poly<FFElem> b = f;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    };
    RatFun r = a;
    for (u32 k = 0; k < times; ++k) {
        if (r.is_zero()) return r;
        r = RatFun(poly_pow(r.num(), q), poly_pow(r.den(), q), r.coeff_ctx());
    }
    return r;
}

FFElem eval_lin(const LinPolyF& L, const FFElem& x) {
    const FieldCtx& E = x.ctx();
    FFElem acc = FFElem::zero(E);
    FFElem xp = x;
    for (u32 i = 0; i <= L.qdeg(); ++i) {
        if (!L.coeff(i).is_zero()) acc += embed(L.coeff(i), E) * xp;
        if (i < L.qdeg()) xp = xp.pow(L.q());
    }
    return acc;
}

LinPolyF moore_vanishing(const std::vector<FFElem>& basis, u64 q) {
    if (basis.empty()) throw std::invalid_argument("moore_vanishing requires a nonempty basis");
    const FieldCtx E = basis.front().ctx();
    const u32 n = u32(basis.size());

    // power table: pw[j][i] = basis_j ^ (q^i), i = 0..n
    std::vector<std::vector<FFElem>> pw(n);
    for (u32 j = 0; j < n; ++j) {
        pw[j].reserve(n + 1);
        FFElem v = basis[j];
        for (u32 i = 0; i <= n; ++i) {
            pw[j].push_back(v);
            if (i < n) v = v.pow(q);
        }
    }

    // cofactor expansion along the bordered row of q-power monomials
    std::vector<FFElem> coeffs;
    coeffs.reserve(n + 1);
    for (u32 drop = 0; drop <= n; ++drop) {
        Matrix<FFElem> minor(n, n, FFElem::zero(E));
        for (u32 j = 0; j < n; ++j) {
            u32 col = 0;
            for (u32 i = 0; i <= n; ++i) {
                if (i == drop) continue;
                minor.at(j, col++) = pw[j][i];
            }
        }
        FFElem cof = det(minor);
        if (((n + drop) & 1) != 0) cof = -cof;
        coeffs.push_back(cof);
    }
    if (coeffs.back().is_zero())
        throw std::invalid_argument("moore_vanishing: input elements are linearly dependent over GF(q)");
    FFElem inv = coeffs.back().inv();
    for (FFElem& c : coeffs) c = inv * c;
    return LinPolyF(q, std::move(coeffs));
}

}  // namespace linpoly
