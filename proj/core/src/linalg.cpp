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

#include "linpoly/linalg.hpp"

namespace linpoly {

namespace {

using PP = Poly<FFElem>;

PP exact_div(const PP& a, const PP& b) {
    auto [q, r] = PP::divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("fraction-free elimination: division was not exact");
    return q;
}

// clear denominators row by row; scaling rows changes neither rank nor kernel
struct ClearedRows {
    std::vector<std::vector<PP>> rows;
    std::vector<PP> scale;  // row i of the input was multiplied by scale[i]
};

ClearedRows clear_denominators(const Matrix<RatFun>& M, const FieldCtx& k) {
    ClearedRows out;
    PP one = PP::constant(FFElem::one(k));
    out.rows.assign(M.rows(), {});
    out.scale.assign(M.rows(), one);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        PP l = one;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const PP& d = M.at(i, j).den();
            l = (l * d) / PP::gcd(l, d);  // lcm
        }
        out.scale[i] = l;
        out.rows[i].reserve(M.cols());
        for (std::size_t j = 0; j < M.cols(); ++j)
            out.rows[i].push_back(M.at(i, j).num() * (l / M.at(i, j).den()));
    }
    return out;
}

}  // namespace

RatFun det(const Matrix<RatFun>& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const FieldCtx k = M.zero().coeff_ctx();
    const std::size_t n = M.rows();
    if (n == 0) return RatFun::from_int(k, 1);
    ClearedRows cleared = clear_denominators(M, k);
    auto& a = cleared.rows;
    PP denom = PP::constant(FFElem::one(k));
    for (const PP& s : cleared.scale) denom = denom * s;

    // one-step fraction-free (division-exact) elimination
    bool negate = false;
    PP prev = PP::constant(FFElem::one(k));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return RatFun(k);
        if (p != c) {
            std::swap(a[p], a[c]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = exact_div(a[c][c] * a[i][j] - a[i][c] * a[c][j], prev);
            a[i][c] = PP();
        }
        prev = a[c][c];
    }
    PP d = a[n - 1][n - 1];
    return RatFun(negate ? -d : d, denom, k);
}

RrefResult<RatFun> rref_kernel(const Matrix<RatFun>& M) {
    const FieldCtx k = M.zero().coeff_ctx();
    const std::size_t rows = M.rows(), cols = M.cols();
    ClearedRows cleared = clear_denominators(M, k);
    auto& a = cleared.rows;

    // fraction-free forward pass; entries stay polynomial
    std::vector<std::size_t> pivots;
    PP prev = PP::constant(FFElem::one(k));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = PP();
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    // back substitution over the fraction field for the reduced form
    Matrix<RatFun> R(r, cols, RatFun(k));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!a[i][j].is_zero()) R.at(i, j) = RatFun::from_poly(a[i][j], k);
    for (std::size_t i = r; i-- > 0;) {
        RatFun inv = R.at(i, pivots[i]).inv();
        for (std::size_t j = pivots[i]; j < cols; ++j)
            if (!R.at(i, j).is_zero()) R.at(i, j) = inv * R.at(i, j);
        for (std::size_t up = 0; up < i; ++up) {
            RatFun f = R.at(up, pivots[i]);
            if (f.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < cols; ++j)
                if (!R.at(i, j).is_zero()) R.at(up, j) -= f * R.at(i, j);
        }
    }
    auto kernel = detail::kernel_from_rref(R, pivots);
    return {r, std::move(R), std::move(kernel)};
}

}  // namespace linpoly
