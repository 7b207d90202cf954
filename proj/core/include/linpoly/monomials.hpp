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

#ifndef LINPOLY_MONOMIALS_HPP
#define LINPOLY_MONOMIALS_HPP

#include "linpoly/common.hpp"

namespace linpoly {

/// dim of the space of homogeneous forms of degree r in n variables:
/// the binomial coefficient C(n + r - 1, r).
inline u64 hom_dim(u32 n, u64 r) {
    if (n < 1) throw std::invalid_argument("hom_dim requires n >= 1");
    return binomial_u64(n + r - 1, r);
}

/**
 * The degree-r monomials in n variables, as exponent vectors in strictly
 * decreasing graded-lex order (x1^r first, xn^r last).  Coefficient vectors
 * of homogeneous forms are indexed by this ordering throughout.
 */
class MonomialBasis {
public:
    static MonomialBasis make(u32 n, u64 r, const Caps& caps = {}) {
        u64 d = hom_dim(n, r);
        if (d > caps.max_dim)
            throw CapExceeded("dim of homogeneous-form space " + std::to_string(d) + " exceeds cap " +
                              std::to_string(caps.max_dim));
        MonomialBasis b;
        b.n_ = n;
        b.r_ = r;
        std::vector<u32> cur(n, 0);
        gen(n, r, 0, cur, b.exps_);
        return b;
    }

    u32 n() const { return n_; }
    u64 r() const { return r_; }
    std::size_t size() const { return exps_.size(); }
    const std::vector<u32>& exponents(std::size_t i) const { return exps_[i]; }
    const std::vector<std::vector<u32>>& all() const { return exps_; }

    std::size_t index_of(const std::vector<u32>& e) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] == e) return i;
        throw std::invalid_argument("exponent vector not in basis");
    }

private:
    // lex-descending enumeration: highest power of x1 first
    static void gen(u32 n, u64 rem, u32 var, std::vector<u32>& cur, std::vector<std::vector<u32>>& out) {
        if (var + 1 == n) {
            cur[var] = u32(rem);
            out.push_back(cur);
            return;
        }
        for (u64 e = rem + 1; e-- > 0;) {
            cur[var] = u32(e);
            gen(n, rem - e, var + 1, cur, out);
        }
        cur[var] = 0;
    }

    u32 n_ = 0;
    u64 r_ = 0;
    std::vector<std::vector<u32>> exps_;
};

}  // namespace linpoly

#endif
