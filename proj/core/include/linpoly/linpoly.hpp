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

#ifndef LINPOLY_LINPOLY_HPP
#define LINPOLY_LINPOLY_HPP

#include <numeric>

#include "linpoly/linalg.hpp"
#include "linpoly/ratfun.hpp"
#include "linpoly/upoly.hpp"

namespace linpoly {

/**
 * A q-linearized polynomial sum a_i x^(q^i), stored as its q-power
 * coefficient vector (a_0, ..., a_n) with a_n != 0.  q must be a power of
 * the coefficient field characteristic.  The ordinary-polynomial view is
 * available through lin_decode.
 */
template <class K>
class LinPoly {
public:
    LinPoly() = default;  // invalid until assigned

    LinPoly(u64 q, std::vector<K> coeffs) : q_(q), a_(std::move(coeffs)) {
        if (a_.empty()) throw std::invalid_argument("linearized polynomial needs at least one coefficient");
        if (a_.back().is_zero()) throw std::invalid_argument("leading q-power coefficient must be nonzero");
        u64 p = characteristic_of(a_.front());
        if (q_ != p && power_exponent(q_, p) == 0)
            throw std::invalid_argument("q = " + std::to_string(q_) + " is not a power of the characteristic " +
                                        std::to_string(p));
    }

    bool valid() const { return !a_.empty(); }
    u64 q() const { return q_; }
    u32 qdeg() const { return u32(a_.size() - 1); }
    const std::vector<K>& coeffs() const { return a_; }
    const K& coeff(std::size_t i) const { return a_[i]; }
    bool is_monic() const { return a_.back().is_one(); }

    LinPoly monic() const {
        if (is_monic()) return *this;
        std::vector<K> c;
        c.reserve(a_.size());
        K inv = a_.back().one() / a_.back();
        for (const K& v : a_) c.push_back(inv * v);
        return LinPoly(q_, std::move(c));
    }

    bool operator==(const LinPoly& o) const { return q_ == o.q_ && a_ == o.a_; }
    bool operator!=(const LinPoly& o) const { return !(*this == o); }

private:
    u64 q_ = 0;
    std::vector<K> a_;
};

using LinPolyF = LinPoly<FFElem>;
using LinPolyR = LinPoly<RatFun>;

/// q^i with overflow protection (exponents of decoded linearized polynomials).
inline std::size_t q_power_index(u64 q, u32 i) {
    u128 e = ipow_u128(q, i);
    if (e > u128(1) << 40) throw CapExceeded("q^i exponent too large to expand");
    return std::size_t(e);
}

/// Read a q-polynomial off an ordinary polynomial.  Every nonzero monomial
/// exponent must be a power of q.
template <class K>
LinPoly<K> lin_encode(const Poly<K>& f, u64 q) {
    if (f.is_zero()) throw std::invalid_argument("cannot encode the zero polynomial");
    std::vector<K> out;
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const K& c = f[e];
        if (c.is_zero()) continue;
        // e must be q^i
        u64 rem = u64(e);
        u32 i = 0;
        while (rem > 1 && rem % q == 0) {
            rem /= q;
            ++i;
        }
        if (rem != 1)
            throw std::invalid_argument("exponent " + std::to_string(e) + " is not a power of q = " +
                                        std::to_string(q));
        if (out.size() <= i) out.resize(i + 1, c.zero());
        out[i] = c;
    }
    return LinPoly<K>(q, std::move(out));
}

template <class K>
Poly<K> lin_decode(const LinPoly<K>& L) {
    std::vector<K> c(q_power_index(L.q(), L.qdeg()) + 1, L.coeff(0).zero());
    for (u32 i = 0; i <= L.qdeg(); ++i) c[q_power_index(L.q(), i)] = L.coeff(i);
    return Poly<K>(std::move(c));
}

/// Composition L1(L2(x)); coefficients c_k = sum_{i+j=k} a_i * b_j^(q^i).
template <class K>
LinPoly<K> skew_compose(const LinPoly<K>& L1, const LinPoly<K>& L2);

// Frobenius powering of coefficients, per coefficient type.
FFElem coeff_q_power(const FFElem& a, u64 q, u32 times);
RatFun coeff_q_power(const RatFun& a, u64 q, u32 times);

template <class K>
LinPoly<K> skew_compose(const LinPoly<K>& L1, const LinPoly<K>& L2) {
    if (L1.q() != L2.q()) throw std::invalid_argument("skew composition requires matching q");
    const u64 q = L1.q();
    std::vector<K> out(L1.qdeg() + L2.qdeg() + 1, L1.coeff(0).zero());
    for (u32 i = 0; i <= L1.qdeg(); ++i) {
        if (L1.coeff(i).is_zero()) continue;
        for (u32 j = 0; j <= L2.qdeg(); ++j) {
            if (L2.coeff(j).is_zero()) continue;
            out[i + j] += L1.coeff(i) * coeff_q_power(L2.coeff(j), q, i);
        }
    }
    return LinPoly<K>(q, std::move(out));
}

/// Conventional q-associate: the ordinary polynomial with the same
/// coefficient vector, sum a_i x^i.
template <class K>
Poly<K> q_associate(const LinPoly<K>& L) {
    return Poly<K>(L.coeffs());
}

/// Largest s >= 1 such that L is a q^s-polynomial (a_i = 0 whenever s does
/// not divide i): the gcd of the nonzero support indices.
template <class K>
u32 detect_qs(const LinPoly<K>& L) {
    if (L.qdeg() < 1) throw std::invalid_argument("q^s-structure needs q-degree >= 1");
    u32 s = 0;
    for (u32 i = 1; i <= L.qdeg(); ++i)
        if (!L.coeff(i).is_zero()) s = std::gcd(s, i);
    return s;
}

/// Gap index k: with L = a_n x^(q^n) + a_{n-k} x^(q^{n-k}) + ... and
/// a_{n-k} != 0, the distance from the top term to the next nonzero one.
template <class K>
u32 gap_index(const LinPoly<K>& L) {
    const u32 n = L.qdeg();
    if (n < 1) throw std::invalid_argument("gap index needs q-degree >= 1");
    for (u32 i = n; i-- > 0;)
        if (!L.coeff(i).is_zero()) return n - i;
    return n;  // L = a_n x^(q^n)
}

/// P with P(x^r) = L(x)/x, for r dividing q - 1.  With r = q - 1 this is the
/// projective polynomial of L, of degree (q^n - 1)/(q - 1).
template <class K>
Poly<K> projective_extract(const LinPoly<K>& L, u64 r) {
    if (r == 0 || (L.q() - 1) % r != 0)
        throw std::invalid_argument("r = " + std::to_string(r) + " does not divide q - 1 = " +
                                    std::to_string(L.q() - 1));
    // exponent of x^(q^i - 1) in terms of y = x^r is (q^i - 1)/r
    std::vector<K> out(std::size_t((ipow_u128(L.q(), L.qdeg()) - 1) / r) + 1, L.coeff(0).zero());
    for (u32 i = 0; i <= L.qdeg(); ++i) {
        if (L.coeff(i).is_zero()) continue;
        u128 e = (ipow_u128(L.q(), i) - 1);
        if (e % r != 0) throw std::invalid_argument("incompatible exponent pattern for projective extraction");
        out[std::size_t(e / r)] = L.coeff(i);
    }
    return Poly<K>(std::move(out));
}

/// Value of L at a point of an extension of its coefficient field.
FFElem eval_lin(const LinPolyF& L, const FFElem& x);

/// The monic q-polynomial whose roots are exactly the GF(q)-span of the
/// given independent elements, via cofactor expansion of the bordered
/// power matrix.  Throws on dependent input.
LinPolyF moore_vanishing(const std::vector<FFElem>& basis, u64 q);

}  // namespace linpoly

#endif
