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

#ifndef LINPOLY_POLY_HPP
#define LINPOLY_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "linpoly/common.hpp"

namespace linpoly {

/**
 * Dense univariate polynomial over a field type K.  K must provide field
 * operators, is_zero(), and same-context zero()/one() factories (FFElem and
 * RatFun both do).  Coefficients are stored constant term first; the zero
 * polynomial has an empty coefficient vector, and trailing zeros are always
 * stripped so equality is coefficient-wise.
 */
template <class K>
class Poly {
public:
    Poly() = default;  // zero

    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& v) { return v.is_zero() ? Poly() : Poly(std::vector<K>{v}); }

    static Poly monomial(const K& v, std::size_t e) {
        if (v.is_zero()) return Poly();
        std::vector<K> c(e + 1, v.zero());
        c[e] = v;
        return Poly(std::move(c));
    }

    /// x as a polynomial, given any element of the coefficient field.
    static Poly x(const K& sample) { return monomial(sample.one(), 1); }

    long deg() const { return long(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t i) const { return c_[i]; }
    const K& lead() const { return c_.back(); }

    K coeff_or_zero(std::size_t i, const K& sample) const { return i < c_.size() ? c_[i] : sample.zero(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> out;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                out.push_back(a.c_[i] + b.c_[i]);
            else
                out.push_back(i < a.c_.size() ? a.c_[i] : b.c_[i]);
        }
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> out;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                out.push_back(a.c_[i] - b.c_[i]);
            else if (i < a.c_.size())
                out.push_back(a.c_[i]);
            else
                out.push_back(-b.c_[i]);
        }
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<K> out;
        out.reserve(c_.size());
        for (const K& v : c_) out.push_back(-v);
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> out(a.c_.size() + b.c_.size() - 1, a.c_[0].zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const K& s, const Poly& a) {
        std::vector<K> out;
        out.reserve(a.c_.size());
        for (const K& v : a.c_) out.push_back(s * v);
        return Poly(std::move(out));
    }

    /// a = q*b + r with deg r < deg b; exact division in the coefficient field.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        if (a.deg() < b.deg()) return {Poly(), a};
        const K lead_inv = b.lead().one() / b.lead();
        std::vector<K> rem = a.c_;
        std::vector<K> quot(a.c_.size() - b.c_.size() + 1, b.lead().zero());
        for (std::size_t sh = quot.size(); sh-- > 0;) {
            const K& top = rem[sh + b.c_.size() - 1];
            if (top.is_zero()) continue;
            K q = top * lead_inv;
            for (std::size_t i = 0; i + 1 < b.c_.size(); ++i) {
                if (!b.c_[i].is_zero()) rem[sh + i] -= q * b.c_[i];
            }
            rem[sh + b.c_.size() - 1] = top.zero();
            quot[sh] = std::move(q);
        }
        rem.resize(b.c_.size() - 1, b.lead().zero());
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    /// Monic greatest common divisor.
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        if (lead().is_one()) return *this;
        return (lead().one() / lead()) * *this;
    }

    K eval(const K& x) const {
        K r = x.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() < 2) return Poly();
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K m = c_[i].zero();
            K one = c_[i].one();
            for (std::size_t k = 0; k < i; ++k) m += one;  // i as a field element
            out.push_back(m * c_[i]);
        }
        return Poly(std::move(out));
    }

    /// this(x^r): exponent inflation.
    Poly inflate(std::size_t r) const {
        if (is_zero() || r == 1) return *this;
        std::vector<K> out((c_.size() - 1) * r + 1, c_[0].zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * r] = c_[i];
        return Poly(std::move(out));
    }

    /// base^e mod m via square and multiply.
    static Poly pow_mod(Poly base, u128 e, const Poly& m) {
        if (m.deg() < 1) throw std::invalid_argument("pow_mod modulus must have degree >= 1");
        base = base % m;
        Poly r = constant(m.lead().one());
        while (e) {
            if (e & 1) r = (r * base) % m;
            e >>= 1;
            if (e) base = (base * base) % m;
        }
        return r;
    }

    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

}  // namespace linpoly

#endif
