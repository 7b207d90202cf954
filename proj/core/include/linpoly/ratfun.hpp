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

#ifndef LINPOLY_RATFUN_HPP
#define LINPOLY_RATFUN_HPP

#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

/**
 * An element of GF(q)(t): a fraction of polynomials in t over a finite
 * coefficient field, kept normalized (denominator monic, numerator and
 * denominator coprime, zero is 0/1).  Arithmetic normalizes eagerly and
 * cancels cross-gcds at multiplication time to control coefficient growth.
 */
class RatFun {
public:
    RatFun() = default;  // invalid until assigned

    /// Zero of GF(q)(t) for the given coefficient field.
    explicit RatFun(const FieldCtx& k);
    RatFun(Poly<FFElem> num, Poly<FFElem> den, const FieldCtx& k);

    static RatFun from_poly(Poly<FFElem> p, const FieldCtx& k);
    static RatFun from_int(const FieldCtx& k, i64 v);
    static RatFun t(const FieldCtx& k);  // the variable

    const Poly<FFElem>& num() const { return num_; }
    const Poly<FFElem>& den() const { return den_; }
    const FieldCtx& coeff_ctx() const { return k_; }
    bool valid() const { return k_.valid(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFun zero() const { return RatFun(k_); }
    RatFun one() const { return from_int(k_, 1); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    RatFun& operator/=(const RatFun& b) { return *this = *this / b; }

    bool operator==(const RatFun& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const RatFun& b) const { return !(*this == b); }

    RatFun inv() const;

private:
    void normalize();
    FieldCtx k_;
    Poly<FFElem> num_, den_;
};

u64 characteristic_of(const FFElem& a);
u64 characteristic_of(const RatFun& a);

}  // namespace linpoly

#endif
