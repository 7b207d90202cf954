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

#include "linpoly/ratfun.hpp"

namespace linpoly {

RatFun::RatFun(const FieldCtx& k)
    : k_(k), num_(), den_(Poly<FFElem>::constant(FFElem::one(k))) {}

RatFun::RatFun(Poly<FFElem> num, Poly<FFElem> den, const FieldCtx& k)
    : k_(k), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    normalize();
}

RatFun RatFun::from_poly(Poly<FFElem> p, const FieldCtx& k) {
    return RatFun(std::move(p), Poly<FFElem>::constant(FFElem::one(k)), k);
}

RatFun RatFun::from_int(const FieldCtx& k, i64 v) {
    return from_poly(Poly<FFElem>::constant(FFElem::from_int(k, v)), k);
}

RatFun RatFun::t(const FieldCtx& k) { return from_poly(Poly<FFElem>::x(FFElem::one(k)), k); }

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly<FFElem>::constant(FFElem::one(k_));
        return;
    }
    Poly<FFElem> g = Poly<FFElem>::gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (!den_.lead().is_one()) {
        FFElem inv = den_.lead().inv();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.k_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.k_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(a.k_);
    // cancel cross-gcds before multiplying to keep degrees down
    Poly<FFElem> g1 = Poly<FFElem>::gcd(a.num_, b.den_);
    Poly<FFElem> g2 = Poly<FFElem>::gcd(b.num_, a.den_);
    return RatFun((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), a.k_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_, a.k_);
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun RatFun::inv() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
    return RatFun(den_, num_, k_);
}

u64 characteristic_of(const FFElem& a) { return a.ctx().characteristic(); }
u64 characteristic_of(const RatFun& a) { return a.coeff_ctx().characteristic(); }

}  // namespace linpoly
