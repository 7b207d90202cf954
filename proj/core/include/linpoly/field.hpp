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

#ifndef LINPOLY_FIELD_HPP
#define LINPOLY_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "linpoly/common.hpp"

namespace linpoly {

struct FieldCtxImpl;
class FFElem;
template <class K>
class Poly;

/**
 * Immutable description of a finite field: either a prime field GF(p) or an
 * extension of another FieldCtx by a monic irreducible modulus.  Contexts are
 * value-like handles; structurally identical towers share one implementation,
 * so equality is a pointer comparison and per-field caches (embeddings,
 * irreducible moduli) are shared.
 *
 * Elements are stored as coefficient vectors over the prime field with
 * respect to the tower product basis, innermost level varying fastest.
 */
class FieldCtx {
public:
    FieldCtx() = default;  // empty handle

    static FieldCtx prime(u64 p);

    /// Extension of `base` by the monic irreducible `modulus` (coefficients in
    /// `base`, constant term first, length = degree + 1).  `gen_name` is the
    /// printable name of the adjoined generator.
    static FieldCtx extension(const FieldCtx& base, const std::vector<FFElem>& modulus,
                              const std::string& gen_name);

    /// GF(p^k) as a one-step tower over GF(p) with the deterministic-first
    /// irreducible modulus and generator name "g".
    static FieldCtx gf(u64 cardinality);

    bool valid() const { return impl_ != nullptr; }
    u64 characteristic() const;
    u32 dim() const;  // degree over the prime field
    u128 cardinality() const;
    u64 cardinality_u64() const;  // throws CapExceeded when too large
    bool is_prime_field() const;
    const FieldCtx& base() const;        // extension only
    u32 ext_degree() const;              // degree over base(); 1 for prime fields
    std::vector<FFElem> modulus() const; // extension only
    const std::string& gen_name() const;
    FFElem gen() const;  // the adjoined generator (extension only)

    /// True when `sub` is this field or one of its tower ancestors.
    bool has_prefix(const FieldCtx& sub) const;
    /// [this : sub] for a tower-prefix subfield.
    u32 dim_over(const FieldCtx& sub) const;
    /// The tower level with the given cardinality; throws if absent.
    FieldCtx subfield_level(u64 cardinality) const;

    /// Canonical text form, e.g. "GF(2)" or "GF(2)[g]/(g^2 + g + 1)".
    const std::string& description() const;

    bool operator==(const FieldCtx& o) const { return impl_.get() == o.impl_.get(); }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    const FieldCtxImpl* impl() const { return impl_.get(); }

private:
    explicit FieldCtx(std::shared_ptr<const FieldCtxImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const FieldCtxImpl> impl_;
    friend struct FieldCtxImpl;
};

/**
 * An element of a FieldCtx.  The digit vector always has length ctx.dim()
 * and is fully reduced, so equality is a digit-wise comparison.
 */
class FFElem {
public:
    FFElem() = default;  // invalid until assigned

    FFElem(FieldCtx ctx, std::vector<u64> digits);

    static FFElem zero(const FieldCtx& ctx);
    static FFElem one(const FieldCtx& ctx);
    /// Element with digit vector = base-p digits of `index` (canonical rank).
    static FFElem from_index(const FieldCtx& ctx, u64 index);
    /// The image of the integer `v` under Z -> GF(p) -> ctx.
    static FFElem from_int(const FieldCtx& ctx, i64 v);

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<u64>& digits() const { return digits_; }
    bool valid() const { return ctx_.valid(); }

    bool is_zero() const;
    bool is_one() const;
    u64 index() const;  // canonical rank; requires cardinality <= 2^64

    // same-context factories (used by generic polynomial/matrix code)
    FFElem zero() const { return zero(ctx_); }
    FFElem one() const { return one(ctx_); }

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);
    FFElem operator-() const;
    FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
    FFElem& operator-=(const FFElem& b) { return *this = *this - b; }
    FFElem& operator*=(const FFElem& b) { return *this = *this * b; }
    FFElem& operator/=(const FFElem& b) { return *this = *this / b; }

    bool operator==(const FFElem& b) const;
    bool operator!=(const FFElem& b) const { return !(*this == b); }

    FFElem inv() const;
    FFElem pow(u128 e) const;

    /// Canonical order: compare digit vectors as base-p integers.
    int cmp(const FFElem& b) const;
    bool operator<(const FFElem& b) const { return cmp(b) < 0; }

private:
    FieldCtx ctx_;
    std::vector<u64> digits_;
};

/// a^q where q is a power of the characteristic.  Additive, fixes GF(q).
FFElem frobenius_q(const FFElem& a, u64 q);

/// Multiplicative order of a nonzero element (factors |field| - 1).
u64 mult_order(const FFElem& a);

/// Image of `a` under the fixed embedding a.ctx() -> dst.  Tower-prefix
/// embeddings are structural; cross-tower embeddings map each generator to
/// the canonical-first root of its modulus in dst and are cached per
/// (src, dst) pair.
FFElem embed(const FFElem& a, const FieldCtx& dst);

/// Coordinates of `x` over the tower-prefix subfield K, length [ctx : K].
std::vector<FFElem> coords_over(const FFElem& x, const FieldCtx& K);
/// Inverse of coords_over with respect to the tower product basis.
FFElem from_coords(const std::vector<FFElem>& coords, const FieldCtx& E);

/// Deterministic-first monic irreducible polynomial of degree d over ctx:
/// the lexicographically smallest coefficient vector in the canonical
/// element order.  Cached per context.  (Defined in upoly.cpp.)
Poly<FFElem> find_irreducible(const FieldCtx& ctx, u32 d);

}  // namespace linpoly

#endif
