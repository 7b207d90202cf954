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

#include "linpoly/field.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <mutex>

#include "linpoly/field_impl.hpp"
#include "linpoly/poly.hpp"
#include "linpoly/upoly.hpp"

namespace linpoly {

// ---------------------------------------------------------------------------
// scratch arena for the multiplication recursion

namespace {

class Arena {
public:
    u64* alloc(std::size_t n) {
        while (true) {
            if (idx_ < chunks_.size()) {
                if (used_ + n <= chunks_[idx_].cap) {
                    u64* p = chunks_[idx_].mem.get() + used_;
                    used_ += n;
                    return p;
                }
                ++idx_;
                used_ = 0;
                continue;
            }
            std::size_t cap = std::max<std::size_t>(1 << 14, 2 * n);
            chunks_.push_back({std::unique_ptr<u64[]>(new u64[cap]), cap});
        }
    }
    struct Mark {
        std::size_t idx, used;
    };
    Mark mark() const { return {idx_, used_}; }
    // chunks are never freed or moved, so rewinding the cursor is enough
    void release(Mark m) {
        idx_ = m.idx;
        used_ = m.used;
    }

private:
    struct Chunk {
        std::unique_ptr<u64[]> mem;
        std::size_t cap;
    };
    std::vector<Chunk> chunks_;
    std::size_t idx_ = 0, used_ = 0;
};

thread_local Arena tl_arena;

struct ArenaGuard {
    Arena::Mark m;
    ArenaGuard() : m(tl_arena.mark()) {}
    ~ArenaGuard() { tl_arena.release(m); }
};

}  // namespace

// ---------------------------------------------------------------------------
// span arithmetic

void FieldCtxImpl::zero_span(u64* out) const { std::memset(out, 0, dim * sizeof(u64)); }

bool FieldCtxImpl::is_zero_span(const u64* a) const {
    for (u32 i = 0; i < dim; ++i)
        if (a[i]) return false;
    return true;
}

void FieldCtxImpl::add_span(const u64* a, const u64* b, u64* out) const {
    for (u32 i = 0; i < dim; ++i) {
        u64 s = a[i] + b[i];
        out[i] = s >= p ? s - p : s;
    }
}

void FieldCtxImpl::sub_span(const u64* a, const u64* b, u64* out) const {
    for (u32 i = 0; i < dim; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
}

void FieldCtxImpl::neg_span(const u64* a, u64* out) const {
    for (u32 i = 0; i < dim; ++i) out[i] = a[i] ? p - a[i] : 0;
}

void FieldCtxImpl::mul_span(const u64* a, const u64* b, u64* out) const {
    if (!base.valid()) {
        out[0] = mulmod_u64(a[0], b[0], p);
        return;
    }
    const FieldCtxImpl* bi = base.impl();
    const u32 m = ext_degree, bd = bi->dim;
    ArenaGuard guard;
    u64* acc = tl_arena.alloc(std::size_t(2 * m - 1) * bd);
    u64* prod = tl_arena.alloc(bd);
    std::memset(acc, 0, std::size_t(2 * m - 1) * bd * sizeof(u64));
    for (u32 i = 0; i < m; ++i) {
        if (bi->is_zero_span(a + std::size_t(i) * bd)) continue;
        for (u32 j = 0; j < m; ++j) {
            if (bi->is_zero_span(b + std::size_t(j) * bd)) continue;
            bi->mul_span(a + std::size_t(i) * bd, b + std::size_t(j) * bd, prod);
            bi->add_span(acc + std::size_t(i + j) * bd, prod, acc + std::size_t(i + j) * bd);
        }
    }
    // reduce modulo the (monic) defining polynomial
    for (u32 k = 2 * m - 2; k >= m; --k) {
        u64* top = acc + std::size_t(k) * bd;
        if (bi->is_zero_span(top)) {
            if (k == m) break;
            continue;
        }
        for (u32 i = 0; i < m; ++i) {
            if (bi->is_zero_span(modulus_digits[i].data())) continue;
            bi->mul_span(top, modulus_digits[i].data(), prod);
            u64* dst = acc + std::size_t(k - m + i) * bd;
            bi->sub_span(dst, prod, dst);
        }
        if (k == m) break;
    }
    std::memcpy(out, acc, std::size_t(m) * bd * sizeof(u64));
}

// block-polynomial helpers for the extended-euclid inverse (coefficients are
// elements of `base`, stored as digit blocks, constant term first)

namespace {

using BPoly = std::vector<std::vector<u64>>;

void bp_trim(const FieldCtxImpl* bi, BPoly& f) {
    while (!f.empty() && bi->is_zero_span(f.back().data())) f.pop_back();
}

BPoly bp_mul(const FieldCtxImpl* bi, const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return {};
    BPoly out(a.size() + b.size() - 1, std::vector<u64>(bi->dim, 0));
    std::vector<u64> tmp(bi->dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            bi->mul_span(a[i].data(), b[j].data(), tmp.data());
            bi->add_span(out[i + j].data(), tmp.data(), out[i + j].data());
        }
    bp_trim(bi, out);
    return out;
}

BPoly bp_sub(const FieldCtxImpl* bi, const BPoly& a, const BPoly& b) {
    BPoly out(std::max(a.size(), b.size()), std::vector<u64>(bi->dim, 0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const u64* ai = i < a.size() ? a[i].data() : out[i].data();
        if (i < a.size()) std::memcpy(out[i].data(), ai, bi->dim * sizeof(u64));
        if (i < b.size()) bi->sub_span(out[i].data(), b[i].data(), out[i].data());
    }
    bp_trim(bi, out);
    return out;
}

// a = q*b + r with deg r < deg b; b nonzero
void bp_divrem(const FieldCtxImpl* bi, BPoly a, const BPoly& b, BPoly& q, BPoly& r) {
    std::vector<u64> lead_inv(bi->dim);
    bi->inv_span(b.back().data(), lead_inv.data());
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, std::vector<u64>(bi->dim, 0));
    std::vector<u64> c(bi->dim), tmp(bi->dim);
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        bi->mul_span(a.back().data(), lead_inv.data(), c.data());
        q[shift] = std::vector<u64>(c.begin(), c.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            bi->mul_span(c.data(), b[i].data(), tmp.data());
            bi->sub_span(a[shift + i].data(), tmp.data(), a[shift + i].data());
        }
        bp_trim(bi, a);
        if (a.size() > shift) {
            // leading coefficient did not cancel: numeric invariant broken
            throw std::logic_error("block polynomial division failed to reduce degree");
        }
    }
    r = std::move(a);
}

}  // namespace

void FieldCtxImpl::inv_span(const u64* a, u64* out) const {
    if (is_zero_span(a)) throw std::invalid_argument("division by zero in finite field");
    if (!base.valid()) {
        // extended euclid on integers
        i64 t = 0, newt = 1;
        i64 r = i64(p), newr = i64(a[0]);
        while (newr != 0) {
            i64 quot = r / newr;
            std::swap(t -= quot * newt, newt);
            std::swap(r -= quot * newr, newr);
        }
        out[0] = u64(t < 0 ? t + i64(p) : t);
        return;
    }
    const FieldCtxImpl* bi = base.impl();
    const u32 m = ext_degree, bd = bi->dim;
    BPoly r0(modulus_digits.begin(), modulus_digits.end());
    BPoly r1(m);
    for (u32 i = 0; i < m; ++i) r1[i].assign(a + std::size_t(i) * bd, a + std::size_t(i + 1) * bd);
    bp_trim(bi, r0);
    bp_trim(bi, r1);
    BPoly t0, t1{std::vector<u64>(bd, 0)};
    // t1 = 1
    t1[0] = bi->one_digits();
    while (!r1.empty()) {
        BPoly q, r2;
        bp_divrem(bi, r0, r1, q, r2);
        BPoly t2 = bp_sub(bi, t0, bp_mul(bi, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("modulus is not irreducible: inverse does not exist");
    std::vector<u64> g_inv(bd);
    bi->inv_span(r0[0].data(), g_inv.data());
    std::memset(out, 0, dim * sizeof(u64));
    std::vector<u64> tmp(bd);
    for (std::size_t i = 0; i < t0.size(); ++i) {
        bi->mul_span(t0[i].data(), g_inv.data(), tmp.data());
        std::memcpy(out + i * bd, tmp.data(), bd * sizeof(u64));
    }
}

std::vector<u64> FieldCtxImpl::one_digits() const {
    std::vector<u64> d(dim, 0);
    d[0] = 1;
    return d;
}

// ---------------------------------------------------------------------------
// context registry

namespace {

std::mutex g_registry_mu;
std::map<std::string, std::weak_ptr<const FieldCtxImpl>> g_registry;

FieldCtx intern(std::shared_ptr<FieldCtxImpl> impl) {
    std::lock_guard<std::mutex> lock(g_registry_mu);
    auto it = g_registry.find(impl->descr);
    if (it != g_registry.end()) {
        if (auto existing = it->second.lock()) return FieldCtxImpl::wrap(existing);
    }
    g_registry[impl->descr] = impl;
    return FieldCtxImpl::wrap(impl);
}

}  // namespace

FieldCtx FieldCtxImpl::wrap(std::shared_ptr<const FieldCtxImpl> impl) { return FieldCtx(std::move(impl)); }

// ---------------------------------------------------------------------------
// element text (canonical form, also used for context descriptions)

namespace {

bool text_is_composite(const std::string& s) { return s.find(" + ") != std::string::npos; }

std::string elem_text_rec(const FieldCtxImpl* ctx, const u64* digits);

// polynomial over ctx in the variable `var`, coefficients as digit blocks
std::string poly_text_blocks(const FieldCtxImpl* ctx, const std::vector<std::vector<u64>>& coeffs,
                             const std::string& var) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (ctx->is_zero_span(coeffs[k].data())) continue;
        std::string c = elem_text_rec(ctx, coeffs[k].data());
        std::string part;
        if (k == 0) {
            part = text_is_composite(c) ? "(" + c + ")" : c;
        } else {
            std::string xp = k == 1 ? var : var + "^" + std::to_string(k);
            if (c == "1")
                part = xp;
            else if (text_is_composite(c))
                part = "(" + c + ")*" + xp;
            else
                part = c + "*" + xp;
        }
        if (!out.empty()) out += " + ";
        out += part;
    }
    return out.empty() ? "0" : out;
}

std::string elem_text_rec(const FieldCtxImpl* ctx, const u64* digits) {
    if (!ctx->base.valid()) return std::to_string(digits[0]);
    const FieldCtxImpl* bi = ctx->base.impl();
    std::vector<std::vector<u64>> blocks(ctx->ext_degree);
    for (u32 k = 0; k < ctx->ext_degree; ++k)
        blocks[k].assign(digits + std::size_t(k) * bi->dim, digits + std::size_t(k + 1) * bi->dim);
    return poly_text_blocks(bi, blocks, ctx->gen_name);
}

}  // namespace

std::string FieldCtxImpl::element_text(const u64* digits) const { return elem_text_rec(this, digits); }

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx FieldCtx::prime(u64 p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    auto impl = std::make_shared<FieldCtxImpl>();
    impl->p = p;
    impl->ext_degree = 1;
    impl->dim = 1;
    impl->card = p;
    impl->descr = "GF(" + std::to_string(p) + ")";
    return intern(std::move(impl));
}

FieldCtx FieldCtx::extension(const FieldCtx& base, const std::vector<FFElem>& modulus,
                             const std::string& gen_name) {
    FieldCtx ctx = FieldCtxImpl::extension_unchecked(base, modulus, gen_name);
    Poly<FFElem> mod(modulus);
    if (!is_irreducible(mod)) throw std::invalid_argument("modulus is not irreducible over its base field");
    return ctx;
}

FieldCtx FieldCtxImpl::extension_unchecked(const FieldCtx& base, const std::vector<FFElem>& modulus,
                                           const std::string& gen_name) {
    if (!base.valid()) throw std::invalid_argument("extension requires a valid base field");
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    for (const FFElem& c : modulus)
        if (c.ctx() != base) throw std::invalid_argument("modulus coefficients must lie in the base field");
    if (!modulus.back().is_one()) throw std::invalid_argument("modulus must be monic");
    if (gen_name.empty() || !std::isalpha(static_cast<unsigned char>(gen_name[0])) || gen_name == "x" ||
        gen_name == "t")
        throw std::invalid_argument("invalid generator name: " + gen_name);
    for (const FieldCtxImpl* a = base.impl(); a; a = a->base.impl())
        if (a->gen_name == gen_name)
            throw std::invalid_argument("generator name already used in tower: " + gen_name);

    auto impl = std::make_shared<FieldCtxImpl>();
    impl->p = base.characteristic();
    impl->base = base;
    impl->ext_degree = u32(modulus.size() - 1);
    impl->dim = base.dim() * impl->ext_degree;
    impl->card = ipow_u128(impl->p, impl->dim);
    impl->gen_name = gen_name;
    impl->modulus_digits.reserve(modulus.size());
    for (const FFElem& c : modulus) impl->modulus_digits.push_back(c.digits());
    std::vector<std::vector<u64>> blocks(impl->modulus_digits.begin(), impl->modulus_digits.end());
    impl->descr = base.description() + "[" + gen_name + "]/(" + poly_text_blocks(base.impl(), blocks, gen_name) + ")";
    return intern(std::move(impl));
}

FieldCtx FieldCtx::gf(u64 cardinality) {
    if (cardinality < 2) throw std::invalid_argument("field cardinality must be >= 2");
    std::vector<u64> ps = prime_factors_u64(cardinality);
    if (ps.size() != 1) throw std::invalid_argument("field cardinality must be a prime power");
    u64 p = ps[0];
    u32 k = power_exponent(cardinality, p);
    FieldCtx fp = prime(p);
    if (k == 1) return fp;
    Poly<FFElem> mod = find_irreducible(fp, k);
    return FieldCtxImpl::extension_unchecked(fp, mod.coeffs(), "g");
}

u64 FieldCtx::characteristic() const { return impl_->p; }
u32 FieldCtx::dim() const { return impl_->dim; }
u128 FieldCtx::cardinality() const { return impl_->card; }

u64 FieldCtx::cardinality_u64() const {
    if (impl_->card > u128(UINT64_MAX)) throw CapExceeded("field cardinality exceeds 64 bits");
    return u64(impl_->card);
}

bool FieldCtx::is_prime_field() const { return !impl_->base.valid(); }
const FieldCtx& FieldCtx::base() const { return impl_->base; }
u32 FieldCtx::ext_degree() const { return impl_->ext_degree; }
const std::string& FieldCtx::gen_name() const { return impl_->gen_name; }
const std::string& FieldCtx::description() const { return impl_->descr; }

std::vector<FFElem> FieldCtx::modulus() const {
    if (is_prime_field()) throw std::invalid_argument("prime field has no modulus");
    std::vector<FFElem> out;
    out.reserve(impl_->modulus_digits.size());
    for (const auto& d : impl_->modulus_digits) out.emplace_back(impl_->base, d);
    return out;
}

FFElem FieldCtx::gen() const {
    if (is_prime_field()) throw std::invalid_argument("prime field has no generator");
    std::vector<u64> d(dim(), 0);
    d[base().dim()] = 1;  // the adjoined generator is the second block unit
    return FFElem(*this, std::move(d));
}

bool FieldCtx::has_prefix(const FieldCtx& sub) const {
    for (const FieldCtxImpl* a = impl_.get(); a; a = a->base.impl())
        if (a == sub.impl()) return true;
    return false;
}

u32 FieldCtx::dim_over(const FieldCtx& sub) const {
    if (!has_prefix(sub)) throw std::invalid_argument("not a tower-prefix subfield: " + sub.description());
    return dim() / sub.dim();
}

FieldCtx FieldCtx::subfield_level(u64 cardinality) const {
    for (const FieldCtxImpl* a = impl_.get(); a; a = a->base.impl())
        if (a->card == u128(cardinality)) return FieldCtxImpl::wrap(a->shared_from_this());
    throw std::invalid_argument("no tower level with cardinality " + std::to_string(cardinality) + " in " +
                                description());
}

// ---------------------------------------------------------------------------
// FFElem

FFElem::FFElem(FieldCtx ctx, std::vector<u64> digits) : ctx_(std::move(ctx)), digits_(std::move(digits)) {
    if (!ctx_.valid()) throw std::invalid_argument("element requires a valid field context");
    if (digits_.size() != ctx_.dim()) throw std::invalid_argument("digit vector length must equal field degree");
    u64 p = ctx_.characteristic();
    for (u64& d : digits_) d %= p;
}

FFElem FFElem::zero(const FieldCtx& ctx) { return FFElem(ctx, std::vector<u64>(ctx.dim(), 0)); }

FFElem FFElem::one(const FieldCtx& ctx) {
    std::vector<u64> d(ctx.dim(), 0);
    d[0] = 1;
    return FFElem(ctx, std::move(d));
}

FFElem FFElem::from_index(const FieldCtx& ctx, u64 index) {
    std::vector<u64> d(ctx.dim(), 0);
    u64 p = ctx.characteristic();
    for (u32 i = 0; i < ctx.dim() && index; ++i) {
        d[i] = index % p;
        index /= p;
    }
    if (index) throw std::invalid_argument("element index out of range");
    return FFElem(ctx, std::move(d));
}

FFElem FFElem::from_int(const FieldCtx& ctx, i64 v) {
    i64 p = i64(ctx.characteristic());
    i64 r = v % p;
    if (r < 0) r += p;
    std::vector<u64> d(ctx.dim(), 0);
    d[0] = u64(r);
    return FFElem(ctx, std::move(d));
}

bool FFElem::is_zero() const { return ctx_.impl()->is_zero_span(digits_.data()); }

bool FFElem::is_one() const {
    if (digits_[0] != 1) return false;
    for (std::size_t i = 1; i < digits_.size(); ++i)
        if (digits_[i]) return false;
    return true;
}

u64 FFElem::index() const {
    ctx_.cardinality_u64();
    u64 p = ctx_.characteristic(), r = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) r = r * p + digits_[i];
    return r;
}

namespace {
void require_same_ctx(const FFElem& a, const FFElem& b) {
    if (a.ctx() != b.ctx())
        throw std::invalid_argument("field context mismatch: " + a.ctx().description() + " vs " +
                                    b.ctx().description());
}
}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
    require_same_ctx(a, b);
    FFElem out = a;
    a.ctx().impl()->add_span(a.digits_.data(), b.digits_.data(), out.digits_.data());
    return out;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    require_same_ctx(a, b);
    FFElem out = a;
    a.ctx().impl()->sub_span(a.digits_.data(), b.digits_.data(), out.digits_.data());
    return out;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    require_same_ctx(a, b);
    FFElem out = a;
    a.ctx().impl()->mul_span(a.digits_.data(), b.digits_.data(), out.digits_.data());
    return out;
}

FFElem operator/(const FFElem& a, const FFElem& b) {
    require_same_ctx(a, b);
    return a * b.inv();
}

FFElem FFElem::operator-() const {
    FFElem out = *this;
    ctx_.impl()->neg_span(digits_.data(), out.digits_.data());
    return out;
}

bool FFElem::operator==(const FFElem& b) const { return ctx_ == b.ctx_ && digits_ == b.digits_; }

FFElem FFElem::inv() const {
    FFElem out = *this;
    ctx_.impl()->inv_span(digits_.data(), out.digits_.data());
    return out;
}

FFElem FFElem::pow(u128 e) const {
    FFElem r = one(ctx_);
    FFElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int FFElem::cmp(const FFElem& b) const {
    require_same_ctx(*this, b);
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (digits_[i] != b.digits_[i]) return digits_[i] < b.digits_[i] ? -1 : 1;
    }
    return 0;
}

FFElem frobenius_q(const FFElem& a, u64 q) {
    if (power_exponent(q, a.ctx().characteristic()) == 0 && q != a.ctx().characteristic())
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of the characteristic " +
                                    std::to_string(a.ctx().characteristic()));
    return a.pow(q);
}

u64 mult_order(const FFElem& a) {
    if (a.is_zero()) throw std::invalid_argument("multiplicative order of zero is undefined");
    u64 n = a.ctx().cardinality_u64() - 1;
    u64 order = n;
    for (u64 ell : prime_factors_u64(n)) {
        while (order % ell == 0 && a.pow(order / ell).is_one()) order /= ell;
    }
    return order;
}

// ---------------------------------------------------------------------------
// embeddings

namespace {

// structural embedding of a tower-prefix subfield element
FFElem embed_prefix(const FFElem& a, const FieldCtx& dst) {
    std::vector<u64> d(dst.dim(), 0);
    std::copy(a.digits().begin(), a.digits().end(), d.begin());
    return FFElem(dst, std::move(d));
}

}  // namespace

FFElem embed(const FFElem& a, const FieldCtx& dst) {
    const FieldCtx& src = a.ctx();
    if (src == dst) return a;
    if (src.characteristic() != dst.characteristic())
        throw std::invalid_argument("cannot embed across different characteristics");
    if (dst.dim() % src.dim() != 0)
        throw std::invalid_argument("no embedding: [" + src.description() + " : GF(p)] does not divide [" +
                                    dst.description() + " : GF(p)]");
    if (dst.has_prefix(src)) return embed_prefix(a, dst);

    const FieldCtxImpl* si = src.impl();
    {
        std::lock_guard<std::mutex> lock(si->cache_mu);
        auto it = si->embed_cache.find(dst.description());
        if (it != si->embed_cache.end()) return si->apply_embedding(it->second, a, dst);
    }

    // image of each tower generator: canonical-first root in dst of the
    // generator's defining polynomial with previously-embedded coefficients
    std::vector<std::vector<u64>> matrix(src.dim());
    if (src.is_prime_field()) {
        matrix[0] = FFElem::one(dst).digits();
    } else {
        std::vector<FFElem> mod = src.modulus();
        std::vector<FFElem> mapped;
        mapped.reserve(mod.size());
        for (const FFElem& c : mod) mapped.push_back(embed(c, dst));
        std::vector<FFElem> roots = roots_in(Poly<FFElem>(mapped), dst);
        if (roots.empty())
            throw std::invalid_argument("no embedding of " + src.description() + " into " + dst.description());
        FFElem img = roots.front();  // canonical-first
        // basis element i*bd + k of src is (base basis k) * gen^i
        u32 bd = src.base().dim();
        FFElem pw = FFElem::one(dst);
        for (u32 i = 0; i < src.ext_degree(); ++i) {
            for (u32 k = 0; k < bd; ++k) {
                std::vector<u64> unit(src.base().dim(), 0);
                unit[k] = 1;
                FFElem basis_img = embed(FFElem(src.base(), std::move(unit)), dst);
                matrix[std::size_t(i) * bd + k] = (basis_img * pw).digits();
            }
            pw = pw * img;
        }
    }
    {
        std::lock_guard<std::mutex> lock(si->cache_mu);
        si->embed_cache.emplace(dst.description(), matrix);
    }
    return si->apply_embedding(matrix, a, dst);
}

FFElem FieldCtxImpl::apply_embedding(const std::vector<std::vector<u64>>& matrix, const FFElem& a,
                                     const FieldCtx& dst) const {
    std::vector<u64> out(dst.dim(), 0);
    const u64 pp = p;
    for (std::size_t i = 0; i < a.digits().size(); ++i) {
        u64 c = a.digits()[i];
        if (!c) continue;
        const std::vector<u64>& row = matrix[i];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + mulmod_u64(c, row[j], pp)) % pp;
    }
    return FFElem(dst, std::move(out));
}

std::vector<FFElem> coords_over(const FFElem& x, const FieldCtx& K) {
    const FieldCtx& E = x.ctx();
    if (!E.has_prefix(K))
        throw std::invalid_argument("coordinate field " + K.description() + " is not a tower prefix of " +
                                    E.description());
    u32 bd = K.dim(), blocks = E.dim() / bd;
    std::vector<FFElem> out;
    out.reserve(blocks);
    for (u32 b = 0; b < blocks; ++b)
        out.emplace_back(K, std::vector<u64>(x.digits().begin() + std::size_t(b) * bd,
                                             x.digits().begin() + std::size_t(b + 1) * bd));
    return out;
}

FFElem from_coords(const std::vector<FFElem>& coords, const FieldCtx& E) {
    if (coords.empty()) throw std::invalid_argument("empty coordinate vector");
    const FieldCtx& K = coords.front().ctx();
    if (!E.has_prefix(K) || coords.size() != E.dim_over(K))
        throw std::invalid_argument("coordinate vector does not match tower layout");
    std::vector<u64> d(E.dim(), 0);
    u32 bd = K.dim();
    for (std::size_t b = 0; b < coords.size(); ++b)
        std::copy(coords[b].digits().begin(), coords[b].digits().end(), d.begin() + b * bd);
    return FFElem(E, std::move(d));
}

std::string element_text(const FFElem& a) { return a.ctx().impl()->element_text(a.digits().data()); }

}  // namespace linpoly
