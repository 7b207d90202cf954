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

#ifndef LINPOLY_FIELD_IMPL_HPP
#define LINPOLY_FIELD_IMPL_HPP

#include <map>
#include <memory>
#include <mutex>

#include "linpoly/field.hpp"

namespace linpoly {

/// Shared implementation behind FieldCtx.  Arithmetic operates on raw digit
/// spans (length = dim, entries over the prime field in the tower product
/// basis).  Immutable after construction except for the guarded caches.
struct FieldCtxImpl : std::enable_shared_from_this<FieldCtxImpl> {
    u64 p = 0;
    FieldCtx base;  // invalid handle for prime fields
    std::vector<std::vector<u64>> modulus_digits;  // over base, constant first
    u32 ext_degree = 1;
    u32 dim = 1;
    u128 card = 0;
    std::string gen_name;
    std::string descr;

    mutable std::mutex cache_mu;
    mutable std::map<std::string, std::vector<std::vector<u64>>> embed_cache;
    mutable std::map<u32, std::vector<std::vector<u64>>> irreducible_cache;

    void zero_span(u64* out) const;
    bool is_zero_span(const u64* a) const;
    void add_span(const u64* a, const u64* b, u64* out) const;
    void sub_span(const u64* a, const u64* b, u64* out) const;
    void neg_span(const u64* a, u64* out) const;
    void mul_span(const u64* a, const u64* b, u64* out) const;  // out must not alias inputs
    void inv_span(const u64* a, u64* out) const;
    std::vector<u64> one_digits() const;
    std::string element_text(const u64* digits) const;

    FFElem apply_embedding(const std::vector<std::vector<u64>>& matrix, const FFElem& a,
                           const FieldCtx& dst) const;

    static FieldCtx wrap(std::shared_ptr<const FieldCtxImpl> impl);
    static FieldCtx extension_unchecked(const FieldCtx& base, const std::vector<FFElem>& modulus,
                                        const std::string& gen_name);
};

/// Canonical text of an element (sum of generator powers, recursive).
std::string element_text(const FFElem& a);

}  // namespace linpoly

#endif
