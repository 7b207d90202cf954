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

#ifndef LINPOLY_COMMON_HPP
#define LINPOLY_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linpoly {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Default seed for all probabilistic routines (equal-degree splitting,
/// random instance generation).  CLI overrides via --seed / LINPOLY_SEED.
inline constexpr u64 kDefaultSeed = 0xc0de5eedULL;

/// Thrown when input text cannot be parsed; carries the byte offset.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

/// Thrown when a configured size cap would be exceeded.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size guards for root enumeration and evaluation-map dimensions.
struct Caps {
    u64 max_roots = 4096;  // largest allowed q^n when enumerating a root space
    u64 max_dim = 5000;    // largest allowed dim of a homogeneous-form space
};

std::string to_string_u128(u128 v);

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);
bool is_prime_u64(u64 n);

/// Distinct prime factors, sorted ascending.
std::vector<u64> prime_factors_u64(u64 n);

/// Exponent e >= 1 with b^e == q, or 0 if q is not a positive power of b.
u32 power_exponent(u64 q, u64 b);

/// p^e with overflow check; throws CapExceeded past 2^120.
u128 ipow_u128(u64 p, u32 e);

/// Exact binomial coefficient; throws CapExceeded on u64 overflow.
u64 binomial_u64(u64 n, u64 k);

}  // namespace linpoly

#endif
