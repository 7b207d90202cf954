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

#include "linpoly/common.hpp"

#include <algorithm>
#include <numeric>

namespace linpoly {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 seed = 1;
    while (true) {
        ++seed;
        u64 x = seed, y = seed, c = seed | 1, d = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> prime_factors_u64(u64 n) {
    std::vector<u64> out;
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u32 power_exponent(u64 q, u64 b) {
    if (b < 2 || q < b) return 0;
    u32 e = 0;
    u64 v = 1;
    while (v < q) {
        if (v > q / b) return 0;
        v *= b;
        ++e;
    }
    return v == q ? e : 0;
}

u128 ipow_u128(u64 p, u32 e) {
    u128 r = 1;
    const u128 cap = u128(1) << 120;
    for (u32 i = 0; i < e; ++i) {
        if (r > cap / p) throw CapExceeded("field cardinality exceeds 2^120");
        r *= p;
    }
    return r;
}

u64 binomial_u64(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > u128(UINT64_MAX)) throw CapExceeded("binomial coefficient exceeds 64 bits");
    }
    return u64(r);
}

}  // namespace linpoly
