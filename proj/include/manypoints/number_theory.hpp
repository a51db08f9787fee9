/*
   Copyright 2026 The manypoints Authors

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

#ifndef MANYPOINTS_NUMBER_THEORY_HPP
#define MANYPOINTS_NUMBER_THEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>

#include "error.hpp"

namespace manypoints {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Largest field size the library accepts.
inline constexpr u64 kMaxFieldSize = u64{1} << 40;

constexpr u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 e, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Reduces a signed value into [0, m).
constexpr u64 reduce_signed(i64 v, u64 m) noexcept {
    const i64 mm = static_cast<i64>(m);
    i64 r = v % mm;
    if (r < 0) r += mm;
    return static_cast<u64>(r);
}

/// floor(sqrt(n)), integer Newton iteration.
constexpr u64 isqrt(u64 n) noexcept {
    if (n < 2) return n;
    u64 x = n;
    u64 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

constexpr bool is_square(u64 n) noexcept {
    const u64 r = isqrt(n);
    return r * r == n;
}

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
constexpr bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// p^n, or nullopt if the result exceeds `limit`.
constexpr std::optional<u64> checked_power(u64 p, unsigned n, u64 limit = kMaxFieldSize) noexcept {
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > limit / p) return std::nullopt;
        q *= p;
    }
    return q;
}

struct PrimePower {
    u64 p;
    unsigned n;
};

/// Writes q = p^n. Trial division is fine for q <= 2^40.
inline std::optional<PrimePower> prime_power(u64 q) noexcept {
    if (q < 2) return std::nullopt;
    u64 p = q;
    for (u64 d = 2; d * d <= q; d += (d == 2 ? 1 : 2)) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned n = 0;
    u64 rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, n};
}

inline PrimePower require_prime_power(u64 q) {
    auto pp = prime_power(q);
    if (!pp) throw DomainError(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    return *pp;
}

inline PrimePower require_odd_prime_power(u64 q) {
    auto pp = require_prime_power(q);
    if (pp.p == 2) throw DomainError(Errc::EvenCharacteristic, std::to_string(q) + " is even");
    return pp;
}

}  // namespace manypoints

#endif  // MANYPOINTS_NUMBER_THEORY_HPP
