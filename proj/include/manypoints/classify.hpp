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

#ifndef MANYPOINTS_CLASSIFY_HPP
#define MANYPOINTS_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string_view>

#include "error.hpp"
#include "finite_field.hpp"
#include "number_theory.hpp"

namespace manypoints {

/// [2 sqrt(q)], exactly.
constexpr u64 floor_two_sqrt(u64 q) noexcept { return isqrt(4 * q); }

/// Hasse-Weil-Serre bound q + 1 + g [2 sqrt(q)].
constexpr u64 hws_bound(u64 q, u64 g) noexcept { return q + 1 + g * floor_two_sqrt(q); }

/// N_q(1): q + 1 + m, one less when q = p^n with n >= 3 odd and p | m.
inline u64 nq1(u64 q) {
    const auto [p, n] = require_prime_power(q);
    const u64 m = floor_two_sqrt(q);
    if (n >= 3 && n % 2 == 1 && m % p == 0) return q + m;
    return q + 1 + m;
}

namespace detail {

inline bool has_special_genus2_form(u64 q) noexcept {
    // q = k^2 + 1, k^2 + k + 1 or k^2 + k + 2 forces k = isqrt(q) or isqrt(q) - 1.
    const u64 r = isqrt(q);
    for (u64 k = r > 0 ? r - 1 : 0; k <= r; ++k) {
        if (q == k * k + 1 || q == k * k + k + 1 || q == k * k + k + 2) return true;
    }
    return false;
}

/**
 * Whether 2 sqrt(q) - m >= (sqrt(5) - 1) / 2 for non-square q, m = [2 sqrt(q)].
 *
 * With k = 2m - 1 the inequality reads 4 sqrt(q) - k >= sqrt(5). Both sides are
 * positive (4 sqrt(q) >= 2m > k), so squaring gives
 * 16q + k^2 - 5 >= 8k sqrt(q); when the left side is nonnegative a second
 * squaring gives (16q + k^2 - 5)^2 >= 64 k^2 q. Equality cannot occur because
 * sqrt(q) is irrational.
 */
inline bool golden_fraction_at_least(u64 q, u64 m) noexcept {
    const u128 k = 2 * static_cast<u128>(m) - 1;
    const u128 lhs_plus = 16 * static_cast<u128>(q) + k * k;
    if (lhs_plus < 5) return false;
    const u128 lhs = lhs_plus - 5;
    return lhs * lhs >= 64 * k * k * q;
}

}  // namespace detail

/// N_q(2) by Serre's case analysis.
inline u64 nq2(u64 q) {
    require_prime_power(q);
    const u64 m = floor_two_sqrt(q);
    if (q == 4) return 10;
    if (q == 9) return 20;
    if (is_square(q)) return q + 1 + 2 * m;
    if (std::gcd(q, m) == 1 && !detail::has_special_genus2_form(q)) return q + 1 + 2 * m;
    return detail::golden_fraction_at_least(q, m) ? q + 2 * m : q + 2 * m - 1;
}

struct BoundsRecord {
    u64 q = 0;
    u64 m = 0;
    u64 hws_g3 = 0;
    u64 nq1 = 0;
    u64 nq2 = 0;

    friend bool operator==(const BoundsRecord&, const BoundsRecord&) = default;
};

inline BoundsRecord bounds(u64 q) {
    return BoundsRecord{q, floor_two_sqrt(q), hws_bound(q, 3), nq1(q), nq2(q)};
}

/**
 * Whether q + 1 - t is the order of some elliptic curve over F_q, q odd.
 *
 * Deuring-Waterhouse: |t| <= 2 sqrt(q) and one of
 *   (a) p does not divide t;
 *   (b) n even, t = +-2 p^(n/2);
 *   (c) n even, p != 1 mod 3, t = +-p^(n/2);
 *   (d) n odd, p = 3, t = +-3^((n+1)/2);
 *   (e) n even, p != 1 mod 4, t = 0;
 *   (f) n odd, t = 0.
 */
inline bool is_admissible_trace(u64 p, unsigned n, i64 t) noexcept {
    const u64 q = *checked_power(p, n);
    const u64 at = static_cast<u64>(t < 0 ? -t : t);
    if (at * at > 4 * q) return false;
    if (at % p != 0) return true;
    if (n % 2 == 0) {
        const u64 r = *checked_power(p, n / 2);
        if (at == 2 * r) return true;
        if (p % 3 != 1 && at == r) return true;
        if (p % 4 != 1 && at == 0) return true;
        return false;
    }
    if (at == 0) return true;
    return p == 3 && at == *checked_power(3, (n + 1) / 2);
}

inline std::set<u64> admissible_group_orders(u64 q) {
    const auto [p, n] = require_odd_prime_power(q);
    const i64 m = static_cast<i64>(floor_two_sqrt(q));
    std::set<u64> orders;
    for (i64 t = -m; t <= m; ++t)
        if (is_admissible_trace(p, n, t)) orders.insert(static_cast<u64>(static_cast<i64>(q) + 1 - t));
    return orders;
}

enum class AchievabilityReason { NotMultipleOf4, OutsideHasse, TraceInadmissible, SquareException, Ok };

constexpr std::string_view reason_name(AchievabilityReason r) noexcept {
    switch (r) {
        case AchievabilityReason::NotMultipleOf4: return "not-mult-4";
        case AchievabilityReason::OutsideHasse: return "outside-hasse";
        case AchievabilityReason::TraceInadmissible: return "trace-inadmissible";
        case AchievabilityReason::SquareException: return "square-exception";
        case AchievabilityReason::Ok: return "ok";
    }
    return "ok";
}

struct AchievabilityVerdict {
    u64 q = 0;
    u64 target_count = 0;
    bool achievable = false;
    AchievabilityReason reason = AchievabilityReason::Ok;

    friend bool operator==(const AchievabilityVerdict&, const AchievabilityVerdict&) = default;
};

/// For square q, the square root r with r = 1 mod 4 (possibly negative).
inline std::optional<i64> signed_root_one_mod_four(u64 q) noexcept {
    if (!is_square(q)) return std::nullopt;
    const i64 r = static_cast<i64>(isqrt(q));
    if (r % 2 == 0) return std::nullopt;
    return r % 4 == 1 ? r : -r;
}

/**
 * Whether some Legendre curve y^2 = x(x-1)(x-lambda) over F_q has N points.
 *
 * N must be a multiple of 4 and an elliptic group order, and must avoid the
 * one exception q = r^2, r = 1 mod 4, N = q + 1 + 2r. Here r may be negative:
 * over F_9 the exception is N = 4 (r = -3). The first failing check is
 * reported.
 */
inline AchievabilityVerdict legendre_achievable(u64 q, u64 target) {
    const auto [p, n] = require_odd_prime_power(q);
    AchievabilityVerdict v{q, target, false, AchievabilityReason::Ok};
    const i64 t = static_cast<i64>(q) + 1 - static_cast<i64>(target);
    const u64 at = static_cast<u64>(t < 0 ? -t : t);
    if (target % 4 != 0) {
        v.reason = AchievabilityReason::NotMultipleOf4;
    } else if (at * at > 4 * q) {
        v.reason = AchievabilityReason::OutsideHasse;
    } else if (!is_admissible_trace(p, n, t)) {
        v.reason = AchievabilityReason::TraceInadmissible;
    } else if (const auto r = signed_root_one_mod_four(q);
               r && static_cast<i64>(target) == static_cast<i64>(q) + 1 + 2 * *r) {
        v.reason = AchievabilityReason::SquareException;
    } else {
        v.achievable = true;
    }
    return v;
}

/**
 * A Legendre parameter for y^2 = (x-a)(x-b)(x-c), if one exists over F_q.
 *
 * Tries the orderings (u, v, w) of {a, b, c} in lexicographic index order and
 * returns (w - v)/(u - v) for the first one with u - v a nonzero square; then
 * x -> (x - v)/(u - v) maps the curve onto E_lambda.
 */
inline std::optional<ElementIndex> legendre_parameter(const Field& f, ElementIndex a, ElementIndex b, ElementIndex c) {
    f.check(a);
    f.check(b);
    f.check(c);
    if (a == b || b == c || a == c) throw DomainError(Errc::NonDistinctRoots, "roots must be pairwise distinct");
    std::array<ElementIndex, 3> perm{a, b, c};
    std::sort(perm.begin(), perm.end());
    do {
        const auto [u, v, w] = perm;
        const ElementIndex d = f.sub(u, v);
        if (f.chi(d) == 1) return f.div(f.sub(w, v), d);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/// Guaranteed distance from the genus-3 HWS bound over F_{3^n}.
constexpr u64 char3_guaranteed_gap(unsigned n) noexcept {
    if (n % 2 == 1) return 21;
    return n % 4 == 2 ? 0 : 12;
}

}  // namespace manypoints

#endif  // MANYPOINTS_CLASSIFY_HPP
