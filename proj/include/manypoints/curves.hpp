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

#ifndef MANYPOINTS_CURVES_HPP
#define MANYPOINTS_CURVES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "number_theory.hpp"

namespace manypoints {

/// Default size limit for the O(q^2) projective quartic sweep.
inline constexpr u64 kDefaultQuarticCap = u64{1} << 13;

enum class CurveKind { Legendre, Twisted, Quartic };

/**
 * One point count. For elliptic records trace = q + 1 - count; for quartic
 * records it is the trace 3t' of the jacobian, which is the same expression.
 */
struct CurveCount {
    CurveKind kind = CurveKind::Legendre;
    u64 q = 0;
    ElementIndex lambda_index = 0;
    ElementIndex twist_index = 1;
    u64 count = 0;
    i64 trace = 0;

    friend bool operator==(const CurveCount&, const CurveCount&) = default;
};

constexpr i64 frobenius_trace(u64 q, u64 count) noexcept {
    return static_cast<i64>(q) + 1 - static_cast<i64>(count);
}

inline ElementIndex minus_three(const Field& f) noexcept { return f.neg(f.from_integer(3)); }

/// lambda + 3, computed inside the field (equals lambda in characteristic 3).
inline ElementIndex family_twist(const Field& f, ElementIndex lambda) noexcept {
    return f.add(lambda, f.from_integer(3));
}

inline bool is_legendre_parameter(const Field& f, ElementIndex lambda) noexcept {
    return lambda != f.zero() && lambda != f.one();
}

/// lambda not in {0, 1, -3}: C_lambda is smooth and E^(lambda+3) is defined.
inline bool is_family_parameter(const Field& f, ElementIndex lambda) noexcept {
    return is_legendre_parameter(f, lambda) && lambda != minus_three(f);
}

namespace detail {

inline void require_legendre(const Field& f, ElementIndex lambda) {
    f.check(lambda);
    if (!is_legendre_parameter(f, lambda)) throw DomainError(Errc::SingularLambda, "lambda must not be 0 or 1");
}

inline void require_family(const Field& f, ElementIndex lambda) {
    require_legendre(f, lambda);
    if (lambda == minus_three(f)) throw DomainError(Errc::SingularLambda, "lambda must not be -3");
}

inline u64 twist_rule(u64 q, u64 count, int chi_d) noexcept { return chi_d == 1 ? count : 2 * q + 2 - count; }

}  // namespace detail

/// #E_lambda(F_q) = q + 1 + sum_x chi(x(x-1)(x-lambda)), chi by Euler's criterion.
inline u64 legendre_count(const Field& f, ElementIndex lambda) {
    detail::require_legendre(f, lambda);
    i64 s = 0;
    for (ElementIndex x : f.indices()) s += f.chi(f.mul(f.mul(x, f.sub(x, f.one())), f.sub(x, lambda)));
    return static_cast<u64>(static_cast<i64>(f.q()) + 1 + s);
}

/// Same count with character lookups from a precomputed table.
inline u64 legendre_count(const Field& f, const CharacterTable& chi, ElementIndex lambda) {
    detail::require_legendre(f, lambda);
    i64 s = 0;
    for (ElementIndex x : f.indices()) s += chi(f.mul(f.mul(x, f.sub(x, f.one())), f.sub(x, lambda)));
    return static_cast<u64>(static_cast<i64>(f.q()) + 1 + s);
}

/// #E^(d)_lambda for d y^2 = x(x-1)(x-lambda).
inline u64 twisted_count(const Field& f, ElementIndex lambda, ElementIndex d) {
    detail::require_legendre(f, lambda);
    f.check(d);
    if (d == f.zero()) throw DomainError(Errc::ZeroTwist, "twist parameter must be nonzero");
    return detail::twist_rule(f.q(), legendre_count(f, lambda), f.chi(d));
}

/// 3 #E^(lambda+3)_lambda(F_q) - 2q - 2, the count the jacobian decomposition predicts for C_lambda.
inline u64 predicted_quartic_count(const Field& f, ElementIndex lambda) {
    detail::require_family(f, lambda);
    return 3 * twisted_count(f, lambda, family_twist(f, lambda)) - 2 * f.q() - 2;
}

/// x^4 + y^4 + z^4 - c (x^2 y^2 + y^2 z^2 + z^2 x^2) with c = lambda + 1.
inline ElementIndex quartic_form(const Field& f, ElementIndex c, ElementIndex x, ElementIndex y, ElementIndex z) {
    const ElementIndex x2 = f.square(x), y2 = f.square(y), z2 = f.square(z);
    const ElementIndex quartics = f.add(f.add(f.square(x2), f.square(y2)), f.square(z2));
    const ElementIndex mixed = f.add(f.add(f.mul(x2, y2), f.mul(y2, z2)), f.mul(z2, x2));
    return f.sub(quartics, f.mul(c, mixed));
}

/**
 * #C_lambda(F_q) by brute force over P^2(F_q): the affine chart [x:y:1], the
 * line [x:1:0], then [1:0:0]. O(q^2); refuses q above `cap`.
 */
inline u64 quartic_count(const Field& f, ElementIndex lambda, u64 cap = kDefaultQuarticCap) {
    detail::require_family(f, lambda);
    if (f.q() > cap) throw DomainError(Errc::BudgetExceeded, "quartic sweep over q=" + std::to_string(f.q()));
    const u64 q = f.q();
    const ElementIndex c = f.add(lambda, f.one());

    std::vector<ElementIndex> sq(q), fourth(q);
    for (ElementIndex x = 0; x < q; ++x) {
        sq[x] = f.square(x);
        fourth[x] = f.square(sq[x]);
    }
    u64 count = 0;
    const ElementIndex one = f.one();
    for (ElementIndex x = 0; x < q; ++x) {
        const ElementIndex x4_plus_1 = f.add(fourth[x], one);
        for (ElementIndex y = 0; y < q; ++y) {
            const ElementIndex lhs = f.add(x4_plus_1, fourth[y]);
            const ElementIndex mixed = f.add(f.add(f.mul(sq[x], sq[y]), sq[x]), sq[y]);
            if (lhs == f.mul(c, mixed)) ++count;
        }
    }
    for (ElementIndex x = 0; x < q; ++x)
        if (quartic_form(f, c, x, one, f.zero()) == f.zero()) ++count;
    if (quartic_form(f, c, one, f.zero(), f.zero()) == f.zero()) ++count;
    return count;
}

/**
 * Character-sum kernel for sweeping lambda over a whole field.
 *
 * sum_x chi(x(x-1)(x-lambda)) = sum_x w(x) chi(x - lambda) with
 * w(x) = chi(x(x-1)), a correlation of two byte tables. x - lambda in index
 * space subtracts base-p digits, so for each block of p consecutive indices
 * the inner loop is two contiguous runs.
 */
class LegendreSweep {
public:
    explicit LegendreSweep(Field field) : field_(std::move(field)), chi_(field_), weight_(field_.q()) {
        const Field& f = field_;
        const auto& c = chi_.data();
        for (ElementIndex x = 0; x < f.q(); ++x) {
            weight_[x] = static_cast<std::int8_t>(c[x] * c[f.sub(x, f.one())]);
        }
    }

    const Field& field() const noexcept { return field_; }
    const CharacterTable& chi() const noexcept { return chi_; }

    /// sum_x chi(x(x-1)(x-lambda)).
    i64 character_sum(ElementIndex lambda) const noexcept {
        const u64 p = field_.p();
        const u64 blocks = field_.q() / p;
        const u64 l0 = lambda % p;
        const u64 lhi = lambda / p;
        const std::int8_t* w = weight_.data();
        const std::int8_t* c = chi_.data().data();
        i64 total = 0;
        for (u64 hi = 0; hi < blocks; ++hi) {
            const std::int8_t* wb = w + hi * p;
            const std::int8_t* cb = c + digit_sub(hi, lhi, p) * p;
            std::int32_t s = 0;
            for (u64 lo = l0; lo < p; ++lo) s += wb[lo] * cb[lo - l0];
            const std::int8_t* cw = cb + (p - l0);
            for (u64 lo = 0; lo < l0; ++lo) s += wb[lo] * cw[lo];
            total += s;
        }
        return total;
    }

    u64 legendre_count(ElementIndex lambda) const {
        detail::require_legendre(field_, lambda);
        return static_cast<u64>(static_cast<i64>(field_.q()) + 1 + character_sum(lambda));
    }

    /// #E^(lambda+3)_lambda(F_q) for lambda not in {0, 1, -3}.
    u64 family_count(ElementIndex lambda) const {
        detail::require_family(field_, lambda);
        const u64 count = static_cast<u64>(static_cast<i64>(field_.q()) + 1 + character_sum(lambda));
        return detail::twist_rule(field_.q(), count, chi_(family_twist(field_, lambda)));
    }

    u64 predicted_quartic_count(ElementIndex lambda) const { return 3 * family_count(lambda) - 2 * field_.q() - 2; }

private:
    // Digit-wise a - b in base p.
    static u64 digit_sub(u64 a, u64 b, u64 p) noexcept {
        u64 r = 0, radix = 1;
        while (a != 0 || b != 0) {
            const u64 da = a % p, db = b % p;
            r += (da >= db ? da - db : da + p - db) * radix;
            radix *= p;
            a /= p;
            b /= p;
        }
        return r;
    }

    Field field_;
    CharacterTable chi_;
    std::vector<std::int8_t> weight_;
};

}  // namespace manypoints

#endif  // MANYPOINTS_CURVES_HPP
