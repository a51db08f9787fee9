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

#ifndef MANYPOINTS_FINITE_FIELD_HPP
#define MANYPOINTS_FINITE_FIELD_HPP

#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"
#include "poly_fp.hpp"

namespace manypoints {

/**
 * @brief Description of F_{p^n} = F_p[x]/(modulus).
 *
 * The modulus is monic and irreducible of degree n, constant term first. For
 * n = 1 it is x itself, so elements are plain residues.
 */
struct FieldSpec {
    u64 p = 0;
    unsigned n = 0;
    u64 q = 0;
    std::vector<u64> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Polynomial-basis coordinates: coeffs[i] multiplies alpha^i.
struct FieldElement {
    std::vector<u64> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Canonical index sum coeffs[i] * p^i, the wire format for elements.
using ElementIndex = u64;

/// Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
inline bool is_irreducible(const PolyFp& f) {
    const long deg = f.degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    const u64 p = f.prime();
    const unsigned n = static_cast<unsigned>(deg);
    const PolyFp x = PolyFp::x(p);

    std::vector<PolyFp> frob;  // frob[k] = x^(p^k) mod f
    frob.reserve(n + 1);
    frob.push_back(x % f);
    for (unsigned k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), p, f));
    if (frob[n] != x % f) return false;

    unsigned rest = n;
    for (unsigned r = 2; r <= rest; ++r) {
        if (rest % r != 0) continue;
        while (rest % r == 0) rest /= r;
        if (poly_gcd(frob[n / r] - x, f).degree() != 0) return false;
    }
    return true;
}

/**
 * F_{p^n} with the lexicographically smallest monic irreducible modulus.
 *
 * Candidates are compared as coefficient lists, constant term first, so the
 * constant term is the most significant position of the scan.
 */
inline FieldSpec make_field(u64 p, unsigned n) {
    if (p == 2) throw DomainError(Errc::EvenPrime, "characteristic 2 is not supported");
    if (!is_prime(p)) throw DomainError(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (n == 0) throw DomainError(Errc::InvalidDegree, "extension degree must be >= 1");
    const auto q = checked_power(p, n);
    if (!q) throw DomainError(Errc::Overflow, "p^n exceeds 2^40");

    FieldSpec spec{p, n, *q, {}};
    if (n == 1) {
        spec.modulus = {0, 1};
        return spec;
    }
    const u64 candidates = *q;
    for (u64 k = *q / p; k < candidates; ++k) {
        std::vector<u64> c(n + 1, 0);
        u64 rest = k;
        for (unsigned i = n; i-- > 0;) {
            c[i] = rest % p;
            rest /= p;
        }
        c[n] = 1;
        if (is_irreducible(PolyFp(p, c))) {
            spec.modulus = std::move(c);
            return spec;
        }
    }
    throw DomainError(Errc::InvalidDegree, "no irreducible polynomial found");  // unreachable
}

/**
 * Arithmetic on canonical element indices of a fixed field.
 *
 * Immutable after construction; every member is a pure function and the
 * object can be shared across threads.
 */
class Field {
public:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
        validate_spec();
        radix_.resize(spec_.n);
        u64 r = 1;
        for (unsigned i = 0; i < spec_.n; ++i) {
            radix_[i] = r;
            r *= spec_.p;
        }
    }

    Field(u64 p, unsigned n) : Field(make_field(p, n)) {}

    /// Field of size q with the canonical modulus.
    static Field of_order(u64 q) {
        const auto pp = require_odd_prime_power(q);
        return Field(pp.p, pp.n);
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    u64 p() const noexcept { return spec_.p; }
    unsigned n() const noexcept { return spec_.n; }
    u64 q() const noexcept { return spec_.q; }

    ElementIndex zero() const noexcept { return 0; }
    ElementIndex one() const noexcept { return 1; }

    /// Image of an integer in the prime subfield.
    ElementIndex from_integer(i64 v) const noexcept { return reduce_signed(v, spec_.p); }

    bool contains(ElementIndex a) const noexcept { return a < spec_.q; }

    FieldElement element(ElementIndex a) const {
        check(a);
        FieldElement e{std::vector<u64>(spec_.n)};
        for (unsigned i = 0; i < spec_.n; ++i) {
            e.coeffs[i] = a % spec_.p;
            a /= spec_.p;
        }
        return e;
    }

    ElementIndex index(const FieldElement& e) const {
        if (e.coeffs.size() != spec_.n) throw DomainError(Errc::MismatchedSpecs, "element has wrong length");
        ElementIndex a = 0;
        for (unsigned i = spec_.n; i-- > 0;) {
            if (e.coeffs[i] >= spec_.p) throw DomainError(Errc::InvalidElement, "coefficient not reduced");
            a = a * spec_.p + e.coeffs[i];
        }
        return a;
    }

    ElementIndex add(ElementIndex a, ElementIndex b) const noexcept {
        if (spec_.n == 1) return a + b >= spec_.p ? a + b - spec_.p : a + b;
        ElementIndex r = 0;
        for (unsigned i = 0; i < spec_.n; ++i) {
            u64 s = a % spec_.p + b % spec_.p;
            if (s >= spec_.p) s -= spec_.p;
            r += s * radix_[i];
            a /= spec_.p;
            b /= spec_.p;
        }
        return r;
    }

    ElementIndex neg(ElementIndex a) const noexcept {
        if (spec_.n == 1) return a == 0 ? 0 : spec_.p - a;
        ElementIndex r = 0;
        for (unsigned i = 0; i < spec_.n; ++i) {
            const u64 d = a % spec_.p;
            r += (d == 0 ? 0 : spec_.p - d) * radix_[i];
            a /= spec_.p;
        }
        return r;
    }

    ElementIndex sub(ElementIndex a, ElementIndex b) const noexcept { return add(a, neg(b)); }

    ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
        const u64 p = spec_.p;
        if (spec_.n == 1) return mulmod(a, b, p);
        const unsigned n = spec_.n;
        u64 da[64], db[64];
        for (unsigned i = 0; i < n; ++i) {
            da[i] = a % p;
            db[i] = b % p;
            a /= p;
            b /= p;
        }
        u64 prod[128];
        for (unsigned k = 0; k + 1 < 2 * n; ++k) {
            const unsigned lo = k >= n - 1 ? k - (n - 1) : 0;
            const unsigned hi = k < n - 1 ? k : n - 1;
            u128 acc = 0;
            for (unsigned i = lo; i <= hi; ++i) acc += static_cast<u128>(da[i]) * db[k - i];
            prod[k] = static_cast<u64>(acc % p);
        }
        // alpha^n = -(m_0 + m_1 alpha + ... + m_{n-1} alpha^{n-1})
        const auto& m = spec_.modulus;
        for (unsigned k = 2 * n - 2; k >= n; --k) {
            const u64 c = prod[k];
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                const u64 t = mulmod(c, m[j], p);
                u64& dst = prod[k - n + j];
                dst = dst >= t ? dst - t : dst + p - t;
            }
        }
        ElementIndex r = 0;
        for (unsigned i = n; i-- > 0;) r = r * p + prod[i];
        return r;
    }

    ElementIndex square(ElementIndex a) const noexcept { return mul(a, a); }

    ElementIndex pow(ElementIndex a, u64 e) const noexcept {
        ElementIndex r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return r;
    }

    ElementIndex inv(ElementIndex a) const {
        if (a == 0) throw DomainError(Errc::ZeroInverse, "inverse of zero");
        return pow(a, spec_.q - 2);
    }

    ElementIndex div(ElementIndex a, ElementIndex b) const { return mul(a, inv(b)); }

    /// a -> a^p.
    ElementIndex frobenius(ElementIndex a) const noexcept { return pow(a, spec_.p); }

    /// Quadratic character by Euler's criterion: 0, +1 or -1.
    int chi(ElementIndex a) const noexcept {
        if (a == 0) return 0;
        return pow(a, (spec_.q - 1) / 2) == one() ? 1 : -1;
    }

    /// Index-space view of every element, in increasing index order.
    auto indices() const noexcept { return std::views::iota(ElementIndex{0}, spec_.q); }

    void check(ElementIndex a) const {
        if (a >= spec_.q) throw DomainError(Errc::InvalidElement, "index " + std::to_string(a) + " outside the field");
    }

private:
    void validate_spec() const {
        const auto& s = spec_;
        if (s.p == 2) throw DomainError(Errc::EvenPrime, "characteristic 2 is not supported");
        if (!is_prime(s.p)) throw DomainError(Errc::NonPrime, std::to_string(s.p) + " is not prime");
        if (s.n == 0 || s.n > 40) throw DomainError(Errc::InvalidDegree, "bad extension degree");
        const auto q = checked_power(s.p, s.n);
        if (!q) throw DomainError(Errc::Overflow, "p^n exceeds 2^40");
        if (*q != s.q) throw DomainError(Errc::MismatchedSpecs, "q != p^n");
        if (s.modulus.size() != s.n + 1 || s.modulus.back() != 1)
            throw DomainError(Errc::MismatchedSpecs, "modulus must be monic of degree n");
        for (u64 c : s.modulus)
            if (c >= s.p) throw DomainError(Errc::InvalidElement, "modulus coefficient not reduced");
        if (s.n > 1 && !is_irreducible(PolyFp(s.p, s.modulus)))
            throw DomainError(Errc::MismatchedSpecs, "modulus is reducible");
    }

    FieldSpec spec_;
    std::vector<u64> radix_;  // p^i
};

/// Which operation ff_arith performs.
enum class ArithOp { Add, Sub, Mul, Inv, Pow, Neg };

/**
 * Element-level arithmetic. `b` is the second operand for Add/Sub/Mul, the
 * exponent's canonical index for Pow (an ordinary integer), and ignored for
 * Inv/Neg.
 */
inline FieldElement ff_arith(const FieldSpec& spec, ArithOp op, const FieldElement& a, const FieldElement& b) {
    const Field f(spec);
    const ElementIndex ia = f.index(a);
    switch (op) {
        case ArithOp::Add: return f.element(f.add(ia, f.index(b)));
        case ArithOp::Sub: return f.element(f.sub(ia, f.index(b)));
        case ArithOp::Mul: return f.element(f.mul(ia, f.index(b)));
        case ArithOp::Inv: return f.element(f.inv(ia));
        case ArithOp::Neg: return f.element(f.neg(ia));
        case ArithOp::Pow: break;
    }
    throw DomainError(Errc::MismatchedSpecs, "Pow takes an integer exponent; use ff_pow");
}

inline FieldElement ff_pow(const FieldSpec& spec, const FieldElement& a, u64 e) {
    const Field f(spec);
    return f.element(f.pow(f.index(a), e));
}

inline int quad_char(const FieldSpec& spec, const FieldElement& a) {
    const Field f(spec);
    return f.chi(f.index(a));
}

/// Every element of the field in increasing canonical-index order (lazy).
inline auto enumerate_field(const Field& field) {
    return field.indices() | std::views::transform([&field](ElementIndex i) { return field.element(i); });
}

/**
 * Quadratic character of every element, built by squaring all of F_q once.
 *
 * Needs q bytes; agrees with Field::chi (Euler's criterion) everywhere.
 */
class CharacterTable {
public:
    explicit CharacterTable(const Field& field) : table_(field.q(), -1) {
        table_[0] = 0;
        const u64 q = field.q();
        // x and -x have the same square, so half the field suffices for n = 1.
        const u64 limit = field.n() == 1 ? (q - 1) / 2 : q - 1;
        for (ElementIndex x = 1; x <= limit; ++x) table_[field.square(x)] = 1;
    }

    int operator()(ElementIndex a) const noexcept { return table_[a]; }

    const std::vector<std::int8_t>& data() const noexcept { return table_; }

private:
    std::vector<std::int8_t> table_;
};

}  // namespace manypoints

#endif  // MANYPOINTS_FINITE_FIELD_HPP
