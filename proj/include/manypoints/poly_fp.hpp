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

#ifndef MANYPOINTS_POLY_FP_HPP
#define MANYPOINTS_POLY_FP_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace manypoints {

/**
 * Dense univariate polynomial over F_p, constant term first.
 *
 * Always normalized: coefficients reduced mod p, no trailing zeros, the zero
 * polynomial is the empty coefficient list. Inner products are accumulated in
 * 128 bits and reduced once per output coefficient, which is exact for
 * p <= 2^40 and degrees below 2^20.
 */
class PolyFp {
public:
    explicit PolyFp(u64 p) : p_(p) {}

    PolyFp(u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
        for (auto& c : coeffs_) c %= p_;
        trim();
    }

    static PolyFp monomial(u64 p, u64 coeff, std::size_t degree) {
        std::vector<u64> c(degree + 1, 0);
        c[degree] = coeff;
        return PolyFp(p, std::move(c));
    }

    static PolyFp x(u64 p) { return monomial(p, 1, 1); }

    u64 prime() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    u64 leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    u64 operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    u64 evaluate(u64 x) const noexcept {
        x %= p_;
        u64 acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
        return acc;
    }

    PolyFp monic() const {
        if (is_zero()) return *this;
        const u64 inv = powmod(leading(), p_ - 2, p_);
        std::vector<u64> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(coeffs_[i], inv, p_);
        return PolyFp(p_, std::move(c));
    }

    friend bool operator==(const PolyFp&, const PolyFp&) = default;

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
        check_same(a, b);
        std::vector<u64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % a.p_;
        return PolyFp(a.p_, std::move(c));
    }

    friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
        check_same(a, b);
        std::vector<u64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + a.p_ - b[i]) % a.p_;
        return PolyFp(a.p_, std::move(c));
    }

    friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
        const std::size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
        std::vector<u64> c(na + nb - 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            const std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
            const std::size_t hi = std::min(k, na - 1);
            u128 acc = 0;
            for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<u128>(a.coeffs_[i]) * b.coeffs_[k - i];
            c[k] = static_cast<u64>(acc % a.p_);
        }
        return PolyFp(a.p_, std::move(c));
    }

    /// Quotient and remainder; throws ZeroModulus when b = 0.
    friend std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
        check_same(a, b);
        if (b.is_zero()) throw DomainError(Errc::ZeroModulus, "division by the zero polynomial");
        const u64 p = a.p_;
        if (a.degree() < b.degree()) return {PolyFp(p), a};
        const std::size_t db = static_cast<std::size_t>(b.degree());
        const std::size_t dq = static_cast<std::size_t>(a.degree()) - db;
        const u64 inv_lead = powmod(b.leading(), p - 2, p);
        const auto& bc = b.coeffs_;
        const auto& ac = a.coeffs_;

        // Column-wise long division: q_i = (a_{i+db} - sum_j q_{i+j} b_{db-j}) / lead.
        std::vector<u64> q(dq + 1, 0);
        for (std::size_t step = 0; step <= dq; ++step) {
            const std::size_t i = dq - step;
            u128 acc = 0;
            const std::size_t jmax = std::min(db, dq - i);
            for (std::size_t j = 1; j <= jmax; ++j) acc += static_cast<u128>(q[i + j]) * bc[db - j];
            const u64 top = (ac[i + db] + p - static_cast<u64>(acc % p)) % p;
            q[i] = mulmod(top, inv_lead, p);
        }
        std::vector<u64> r(db, 0);
        for (std::size_t k = 0; k < db; ++k) {
            u128 acc = 0;
            const std::size_t imax = std::min(k, dq);
            for (std::size_t i = 0; i <= imax; ++i) acc += static_cast<u128>(q[i]) * bc[k - i];
            r[k] = (ac[k] + p - static_cast<u64>(acc % p)) % p;
        }
        return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
    }

    friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }
    friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }

private:
    static void check_same(const PolyFp& a, const PolyFp& b) {
        if (a.p_ != b.p_) throw DomainError(Errc::MismatchedSpecs, "polynomials over different primes");
    }

    void trim() noexcept {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    u64 p_;
    std::vector<u64> coeffs_;
};

inline PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m) {
    if (m.is_zero()) throw DomainError(Errc::ZeroModulus, "mulmod by the zero polynomial");
    return (a * b) % m;
}

inline PolyFp poly_powmod(const PolyFp& base, u64 e, const PolyFp& m) {
    if (m.is_zero()) throw DomainError(Errc::ZeroModulus, "powmod by the zero polynomial");
    PolyFp result = PolyFp(m.prime(), {1}) % m;
    PolyFp b = base % m;
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, b, m);
        e >>= 1;
        if (e > 0) b = poly_mulmod(b, b, m);
    }
    return result;
}

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
inline PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {

// Splits a monic squarefree product of distinct linear factors into its roots.
inline void split_linear(const PolyFp& g, std::mt19937_64& rng, std::set<u64>& roots) {
    const u64 p = g.prime();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        roots.insert((p - g[0]) % p);
        return;
    }
    std::uniform_int_distribution<u64> shift(0, p - 1);
    const PolyFp one(p, {1});
    for (;;) {
        // Roots r with (r + c) a nonzero square go to h, the rest stay in g / h.
        const PolyFp x_plus_c(p, {shift(rng), 1});
        const PolyFp h = poly_gcd(g, poly_powmod(x_plus_c, (p - 1) / 2, g) - one);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, rng, roots);
            split_linear(g / h, rng, roots);
            return;
        }
    }
}

}  // namespace detail

/**
 * Roots of f in F_p.
 *
 * Takes g = gcd(f, x^p - x), then splits g by gcd(g, (x + c)^((p-1)/2) - 1)
 * with shifts c drawn from a generator seeded by `seed`. The returned set does
 * not depend on the seed.
 */
inline std::set<u64> poly_roots(const PolyFp& f, u64 seed = 0) {
    if (f.is_zero()) throw DomainError(Errc::ZeroModulus, "roots of the zero polynomial");
    const u64 p = f.prime();
    std::set<u64> roots;
    if (f.degree() == 0) return roots;
    const PolyFp x = PolyFp::x(p);
    const PolyFp g = poly_gcd(f, poly_powmod(x, p, f) - x);
    std::mt19937_64 rng(seed);
    detail::split_linear(g, rng, roots);
    return roots;
}

}  // namespace manypoints

#endif  // MANYPOINTS_POLY_FP_HPP
