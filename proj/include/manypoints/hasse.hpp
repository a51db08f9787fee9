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

#ifndef MANYPOINTS_HASSE_HPP
#define MANYPOINTS_HASSE_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "number_theory.hpp"
#include "poly_fp.hpp"

namespace manypoints {

/// Largest prime accepted by hasse_polynomial.
inline constexpr u64 kMaxHassePrime = u64{1} << 20;

/**
 * H_p(x) = sum_{i=0}^{m} binom(m, i)^2 x^i with m = (p-1)/2, over F_p.
 *
 * Uses c_0 = 1, c_{i+1} = c_i (m - i)^2 / (i + 1)^2.
 */
inline PolyFp hasse_polynomial(u64 p) {
    if (p == 2) throw DomainError(Errc::EvenPrime, "Hasse polynomial needs an odd prime");
    if (!is_prime(p)) throw DomainError(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (p > kMaxHassePrime) throw DomainError(Errc::BudgetExceeded, "p above 2^20");
    const u64 m = (p - 1) / 2;
    std::vector<u64> c(m + 1);
    c[0] = 1;
    for (u64 i = 0; i < m; ++i) {
        const u64 num = mulmod(m - i, m - i, p);
        const u64 den = mulmod(i + 1, i + 1, p);
        c[i + 1] = mulmod(mulmod(c[i], num, p), powmod(den, p - 2, p), p);
    }
    return PolyFp(p, std::move(c));
}

/// Evaluates a polynomial with F_p coefficients at an element of an extension of F_p.
inline ElementIndex evaluate_in(const Field& field, const PolyFp& f, ElementIndex x) {
    if (f.prime() != field.p()) throw DomainError(Errc::MismatchedSpecs, "polynomial and field differ in p");
    ElementIndex acc = 0;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
    return acc;
}

/**
 * Frobenius trace of E_lambda modulo p, read off the Hasse polynomial.
 *
 * Returns ((-1)^((p-1)/2) H_p(lambda))^e with e = 1 over F_p and e = 1 + p
 * over F_{p^2} (the norm, which lies in F_p). `hasse` must be H_p.
 */
inline u64 hasse_trace_residue(const Field& field, const PolyFp& hasse, ElementIndex lambda) {
    field.check(lambda);
    if (field.n() > 2) throw DomainError(Errc::UnsupportedField, "Hasse residue needs q = p or q = p^2");
    if (lambda == field.zero() || lambda == field.one())
        throw DomainError(Errc::SingularLambda, "lambda must not be 0 or 1");
    const u64 p = field.p();
    ElementIndex v = evaluate_in(field, hasse, lambda);
    if (((p - 1) / 2) % 2 == 1) v = field.neg(v);
    const u64 e = field.n() == 1 ? 1 : 1 + p;
    return field.pow(v, e);
}

inline u64 hasse_trace_residue(const Field& field, ElementIndex lambda) {
    return hasse_trace_residue(field, hasse_polynomial(field.p()), lambda);
}

}  // namespace manypoints

#endif  // MANYPOINTS_HASSE_HPP
