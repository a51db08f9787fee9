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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include <manypoints/finite_field.hpp>
#include <manypoints/search.hpp>

#include "oracles.hpp"

using namespace manypoints;

namespace {

// Odd prime powers up to `hi` with their (p, n).
std::vector<PrimePower> small_fields(u64 hi) {
    std::vector<PrimePower> out;
    for (u64 q : odd_prime_powers(3, hi)) out.push_back(*prime_power(q));
    return out;
}

}  // namespace

TEST(MakeField, PrimeFieldUsesX) {
    const FieldSpec s = make_field(7, 1);
    EXPECT_EQ(s.q, 7u);
    EXPECT_EQ(s.modulus, (std::vector<u64>{0, 1}));
}

TEST(MakeField, F9IsXSquaredPlusOne) {
    EXPECT_EQ(make_field(3, 2).modulus, (std::vector<u64>{1, 0, 1}));
}

TEST(MakeField, F125CubicHasNoRootsAndMatchesScan) {
    const FieldSpec s = make_field(5, 3);
    const PolyFp m(5, s.modulus);
    for (u64 x = 0; x < 5; ++x) EXPECT_NE(m.evaluate(x), 0u);
    const PolyFp x = PolyFp::x(5);
    EXPECT_EQ(poly_gcd(poly_powmod(x, 5, m) - x, m).degree(), 0);
    EXPECT_EQ(s.modulus, oracle::smallest_irreducible(5, 3));
}

TEST(MakeField, LexicographicScanMatchesTrialDivision) {
    for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 4}, {7, 2}, {7, 3},
                                                            {11, 2}, {13, 3}, {3, 6}}) {
        EXPECT_EQ(make_field(p, n).modulus, oracle::smallest_irreducible(p, n)) << p << "^" << n;
    }
}

TEST(MakeField, Deterministic) {
    EXPECT_EQ(make_field(3, 7), make_field(3, 7));
    EXPECT_EQ(make_field(1009, 2), make_field(1009, 2));
}

TEST(MakeField, LargeFieldsWithinCap) {
    EXPECT_EQ(make_field(3, 25).q, 847288609443ull);
    EXPECT_EQ(make_field(1048573, 2).q, 1048573ull * 1048573ull);
}

TEST(MakeField, Errors) {
    const auto code = [](auto fn) {
        try {
            fn();
        } catch (const DomainError& e) {
            return e.code();
        }
        return Errc::EmptySweep;
    };
    EXPECT_EQ(code([] { make_field(9, 1); }), Errc::NonPrime);
    EXPECT_EQ(code([] { make_field(2, 3); }), Errc::EvenPrime);
    EXPECT_EQ(code([] { make_field(3, 26); }), Errc::Overflow);
    EXPECT_EQ(code([] { make_field(5, 0); }), Errc::InvalidDegree);
    EXPECT_EQ(code([] { Field(FieldSpec{3, 2, 9, {2, 0, 1}}); }), Errc::MismatchedSpecs);  // x^2 + 2 = (x-1)(x+1)
}

TEST(FieldArith, InverseInF7) {
    const FieldSpec s = make_field(7, 1);
    EXPECT_EQ(ff_arith(s, ArithOp::Inv, FieldElement{{3}}, {}), FieldElement{{5}});
    EXPECT_THROW(ff_arith(s, ArithOp::Inv, FieldElement{{0}}, {}), DomainError);
}

TEST(FieldArith, AlphaSquaredInF9) {
    const FieldSpec s = make_field(3, 2);
    const FieldElement alpha{{0, 1}};
    EXPECT_EQ(ff_arith(s, ArithOp::Mul, alpha, alpha), (FieldElement{{2, 0}}));
}

TEST(FieldArith, MismatchedElementsRejected) {
    const FieldSpec s = make_field(3, 2);
    EXPECT_THROW(ff_arith(s, ArithOp::Add, FieldElement{{1}}, FieldElement{{0, 1}}), DomainError);
    EXPECT_THROW(ff_arith(s, ArithOp::Add, FieldElement{{3, 0}}, FieldElement{{0, 1}}), DomainError);
}

TEST(FieldArith, ElementLevelOpsAgreeWithIndexOps) {
    const FieldSpec s = make_field(5, 2);
    const Field f(s);
    const FieldElement a = f.element(17), b = f.element(9);
    EXPECT_EQ(f.index(ff_arith(s, ArithOp::Add, a, b)), f.add(17, 9));
    EXPECT_EQ(f.index(ff_arith(s, ArithOp::Sub, a, b)), f.sub(17, 9));
    EXPECT_EQ(f.index(ff_arith(s, ArithOp::Neg, a, b)), f.neg(17));
    EXPECT_EQ(f.index(ff_pow(s, a, 7)), f.pow(17, 7));
}

TEST(FieldArith, MultiplicationMatchesPolynomialRoute) {
    std::mt19937_64 rng(7);
    for (auto [p, n] : small_fields(3000)) {
        const Field f(p, n);
        std::uniform_int_distribution<u64> pick(0, f.q() - 1);
        for (int i = 0; i < 200; ++i) {
            const u64 a = pick(rng), b = pick(rng);
            ASSERT_EQ(f.mul(a, b), oracle::poly_mul(f, a, b)) << "q=" << f.q();
        }
    }
}

TEST(FieldArith, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(11);
    for (auto [p, n] : small_fields(20000)) {
        const Field f(p, n);
        std::uniform_int_distribution<u64> pick(0, f.q() - 1);
        for (int i = 0; i < 20; ++i) {
            const u64 a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.add(a, f.neg(a)), 0u);
            if (a != 0) {
                ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
                ASSERT_EQ(f.pow(a, f.q() - 1), 1u);
            }
        }
    }
}

TEST(FieldArith, LargeFieldArithmetic) {
    const Field f(3, 25);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<u64> pick(1, f.q() - 1);
    for (int i = 0; i < 10; ++i) {
        const u64 a = pick(rng);
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    const Field g(1099511627689ull, 1);  // largest prime below 2^40
    EXPECT_EQ(g.mul(g.q() - 1, g.q() - 1), 1u);
}

TEST(QuadChar, Examples) {
    const FieldSpec f7 = make_field(7, 1);
    EXPECT_EQ(quad_char(f7, FieldElement{{3}}), -1);
    EXPECT_EQ(quad_char(f7, FieldElement{{1}}), 1);
    EXPECT_EQ(quad_char(f7, FieldElement{{0}}), 0);
    const Field f9(3, 2);
    EXPECT_EQ(f9.chi(f9.neg(1)), 1);
}

TEST(QuadChar, TableAgreesWithEulerAndHalfAreSquares) {
    for (auto [p, n] : small_fields(2000)) {
        const Field f(p, n);
        const CharacterTable table(f);
        u64 squares = 0;
        for (ElementIndex a = 0; a < f.q(); ++a) {
            ASSERT_EQ(table(a), f.chi(a)) << "q=" << f.q() << " a=" << a;
            if (a != 0 && table(a) == 1) ++squares;
        }
        EXPECT_EQ(squares, (f.q() - 1) / 2);
    }
}

TEST(QuadChar, MultiplicativeExhaustive) {
    for (auto [p, n] : small_fields(361)) {
        const Field f(p, n);
        const CharacterTable chi(f);
        for (ElementIndex a = 1; a < f.q(); ++a)
            for (ElementIndex b = 1; b < f.q(); ++b) ASSERT_EQ(chi(f.mul(a, b)), chi(a) * chi(b));
    }
}

TEST(Frobenius, RingHomomorphismAndOrder) {
    for (auto [p, n] : small_fields(361)) {
        const Field f(p, n);
        for (ElementIndex a = 0; a < f.q(); ++a) {
            ASSERT_EQ(f.pow(a, f.q()), a);
            const ElementIndex b = (a * 7 + 3) % f.q();
            ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            ASSERT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        }
    }
}

TEST(Enumerate, OrderAndEncoding) {
    const Field f3(3, 1);
    std::vector<ElementIndex> idx;
    for (const FieldElement& e : enumerate_field(f3)) idx.push_back(f3.index(e));
    EXPECT_EQ(idx, (std::vector<ElementIndex>{0, 1, 2}));

    const Field f9(3, 2);
    EXPECT_EQ(f9.element(3), (FieldElement{{0, 1}}));
    u64 count = 0;
    for (const FieldElement& e : enumerate_field(f9)) {
        EXPECT_EQ(f9.index(e), count);
        ++count;
    }
    EXPECT_EQ(count, 9u);
}

TEST(Enumerate, IndexRoundTrip) {
    for (auto [p, n] : small_fields(361)) {
        const Field f(p, n);
        for (ElementIndex a = 0; a < f.q(); ++a) ASSERT_EQ(f.index(f.element(a)), a);
    }
}
