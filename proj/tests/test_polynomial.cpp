// Copyright 2026 The hfrac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file test_polynomial.cpp
/// @brief Tests for dense exact-coefficient polynomials, including the
///        q-analog building blocks built on top of them.

#include "hfrac/polynomial.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hfrac/error.hpp"
#include "hfrac/numeric.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {
namespace {

/// Number of random iterations per property test.
constexpr size_t kIterations = 500;

using P = Polynomial<Rational>;

class PolynomialPropertyTest : public ::testing::Test {
   protected:
    PolynomialPropertyTest() : rng_(20260822u) {}

    P random_polynomial(long max_degree = 6) {
        std::uniform_int_distribution<long> deg(0, max_degree);
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 4);
        std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng_)) + 1);
        for (Rational& c : coeffs) c = Rational(BigInt(num(rng_)), BigInt(den(rng_)));
        return P(std::move(coeffs));
    }

    P random_nonzero(long max_degree = 6) {
        P p = random_polynomial(max_degree);
        return p.is_zero() ? P::one() : p;
    }

    std::mt19937 rng_;
};

TEST(PolynomialTest, ZeroPolynomialHasDegreeMinusOne) {
    EXPECT_EQ(P::zero().degree(), -1);
    EXPECT_TRUE(P::zero().is_zero());
    EXPECT_EQ(P(Rational::zero()).degree(), -1);
}

TEST(PolynomialTest, TrailingZerosAreTrimmed) {
    const P p(std::vector<Rational>{Rational(1), Rational(2), Rational::zero()});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coeff(0), Rational(1));
    EXPECT_EQ(p.coeff(1), Rational(2));
    EXPECT_EQ(p.coeff(5), Rational::zero());
}

TEST(PolynomialTest, MonomialBuildsSingleTerm) {
    const P m = P::monomial(Rational(3), 4);
    EXPECT_EQ(m.degree(), 4);
    EXPECT_EQ(m.coeff(4), Rational(3));
    EXPECT_EQ(m.coeff(3), Rational::zero());
    EXPECT_TRUE(P::monomial(Rational::zero(), 7).is_zero());
}

TEST(PolynomialTest, EvaluateMatchesHorner) {
    // p(x) = 1 - 2x + 3x^2 at x = 1/2 is 3/4.
    const P p(std::vector<Rational>{Rational(1), Rational(-2), Rational(3)});
    EXPECT_EQ(p.evaluate(Rational(BigInt(1), BigInt(2))), Rational(BigInt(3), BigInt(4)));
}

TEST(PolynomialTest, ExactDivideRecoversFactor) {
    const P a(std::vector<Rational>{Rational(1), Rational(1)});   // 1 + x
    const P b(std::vector<Rational>{Rational(-1), Rational(1)});  // -1 + x
    EXPECT_EQ(P::exact_divide(a * b, b), a);
    EXPECT_THROW(P::exact_divide(a, b), DivisionError);
    EXPECT_THROW(P::exact_divide(a, P::zero()), DivisionError);
}

TEST(PolynomialTest, ToStringReadable) {
    const P p(std::vector<Rational>{Rational(2), Rational::zero(), Rational(-1)});
    EXPECT_EQ(p.to_string("x"), "2 - x^2");
    EXPECT_EQ(P::zero().to_string("x"), "0");
}

TEST_F(PolynomialPropertyTest, MultiplicationDegreeAdds) {
    // Property: deg(a*b) == deg(a) + deg(b) over an integral domain.
    for (size_t i = 0; i < kIterations; ++i) {
        const P a = random_nonzero();
        const P b = random_nonzero();
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST_F(PolynomialPropertyTest, RingAxiomsHold) {
    for (size_t i = 0; i < kIterations; ++i) {
        const P a = random_polynomial();
        const P b = random_polynomial();
        const P c = random_polynomial();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b - b, a);
    }
}

TEST_F(PolynomialPropertyTest, ExactDivideInvertsMultiply) {
    // Property: (a*b) / b == a for nonzero b.
    for (size_t i = 0; i < kIterations; ++i) {
        const P a = random_polynomial();
        const P b = random_nonzero();
        EXPECT_EQ(P::exact_divide(a * b, b), a);
    }
}

TEST_F(PolynomialPropertyTest, EvaluationIsRingHomomorphism) {
    // Property: (a*b)(x0) == a(x0) * b(x0) and (a+b)(x0) == a(x0) + b(x0).
    std::uniform_int_distribution<long> pick(-5, 5);
    for (size_t i = 0; i < kIterations; ++i) {
        const P a = random_polynomial();
        const P b = random_polynomial();
        const Rational x0(pick(rng_));
        EXPECT_EQ((a * b).evaluate(x0), a.evaluate(x0) * b.evaluate(x0));
        EXPECT_EQ((a + b).evaluate(x0), a.evaluate(x0) + b.evaluate(x0));
    }
}

// ---------------------------------------------------------------------------
// q-analog building blocks
// ---------------------------------------------------------------------------

TEST(QAnalogTest, QIntegerSpecializesToInteger) {
    // [n]_q = 1 + q + ... + q^{n-1}; at q = 1 it equals n.
    for (long n = 0; n <= 10; ++n) {
        EXPECT_EQ(q_int(n).evaluate(Rational(1)), Rational(n));
    }
    EXPECT_EQ(q_int(4).to_string("q"), "1 + q + q^2 + q^3");
}

TEST(QAnalogTest, QBinomialSpecializesToBinomial) {
    for (long n = 0; n <= 8; ++n) {
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k).evaluate(Rational(1)), Rational(binomial(n, k)))
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(QAnalogTest, QBinomialSymmetry) {
    // Property: C(n,k)_q == C(n,n-k)_q.
    for (long n = 0; n <= 9; ++n) {
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
        }
    }
}

TEST(QAnalogTest, QPascalRecurrence) {
    // Property: C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q.
    const QPolynomial q = QPolynomial::monomial(Rational(1), 1);
    for (long n = 1; n <= 9; ++n) {
        for (long k = 1; k <= n - 1; ++k) {
            EXPECT_EQ(q_binomial(n, k),
                      q_binomial(n - 1, k - 1) + q.pow(k) * q_binomial(n - 1, k))
                << "n=" << n << " k=" << k;
        }
    }
}

}  // namespace
}  // namespace hfrac
