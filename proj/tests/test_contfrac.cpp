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

/// @file test_contfrac.cpp
/// @brief Tests for generalized continued fractions: evaluation and the
///        value-preserving contraction transforms.

#include "hfrac/contfrac.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hfrac/error.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"

namespace hfrac {
namespace {

/// Number of random iterations per property test.
constexpr size_t kIterations = 500;

using P = Polynomial<Rational>;
using CF = GeneralizedCF<Rational>;
using Lv = CFLevel<Rational>;
using S = TruncatedSeries<Rational>;

/// Compared order for value-preservation checks. Levels beyond the first
/// kOrder + 1 cannot influence coefficients through x^kOrder because every
/// partial numerator below has valuation >= 1.
constexpr long kOrder = 6;
constexpr long kLevels = 10;

P lin(Rational c0, Rational c1) { return P(std::vector<Rational>{c0, c1}); }

class ContractionPropertyTest : public ::testing::Test {
   protected:
    ContractionPropertyTest() : rng_(20260822u) {}

    Rational nonzero_coeff() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 4);
        long n = num(rng_);
        if (n == 0) n = 5;
        return Rational(BigInt(n), BigInt(den(rng_)));
    }

    Rational any_coeff() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 4);
        return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
    }

    /// Random finite fraction: a_j = c_j x with c_j != 0, b_j = 1 + d_j x.
    CF random_cf(bool zero_b0) {
        P b0 = zero_b0 ? P::zero() : P(any_coeff());
        std::vector<Lv> levels;
        for (long j = 1; j <= kLevels; ++j) {
            Lv lv;
            lv.a = P::monomial(nonzero_coeff(), 1);
            lv.b = lin(Rational(1), any_coeff());
            levels.push_back(std::move(lv));
        }
        return CF(std::move(b0), std::move(levels));
    }

    std::mt19937 rng_;
};

TEST(ContFracTest, EvaluateKnownFraction) {
    // x / (1 - x - x^2/(1 - ...)) with a_j = x^2 gives large Schroeder-like
    // data; pin a hand-checked small case instead:
    // 1 / (1 - x/(1 - x)) = (1 - x) / (1 - 2x) = 1 + x + 2x^2 + 4x^3 + ...
    const CF cf(P(Rational::zero()), std::vector<Lv>{
                                         Lv{P(Rational(1)), P(Rational(1))},
                                         Lv{P::monomial(Rational(-1), 1), lin(Rational(1), Rational(-1))},
                                     });
    const S s = cf.evaluate(6);
    EXPECT_EQ(s.coeff(0), Rational(1));
    EXPECT_EQ(s.coeff(1), Rational(1));
    for (long n = 2; n <= 6; ++n) {
        EXPECT_EQ(s.coeff(n), Rational(BigInt(1) << static_cast<unsigned>(n - 1)));
    }
}

TEST(ContFracTest, PatternBackedEvaluationIsCertified) {
    // 1 + x/(1 - x - C(k,2) x^2 / (1 - kx - ...)) generates
    // 1, 1, 1, 2, 5, 16, 61, ... (alternating-permutation counts).
    const CF cf(P(Rational(1)), [](long k) {
        Lv lv;
        if (k == 1) {
            lv.a = P::monomial(Rational(1), 1);
        } else {
            lv.a = P::monomial(Rational(-k * (k - 1) / 2), 2);
        }
        lv.b = lin(Rational(1), Rational(-k));
        return lv;
    });
    const S s = cf.evaluate(10);
    const long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(s.coeff(n), Rational(expected[n])) << "n=" << n;
}

TEST(ContFracTest, FiniteDepthGuards) {
    const CF cf(P::zero(), std::vector<Lv>{Lv{P::monomial(Rational(1), 1), P::one()}});
    EXPECT_THROW(cf.evaluate_at_depth(4, 2), StructureError);
    EXPECT_NO_THROW(cf.evaluate_at_depth(4, 1));
    EXPECT_THROW(cf.level(2), StructureError);
}

TEST_F(ContractionPropertyTest, EvenContractionPreservesValue) {
    // Property: the even contraction evaluates to the same series.
    for (size_t i = 0; i < kIterations / 25; ++i) {
        const CF cf = random_cf(false);
        const CF even = contract_even(cf, kLevels / 2);
        const S a = cf.evaluate_at_depth(kOrder, kLevels);
        const S b = even.evaluate_at_depth(kOrder, kLevels / 2);
        for (long n = 0; n <= kOrder; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n)) << "n=" << n;
    }
}

TEST_F(ContractionPropertyTest, OddContractionPreservesValue) {
    for (size_t i = 0; i < kIterations / 25; ++i) {
        // The odd contraction divides by b_1 exactly, so fix b_1 = 1.
        CF raw = random_cf(false);
        std::vector<Lv> levels = raw.levels();
        levels[0].b = P::one();
        const CF cf(raw.b0(), std::move(levels));
        const CF odd = contract_odd(cf, (kLevels - 1) / 2);
        const S a = cf.evaluate_at_depth(kOrder, kLevels);
        const S b = odd.evaluate_at_depth(kOrder, (kLevels - 1) / 2);
        for (long n = 0; n <= kOrder; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n)) << "n=" << n;
    }
}

TEST_F(ContractionPropertyTest, ChopPreservesValue) {
    // Chop needs b_p | a_p; force a_p = b_p * c x at a random position.
    std::uniform_int_distribution<long> pos(1, kLevels - 2);
    for (size_t i = 0; i < kIterations / 25; ++i) {
        CF cf = random_cf(false);
        const long p = pos(rng_);
        std::vector<Lv> levels = cf.levels();
        levels[static_cast<std::size_t>(p - 1)].a =
            levels[static_cast<std::size_t>(p - 1)].b * P::monomial(nonzero_coeff(), 1);
        cf = CF(cf.b0(), std::move(levels));
        const CF chopped = chop_at(cf, p, kLevels);
        const S a = cf.evaluate_at_depth(kOrder, kLevels);
        const S b = chopped.evaluate_at_depth(kOrder, kLevels - 1);
        for (long n = 0; n <= kOrder; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n)) << "p=" << p;
    }
}

TEST_F(ContractionPropertyTest, HaircutPreservesValue) {
    // Haircut splits a constant head off a fraction with b_0 = 0.
    for (size_t i = 0; i < kIterations / 25; ++i) {
        const CF cf = random_cf(true);
        const Rational alpha = nonzero_coeff();
        const CF cut = haircut(cf, alpha, kLevels);
        const S a = cf.evaluate_at_depth(kOrder, kLevels);
        const S b = cut.evaluate_at_depth(kOrder, kLevels);
        for (long n = 0; n <= kOrder; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n)) << "n=" << n;
    }
}

TEST_F(ContractionPropertyTest, EquivalenceScalePreservesValue) {
    for (size_t i = 0; i < kIterations / 25; ++i) {
        const CF cf = random_cf(false);
        std::vector<Rational> r;
        for (long j = 0; j < kLevels; ++j) r.push_back(nonzero_coeff());
        const CF scaled = equivalence_scale(cf, r);
        const S a = cf.evaluate_at_depth(kOrder, kLevels);
        const S b = scaled.evaluate_at_depth(kOrder, kLevels);
        for (long n = 0; n <= kOrder; ++n) EXPECT_EQ(a.coeff(n), b.coeff(n)) << "n=" << n;
    }
}

TEST(ContFracTest, HaircutRequiresZeroIntegerPart) {
    const CF cf(P(Rational(1)), std::vector<Lv>{
                                    Lv{P::monomial(Rational(1), 1), P::one()},
                                    Lv{P::monomial(Rational(1), 1), P::one()},
                                    Lv{P::monomial(Rational(1), 1), P::one()},
                                });
    EXPECT_THROW(haircut(cf, Rational(1), 3), StructureError);
}

TEST(ContFracTest, ChopRequiresDivisibility) {
    const CF cf(P::zero(), std::vector<Lv>{
                               Lv{P::monomial(Rational(1), 1), lin(Rational(1), Rational(-1))},
                               Lv{P::monomial(Rational(1), 1), P::one()},
                               Lv{P::monomial(Rational(1), 1), P::one()},
                           });
    EXPECT_THROW(chop_at(cf, 1, 3), DivisionError);
}

}  // namespace
}  // namespace hfrac
