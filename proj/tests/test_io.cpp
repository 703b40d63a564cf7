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

/// @file test_io.cpp
/// @brief Tests for the JSON renderings: exact bytes for fixed inputs,
///        round-trips for random inputs, and strict rejection of malformed
///        documents.

#include "hfrac/io.hpp"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hfrac/contfrac.hpp"
#include "hfrac/error.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"
#include "hfrac/superfrac.hpp"

namespace hfrac {
namespace {

using P = Polynomial<Rational>;
using S = TruncatedSeries<Rational>;
using CF = GeneralizedCF<Rational>;
using SF = SuperFraction<Rational>;

P poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return P(std::move(c));
}

class IoRoundTripTest : public ::testing::Test {
   protected:
    IoRoundTripTest() : rng_(20260822u) {}

    Rational random_rational() {
        std::uniform_int_distribution<long> num(-99, 99);
        std::uniform_int_distribution<long> den(1, 12);
        return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
    }

    P random_poly(long max_degree) {
        std::uniform_int_distribution<long> deg(0, max_degree);
        const long d = deg(rng_);
        std::vector<Rational> c;
        for (long i = 0; i <= d; ++i) c.push_back(random_rational());
        return P(std::move(c));
    }

    std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

TEST(IoTest, SeriesRendersDocumentedSchemaBytes) {
    const S s(std::vector<Rational>{Rational(1), Rational(BigInt(1), BigInt(2)), Rational(0)}, 2);
    EXPECT_EQ(io::series_to_json(s), R"({"order":2,"coeffs":["1","1/2","0"]})");
}

TEST_F(IoRoundTripTest, SeriesSurvivesRoundTrip) {
    for (int iter = 0; iter < 50; ++iter) {
        std::uniform_int_distribution<long> ord(0, 12);
        const long order = ord(rng_);
        std::vector<Rational> coeffs;
        for (long i = 0; i <= order; ++i) coeffs.push_back(random_rational());
        const S s(std::move(coeffs), order);
        const S back = io::series_from_json(io::series_to_json(s));
        ASSERT_EQ(back.order(), s.order());
        for (long n = 0; n <= order; ++n) EXPECT_EQ(back.coeff(n), s.coeff(n)) << "n=" << n;
    }
}

TEST(IoTest, SeriesParserRejectsMalformedDocuments) {
    EXPECT_THROW(io::series_from_json("not json"), ParseError);
    EXPECT_THROW(io::series_from_json(R"([1,2,3])"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"coeffs":["1"]})"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"order":"2","coeffs":["1","2","3"]})"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"order":2,"coeffs":["1","2"]})"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"order":1,"coeffs":["1",2]})"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"order":1,"coeffs":["1","1/0"]})"), ParseError);
    EXPECT_THROW(io::series_from_json(R"({"order":-1,"coeffs":[]})"), ParseError);
}

// ---------------------------------------------------------------------------
// Fractions
// ---------------------------------------------------------------------------

TEST(IoTest, FractionRendersDocumentedSchemaBytes) {
    const CF cf(poly({1, 1}), {CFLevel<Rational>{poly({0, 1}), poly({1})}});
    EXPECT_EQ(io::cf_to_json(cf), R"({"b0":["1","1"],"levels":[{"a":["0","1"],"b":["1"]}]})");
}

TEST(IoTest, ZeroPolynomialRendersAsEmptyArray) {
    const CF cf(P::zero(), {CFLevel<Rational>{poly({0, 1}), poly({1})}});
    EXPECT_EQ(io::cf_to_json(cf), R"({"b0":[],"levels":[{"a":["0","1"],"b":["1"]}]})");
    const CF back = io::cf_from_json(io::cf_to_json(cf));
    EXPECT_TRUE(back.b0().is_zero());
}

TEST_F(IoRoundTripTest, FractionSurvivesRoundTrip) {
    for (int iter = 0; iter < 50; ++iter) {
        std::uniform_int_distribution<long> depth(0, 6);
        std::vector<CFLevel<Rational>> levels;
        const long d = depth(rng_);
        for (long j = 0; j < d; ++j) {
            levels.push_back(CFLevel<Rational>{random_poly(3), random_poly(3)});
        }
        const CF cf(random_poly(3), std::move(levels));
        const CF back = io::cf_from_json(io::cf_to_json(cf));
        EXPECT_EQ(back, cf);
    }
}

TEST(IoTest, PatternBackedFractionRendersRequestedPrefix) {
    const CF cf(P::zero(), [](long j) {
        return CFLevel<Rational>{poly({0, j}), poly({1})};
    });
    const std::string text = io::cf_to_json(cf, 3);
    const CF back = io::cf_from_json(text);
    ASSERT_EQ(back.depth(), 3);
    for (long j = 1; j <= 3; ++j) {
        EXPECT_EQ(back.level(j).a, poly({0, j})) << "j=" << j;
        EXPECT_EQ(back.level(j).b, poly({1})) << "j=" << j;
    }
}

TEST(IoTest, FractionParserRejectsMalformedDocuments) {
    EXPECT_THROW(io::cf_from_json(R"({"levels":[]})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":[]})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":[],"levels":{}})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":[],"levels":[[]]})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":[],"levels":[{"a":["1"]}]})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":"1","levels":[]})"), ParseError);
    EXPECT_THROW(io::cf_from_json(R"({"b0":[1],"levels":[]})"), ParseError);
}

// ---------------------------------------------------------------------------
// Ladders
// ---------------------------------------------------------------------------

TEST(IoTest, LadderRendersDocumentedSchemaBytes) {
    const SF sf(2, {SuperLevel<Rational>{Rational(BigInt(1), BigInt(3)), 0, poly({5})}});
    EXPECT_EQ(io::super_to_json(sf), R"({"delta":2,"levels":[{"v":"1/3","k":0,"u":["5"]}]})");
}

TEST(IoTest, LadderSurvivesRoundTrip) {
    const SF sf(2, {SuperLevel<Rational>{Rational(1), 0, poly({1})},
                    SuperLevel<Rational>{Rational(1), 1, poly({2, 3})},
                    SuperLevel<Rational>{Rational(9), 0, poly({-1})}});
    const SF back = io::super_from_json(io::super_to_json(sf));
    EXPECT_EQ(back.delta(), sf.delta());
    ASSERT_EQ(back.levels().size(), sf.levels().size());
    for (std::size_t j = 0; j < sf.levels().size(); ++j) {
        EXPECT_EQ(back.levels()[j], sf.levels()[j]) << "j=" << j;
    }
}

TEST(IoTest, LadderParserRejectsMalformedDocuments) {
    EXPECT_THROW(io::super_from_json(R"({"levels":[]})"), ParseError);
    EXPECT_THROW(io::super_from_json(R"({"delta":2})"), ParseError);
    EXPECT_THROW(io::super_from_json(R"({"delta":2,"levels":[{"v":1,"k":0,"u":[]}]})"),
                 ParseError);
    EXPECT_THROW(io::super_from_json(R"({"delta":2,"levels":[{"v":"1","u":[]}]})"), ParseError);
    // Well-formed JSON whose data violates the ladder constraints.
    EXPECT_THROW(io::super_from_json(R"({"delta":2,"levels":[{"v":"0","k":0,"u":[]}]})"),
                 StructureError);
    EXPECT_THROW(io::super_from_json(R"({"delta":1,"levels":[{"v":"1","k":0,"u":["1","1"]}]})"),
                 StructureError);
}

// ---------------------------------------------------------------------------
// Sequences and reports
// ---------------------------------------------------------------------------

TEST(IoTest, SequencesRenderDocumentedSchemaBytes) {
    EXPECT_EQ(io::sequence_to_json("euler",
                                   std::vector<Rational>{Rational(1), Rational(1), Rational(2)}),
              R"({"name":"euler","values":["1","1","2"]})");
    EXPECT_EQ(io::sequence_to_json("q", std::vector<QPolynomial>{poly({4, 1}), P::zero()}),
              R"({"name":"q","values":[["4","1"],[]]})");
}

TEST(IoTest, ReportsRenderPassAndFailShapes) {
    VerifyReport pass;
    pass.id = "F1";
    pass.passed = true;
    pass.elapsed_ms = 0;
    EXPECT_EQ(io::report_to_json(pass),
              R"({"id":"F1","status":"PASS","first_mismatch":null,"elapsed_ms":0})");

    VerifyReport fail;
    fail.id = "X1";
    fail.passed = false;
    fail.first_mismatch = VerifyMismatch{3, "2", "5"};
    fail.elapsed_ms = 7;
    EXPECT_EQ(
        io::report_to_json(fail),
        R"({"id":"X1","status":"FAIL","first_mismatch":{"n":3,"expected":"2","got":"5"},"elapsed_ms":7})");

    EXPECT_EQ(io::reports_to_json({pass, fail}),
              "[" + io::report_to_json(pass) + "," + io::report_to_json(fail) + "]");
    EXPECT_EQ(io::reports_to_json({}), "[]");
}

TEST(IoTest, SerializationIsDeterministic) {
    const S s(std::vector<Rational>{Rational(1), Rational(7)}, 1);
    EXPECT_EQ(io::series_to_json(s), io::series_to_json(s));
    const CF cf(poly({1}), {CFLevel<Rational>{poly({0, 1}), poly({1})}});
    EXPECT_EQ(io::cf_to_json(cf), io::cf_to_json(cf));
}

}  // namespace
}  // namespace hfrac
