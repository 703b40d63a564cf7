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

/// \file
/// Microbenchmarks for the exact-arithmetic kernels: series products and
/// inverses, continued fraction evaluation, ladder expansion, Hankel
/// determinants, q-polynomial tables, and permutation enumeration.

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "hfrac/contfrac.hpp"
#include "hfrac/euler.hpp"
#include "hfrac/hankel.hpp"
#include "hfrac/perms.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"
#include "hfrac/superfrac.hpp"

namespace {

using hfrac::BigInt;
using hfrac::Rational;
using P = hfrac::Polynomial<Rational>;
using S = hfrac::TruncatedSeries<Rational>;
using CF = hfrac::GeneralizedCF<Rational>;

S euler_series(long order) {
    const auto e = hfrac::euler_numbers(order);
    return S::generate(order, [&](long n) { return Rational(e[static_cast<std::size_t>(n)]); });
}

/// Alternating-sign series with growing denominators; exercises gcd-heavy
/// rational arithmetic.
S dense_series(long order) {
    return S::generate(order, [](long n) {
        const Rational c(BigInt(n + 1), BigInt(2 * n + 3));
        return n % 2 == 0 ? c : -c;
    });
}

void BM_SeriesMultiply(benchmark::State& state) {
    const long order = state.range(0);
    const S a = dense_series(order);
    const S b = euler_series(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(32)->Arg(64)->Arg(128);

void BM_SeriesInverse(benchmark::State& state) {
    const long order = state.range(0);
    const S a = euler_series(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverted());
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(32)->Arg(64)->Arg(128);

void BM_FractionEvaluate(benchmark::State& state) {
    const long order = state.range(0);
    // Three-term fraction with linear denominators, evaluated to `order`.
    const CF cf(P::zero(), [](long j) {
        hfrac::CFLevel<Rational> lv;
        lv.a = (j == 1) ? P::one() : -P::monomial(Rational(j * j), 2);
        lv.b = P({Rational(1), Rational(-j)});
        return lv;
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf.evaluate_at_depth(order, order + 1));
    }
}
BENCHMARK(BM_FractionEvaluate)->Arg(16)->Arg(32)->Arg(64);

void BM_LadderExpand(benchmark::State& state) {
    const long order = state.range(0);
    const S f = euler_series(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfrac::expand(f, 2));
    }
}
BENCHMARK(BM_LadderExpand)->Arg(16)->Arg(32)->Arg(48);

void BM_HankelDeterminant(benchmark::State& state) {
    const long n = state.range(0);
    const auto e = hfrac::euler_numbers(2 * n);
    std::vector<Rational> coeffs;
    coeffs.reserve(e.size());
    for (const BigInt& v : e) coeffs.emplace_back(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfrac::hankel_determinant(coeffs, n));
    }
}
BENCHMARK(BM_HankelDeterminant)->Arg(4)->Arg(8)->Arg(12);

void BM_QPolynomialTable(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfrac::q_euler_numbers(n));
    }
}
BENCHMARK(BM_QPolynomialTable)->Arg(12)->Arg(16)->Arg(20);

void BM_PermutationWeightSum(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfrac::weight_sum(n, hfrac::WeightFamily::HalveNonPeaks));
    }
}
BENCHMARK(BM_PermutationWeightSum)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
