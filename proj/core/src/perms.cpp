/*
   Copyright 2026 The hfrac authors

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

#include "hfrac/perms.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace hfrac {

namespace {

enum class Kind { Valley, Peak, DoubleAscent, DoubleDescent };

/// Kind of position j (0-based) of w under +infinity boundary sentinels.
Kind kind_at(const std::vector<long>& w, std::size_t j) {
    const std::size_t n = w.size();
    const bool left_up = (j == 0) ? false : w[j - 1] < w[j];    // w[j-1] < w[j]
    const bool right_down = (j + 1 == n) ? false : w[j] > w[j + 1];
    if (left_up && right_down) return Kind::Peak;
    if (!left_up && !right_down) return Kind::Valley;
    if (left_up) return Kind::DoubleAscent;
    return Kind::DoubleDescent;
}

}  // namespace

PermutationStatistics classify_positions(const std::vector<long>& w) {
    if (w.empty()) throw StructureError("classify_positions: empty word");
    PermutationStatistics st;
    for (std::size_t j = 0; j < w.size(); ++j) {
        switch (kind_at(w, j)) {
            case Kind::Valley: ++st.valleys; break;
            case Kind::Peak: ++st.peaks; break;
            case Kind::DoubleAscent: ++st.double_ascents; break;
            case Kind::DoubleDescent: ++st.double_descents; break;
        }
    }
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        if (w[j] < w[j + 1]) ++st.ascents; else ++st.descents;
    }
    return st;
}

PeakValleyDistribution::PeakValleyDistribution(long n) : n_(n) {
    if (n < 1) throw StructureError("PeakValleyDistribution: n must be >= 1");
    std::vector<long> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        const PermutationStatistics st = classify_positions(w);
        counts_[{st.peaks, st.double_ascents}] += 1;
    } while (std::next_permutation(w.begin(), w.end()));
}

GaussianRational permutation_weight(const std::vector<long>& w, WeightFamily family) {
    if (w.empty()) throw StructureError("permutation_weight: empty word");
    const Rational half(1, 2);
    GaussianRational prod = GaussianRational::one();
    switch (family) {
        case WeightFamily::SignedDoubleAscent:
            for (std::size_t j = 1; j < w.size(); ++j) {
                if (kind_at(w, j) == Kind::DoubleAscent) prod = -prod;
            }
            return prod;
        case WeightFamily::KillDoubleAscents:
            for (std::size_t j = 1; j < w.size(); ++j) {
                const Kind k = kind_at(w, j);
                if (k == Kind::DoubleAscent) return GaussianRational::zero();
                if (k == Kind::Peak) prod = prod * GaussianRational(half);
            }
            return prod;
        case WeightFamily::HalveNonPeaks:
            for (std::size_t j = 1; j < w.size(); ++j) {
                if (kind_at(w, j) != Kind::Peak) prod = prod * GaussianRational(half);
            }
            return prod;
        case WeightFamily::ComplexSplit: {
            const GaussianRational up(half, half);     // (1+i)/2
            const GaussianRational down(half, -half);  // (1-i)/2
            for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                prod = prod * (w[j] < w[j + 1] ? up : down);
            }
            return prod;
        }
    }
    throw StructureError("permutation_weight: unknown family");
}

GaussianRational weight_sum(long n, WeightFamily family) {
    if (n < 1) throw StructureError("weight_sum: n must be >= 1");
    std::vector<long> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    GaussianRational acc = GaussianRational::zero();
    do {
        acc = acc + permutation_weight(w, family);
    } while (std::next_permutation(w.begin(), w.end()));
    return acc;
}

QPolynomial descent_polynomial(long n) {
    if (n < 1) throw StructureError("descent_polynomial: n must be >= 1");
    std::vector<long> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1), Rational(0));
    do {
        long des = 0;
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
            if (w[j] > w[j + 1]) ++des;
        }
        coeffs[static_cast<std::size_t>(1 + des)] += Rational(1);
    } while (std::next_permutation(w.begin(), w.end()));
    return QPolynomial(std::move(coeffs));
}

}  // namespace hfrac
