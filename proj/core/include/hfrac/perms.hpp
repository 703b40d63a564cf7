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

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hfrac/error.hpp"
#include "hfrac/gaussian.hpp"
#include "hfrac/numeric.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {

/// Position counts of a permutation word, with both boundary sentinels set
/// to +infinity: position j is a valley, peak, double ascent or double
/// descent according to how w[j] compares with its two neighbours. With
/// these sentinels valleys and peaks alternate v, p, ..., v, so
/// valleys = peaks + 1 always. ascents/descents compare adjacent entries
/// only (j = 1..n-1, no sentinels).
struct PermutationStatistics {
    long valleys = 0;
    long peaks = 0;
    long double_ascents = 0;
    long double_descents = 0;
    long ascents = 0;
    long descents = 0;
};

/// Classifies every position of w (a permutation of 1..n, n >= 1).
PermutationStatistics classify_positions(const std::vector<long>& w);

/// The joint distribution of (peaks, double ascents) over all of S_n;
/// valleys = peaks + 1 and double descents = n - valleys - peaks -
/// double ascents are determined, so the pair identifies the full quadruple.
class PeakValleyDistribution {
   public:
    explicit PeakValleyDistribution(long n);

    long n() const { return n_; }

    /// count[(peaks, double_ascents)] -> number of permutations.
    const std::map<std::pair<long, long>, BigInt>& counts() const { return counts_; }

    /// sum over S_n of u1^valleys u2^peaks u3^double_ascents
    /// u4^double_descents, for any exact coefficient ring constructible
    /// from Rational.
    template <class R>
    R quadruple_sum(const R& u1, const R& u2, const R& u3, const R& u4) const {
        R acc = R(Rational(0));
        for (const auto& [key, cnt] : counts_) {
            const long pk = key.first;
            const long da = key.second;
            const long val = pk + 1;
            const long dd = n_ - val - pk - da;
            R term = R(Rational(cnt));
            term = term * u1.pow(val) * u2.pow(pk) * u3.pow(da) * u4.pow(dd);
            acc = acc + term;
        }
        return acc;
    }

   private:
    long n_;
    std::map<std::pair<long, long>, BigInt> counts_;
};

/// The four weight families attached to permutation positions. Sums over
/// S_n recover the Euler numbers:
///   SignedDoubleAscent:    prod_{j=2..n} (-1)^[j is a double ascent]
///                          -> E_n for odd n, 0 for even n >= 2;
///   KillDoubleAscents:     prod_{j=2..n} 0^[double ascent] (1/2)^[peak]
///                          -> E_n;
///   HalveNonPeaks:         prod_{j=2..n} (1/2)^[j is not a peak] -> E_n;
///   ComplexSplit:          prod_{j=1..n-1} ((1+i)/2)^[ascent at j]
///                          ((1-i)/2)^[descent at j] -> E_n.
enum class WeightFamily {
    SignedDoubleAscent,
    KillDoubleAscents,
    HalveNonPeaks,
    ComplexSplit,
};

/// Per-permutation weight under the given family (ComplexSplit included via
/// the Gaussian rationals; the other three have zero imaginary part).
GaussianRational permutation_weight(const std::vector<long>& w, WeightFamily family);

/// Direct enumeration of sum over S_n of the per-position weight product.
GaussianRational weight_sum(long n, WeightFamily family);

/// Descent generating polynomial sum over S_n of t^{1+des}, by direct
/// enumeration; matches eulerian_polynomial(n).
QPolynomial descent_polynomial(long n);

}  // namespace hfrac
