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

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hfrac/contfrac.hpp"
#include "hfrac/error.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/series.hpp"

namespace hfrac {

/// Level j of a super delta-fraction: the pair (v_j, k_j) together with the
/// denominator correction u_{j+1} of the same floor, constrained by
/// deg u_{j+1} <= k_j + delta - 2.
template <class R>
struct SuperLevel {
    R v;
    long k = 0;
    Polynomial<R> u;

    friend bool operator==(const SuperLevel& x, const SuperLevel& y) {
        return x.v == y.v && x.k == y.k && x.u == y.u;
    }
    friend bool operator!=(const SuperLevel& x, const SuperLevel& y) { return !(x == y); }
};

/// Super delta-fraction
///
///   f = v_0 x^{k_0} / (1 + u_1(x) x  -  v_1 x^{k_0+k_1+delta} / (1 + u_2(x) x - ...))
///
/// with v_j a unit, k_j >= 0 and deg u_{j+1} <= k_j + delta - 2. The case
/// delta = 2 with k pattern describes the canonical form whose support
/// indices determine exactly which Hankel determinants of f are nonzero;
/// delta = 1 with all k = 0 (hence u = 0) is the classical staircase form,
/// and delta = 2 with all k = 0 is the three-term (Jacobi) form.
template <class R>
class SuperFraction {
   public:
    SuperFraction(long delta, std::vector<SuperLevel<R>> levels)
        : delta_(delta), levels_(std::move(levels)) {
        if (delta_ < 1) {
            throw StructureError("SuperFraction: delta must be >= 1");
        }
        for (const SuperLevel<R>& lv : levels_) {
            if (lv.v.is_zero()) {
                throw StructureError("SuperFraction: v must be nonzero");
            }
            if (lv.k < 0) {
                throw StructureError("SuperFraction: k must be >= 0");
            }
            if (lv.u.degree() > lv.k + delta_ - 2) {
                throw StructureError("SuperFraction: deg u exceeds k + delta - 2");
            }
        }
    }

    /// Fraction of the zero series.
    static SuperFraction zero(long delta) { return SuperFraction(delta, {}); }

    long delta() const { return delta_; }
    bool empty() const { return levels_.empty(); }
    long depth() const { return static_cast<long>(levels_.size()); }
    const std::vector<SuperLevel<R>>& levels() const { return levels_; }
    const SuperLevel<R>& level(long j) const {
        if (j < 0 || j >= depth()) {
            throw StructureError("SuperFraction: level index out of range");
        }
        return levels_[static_cast<std::size_t>(j)];
    }

    /// Support exponents s_j = k_0 + ... + k_{j-1} + j for j = 0..depth().
    std::vector<long> support() const {
        std::vector<long> s;
        s.reserve(levels_.size() + 1);
        long acc = 0;
        s.push_back(0);
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            acc += levels_[j].k;
            s.push_back(acc + static_cast<long>(j) + 1);
        }
        return s;
    }

    /// Rewrites as a generalized continued fraction (minus joins become
    /// negated partial numerators):
    ///   b_0 = 0, a_1 = v_0 x^{k_0}, a_{j+1} = -v_j x^{k_{j-1}+k_j+delta},
    ///   b_j = 1 + x u_j.
    GeneralizedCF<R> to_generalized() const {
        using P = Polynomial<R>;
        const P x = P::monomial(R::one(), 1);
        std::vector<CFLevel<R>> out;
        out.reserve(levels_.size());
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            CFLevel<R> lv;
            if (j == 0) {
                lv.a = P::monomial(levels_[0].v, levels_[0].k);
            } else {
                lv.a = -P::monomial(levels_[j].v,
                                    levels_[j - 1].k + levels_[j].k + delta_);
            }
            lv.b = P::one() + x * levels_[j].u;
            out.push_back(std::move(lv));
        }
        return GeneralizedCF<R>(P::zero(), std::move(out));
    }

    /// Evaluates the fraction (all levels, zero tail) through x^order.
    ///
    /// Works bottom-up on the generalized form, like
    /// GeneralizedCF::evaluate_at_depth, but exploits two structural facts
    /// that hold for every ladder level: the partial denominator 1 + x u_j
    /// has unit constant term, and the partial numerator is a monomial of
    /// valuation k_{j-1} + k_j + delta >= 1 beyond the first level. An
    /// O(x^{m+1}) error in the tail T_{j+1} therefore perturbs
    /// T_j = a_j / (b_j + T_{j+1}) only at O(x^{m+1+val(a_j)}), so each tail
    /// needs to be computed only through `order` minus the valuations
    /// accumulated above it. The deep levels -- whose exact coefficients
    /// are by far the largest -- then run at tiny horizons instead of the
    /// full order, which changes the cost of evaluating a freshly expanded
    /// fraction from prohibitive to cheap.
    TruncatedSeries<R> evaluate(long order) const {
        using P = Polynomial<R>;
        if (order < 0) {
            throw DepthError("SuperFraction: negative evaluation order");
        }
        const long d = depth();
        if (d == 0) return TruncatedSeries<R>(order);
        const P x = P::monomial(R::one(), 1);
        std::vector<long> val(static_cast<std::size_t>(d));
        std::vector<R> num(static_cast<std::size_t>(d));
        std::vector<long> horizon(static_cast<std::size_t>(d));
        long used = 0;
        for (long j = 0; j < d; ++j) {
            const std::size_t i = static_cast<std::size_t>(j);
            if (j == 0) {
                val[i] = levels_[0].k;
                num[i] = levels_[0].v;
            } else {
                val[i] = levels_[i - 1].k + levels_[i].k + delta_;
                num[i] = -levels_[i].v;
            }
            horizon[i] = order - used;
            used += val[i];
        }
        TruncatedSeries<R> tail(0);
        bool have_tail = false;
        for (long j = d - 1; j >= 0; --j) {
            const std::size_t i = static_cast<std::size_t>(j);
            if (horizon[i] < 0) {
                have_tail = false;  // everything below contributes past order
                continue;
            }
            const long m = std::max<long>(0, horizon[i] - val[i]);
            const P b = P::one() + x * levels_[i].u;
            const TruncatedSeries<R> den = have_tail
                                               ? tail.plus_polynomial(b)
                                               : TruncatedSeries<R>::from_polynomial(b, m);
            TruncatedSeries<R> t =
                multiply_by_x(den.inverted().times_polynomial(P(num[i])), val[i]);
            if (t.order() > horizon[i]) t = t.truncated(horizon[i]);
            tail = std::move(t);
            have_tail = true;
        }
        return tail;
    }

    /// Largest order through which this (possibly truncated) fraction is
    /// guaranteed to reproduce every function sharing these leading levels:
    /// the discrepancy introduced by an unknown next level has valuation at
    /// least sum_j val(a_j) + k_{d-1} + delta. Returns -1 when empty (an
    /// empty fraction pins down nothing beyond "the series starts at 0").
    long determined_order() const {
        if (levels_.empty()) return -1;
        long total = levels_.front().k;
        for (std::size_t j = 1; j < levels_.size(); ++j) {
            total += levels_[j - 1].k + levels_[j].k + delta_;
        }
        return total + levels_.back().k + delta_ - 1;
    }

    friend bool operator==(const SuperFraction& x, const SuperFraction& y) {
        return x.delta_ == y.delta_ && x.levels_ == y.levels_;
    }
    friend bool operator!=(const SuperFraction& x, const SuperFraction& y) { return !(x == y); }

   private:
    long delta_;
    std::vector<SuperLevel<R>> levels_;
};

/// Expands a truncated series into its super delta-fraction. The expansion
/// is unique; levels are emitted only while they are fully determined by the
/// trusted coefficients, so the result round-trips: evaluating it agrees
/// with f on every coefficient the expansion consumed. A series that is zero
/// through its trusted order yields the empty fraction. Throws
/// InvertibilityError when a leading coefficient is not a unit (e.g. over a
/// polynomial coefficient ring).
template <class R>
SuperFraction<R> expand(const TruncatedSeries<R>& f, long delta) {
    if (delta < 1) {
        throw StructureError("expand: delta must be >= 1");
    }
    std::vector<SuperLevel<R>> levels;
    TruncatedSeries<R> rem = f;  // R_j, the series expanded at floor j
    long prev_k = 0;
    bool first = true;
    while (true) {
        const std::optional<long> val = rem.valuation();
        if (!val) break;  // R_j = 0 through its horizon: expansion terminates
        const long big_v = *val;
        const long k = first ? big_v : big_v - prev_k - delta;
        if (k < 0) {
            throw StructureError("expand: internal exponent bookkeeping violated");
        }
        const R v = rem.coeff(big_v);
        if (!v.is_invertible()) {
            throw InvertibilityError("expand: leading coefficient is not a unit");
        }
        const long nq = rem.order() - big_v;  // trusted order of Q_j
        if (nq < k + delta - 1) break;        // u would not be fully determined
        // Q_j = v x^V / R_j has constant term 1.
        const TruncatedSeries<R> q = TruncatedSeries<R>::divide(
            TruncatedSeries<R>::from_polynomial(Polynomial<R>::monomial(v, big_v), rem.order()),
            rem);
        std::vector<R> uc;
        uc.reserve(static_cast<std::size_t>(k + delta - 1));
        for (long m = 1; m <= k + delta - 1; ++m) uc.push_back(q.coeff(m));
        levels.push_back(SuperLevel<R>{v, k, Polynomial<R>(std::move(uc))});
        // R_{j+1} = 1 + x u_{j+1} - Q_j; degrees 0..k+delta-1 vanish by
        // construction of u, which is what keeps every later k >= 0.
        TruncatedSeries<R> next(nq);
        for (long n = k + delta; n <= nq; ++n) {
            R c = -q.coeff(n);
            if (n - 1 <= levels.back().u.degree()) c += levels.back().u.coeff(n - 1);
            next.set_coeff(n, std::move(c));
        }
        rem = std::move(next);
        prev_k = k;
        first = false;
    }
    return SuperFraction<R>(delta, std::move(levels));
}

/// Shape taxonomy of a super fraction.
enum class FractionClass {
    Staircase,   // delta = 1, all k = 0, all u = 0
    ThreeTerm,   // delta = 2, all k = 0 (u's are constants)
    HankelForm,  // delta = 2 with at least one k > 0
    General,
};

template <class R>
FractionClass classify(const SuperFraction<R>& sf) {
    bool all_k_zero = true;
    bool all_u_zero = true;
    for (const SuperLevel<R>& lv : sf.levels()) {
        if (lv.k != 0) all_k_zero = false;
        if (!lv.u.is_zero()) all_u_zero = false;
    }
    if (sf.delta() == 1 && all_k_zero && all_u_zero) return FractionClass::Staircase;
    if (sf.delta() == 2 && all_k_zero) return FractionClass::ThreeTerm;
    if (sf.delta() == 2) return FractionClass::HankelForm;
    return FractionClass::General;
}

/// Three-term (Jacobi-type) fraction v_0 / (1 + u_1 x - v_1 x^2 / (1 + u_2 x
/// - ...)) with constant coefficients; v holds v_0..v_m, u holds u_1..u_m.
template <class R>
struct JFraction {
    std::vector<R> v;
    std::vector<R> u;

    GeneralizedCF<R> to_generalized() const {
        using P = Polynomial<R>;
        std::vector<CFLevel<R>> out;
        const P x = P::monomial(R::one(), 1);
        for (std::size_t j = 0; j < v.size(); ++j) {
            CFLevel<R> lv;
            lv.a = (j == 0) ? P(v[0]) : -P::monomial(v[j], 2);
            lv.b = (j < u.size()) ? P::one() + x * P(u[j]) : P::one();
            out.push_back(std::move(lv));
        }
        return GeneralizedCF<R>(P::zero(), std::move(out));
    }
};

/// Converts a three-term super fraction (delta = 2, all k = 0) to its
/// constant-coefficient form. Throws StructureError for any other shape.
template <class R>
JFraction<R> to_jfraction(const SuperFraction<R>& sf) {
    const FractionClass cls = classify(sf);
    if (cls != FractionClass::ThreeTerm &&
        !(cls == FractionClass::Staircase && sf.empty())) {
        throw StructureError("to_jfraction: fraction is not in three-term form");
    }
    JFraction<R> jf;
    for (const SuperLevel<R>& lv : sf.levels()) {
        jf.v.push_back(lv.v);
        jf.u.push_back(lv.u.constant_term());
    }
    return jf;
}

/// Product formula for the Hankel determinants of a three-term fraction:
/// H_n = v_0^n v_1^{n-1} ... v_{n-1}. Requires n <= |v|.
template <class R>
R heilermann_determinant(const JFraction<R>& jf, long n) {
    if (n < 0 || n > static_cast<long>(jf.v.size())) {
        throw StructureError("heilermann_determinant: not enough levels");
    }
    R h = R::one();
    for (long i = 0; i < n; ++i) {
        R p = jf.v[static_cast<std::size_t>(i)];
        R acc = R::one();
        for (long e = 0; e < n - i; ++e) acc = acc * p;
        h = h * acc;
    }
    return h;
}

/// The Hankel-determinant profile carried by a delta = 2 super fraction:
/// determinants are nonzero exactly on the support s_j, where
///   H_{s_j} = (-1)^{eps_j} * prod_{i<j} v_i^{s_j - s_i},
///   eps_j = sum_{i<j} k_i (k_i + 1) / 2,
/// and H_n = 0 for every n < s_depth not in the support.
template <class R>
struct HankelProfile {
    std::vector<long> support;  // s_0 = 0 < s_1 < ... < s_m
    std::vector<long> eps;      // sign exponents eps_j
    std::vector<R> values;      // H_{s_j}

    /// H_n when the profile decides it (n <= s_m), nullopt beyond.
    std::optional<R> value_at(long n) const {
        if (support.empty() || n > support.back() || n < 0) return std::nullopt;
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (support[j] == n) return values[j];
        }
        return R::zero();
    }
};

template <class R>
HankelProfile<R> hankel_profile(const SuperFraction<R>& sf) {
    if (sf.delta() != 2) {
        throw StructureError("hankel_profile: requires a super 2-fraction");
    }
    HankelProfile<R> hp;
    hp.support = sf.support();
    hp.eps.reserve(hp.support.size());
    hp.values.reserve(hp.support.size());
    long eps = 0;
    for (std::size_t j = 0; j < hp.support.size(); ++j) {
        hp.eps.push_back(eps);
        R h = R::one();
        for (std::size_t i = 0; i < j; ++i) {
            const long e = hp.support[j] - hp.support[i];
            R p = sf.level(static_cast<long>(i)).v;
            R acc = R::one();
            for (long t = 0; t < e; ++t) acc = acc * p;
            h = h * acc;
        }
        if (eps % 2 == 1) h = -h;
        hp.values.push_back(std::move(h));
        if (j < sf.levels().size()) {
            const long k = sf.level(static_cast<long>(j)).k;
            eps += k * (k + 1) / 2;
        }
    }
    return hp;
}

}  // namespace hfrac
