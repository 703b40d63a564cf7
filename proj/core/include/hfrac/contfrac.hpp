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

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hfrac/error.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/series.hpp"

namespace hfrac {

/// One level of a generalized continued fraction: the partial numerator a_j
/// and partial denominator b_j, both polynomials.
template <class R>
struct CFLevel {
    Polynomial<R> a;
    Polynomial<R> b;

    friend bool operator==(const CFLevel& x, const CFLevel& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const CFLevel& x, const CFLevel& y) { return !(x == y); }
};

/// Generalized continued fraction
///
///     b_0 + a_1 / (b_1 + a_2 / (b_2 + a_3 / (b_3 + ...)))
///
/// with polynomial coefficients. Every level is joined by "+"; a fraction
/// conventionally written with "-" joins is represented by negating the
/// partial numerators.
///
/// A fraction is either finite (an explicit list of levels) or backed by a
/// level generator ("pattern") giving (a_j, b_j) for every j >= 1, optionally
/// patched by explicit first-value overrides. Pattern-backed fractions
/// materialize levels lazily and never end.
template <class R>
class GeneralizedCF {
   public:
    using Level = CFLevel<R>;
    using LevelGenerator = std::function<Level(long)>;

    /// Finite fraction with explicit levels (level j = levels[j-1]).
    GeneralizedCF(Polynomial<R> b0, std::vector<Level> levels)
        : b0_(std::move(b0)), levels_(std::move(levels)) {}

    /// Pattern-backed fraction; gen(j) must be valid for every j >= 1.
    GeneralizedCF(Polynomial<R> b0, LevelGenerator gen) : b0_(std::move(b0)), gen_(std::move(gen)) {
        if (!gen_) {
            throw StructureError("GeneralizedCF: null level generator");
        }
    }

    /// Replaces the pattern value at position j (1-based) with an explicit
    /// level. Only meaningful for pattern-backed fractions.
    void override_level(long j, Level level) {
        if (j < 1) {
            throw StructureError("GeneralizedCF: override index must be >= 1");
        }
        overrides_[j] = level;
        if (j <= static_cast<long>(levels_.size())) {
            levels_[static_cast<std::size_t>(j - 1)] = std::move(level);
        }
    }

    bool finite() const { return !gen_; }

    /// Number of levels for a finite fraction; throws for pattern-backed.
    long depth() const {
        if (!finite()) {
            throw StructureError("GeneralizedCF: a pattern-backed fraction has no finite depth");
        }
        return static_cast<long>(levels_.size());
    }

    const Polynomial<R>& b0() const { return b0_; }
    void set_b0(Polynomial<R> b0) { b0_ = std::move(b0); }

    /// Level j (1-based). Materializes pattern levels on demand; throws
    /// StructureError past the end of a finite fraction.
    const Level& level(long j) const {
        if (j < 1) {
            throw StructureError("GeneralizedCF: level index must be >= 1");
        }
        ensure(j);
        return levels_[static_cast<std::size_t>(j - 1)];
    }

    /// Finite copy of the first m levels.
    GeneralizedCF prefix(long m) const {
        ensure(m);
        return GeneralizedCF(b0_, std::vector<Level>(levels_.begin(), levels_.begin() + m));
    }

    /// Direct access to materialized levels of a finite fraction.
    const std::vector<Level>& levels() const {
        if (!finite()) {
            throw StructureError("GeneralizedCF: levels() requires a finite fraction");
        }
        return levels_;
    }

    /// Evaluates with the tail set to zero below level `depth`, bottom-up:
    /// T_depth = 0, T_j = a_j / (b_j + T_{j+1}), value = b_0 + T_1. Exact
    /// cancellation inside the divisions may lower the trusted order of the
    /// result below `order`.
    TruncatedSeries<R> evaluate_at_depth(long order, long depth) const {
        if (depth < 0) {
            throw StructureError("GeneralizedCF: negative evaluation depth");
        }
        ensure(depth);
        TruncatedSeries<R> tail(order);
        bool have_tail = false;
        for (long j = depth; j >= 1; --j) {
            const Level& lv = levels_[static_cast<std::size_t>(j - 1)];
            TruncatedSeries<R> den =
                have_tail ? tail.plus_polynomial(lv.b)
                          : TruncatedSeries<R>::from_polynomial(lv.b, order);
            tail = TruncatedSeries<R>::divide(
                TruncatedSeries<R>::from_polynomial(lv.a, den.order()), den);
            have_tail = true;
        }
        if (!have_tail) {
            return TruncatedSeries<R>::from_polynomial(b0_, order);
        }
        return tail.plus_polynomial(b0_);
    }

    /// Evaluates as a power series trusted through x^order.
    ///
    /// For a finite fraction this uses all levels. For a pattern-backed
    /// fraction the depth is chosen from the cumulative valuation of the
    /// partial numerators and then certified: the result must be stable when
    /// one more level is included, otherwise the depth is increased. Failure
    /// to stabilize raises DepthError.
    TruncatedSeries<R> evaluate(long order) const {
        if (finite()) {
            return evaluate_at_depth(order, depth());
        }
        long d = suggested_depth(order);
        const long cap = 8 * (order + 4);
        while (true) {
            TruncatedSeries<R> lo = evaluate_at_depth(order, d);
            TruncatedSeries<R> hi = evaluate_at_depth(order, d + 1);
            if (lo.order() >= order && hi.order() >= order && lo.agrees_through(hi, order)) {
                return lo.truncated(order);
            }
            if (lo.order() < order || hi.order() < order) {
                throw DepthError(
                    "GeneralizedCF: exact cancellation lowers the trusted order; "
                    "evaluate_at_depth with an explicit depth is required here");
            }
            d = d * 2 + 2;
            if (d > cap) {
                throw DepthError("GeneralizedCF: evaluation did not stabilize by depth " +
                                 std::to_string(cap));
            }
        }
    }

    friend bool operator==(const GeneralizedCF& x, const GeneralizedCF& y) {
        if (!x.finite() || !y.finite()) {
            throw StructureError("GeneralizedCF: equality requires finite fractions");
        }
        return x.b0_ == y.b0_ && x.levels_ == y.levels_;
    }
    friend bool operator!=(const GeneralizedCF& x, const GeneralizedCF& y) { return !(x == y); }

   private:
    void ensure(long depth) const {
        if (static_cast<long>(levels_.size()) >= depth) return;
        if (finite()) {
            throw StructureError("GeneralizedCF: finite fraction has only " +
                                 std::to_string(levels_.size()) + " levels, " +
                                 std::to_string(depth) + " requested");
        }
        for (long j = static_cast<long>(levels_.size()) + 1; j <= depth; ++j) {
            auto it = overrides_.find(j);
            levels_.push_back(it != overrides_.end() ? it->second : gen_(j));
        }
    }

    /// Smallest depth whose omitted tail can only touch coefficients beyond
    /// x^order, estimated from the cumulative valuation of the a_j.
    long suggested_depth(long order) const {
        const long cap = 8 * (order + 4);
        long cumulative = 0;
        for (long j = 1; j <= cap; ++j) {
            const Level& lv = level(j);
            if (lv.a.is_zero()) return j;  // the fraction terminates here
            const long val = lv.a.valuation();
            cumulative += val;
            if (cumulative > order) return j;
        }
        return cap;
    }

    Polynomial<R> b0_;
    mutable std::vector<Level> levels_;
    LevelGenerator gen_;
    std::map<long, Level> overrides_;
};

/// True when the first m levels (and b_0) of two fractions coincide exactly.
template <class R>
bool equal_prefix(const GeneralizedCF<R>& x, const GeneralizedCF<R>& y, long m) {
    if (x.b0() != y.b0()) return false;
    for (long j = 1; j <= m; ++j) {
        if (x.level(j) != y.level(j)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Contraction and rearrangement transforms
//
// Each transform consumes a fraction (materializing the prefix it needs) and
// produces a finite fraction with `depth_out` levels. All of them preserve
// the value of the fraction as a formal power series.
// ---------------------------------------------------------------------------

/// Even contraction: merges levels pairwise so that the convergents of the
/// result are the even-indexed convergents of the input.
///
///   a'_1 = a_1 b_2                 b'_0 = b_0
///   a'_2 = -a_2 a_3 b_4            b'_1 = b_1 b_2 + a_2
///   a'_j = -a_{2j-2} a_{2j-1} b_{2j-4} b_{2j}          (j >= 3)
///   b'_j = b_{2j-2} b_{2j-1} b_{2j} + a_{2j} b_{2j-2} + a_{2j-1} b_{2j}  (j >= 2)
template <class R>
GeneralizedCF<R> contract_even(const GeneralizedCF<R>& cf, long depth_out) {
    using P = Polynomial<R>;
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth_out));
    const auto a = [&](long j) -> const P& { return cf.level(j).a; };
    const auto b = [&](long j) -> const P& { return cf.level(j).b; };
    for (long j = 1; j <= depth_out; ++j) {
        CFLevel<R> lv;
        if (j == 1) {
            lv.a = a(1) * b(2);
            lv.b = b(1) * b(2) + a(2);
        } else {
            if (j == 2) {
                lv.a = -(a(2) * a(3) * b(4));
            } else {
                lv.a = -(a(2 * j - 2) * a(2 * j - 1) * b(2 * j - 4) * b(2 * j));
            }
            lv.b = b(2 * j - 2) * b(2 * j - 1) * b(2 * j) + a(2 * j) * b(2 * j - 2) +
                   a(2 * j - 1) * b(2 * j);
        }
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(cf.b0(), std::move(out));
}

/// Odd contraction: the convergents of the result are the odd-indexed
/// convergents of the input. Requires the exact divisions by b_1 to succeed
/// (throws DivisionError otherwise).
///
///   b'_0 = (b_0 b_1 + a_1) / b_1
///   a'_1 = -a_1 a_2 b_3 / b_1
///   a'_j = -a_{2j-1} a_{2j} b_{2j-3} b_{2j+1}                    (j >= 2)
///   b'_j = b_{2j-1} b_{2j} b_{2j+1} + a_{2j+1} b_{2j-1} + a_{2j} b_{2j+1}  (j >= 1)
template <class R>
GeneralizedCF<R> contract_odd(const GeneralizedCF<R>& cf, long depth_out) {
    using P = Polynomial<R>;
    const auto a = [&](long j) -> const P& { return cf.level(j).a; };
    const auto b = [&](long j) -> const P& { return cf.level(j).b; };
    Polynomial<R> b0 = P::exact_divide(cf.b0() * b(1) + a(1), b(1));
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth_out));
    for (long j = 1; j <= depth_out; ++j) {
        CFLevel<R> lv;
        if (j == 1) {
            lv.a = -P::exact_divide(a(1) * a(2) * b(3), b(1));
        } else {
            lv.a = -(a(2 * j - 1) * a(2 * j) * b(2 * j - 3) * b(2 * j + 1));
        }
        lv.b = b(2 * j - 1) * b(2 * j) * b(2 * j + 1) + a(2 * j + 1) * b(2 * j - 1) +
               a(2 * j) * b(2 * j + 1);
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(b0, std::move(out));
}

/// Chop at position p (default 1): absorbs the exact quotient a_p / b_p into
/// the level above, shortening the fraction by one level while preserving its
/// value. Requires b_p | a_p and at least p+2 materializable levels; the
/// result keeps depth_in - 1 levels of a finite input.
template <class R>
GeneralizedCF<R> chop_at(const GeneralizedCF<R>& cf, long p, long depth_in) {
    using P = Polynomial<R>;
    if (p < 1 || depth_in < p + 2) {
        throw StructureError("chop_at: need at least p+2 levels");
    }
    const auto a = [&](long j) -> const P& { return cf.level(j).a; };
    const auto b = [&](long j) -> const P& { return cf.level(j).b; };
    const P c = P::exact_divide(a(p), b(p));
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth_in - 1));
    Polynomial<R> b0 = cf.b0();
    if (p == 1) {
        b0 += c;
    }
    for (long j = 1; j <= depth_in - 1; ++j) {
        CFLevel<R> lv;
        if (j < p - 1) {
            lv = cf.level(j);
        } else if (j == p - 1) {
            lv.a = a(j);
            lv.b = b(j) + c;
        } else if (j == p) {
            lv.a = -P::exact_divide(a(p) * a(p + 1), b(p));
            lv.b = b(p) * b(p + 1) + a(p + 1);
        } else if (j == p + 1) {
            lv.a = a(p + 2) * b(p);
            lv.b = b(p + 2);
        } else {
            lv.a = a(j + 1);
            lv.b = b(j + 1);
        }
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(b0, std::move(out));
}

/// chop_at at the first level.
template <class R>
GeneralizedCF<R> chop(const GeneralizedCF<R>& cf, long depth_in) {
    return chop_at(cf, 1, depth_in);
}

/// Haircut: splits off an explicit constant head alpha from a fraction with
/// b_0 = 0, rewriting the first three levels. Requires alpha != a_1/b_1
/// in the sense that a_1 - alpha*b_1 must stay nonzero.
///
///   b'_0 = alpha
///   a'_1 = a_1 - alpha b_1           b'_1 = b_1
///   a'_2 = a_1 a_2                   b'_2 = a_1 b_2 - alpha b_1 b_2 - alpha a_2
///   a'_3 = a_3 (a_1 - alpha b_1)     b'_3 = b_3
///   a'_j = a_j, b'_j = b_j           (j >= 4)
template <class R>
GeneralizedCF<R> haircut(const GeneralizedCF<R>& cf, const R& alpha, long depth) {
    using P = Polynomial<R>;
    if (!cf.b0().is_zero()) {
        throw StructureError("haircut: requires b_0 = 0");
    }
    if (depth < 3) {
        throw StructureError("haircut: need at least 3 levels");
    }
    const P alpha_p{alpha};
    const P head = cf.level(1).a - alpha_p * cf.level(1).b;
    if (head.is_zero()) {
        throw StructureError("haircut: alpha equals a_1/b_1, the head would vanish");
    }
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long j = 1; j <= depth; ++j) {
        CFLevel<R> lv;
        if (j == 1) {
            lv.a = head;
            lv.b = cf.level(1).b;
        } else if (j == 2) {
            lv.a = cf.level(1).a * cf.level(2).a;
            lv.b = cf.level(1).a * cf.level(2).b - alpha_p * cf.level(1).b * cf.level(2).b -
                   alpha_p * cf.level(2).a;
        } else if (j == 3) {
            lv.a = cf.level(3).a * head;
            lv.b = cf.level(3).b;
        } else {
            lv = cf.level(j);
        }
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(alpha_p, std::move(out));
}

/// Equivalence transformation with ring constants r_1..r_m (r_0 = 1):
/// a_j -> r_{j-1} r_j a_j, b_j -> r_j b_j. Every r_j must be a unit.
template <class R>
GeneralizedCF<R> equivalence_scale(const GeneralizedCF<R>& cf, const std::vector<R>& r) {
    const long m = static_cast<long>(r.size());
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long j = 1; j <= m; ++j) {
        const R& rj = r[static_cast<std::size_t>(j - 1)];
        if (!rj.is_invertible()) {
            throw InvertibilityError("equivalence_scale: scale factor is not a unit");
        }
        const R rprev = (j == 1) ? R::one() : r[static_cast<std::size_t>(j - 2)];
        CFLevel<R> lv;
        lv.a = cf.level(j).a.scaled(rprev * rj);
        lv.b = cf.level(j).b.scaled(rj);
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(cf.b0(), std::move(out));
}

/// Equivalence transformation at a single position j with the Laurent
/// monomial r_j = c x^e (all other r's = 1): multiplies a_j, b_j and a_{j+1}
/// by c x^e; negative e performs checked exact division. This is the step
/// that normalizes levels whose denominator picked up a factor of x.
template <class R>
GeneralizedCF<R> scale_level_monomial(const GeneralizedCF<R>& cf, long j, const R& c, long e,
                                      long depth) {
    using P = Polynomial<R>;
    if (j < 1 || j + 1 > depth) {
        throw StructureError("scale_level_monomial: position outside the materialized depth");
    }
    const auto apply = [&](const P& p) -> P {
        if (e >= 0) {
            return p * P::monomial(c, e);
        }
        return p.divided_by_monomial(c.inverse(), -e);
    };
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long i = 1; i <= depth; ++i) {
        CFLevel<R> lv = cf.level(i);
        if (i == j) {
            lv.a = apply(lv.a);
            lv.b = apply(lv.b);
        } else if (i == j + 1) {
            lv.a = apply(lv.a);
        }
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(cf.b0(), std::move(out));
}

/// Normalization step "subtract the constant head, divide by c x^e":
/// checks b_0 == expected, replaces it by 0 and divides a_1 exactly by
/// c x^e. Mirrors the standard move from a fraction for f to one for
/// (f - head) / (c x^e).
template <class R>
GeneralizedCF<R> strip_front(const GeneralizedCF<R>& cf, const Polynomial<R>& expected_b0,
                             const R& c, long e, long depth) {
    using P = Polynomial<R>;
    if (cf.b0() != expected_b0) {
        throw StructureError("strip_front: b_0 does not match the expected head");
    }
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long j = 1; j <= depth; ++j) {
        CFLevel<R> lv = cf.level(j);
        if (j == 1) {
            lv.a = lv.a.divided_by_monomial(c, e);
        }
        out.push_back(std::move(lv));
    }
    return GeneralizedCF<R>(P::zero(), std::move(out));
}

/// Substitutes x^2 -> x in every coefficient polynomial; each must be even
/// (StructureError otherwise). Maps a fraction for f(x^2)-shaped series to
/// the fraction of the compressed series.
template <class R>
GeneralizedCF<R> substitute_halve_cf(const GeneralizedCF<R>& cf, long depth) {
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long j = 1; j <= depth; ++j) {
        out.push_back(CFLevel<R>{cf.level(j).a.substituted_halve(),
                                 cf.level(j).b.substituted_halve()});
    }
    return GeneralizedCF<R>(cf.b0().substituted_halve(), std::move(out));
}

/// Substitutes x -> x^2 in every coefficient polynomial; with times_x set,
/// additionally multiplies the value by x (i.e. b_0 and a_1 pick up a factor
/// x), producing the fraction of x * f(x^2).
template <class R>
GeneralizedCF<R> substitute_square_cf(const GeneralizedCF<R>& cf, long depth,
                                      bool times_x = false) {
    using P = Polynomial<R>;
    const P x = P::monomial(R::one(), 1);
    std::vector<CFLevel<R>> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long j = 1; j <= depth; ++j) {
        CFLevel<R> lv{cf.level(j).a.substituted_square(), cf.level(j).b.substituted_square()};
        if (j == 1 && times_x) lv.a = lv.a * x;
        out.push_back(std::move(lv));
    }
    P b0 = cf.b0().substituted_square();
    if (times_x) b0 = b0 * x;
    return GeneralizedCF<R>(b0, std::move(out));
}

}  // namespace hfrac
