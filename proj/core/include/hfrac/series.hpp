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
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hfrac/error.hpp"
#include "hfrac/numeric.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {

/// Formal power series truncated at an explicit trust horizon: coefficients
/// c_0..c_N are exact and the series is "trusted through x^N" — nothing is
/// known beyond. Every operation tracks the horizon conservatively, so a
/// coefficient can never silently depend on unknown data.
template <class R>
class TruncatedSeries {
   public:
    /// Zero series trusted through x^order.
    explicit TruncatedSeries(long order) : order_(order) {
        if (order < 0) {
            throw DepthError("TruncatedSeries: negative order");
        }
        c_.assign(static_cast<std::size_t>(order) + 1, R::zero());
    }

    /// Takes exactly order+1 coefficients c_0..c_order.
    TruncatedSeries(std::vector<R> coeffs, long order) : c_(std::move(coeffs)), order_(order) {
        if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1) {
            throw DepthError("TruncatedSeries: coefficient count does not match order");
        }
    }

    /// A polynomial is exact, but as a series we still fix a finite horizon.
    static TruncatedSeries from_polynomial(const Polynomial<R>& p, long order) {
        TruncatedSeries s(order);
        for (long n = 0; n <= order; ++n) s.c_[static_cast<std::size_t>(n)] = p.coeff(n);
        return s;
    }

    /// Builds c_n = fn(n) for n = 0..order.
    static TruncatedSeries generate(long order, const std::function<R(long)>& fn) {
        TruncatedSeries s(order);
        for (long n = 0; n <= order; ++n) s.c_[static_cast<std::size_t>(n)] = fn(n);
        return s;
    }

    long order() const { return order_; }

    const R& coeff(long n) const {
        if (n < 0 || n > order_) {
            throw DepthError("TruncatedSeries: coefficient " + std::to_string(n) +
                             " beyond trusted order " + std::to_string(order_));
        }
        return c_[static_cast<std::size_t>(n)];
    }

    void set_coeff(long n, R v) {
        if (n < 0 || n > order_) {
            throw DepthError("TruncatedSeries: coefficient beyond trusted order");
        }
        c_[static_cast<std::size_t>(n)] = std::move(v);
    }

    const std::vector<R>& coefficients() const { return c_; }

    /// True when every trusted coefficient vanishes.
    bool is_zero() const {
        for (const R& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    /// Index of the first nonzero trusted coefficient, or nullopt if the
    /// series is indistinguishable from zero.
    std::optional<long> valuation() const {
        for (long n = 0; n <= order_; ++n) {
            if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
        }
        return std::nullopt;
    }

    TruncatedSeries truncated(long new_order) const {
        if (new_order > order_) {
            throw DepthError("TruncatedSeries: cannot extend trust by truncation");
        }
        TruncatedSeries s(new_order);
        for (long n = 0; n <= new_order; ++n) s.c_[static_cast<std::size_t>(n)] = coeff(n);
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (R& x : s.c_) x = -x;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long n = std::min(a.order_, b.order_);
        TruncatedSeries s(n);
        for (long i = 0; i <= n; ++i) s.c_[i] = a.coeff(i) + b.coeff(i);
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long n = std::min(a.order_, b.order_);
        TruncatedSeries s(n);
        for (long i = 0; i <= n; ++i) s.c_[i] = a.coeff(i) - b.coeff(i);
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long n = std::min(a.order_, b.order_);
        TruncatedSeries s(n);
        for (long i = 0; i <= n; ++i) {
            R acc = R::zero();
            for (long k = 0; k <= i; ++k) acc += a.coeff(k) * b.coeff(i - k);
            s.c_[static_cast<std::size_t>(i)] = std::move(acc);
        }
        return s;
    }

    /// Adds an exact polynomial without losing trust.
    TruncatedSeries plus_polynomial(const Polynomial<R>& p) const {
        TruncatedSeries s = *this;
        for (long n = 0; n <= order_ && n <= p.degree(); ++n) {
            s.c_[static_cast<std::size_t>(n)] += p.coeff(n);
        }
        return s;
    }

    /// Multiplies by an exact polynomial. Because p has no unknown tail the
    /// product is trusted through x^(order + valuation(p)); a zero p gives an
    /// exact zero, kept at the same horizon.
    TruncatedSeries times_polynomial(const Polynomial<R>& p) const {
        if (p.is_zero()) return TruncatedSeries(order_);
        const long val = p.valuation();
        const long n = order_ + val;
        TruncatedSeries s(n);
        for (long i = 0; i <= n; ++i) {
            R acc = R::zero();
            for (long k = val; k <= p.degree() && k <= i; ++k) {
                if (i - k > order_) continue;
                acc += p.coeff(k) * coeff(i - k);
            }
            s.c_[static_cast<std::size_t>(i)] = std::move(acc);
        }
        return s;
    }

    /// Multiplicative inverse; requires an invertible constant term
    /// (InvertibilityError otherwise). Trust horizon is preserved.
    TruncatedSeries inverted() const {
        if (!c_[0].is_invertible()) {
            throw InvertibilityError("TruncatedSeries: constant term is not a unit");
        }
        const R inv0 = c_[0].inverse();
        TruncatedSeries s(order_);
        s.c_[0] = inv0;
        for (long n = 1; n <= order_; ++n) {
            R acc = R::zero();
            for (long k = 1; k <= n; ++k) acc += coeff(k) * s.c_[static_cast<std::size_t>(n - k)];
            s.c_[static_cast<std::size_t>(n)] = -(inv0 * acc);
        }
        return s;
    }

    /// Exact division with valuation cancellation: if the divisor starts at
    /// x^v, the dividend must too (DivisionError otherwise), and the quotient
    /// is trusted through min(orders) - v. A divisor indistinguishable from
    /// zero raises DivisionError; a leading divisor coefficient that is not a
    /// unit raises InvertibilityError.
    static TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::optional<long> vb = b.valuation();
        if (!vb) {
            throw DivisionError("TruncatedSeries: divisor is zero through its trusted order");
        }
        const long v = *vb;
        const long n = std::min(a.order_, b.order_) - v;
        if (n < 0) {
            throw DepthError("TruncatedSeries: division exhausts the trusted order");
        }
        const std::optional<long> va = a.valuation();
        if (!va) {
            return TruncatedSeries(n);  // 0 / b = 0 at the reduced horizon
        }
        if (*va < v) {
            throw DivisionError(
                "TruncatedSeries: dividend valuation below divisor valuation; "
                "quotient is not a power series");
        }
        // Shift x^v out of both operands, then divide unit-constant series.
        TruncatedSeries sa(n);
        TruncatedSeries sb(n);
        for (long i = 0; i <= n; ++i) {
            sa.c_[static_cast<std::size_t>(i)] = a.coeff(i + v);
            sb.c_[static_cast<std::size_t>(i)] = b.coeff(i + v);
        }
        return sa * sb.inverted();
    }

    /// Termwise derivative; the horizon drops by one.
    TruncatedSeries derivative() const {
        if (order_ == 0) {
            throw DepthError("TruncatedSeries: cannot differentiate an order-0 series");
        }
        TruncatedSeries s(order_ - 1);
        for (long n = 0; n < order_; ++n) {
            R factor = R::zero();
            for (long k = 0; k <= n; ++k) factor += R::one();  // = n+1 in R
            s.c_[static_cast<std::size_t>(n)] = coeff(n + 1) * factor;
        }
        return s;
    }

    /// True when the two series agree on every coefficient up to x^n (both
    /// must trust at least through n).
    bool agrees_through(const TruncatedSeries& o, long n) const {
        for (long i = 0; i <= n; ++i) {
            if (coeff(i) != o.coeff(i)) return false;
        }
        return true;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    std::string to_string(const std::string& var = "x") const {
        std::string s;
        bool any = false;
        for (long n = 0; n <= order_; ++n) {
            if (coeff(n).is_zero()) continue;
            if (any) s += " + ";
            s += "(" + coeff(n).to_string() + ")";
            if (n > 0) s += "*" + var + "^" + std::to_string(n);
            any = true;
        }
        if (!any) s = "0";
        s += " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        return os << s.to_string();
    }

   private:
    std::vector<R> c_;
    long order_;
};

// ---------------------------------------------------------------------------
// Coefficient transforms
// ---------------------------------------------------------------------------

/// Drops the first m coefficients: c_n -> c_{n+m}. The horizon shrinks by m.
template <class R>
TruncatedSeries<R> shift_left(const TruncatedSeries<R>& f, long m) {
    if (m < 0 || m > f.order()) {
        throw DepthError("shift_left: shift exceeds trusted order");
    }
    TruncatedSeries<R> s(f.order() - m);
    for (long n = 0; n + m <= f.order(); ++n) s.set_coeff(n, f.coeff(n + m));
    return s;
}

/// Multiplies by x^m; the horizon grows by m since no unknown data enters.
template <class R>
TruncatedSeries<R> multiply_by_x(const TruncatedSeries<R>& f, long m = 1) {
    if (m < 0) {
        throw DepthError("multiply_by_x: negative shift");
    }
    TruncatedSeries<R> s(f.order() + m);
    for (long n = 0; n <= f.order(); ++n) s.set_coeff(n + m, f.coeff(n));
    return s;
}

/// Keeps even-degree coefficients in place, zeroing the odd ones.
template <class R>
TruncatedSeries<R> even_part(const TruncatedSeries<R>& f) {
    TruncatedSeries<R> s(f.order());
    for (long n = 0; n <= f.order(); n += 2) s.set_coeff(n, f.coeff(n));
    return s;
}

/// Keeps odd-degree coefficients in place, zeroing the even ones.
template <class R>
TruncatedSeries<R> odd_part(const TruncatedSeries<R>& f) {
    TruncatedSeries<R> s(f.order());
    for (long n = 1; n <= f.order(); n += 2) s.set_coeff(n, f.coeff(n));
    return s;
}

/// f(x) -> f(x^2); the result is trusted through x^(2N+1) because the first
/// unknown source coefficient only feeds degree 2N+2.
template <class R>
TruncatedSeries<R> substitute_x_squared(const TruncatedSeries<R>& f) {
    TruncatedSeries<R> s(2 * f.order() + 1);
    for (long n = 0; n <= f.order(); ++n) s.set_coeff(2 * n, f.coeff(n));
    return s;
}

/// (c_0, c_1, ...) -> (c_0, 0, c_1, 0, ...): identical to substituting x^2
/// for x, stated in sequence language.
template <class R>
TruncatedSeries<R> interleave_zero(const TruncatedSeries<R>& f) {
    return substitute_x_squared(f);
}

/// c_n -> n! * c_n (exponential-to-ordinary coefficient change).
inline TruncatedSeries<Rational> scale_coeff_by_factorial(const TruncatedSeries<Rational>& f) {
    TruncatedSeries<Rational> s(f.order());
    for (long n = 0; n <= f.order(); ++n) s.set_coeff(n, f.coeff(n) * Rational(factorial(n)));
    return s;
}

/// c_n -> c_n / n! (ordinary-to-exponential coefficient change).
inline TruncatedSeries<Rational> divide_coeff_by_factorial(const TruncatedSeries<Rational>& f) {
    TruncatedSeries<Rational> s(f.order());
    for (long n = 0; n <= f.order(); ++n) s.set_coeff(n, f.coeff(n) / Rational(factorial(n)));
    return s;
}

// ---------------------------------------------------------------------------
// Named series (exact rational coefficients)
// ---------------------------------------------------------------------------

/// sin: x - x^3/3! + x^5/5! - ...
inline TruncatedSeries<Rational> sin_series(long order) {
    return TruncatedSeries<Rational>::generate(order, [](long n) {
        if (n % 2 == 0) return Rational::zero();
        Rational c = Rational(1) / Rational(factorial(n));
        return (n % 4 == 3) ? -c : c;
    });
}

/// cos: 1 - x^2/2! + x^4/4! - ...
inline TruncatedSeries<Rational> cos_series(long order) {
    return TruncatedSeries<Rational>::generate(order, [](long n) {
        if (n % 2 == 1) return Rational::zero();
        Rational c = Rational(1) / Rational(factorial(n));
        return (n % 4 == 2) ? -c : c;
    });
}

inline TruncatedSeries<Rational> tan_series(long order) {
    return TruncatedSeries<Rational>::divide(sin_series(order), cos_series(order));
}

inline TruncatedSeries<Rational> sec_series(long order) {
    return cos_series(order).inverted();
}

/// tan + sec: the coefficient of x^n is E_n / n! for the joint
/// tangent/secant number sequence 1, 1, 1, 2, 5, 16, ...
inline TruncatedSeries<Rational> tan_plus_sec_series(long order) {
    return tan_series(order) + sec_series(order);
}

/// sec^r for integer r >= 1.
inline TruncatedSeries<Rational> sec_power_series(long r, long order) {
    if (r < 1) {
        throw StructureError("sec_power_series: exponent must be >= 1");
    }
    TruncatedSeries<Rational> s = sec_series(order);
    TruncatedSeries<Rational> acc = s;
    for (long i = 1; i < r; ++i) acc = acc * s;
    return acc;
}

}  // namespace hfrac
