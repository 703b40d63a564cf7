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

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hfrac/error.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {

/// Dense univariate polynomial over a commutative ring R.
///
/// R must provide: default construction (= zero), static zero()/one(),
/// is_zero()/is_one()/is_invertible()/inverse(), and exact +,-,*.
/// The coefficient vector is always trimmed: no trailing zeros, and the zero
/// polynomial is the empty vector. degree() of the zero polynomial is -1.
template <class R>
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(R constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    Polynomial(int constant) : Polynomial(R(constant)) {}  // NOLINT(google-explicit-constructor)
    /// Coefficients in increasing degree order: {c0, c1, ...}.
    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(R::one()); }

    /// c * x^e.
    static Polynomial monomial(R c, long e) {
        Polynomial p;
        if (!c.is_zero()) {
            p.coeffs_.assign(static_cast<std::size_t>(e) + 1, R::zero());
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Invertible in R[x] means: a nonzero constant whose coefficient is a
    /// unit of R.
    bool is_invertible() const { return coeffs_.size() == 1 && coeffs_[0].is_invertible(); }

    /// Throws InvertibilityError unless the polynomial is an invertible
    /// constant.
    Polynomial inverse() const {
        if (!is_invertible()) {
            throw InvertibilityError("Polynomial: only invertible constants have inverses");
        }
        return Polynomial(coeffs_[0].inverse());
    }

    /// Coefficient of x^n (zero beyond the stored range).
    const R& coeff(long n) const {
        static const R kZero = R::zero();
        if (n < 0 || n >= static_cast<long>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(n)];
    }

    R constant_term() const { return coeff(0); }

    /// Leading coefficient; R::zero() for the zero polynomial.
    R leading() const { return coeffs_.empty() ? R::zero() : coeffs_.back(); }

    /// Index of the lowest nonzero coefficient, or -1 for the zero polynomial.
    long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) return static_cast<long>(i);
        }
        return -1;
    }

    const std::vector<R>& coefficients() const { return coeffs_; }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (R& c : p.coeffs_) c = -c;
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const R& c) const {
        Polynomial p;
        if (c.is_zero()) return p;
        p.coeffs_.reserve(coeffs_.size());
        for (const R& x : coeffs_) p.coeffs_.push_back(x * c);
        p.trim();
        return p;
    }

    Polynomial pow(long e) const {
        Polynomial base = *this;
        Polynomial acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Long division: returns {quotient, remainder}. Requires the divisor's
    /// leading coefficient to be a unit of R; throws DivisionError otherwise
    /// (and on a zero divisor).
    static std::pair<Polynomial, Polynomial> divide_qr(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) {
            throw DivisionError("Polynomial: division by zero");
        }
        if (!b.leading().is_invertible()) {
            throw DivisionError("Polynomial: divisor leading coefficient is not a unit");
        }
        if (a.degree() < b.degree()) {
            return {Polynomial(), a};
        }
        const R lead_inv = b.leading().inverse();
        std::vector<R> rem = a.coeffs_;
        std::vector<R> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, R::zero());
        for (long k = a.degree() - b.degree(); k >= 0; --k) {
            R q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
            quot[static_cast<std::size_t>(k)] = q;
            if (q.is_zero()) continue;
            for (long j = 0; j <= b.degree(); ++j) {
                rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Exact division; throws DivisionError if a remainder would be left.
    static Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divide_qr(a, b);
        if (!r.is_zero()) {
            throw DivisionError("Polynomial: division leaves a remainder");
        }
        return q;
    }

    /// Exact division by c * x^e. Throws DivisionError if the valuation is
    /// too small or c is not a unit.
    Polynomial divided_by_monomial(const R& c, long e) const {
        if (!c.is_invertible()) {
            throw DivisionError("Polynomial: monomial coefficient is not a unit");
        }
        if (is_zero()) return Polynomial();
        if (valuation() < e) {
            throw DivisionError("Polynomial: not divisible by x^" + std::to_string(e));
        }
        const R inv = c.inverse();
        std::vector<R> out(coeffs_.begin() + e, coeffs_.end());
        for (R& x : out) x = x * inv;
        return Polynomial(std::move(out));
    }

    /// p(x) -> p(x^2).
    Polynomial substituted_square() const {
        if (is_zero()) return Polynomial();
        std::vector<R> out(2 * coeffs_.size() - 1, R::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
        return Polynomial(std::move(out));
    }

    /// The q with q(x^2) = p; requires every odd coefficient to vanish
    /// (throws StructureError otherwise).
    Polynomial substituted_halve() const {
        std::vector<R> out;
        out.reserve(coeffs_.size() / 2 + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i % 2 == 1 && !coeffs_[i].is_zero()) {
                throw StructureError("Polynomial: odd coefficient blocks x^2 -> x substitution");
            }
            if (i % 2 == 0) out.push_back(coeffs_[i]);
        }
        return Polynomial(std::move(out));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<R> out;
        out.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            R factor = R::zero();
            for (std::size_t k = 0; k < i; ++k) factor += R::one();  // = i in R
            out.push_back(coeffs_[i] * factor);
        }
        return Polynomial(std::move(out));
    }

    /// Horner evaluation at a point of S, where S can absorb R coefficients
    /// (S must be constructible from R).
    template <class S>
    S evaluate_as(const S& at) const {
        S acc = S::zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * at + S(coeffs_[i]);
        }
        return acc;
    }

    R evaluate(const R& at) const { return evaluate_as<R>(at); }

    /// Renders e.g. "1 - 2*x + (1/3)*x^2"; coefficients containing '/' are
    /// parenthesized.
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            std::string c = coeffs_[i].to_string();
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            if (first) {
                if (negative) s += "-";
                first = false;
            } else {
                s += negative ? " - " : " + ";
            }
            const bool needs_parens = c.find('/') != std::string::npos ||
                                      c.find('+') != std::string::npos ||
                                      c.find('-') != std::string::npos;
            std::string term;
            if (i == 0) {
                term = needs_parens ? "(" + c + ")" : c;
            } else {
                const std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
                if (c == "1") {
                    term = xs;
                } else {
                    term = (needs_parens ? "(" + c + ")" : c) + "*" + xs;
                }
            }
            s += term;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

/// Polynomials in the deformation variable q with exact rational
/// coefficients.
using QPolynomial = Polynomial<Rational>;

}  // namespace hfrac
