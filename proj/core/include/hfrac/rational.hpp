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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hfrac/error.hpp"

namespace hfrac {

/// Arbitrary-precision signed integer used throughout the library.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: numerator and denominator are
/// coprime, the denominator is positive, and zero is uniquely 0/1. All
/// arithmetic is exact; nothing in this class ever rounds.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : num_(n), den_(1) {}               // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// Builds num/den and reduces to canonical form.
    /// Throws DivisionError if den is zero.
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            throw DivisionError("Rational: zero denominator");
        }
        normalize();
    }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    /// Every nonzero rational is invertible.
    bool is_invertible() const { return !is_zero(); }

    /// Throws InvertibilityError on zero.
    Rational inverse() const {
        if (is_zero()) {
            throw InvertibilityError("Rational: inverse of zero");
        }
        Rational r;
        if (num_ < 0) {
            r.num_ = -den_;
            r.den_ = -num_;
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        return r;
    }

    /// -1, 0 or +1.
    int sign() const { return num_.sign(); }

    Rational abs() const {
        Rational r = *this;
        if (r.num_ < 0) r.num_ = -r.num_;
        return r;
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    /// Throws DivisionError on division by zero.
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw DivisionError("Rational: division by zero");
        }
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Integer power; negative exponents require an invertible base.
    Rational pow(long e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        Rational base = *this;
        Rational acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Renders "p/q", or just "p" for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += "/";
            s += den_.str();
        }
        return s;
    }

    /// Parses "p", "-p", or "p/q" (optional sign on the numerator only).
    /// Throws ParseError on malformed input or a zero denominator.
    static Rational from_string(std::string_view text) {
        const auto bad = [&]() -> ParseError {
            return ParseError("Rational: cannot parse \"" + std::string(text) + "\"");
        };
        if (text.empty()) throw bad();
        const std::size_t slash = text.find('/');
        const std::string_view num_part = text.substr(0, slash);
        if (!is_integer_token(num_part)) throw bad();
        BigInt num{std::string(num_part)};
        if (slash == std::string_view::npos) {
            return Rational(std::move(num));
        }
        const std::string_view den_part = text.substr(slash + 1);
        if (den_part.empty() || den_part[0] == '-' || den_part[0] == '+' ||
            !is_integer_token(den_part)) {
            throw bad();
        }
        BigInt den{std::string(den_part)};
        if (den.is_zero()) throw bad();
        return Rational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

   private:
    static bool is_integer_token(std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace hfrac
