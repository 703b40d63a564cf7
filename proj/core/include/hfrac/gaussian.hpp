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

#include <ostream>
#include <string>
#include <utility>

#include "hfrac/rational.hpp"

namespace hfrac {

/// Element of Q(i): a + b*i with exact rational components. This is a field,
/// so every nonzero element is invertible.
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int n) : re_(n) {}                    // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(Rational::one()); }
    /// The imaginary unit.
    static GaussianRational i() { return GaussianRational(Rational::zero(), Rational::one()); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_invertible() const { return !is_zero(); }

    GaussianRational conjugate() const { return {re_, -im_}; }

    /// |z|^2 = a^2 + b^2 as an exact rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Throws InvertibilityError on zero.
    GaussianRational inverse() const {
        if (is_zero()) {
            throw InvertibilityError("GaussianRational: inverse of zero");
        }
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        const Rational re = re_ * o.re_ - im_ * o.im_;
        const Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        im_ = im;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational pow(long e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        GaussianRational base = *this;
        GaussianRational acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Renders "a", "b*i" or "a+b*i" (with "-" folded into b, and the
    /// coefficient omitted when b is a unit: "i", "-i", "a+i", "a-i").
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string s;
        if (!re_.is_zero()) {
            s = re_.to_string();
            if (im_.sign() > 0) s += "+";
        }
        if (im_ == Rational(1)) {
            s += "i";
        } else if (im_ == Rational(-1)) {
            s += "-i";
        } else {
            s += im_.to_string() + "*i";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.to_string();
    }

   private:
    Rational re_;
    Rational im_;
};

}  // namespace hfrac
