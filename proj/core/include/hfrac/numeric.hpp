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

#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {

/// n! (n must be >= 0).
inline BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Binomial coefficient; zero outside the triangle (k < 0, n < 0 or k > n).
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (long i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;  // always exact: b is a running binomial coefficient
    }
    return b;
}

/// Rising factorial x(x+1)...(x+k-1); the empty product (k <= 0) is 1.
inline Rational rising_factorial(const Rational& x, long k) {
    Rational r = Rational::one();
    for (long i = 0; i < k; ++i) r *= x + Rational(i);
    return r;
}

/// The q-integer [n]_q = 1 + q + ... + q^(n-1).
inline QPolynomial q_int(long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n > 0 ? n : 0), Rational::one());
    return QPolynomial(std::move(c));
}

/// [n]!_q = [1]_q [2]_q ... [n]_q.
inline QPolynomial q_factorial(long n) {
    QPolynomial f = QPolynomial::one();
    for (long i = 1; i <= n; ++i) f *= q_int(i);
    return f;
}

/// Gaussian binomial coefficient [n choose k]_q, computed as the exact
/// quotient [n]!_q / ([k]!_q [n-k]!_q). The division is checked: a nonzero
/// remainder would signal an arithmetic bug and throws DivisionError.
inline QPolynomial q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return QPolynomial::zero();
    return QPolynomial::exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

}  // namespace hfrac
