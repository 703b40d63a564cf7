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

#include <vector>

#include "hfrac/numeric.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"

namespace hfrac {

/// E_0..E_{n_max}: 1, 1, 1, 2, 5, 16, 61, 272, ... — the alternating
/// permutation counts with exponential generating function tan x + sec x,
/// computed by the doubling recurrence 2 E_{n+1} = sum_k C(n,k) E_k E_{n-k}.
std::vector<BigInt> euler_numbers(long n_max);

/// The Taylor coefficients e_n = E_n / n! of tan x + sec x, n = 0..n_max.
std::vector<Rational> euler_normalized(long n_max);

/// Generalized secant numbers E^{(r)}_{2n} = (2n)! [x^{2n}] sec^r x for
/// n = 0..n_half_max; requires r >= 1.
std::vector<BigInt> secant_power_numbers(long r, long n_half_max);

/// The q-analogs E_n(q), n = 0..n_max, as weighted Motzkin path polynomials
/// with level weight [h+1]_q at height h and fall weight qbinom(h+1, 2);
/// E_n(1) = E_n, and E_4(q) = q + 4.
std::vector<QPolynomial> q_euler_numbers(long n_max);

/// Hat q-secant numbers: with cos_q x = sum_n (-1)^n x^{2n} / [2n]_q!, the
/// value hat{E}_{2n}(q) = [2n]_q! [x^{2n}] (1 / cos_q x), n = 0..n_half_max.
std::vector<QPolynomial> q_secant_hat_numbers(long n_half_max);

/// Hat q-tangent numbers hat{E}_{2n+1}(q) = [2n+1]_q! [x^{2n+1}] tan_q x
/// where tan_q = sin_q / cos_q, n = 0..n_half_max.
std::vector<QPolynomial> q_tangent_hat_numbers(long n_half_max);

/// c_m = E_{m+1}(-1) in closed form: c_m = sum_k C(m-k, k) k!.
std::vector<BigInt> q_euler_at_minus_one_closed(long m_max);

/// The same numbers by the three-term recurrence
/// 2 c_n = 3 c_{n-1} + (n-1) c_{n-2} - (n-1) c_{n-3}, c_0 = c_1 = 1, c_2 = 2.
std::vector<BigInt> q_euler_at_minus_one_recurrence(long m_max);

/// Eulerian polynomial A_n(t) = sum over S_n of t^{1 + des}, n >= 1; e.g.
/// A_3(t) = t + 4t^2 + t^3. Satisfies E_n = -i (1+i)^{1-n} A_n(i).
QPolynomial eulerian_polynomial(long n);

}  // namespace hfrac
