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

#include "hfrac/euler.hpp"

#include <cstddef>
#include <functional>
#include <utility>

#include "hfrac/error.hpp"
#include "hfrac/series.hpp"

namespace hfrac {

std::vector<BigInt> euler_numbers(long n_max) {
    if (n_max < 0) throw StructureError("euler_numbers: negative bound");
    std::vector<BigInt> e;
    e.reserve(static_cast<std::size_t>(n_max + 1));
    e.push_back(1);
    if (n_max >= 1) e.push_back(1);
    for (long n = 1; n + 1 <= n_max; ++n) {
        BigInt acc = 0;
        for (long k = 0; k <= n; ++k) {
            acc += binomial(n, k) * e[static_cast<std::size_t>(k)] *
                   e[static_cast<std::size_t>(n - k)];
        }
        if (acc % 2 != 0) {
            throw StructureError("euler_numbers: doubling sum came out odd");
        }
        e.push_back(acc / 2);
    }
    return e;
}

std::vector<Rational> euler_normalized(long n_max) {
    const std::vector<BigInt> e = euler_numbers(n_max);
    std::vector<Rational> out;
    out.reserve(e.size());
    for (std::size_t n = 0; n < e.size(); ++n) {
        out.emplace_back(e[n], factorial(static_cast<long>(n)));
    }
    return out;
}

std::vector<BigInt> secant_power_numbers(long r, long n_half_max) {
    if (r < 1) throw StructureError("secant_power_numbers: r must be >= 1");
    if (n_half_max < 0) throw StructureError("secant_power_numbers: negative bound");
    const TruncatedSeries<Rational> s = sec_power_series(r, 2 * n_half_max);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_half_max + 1));
    for (long n = 0; n <= n_half_max; ++n) {
        const Rational v = s.coeff(2 * n) * Rational(factorial(2 * n));
        if (!v.is_integer()) {
            throw StructureError("secant_power_numbers: non-integer coefficient");
        }
        out.push_back(v.num());
    }
    return out;
}

std::vector<QPolynomial> q_euler_numbers(long n_max) {
    if (n_max < 0) throw StructureError("q_euler_numbers: negative bound");
    std::vector<QPolynomial> e;
    e.reserve(static_cast<std::size_t>(n_max + 1));
    e.push_back(QPolynomial::one());  // E_0
    if (n_max == 0) return e;
    // E_{m+1}(q) is the total weight of Motzkin paths of length m: level
    // steps at height h carry [h+1]_q, falls from h carry qbinom(h+1, 2),
    // rises carry 1.
    const long steps = n_max - 1;
    const long h_max = steps / 2 + 1;
    std::vector<QPolynomial> beta, lambda;
    for (long h = 0; h <= h_max + 1; ++h) {
        beta.push_back(q_int(h + 1));
        lambda.push_back(q_binomial(h + 1, 2));
    }
    std::vector<QPolynomial> dp(static_cast<std::size_t>(h_max + 2),
                                QPolynomial::zero());
    dp[0] = QPolynomial::one();
    e.push_back(dp[0]);  // E_1
    for (long m = 1; m <= steps; ++m) {
        std::vector<QPolynomial> nd(dp.size(), QPolynomial::zero());
        for (long h = 0; h <= h_max; ++h) {
            const std::size_t uh = static_cast<std::size_t>(h);
            QPolynomial acc = dp[uh] * beta[uh];
            if (h > 0) acc = acc + dp[uh - 1];
            acc = acc + dp[uh + 1] * lambda[uh + 1];
            nd[uh] = std::move(acc);
        }
        dp = std::move(nd);
        e.push_back(dp[0]);
    }
    return e;
}

namespace {

/// Sum over Dyck paths of semilength n of the product of fall weights,
/// where a fall from height h carries weight lambda(h). Independent route
/// to the coefficients of 1/(1 - lambda(1) y/(1 - lambda(2) y/(1 - ...))).
std::vector<QPolynomial> weighted_dyck_sums(long n_max,
                                            const std::function<QPolynomial(long)>& lambda) {
    std::vector<QPolynomial> lam;
    lam.push_back(QPolynomial::zero());  // unused height 0 slot
    for (long h = 1; h <= n_max; ++h) lam.push_back(lambda(h));

    // paths[h] = weight sum of prefixes ending at height h
    std::vector<QPolynomial> paths(static_cast<std::size_t>(n_max + 1),
                                   QPolynomial::zero());
    paths[0] = QPolynomial::one();
    std::vector<QPolynomial> out;
    out.push_back(QPolynomial::one());
    for (long n = 1; n <= n_max; ++n) {
        for (long step = 0; step < 2; ++step) {
            std::vector<QPolynomial> next(paths.size(), QPolynomial::zero());
            for (long h = 0; h <= n_max; ++h) {
                const QPolynomial& w = paths[static_cast<std::size_t>(h)];
                if (w.is_zero()) continue;
                if (h + 1 <= n_max) {
                    next[static_cast<std::size_t>(h + 1)] =
                        next[static_cast<std::size_t>(h + 1)] + w;
                }
                if (h >= 1) {
                    next[static_cast<std::size_t>(h - 1)] =
                        next[static_cast<std::size_t>(h - 1)] +
                        w * lam[static_cast<std::size_t>(h)];
                }
            }
            paths = std::move(next);
        }
        out.push_back(paths[0]);
    }
    return out;
}

}  // namespace

std::vector<QPolynomial> q_secant_hat_numbers(long n_half_max) {
    if (n_half_max < 0) throw StructureError("q_secant_hat_numbers: negative bound");
    return weighted_dyck_sums(n_half_max,
                              [](long h) { return q_int(h) * q_int(h); });
}

std::vector<QPolynomial> q_tangent_hat_numbers(long n_half_max) {
    if (n_half_max < 0) throw StructureError("q_tangent_hat_numbers: negative bound");
    return weighted_dyck_sums(n_half_max,
                              [](long h) { return q_int(h) * q_int(h + 1); });
}

std::vector<BigInt> q_euler_at_minus_one_closed(long m_max) {
    if (m_max < 0) throw StructureError("q_euler_at_minus_one_closed: negative bound");
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(m_max + 1));
    for (long m = 0; m <= m_max; ++m) {
        BigInt acc = 0;
        for (long k = 0; 2 * k <= m; ++k) {
            acc += binomial(m - k, k) * factorial(k);
        }
        c.push_back(acc);
    }
    return c;
}

std::vector<BigInt> q_euler_at_minus_one_recurrence(long m_max) {
    if (m_max < 0) throw StructureError("q_euler_at_minus_one_recurrence: negative bound");
    std::vector<BigInt> c{1, 1, 2};
    for (long n = 3; n <= m_max; ++n) {
        BigInt acc = 3 * c[static_cast<std::size_t>(n - 1)] +
                     (n - 1) * c[static_cast<std::size_t>(n - 2)] -
                     (n - 1) * c[static_cast<std::size_t>(n - 3)];
        if (acc % 2 != 0) {
            throw StructureError("q_euler_at_minus_one_recurrence: sum came out odd");
        }
        c.push_back(acc / 2);
    }
    c.resize(static_cast<std::size_t>(m_max + 1));
    return c;
}

QPolynomial eulerian_polynomial(long n) {
    if (n < 1) throw StructureError("eulerian_polynomial: n must be >= 1");
    // S_n(t) = sum over S_n of t^des satisfies
    // S_n = (1 + (n-1) t) S_{n-1} + t (1-t) S_{n-1}'.
    QPolynomial s = QPolynomial::one();
    const QPolynomial t = QPolynomial::monomial(Rational(1), 1);
    for (long m = 2; m <= n; ++m) {
        const QPolynomial factor =
            QPolynomial::one() + t.scaled(Rational(m - 1));
        s = factor * s + t * (QPolynomial::one() - t) * s.derivative();
    }
    return t * s;
}

}  // namespace hfrac
