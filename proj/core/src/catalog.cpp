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

#include "hfrac/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hfrac/contfrac.hpp"
#include "hfrac/euler.hpp"
#include "hfrac/hankel.hpp"
#include "hfrac/numeric.hpp"
#include "hfrac/perms.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"

namespace hfrac {

const char* to_string(EntryKind kind) {
    switch (kind) {
        case EntryKind::Fraction:
            return "fraction";
        case EntryKind::Determinant:
            return "determinant";
        case EntryKind::Derivation:
            return "derivation";
        case EntryKind::Statistic:
            return "statistic";
        case EntryKind::Equation:
            return "equation";
    }
    return "unknown";
}

namespace {

using P = Polynomial<Rational>;
using CF = GeneralizedCF<Rational>;
using Lv = CFLevel<Rational>;
using QP = QPolynomial;             // polynomials in the deformation variable
using PQ = Polynomial<QPolynomial>; // x-polynomials with such coefficients
using QCF = GeneralizedCF<QPolynomial>;
using QLv = CFLevel<QPolynomial>;

// ---------------------------------------------------------------------------
// Small builders and formatting helpers
// ---------------------------------------------------------------------------

P mono(long c, long e) { return P::monomial(Rational(c), e); }
P monoq(const Rational& c, long e) { return P::monomial(c, e); }
P lin(const Rational& c0, const Rational& c1) { return P({c0, c1}); }
P quad(const Rational& c0, const Rational& c1, const Rational& c2) { return P({c0, c1, c2}); }

Lv level(P a, P b) { return Lv{std::move(a), std::move(b)}; }

class Timer {
   public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

std::string ring_str(const Rational& v) { return v.to_string(); }
std::string ring_str(const QPolynomial& v) { return v.to_string("q"); }

std::string level_str(const Lv& lv) {
    return "a = " + lv.a.to_string() + ";  b = " + lv.b.to_string();
}

std::string r_set_str(const std::vector<long>& rs) {
    std::ostringstream os;
    os << "; r in {";
    for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "," : "") << rs[i];
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Shared coefficient sequences
// ---------------------------------------------------------------------------

std::vector<Rational> euler_rat(long hi) {
    std::vector<BigInt> e = euler_numbers(hi);
    return std::vector<Rational>(e.begin(), e.end());
}

std::vector<Rational> secant_rat(long r, long hi_half) {
    std::vector<BigInt> e = secant_power_numbers(r, hi_half);
    return std::vector<Rational>(e.begin(), e.end());
}

std::vector<Rational> dense_seq(long order, const std::function<Rational(long)>& f) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) out.push_back(f(n));
    return out;
}

std::vector<Rational> even_slots(long order, const std::function<Rational(long)>& f) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (long k = 0; 2 * k <= order; ++k) out[static_cast<std::size_t>(2 * k)] = f(k);
    return out;
}

std::vector<Rational> odd_slots(long order, const std::function<Rational(long)>& f) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (long k = 0; 2 * k + 1 <= order; ++k) out[static_cast<std::size_t>(2 * k + 1)] = f(k);
    return out;
}

// c_n = E_{n+shift}
std::vector<Rational> tgt_E(long shift, long order) {
    auto E = euler_rat(order + shift);
    return dense_seq(order, [&](long n) { return E[static_cast<std::size_t>(n + shift)]; });
}
// c_n = E_{2n+shift}
std::vector<Rational> tgt_E2(long shift, long order) {
    auto E = euler_rat(2 * order + shift);
    return dense_seq(order, [&](long n) { return E[static_cast<std::size_t>(2 * n + shift)]; });
}
// c_{2k} = E_{2k+shift}, odd coefficients vanish
std::vector<Rational> tgt_E_even(long shift, long order) {
    auto E = euler_rat(order + shift);
    return even_slots(order, [&](long k) { return E[static_cast<std::size_t>(2 * k + shift)]; });
}
// c_{2k+1} = E_{2k+1+shift}, even coefficients vanish
std::vector<Rational> tgt_E_odd(long shift, long order) {
    auto E = euler_rat(order + shift);
    return odd_slots(order, [&](long k) { return E[static_cast<std::size_t>(2 * k + 1 + shift)]; });
}
// normalized counterparts for e_n = E_n / n!
std::vector<Rational> tgt_e(long shift, long order) {
    auto e = euler_normalized(order + shift);
    return dense_seq(order, [&](long n) { return e[static_cast<std::size_t>(n + shift)]; });
}
std::vector<Rational> tgt_e2(long shift, long order) {
    auto e = euler_normalized(2 * order + shift);
    return dense_seq(order, [&](long n) { return e[static_cast<std::size_t>(2 * n + shift)]; });
}
std::vector<Rational> tgt_e_even(long shift, long order) {
    auto e = euler_normalized(order + shift);
    return even_slots(order, [&](long k) { return e[static_cast<std::size_t>(2 * k + shift)]; });
}
std::vector<Rational> tgt_e_odd(long shift, long order) {
    auto e = euler_normalized(order + shift);
    return odd_slots(order, [&](long k) { return e[static_cast<std::size_t>(2 * k + 1 + shift)]; });
}

std::vector<Rational> tgt_F1(long r, long order) {
    auto S = secant_rat(r, order / 2);
    return even_slots(order, [&](long k) { return S[static_cast<std::size_t>(k)]; });
}
std::vector<Rational> tgt_F2(long r, long order) {
    auto S = secant_rat(r, order);
    return dense_seq(order, [&](long n) { return S[static_cast<std::size_t>(n)]; });
}
std::vector<Rational> tgt_F3(long r, long order) {
    auto S = secant_rat(r, order + 1);
    return dense_seq(order, [&](long n) { return S[static_cast<std::size_t>(n + 1)]; });
}
std::vector<Rational> tgt_F8(long r, long order) {
    auto S = secant_rat(r, order / 2 + 1);
    return odd_slots(order,
                     [&](long k) { return S[static_cast<std::size_t>(k + 1)] / Rational(r); });
}
std::vector<Rational> tgt_LTH(long, long order) {
    auto e = euler_normalized(order);
    return odd_slots(order, [&](long k) {
        Rational v = e[static_cast<std::size_t>(2 * k + 1)];
        return (k % 2 == 0) ? v : -v;
    });
}
// c_n = sum_{k=0}^{n} C(n-k, k) k!, the alternating-specialization sequence
std::vector<Rational> tgt_NEG1(long, long order) {
    auto v = q_euler_at_minus_one_closed(order);
    return dense_seq(order, [&](long n) { return Rational(v[static_cast<std::size_t>(n)]); });
}

std::vector<QP> tgt_QE(long, long order) { return q_euler_numbers(order); }
std::vector<QP> tgt_QSEC(long, long order) {
    auto hat = q_secant_hat_numbers(order / 2);
    std::vector<QP> out(static_cast<std::size_t>(order) + 1, QP::zero());
    for (long k = 0; 2 * k <= order; ++k) out[static_cast<std::size_t>(2 * k)] = hat[static_cast<std::size_t>(k)];
    return out;
}
std::vector<QP> tgt_QTAN(long, long order) {
    auto hat = q_tangent_hat_numbers(std::max<long>(0, (order - 1) / 2));
    std::vector<QP> out(static_cast<std::size_t>(order) + 1, QP::zero());
    for (long k = 0; 2 * k + 1 <= order; ++k)
        out[static_cast<std::size_t>(2 * k + 1)] = hat[static_cast<std::size_t>(k)];
    return out;
}

// ---------------------------------------------------------------------------
// Fraction builders
// ---------------------------------------------------------------------------

CF cf_S_even(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        return level(mono(-(j - 1) * (j - 1), 2), P::one());
    });
}

CF cf_S_odd(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), P::one());
        return level(mono(-(j - 1) * j, 2), P::one());
    });
}

CF cf_SF1(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long k = j / 6;
        switch (j % 6) {
            case 0:
                return level(mono(-2 * k, 1), P::one());
            case 1:
                return level(mono(-2 * k, 1), P::one());
            case 2:
                return level(mono(-(4 * k + 1), 1), P::one());
            case 3:
                return level(mono(-(4 * k + 1) * (2 * k + 1), 2),
                             lin(Rational(1), Rational(-2 * (2 * k + 1))));
            case 4:
                return level(mono(-(4 * k + 3) * (2 * k + 1), 2), P::one());
            default:
                return level(mono(-(4 * k + 3), 1), P::one());
        }
    });
    cf.override_level(1, level(P::one(), P::one()));
    return cf;
}

CF cf_JT(long) {
    return CF(P::one(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), lin(Rational(1), Rational(-1)));
        return level(mono(-j * (j - 1) / 2, 2), lin(Rational(1), Rational(-j)));
    });
}

CF cf_GX(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long k = j / 6;
        switch (j % 6) {
            case 0:
                return level(mono(-2 * (4 * k + 1) * k, 2), P::one());
            case 1:
                return level(mono(-(4 * k + 1), 1), P::one());
            case 2:
                return level(mono(-(2 * k + 1), 1), P::one());
            case 3:
                return level(mono(-(2 * k + 1), 1), P::one());
            case 4:
                return level(mono(-(4 * k + 3), 1), P::one());
            default:
                return level(mono(-2 * (4 * k + 3) * (k + 1), 2),
                             lin(Rational(1), Rational(-4 * (k + 1))));
        }
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-1))));
    return cf;
}

CF cf_JX(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-j * (j - 1) / 2, 2), lin(Rational(1), Rational(-j)));
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-1))));
    cf.override_level(2, level(mono(-1, 1), lin(Rational(1), Rational(-1))));
    return cf;
}

CF cf_HF(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long k = j / 3;
        switch (j % 3) {
            case 0:
                return level(mono(-(4 * k - 1) * (4 * k - 1) * (2 * k - 1), 3),
                             lin(Rational(1), Rational(-(6 * k - 1))));
            case 1:
                return level(mono(-4 * k * k, 2), lin(Rational(1), Rational(-(6 * k + 1))));
            default: {
                const long m = 2 * k + 1;
                return level(mono(-(4 * k + 1) * (4 * k + 1) * m, 3),
                             P({Rational(1), Rational(-2 * m), Rational(-4 * m * m)}));
            }
        }
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-1))));
    return cf;
}

CF cf_LT(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), P::one());
        return level(mono(-1, 2), P(Rational(2 * j - 1)));
    });
}

CF cf_LTH(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), P::one());
        return level(mono(1, 2), P(Rational(2 * j - 1)));
    });
}

CF cf_F1(long r) {
    return CF(P::zero(), [r](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        return level(mono(-(j - 1) * (r + j - 2), 2), P::one());
    });
}

CF cf_F2(long r) {
    CF cf(P::zero(), [r](long j) -> Lv {
        return level(
            mono(-(2 * j + r - 3) * (2 * j + r - 4) * (2 * j - 3) * (2 * j - 2), 2),
            lin(Rational(1), Rational(-(8 * j * j + 4 * j * r - 16 * j - 3 * r + 8))));
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-r))));
    return cf;
}

CF cf_F3(long r) {
    CF cf(P::zero(), [r](long j) -> Lv {
        return level(mono(-2 * (2 * j + r - 2) * (2 * j + r - 3) * (2 * j - 1) * (j - 1), 2),
                     lin(Rational(1), Rational(-(8 * j * j + 4 * j * r - 8 * j - r + 2))));
    });
    cf.override_level(1, level(P(Rational(r)), lin(Rational(1), Rational(-(3 * r + 2)))));
    return cf;
}

CF cf_F4(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        return level(mono(-(j - 1) * j, 2), P::one());
    });
}

CF cf_F5(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-4 * (2 * j - 1) * (2 * j - 3) * (j - 1) * (j - 1), 2),
                     lin(Rational(1), Rational(-2 * (2 * j - 1) * (2 * j - 1))));
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-2))));
    return cf;
}

CF cf_F6(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-4 * (2 * j - 1) * (2 * j - 1) * (j - 1) * j, 2),
                     lin(Rational(1), Rational(-8 * j * j)));
    });
    cf.override_level(1, level(P(Rational(2)), lin(Rational(1), Rational(-8))));
    return cf;
}

CF cf_F7(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-j * (j - 1) / 2, 2), lin(Rational(1), Rational(-j)));
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-1))));
    return cf;
}

CF cf_F8(long r) {
    CF cf(P::zero(), [r](long j) -> Lv {
        return level(
            mono(-(2 * j - 1) * (2 * j - 2) * (2 * j - 3 + r) * (2 * j - 2 + r), 4),
            quad(Rational(1), Rational(0),
                 Rational(-(8 * j * j - 8 * j + 4 * r * j + 2 - r))));
    });
    cf.override_level(
        1, level(mono(1, 1), quad(Rational(1), Rational(0), Rational(-(3 * r + 2)))));
    return cf;
}

CF cf_F9(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-(2 * j - 1) * (2 * j - 2) * (2 * j - 2) * (2 * j - 3), 4),
                     quad(Rational(1), Rational(0), Rational(-2 * (2 * j - 1) * (2 * j - 1))));
    });
    cf.override_level(1, level(mono(1, 1), quad(Rational(1), Rational(0), Rational(-2))));
    return cf;
}

CF cf_F10(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long k = j / 3;
        switch (j % 3) {
            case 0:
                return level(mono(-2 * (4 * k - 1) * (4 * k - 1) * k, 3),
                             P({Rational(1), Rational(-4 * k), Rational(-16 * k * k)}));
            case 1:
                return level(mono(-2 * (4 * k + 1) * (4 * k + 1) * k, 3),
                             lin(Rational(1), Rational(-2 * (3 * k + 1))));
            default:
                return level(mono(-(2 * k + 1) * (2 * k + 1), 2),
                             lin(Rational(1), Rational(-2 * (3 * k + 2))));
        }
    });
    cf.override_level(1, level(P::one(), lin(Rational(1), Rational(-2))));
    return cf;
}

CF cf_F11(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        return level(mono(-4 * (2 * j - 1) * (2 * j - 1) * (j - 1) * j, 4),
                     quad(Rational(1), Rational(0), Rational(-8 * j * j)));
    });
    cf.override_level(1, level(mono(2, 1), quad(Rational(1), Rational(0), Rational(-8))));
    return cf;
}

CF cf_F12(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        return level(monoq(Rational(-1, (2 * j - 3) * (2 * j - 1)), 2), P::one());
    });
}

CF cf_F13(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), lin(Rational(1), Rational(-1, 3)));
        return level(
            monoq(Rational(-1, (4 * j - 7) * (4 * j - 5) * (4 * j - 5) * (4 * j - 3)), 2),
            lin(Rational(1), Rational(-2, (4 * j - 5) * (4 * j - 1))));
    });
}

CF cf_F14(long) {
    return CF(P::zero(), [](long j) -> Lv {
        const P b = quad(Rational(1), Rational(0), Rational(-2, (4 * j - 3) * (4 * j + 1)));
        if (j == 1) return level(monoq(Rational(1, 3), 1), b);
        return level(
            monoq(Rational(-1, (4 * j - 5) * (4 * j - 3) * (4 * j - 3) * (4 * j - 1)), 4), b);
    });
}

CF cf_F15(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), quad(Rational(1), Rational(0), Rational(-1, 3)));
        return level(
            monoq(Rational(-1, (4 * j - 7) * (4 * j - 5) * (4 * j - 5) * (4 * j - 3)), 4),
            quad(Rational(1), Rational(0), Rational(-2, (4 * j - 5) * (4 * j - 1))));
    });
}

CF cf_F16(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), lin(Rational(1), Rational(-1, 2)));
        return level(monoq(Rational(-1, (4 * j - 6) * (4 * j - 2)), 2), P::one());
    });
}

CF cf_F17(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), lin(Rational(1), Rational(-1)));
        const long sign = (j % 2 == 0) ? 1 : -1;
        const P b =
            lin(Rational(1), Rational(sign * 2 * (j - 1), (2 * j - 3) * (2 * j - 1)));
        if (j == 2) return level(monoq(Rational(1, 2), 2), b);
        return level(monoq(Rational(1, (4 * j - 6) * (4 * j - 6)), 2), b);
    });
}

CF cf_F18(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P(Rational(1, 2)), lin(Rational(1), Rational(-2, 3)));
        const long sign = (j % 2 == 0) ? 1 : -1;
        return level(monoq(Rational(1, (4 * j - 2) * (4 * j - 2)), 2),
                     lin(Rational(1), Rational(sign * 2 * j, (2 * j - 1) * (2 * j + 1))));
    });
}

CF cf_F19(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long sign = (j % 2 == 0) ? 1 : -1;
        return level(
            monoq(Rational(-(j - 1) * (j - 1) * (j + 1) * (j + 1),
                           4 * j * j * j * j * (2 * j - 1) * (2 * j + 1)),
                  2),
            lin(Rational(1), Rational(sign * (2 * j * j + 2 * j + 1),
                                      2 * j * j * (j + 1) * (j + 1))));
    });
    cf.override_level(1, level(P(Rational(1, 3)), lin(Rational(1), Rational(-5, 8))));
    return cf;
}

CF cf_F20(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long sign = (j % 2 == 0) ? 1 : -1;
        const long p1 = j * j + 3 * j + 1;
        const long m1 = j * j - j - 1;
        const long q1 = j * j + j - 1;
        return level(
            monoq(Rational(p1 * m1 * (j + 2) * (j - 1),
                           4 * q1 * q1 * (2 * j + 1) * (2 * j + 1) * (j + 1) * j),
                  2),
            lin(Rational(1),
                Rational(sign * 2 * (j + 2) * (j + 1) * (j + 1) * (j + 1) * j,
                         p1 * q1 * (2 * j + 3) * (2 * j + 1))));
    });
    cf.override_level(1, level(P(Rational(5, 24)), lin(Rational(1), Rational(-16, 25))));
    return cf;
}

CF cf_F21(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        if (j % 2 == 0) {
            const long k = j / 2;
            return level(monoq(Rational(-(2 * k + 1) * (k + 1),
                                        (4 * k - 1) * (4 * k + 1) * (2 * k - 1) * k),
                               2),
                         P::one());
        }
        const long k = (j - 1) / 2;
        return level(monoq(Rational(-k * (2 * k - 1),
                                    (4 * k + 1) * (4 * k + 3) * (2 * k + 1) * (k + 1)),
                           2),
                     P::one());
    });
    cf.override_level(1, level(P(Rational(1, 3)), P::one()));
    return cf;
}

CF cf_F22(long) {
    return CF(P::zero(), [](long j) -> Lv {
        const P b = lin(Rational(1), Rational(-2, (4 * j - 3) * (4 * j + 1)));
        if (j == 1) return level(P(Rational(1, 3)), b);
        return level(
            monoq(Rational(-1, (4 * j - 5) * (4 * j - 3) * (4 * j - 3) * (4 * j - 1)), 2), b);
    });
}

CF cf_F23(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        Rational anum(-(2 * j + 1) * (2 * j - 3) * (j + 1) * (j - 1));
        Rational aden = Rational(4 * j + 1) * Rational((4 * j - 1) * (4 * j - 1)) *
                        Rational(4 * j - 3) * Rational((2 * j - 1) * (2 * j - 1)) *
                        Rational(j * j);
        Rational bnum(-(8 * j * j * j * j + 8 * j * j * j + 22 * j * j + 10 * j + 3));
        Rational bden = Rational(4 * j + 3) * Rational(4 * j - 1) * Rational(2 * j + 1) *
                        Rational(2 * j - 1) * Rational(j + 1) * Rational(j);
        return level(monoq(anum / aden, 2), lin(Rational(1), bnum / bden));
    });
    cf.override_level(1, level(P(Rational(2, 15)), lin(Rational(1), Rational(-17, 42))));
    return cf;
}

CF cf_F24(long) {
    CF cf(P::zero(), [](long j) -> Lv {
        const long s1 = 4 * j * j + 10 * j + 3;
        const long s2 = 4 * j * j - 6 * j - 1;
        const long s3 = 4 * j * j + 2 * j - 3;
        Rational anum = Rational(s1) * Rational(s2) * Rational(2 * j + 3) *
                        Rational(2 * j - 3) * Rational(j + 2) * Rational(j - 1);
        Rational aden = Rational(s3) * Rational(s3) * Rational(4 * j + 3) *
                        Rational((4 * j + 1) * (4 * j + 1)) * Rational(4 * j - 1) *
                        Rational(2 * j + 1) * Rational(2 * j - 1) * Rational(j + 1) *
                        Rational(j);
        Rational bnum =
            Rational(-2) * Rational(16 * j * j * j * j + 48 * j * j * j + 164 * j * j +
                                    192 * j + 45);
        Rational bden =
            Rational(s1) * Rational(s3) * Rational(4 * j + 5) * Rational(4 * j + 1);
        return level(monoq(-anum / aden, 2), lin(Rational(1), bnum / bden));
    });
    cf.override_level(1, level(P(Rational(17, 315)), lin(Rational(1), Rational(-62, 153))));
    return cf;
}

// staircase intermediates (lowercase ids)

CF cf_s13(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        return level(monoq(Rational(-1, (2 * j - 3) * (2 * j - 1)), 1), P::one());
    });
}

CF cf_s17(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), P::one());
        if (j == 2) return level(mono(-1, 1), P::one());
        switch (j % 4) {
            case 0:
                return level(monoq(Rational(1, 2 * j - 2), 1), P::one());
            case 1:
                return level(monoq(Rational(-1, 2 * j - 4), 1), P::one());
            case 2:
                return level(monoq(Rational(-1, 2 * j - 2), 1), P::one());
            default:
                return level(monoq(Rational(1, 2 * j - 4), 1), P::one());
        }
    });
}

CF cf_s18(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P(Rational(1, 2)), P::one());
        if (j % 2 == 0) {
            const long m = j / 2;
            const long sign = (m % 2 == 0) ? 1 : -1;
            return level(monoq(Rational(sign * (m + 1) * (m + 1), 2 * m * m * (2 * m + 1)), 1),
                         P::one());
        }
        const long m = (j - 1) / 2;
        const long sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1}
        return level(
            monoq(Rational(sign * m * m, 2 * (m + 1) * (m + 1) * (2 * m + 1)), 1), P::one());
    });
}

CF cf_s19(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P(Rational(1, 3)), P::one());
        if (j % 2 == 0) {
            const long m = j / 2;
            const long sign = (m % 2 == 0) ? 1 : -1;
            return level(monoq(Rational(sign * m * (m + 2) * (m * m + 3 * m + 1),
                                        2 * (m * m + m - 1) * (2 * m + 1) * (m + 1) * (m + 1)),
                               1),
                         P::one());
        }
        const long m = (j - 1) / 2;
        const long sign = (m % 2 == 0) ? 1 : -1;
        return level(monoq(Rational(sign * m * (m + 2) * (m * m + m - 1),
                                    2 * (m * m + 3 * m + 1) * (2 * m + 3) * (m + 1) * (m + 1)),
                           1),
                     P::one());
    });
}

CF cf_s22(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P(Rational(1, 3)), P::one());
        if (j % 2 == 0) {
            const long k = j / 2;
            return level(monoq(Rational(-(2 * k + 1) * (k + 1),
                                        (4 * k - 1) * (4 * k + 1) * (2 * k - 1) * k),
                               1),
                         P::one());
        }
        const long k = (j - 1) / 2;
        return level(monoq(Rational(-k * (2 * k - 1),
                                    (4 * k + 1) * (4 * k + 3) * (2 * k + 1) * (k + 1)),
                           1),
                     P::one());
    });
}

CF cf_s23(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P(Rational(2, 15)), P::one());
        if (j % 2 == 0) {
            const long m = j / 2;
            Rational num = Rational(-(4 * m + 6)) * Rational(4 * m + 8) *
                           Rational(4 * m * m + 10 * m + 3);
            Rational den = Rational(4 * m + 1) * Rational(4 * m + 2) * Rational(4 * m + 3) *
                           Rational(4 * m + 4) * Rational(4 * m * m + 2 * m - 3);
            return level(monoq(num / den, 1), P::one());
        }
        const long m = (j - 1) / 2;
        Rational num =
            Rational(-(4 * m - 2)) * Rational(4 * m) * Rational(4 * m * m + 2 * m - 3);
        Rational den = Rational(4 * m + 2) * Rational(4 * m + 3) * Rational(4 * m + 4) *
                       Rational(4 * m + 5) * Rational(4 * m * m + 10 * m + 3);
        return level(monoq(num / den, 1), P::one());
    });
}

CF cf_NEG1(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(P::one(), lin(Rational(1), Rational(-1)));
        const long k = j / 2;
        return level(mono(-k, 2),
                     (j % 2 == 0) ? P::one() : lin(Rational(1), Rational(-1)));
    });
}

QCF cf_QE(long) {
    return QCF(PQ::one(), [](long j) -> QLv {
        if (j == 1) return QLv{PQ::monomial(QP::one(), 1), PQ({QP::one(), -q_int(1)})};
        return QLv{PQ::monomial(-q_binomial(j, 2), 2), PQ({QP::one(), -q_int(j)})};
    });
}

QCF cf_QSEC(long) {
    return QCF(PQ::zero(), [](long j) -> QLv {
        if (j == 1) return QLv{PQ::one(), PQ::one()};
        const QP h = q_int(j - 1);
        return QLv{PQ::monomial(-(h * h), 2), PQ::one()};
    });
}

QCF cf_QTAN(long) {
    return QCF(PQ::zero(), [](long j) -> QLv {
        if (j == 1) return QLv{PQ::monomial(QP::one(), 1), PQ::one()};
        return QLv{PQ::monomial(-(q_int(j - 1) * q_int(j)), 2), PQ::one()};
    });
}

// the one-parameter deformation, coefficients polynomial in the parameter u
QCF cf_FU() {
    return QCF(PQ::zero(), [](long j) -> QLv {
        const PQ one_minus_x = PQ({QP::one(), -QP::one()});
        if (j == 1) return QLv{PQ::one(), one_minus_x};
        const long k = j / 2;
        const QP shifted = QP({Rational(k), Rational(1)});  // u + k
        return QLv{PQ::monomial(-shifted, 2), (j % 2 == 0) ? PQ::one() : one_minus_x};
    });
}

// ---------------------------------------------------------------------------
// Entry factories
// ---------------------------------------------------------------------------

template <class R>
struct FractionCheck {
    std::vector<long> r_values{};
    long order_cap = -1;
    std::function<GeneralizedCF<R>(long)> build;
    std::function<std::vector<R>(long, long)> target;
};

template <class R>
FormulaEntry make_fraction(std::string id, std::string title, FractionCheck<R> spec) {
    FormulaEntry e;
    e.id = std::move(id);
    e.kind = EntryKind::Fraction;
    e.title = std::move(title);
    e.verify = [spec, eid = e.id](const VerifyOptions& opt) -> VerifyReport {
        Timer timer;
        VerifyReport rep;
        rep.id = eid;
        rep.passed = true;
        long order = opt.order;
        if (spec.order_cap >= 0 && order > spec.order_cap) order = spec.order_cap;
        std::ostringstream note;
        note << "coefficients compared through order " << order;
        if (!spec.r_values.empty()) note << r_set_str(spec.r_values);
        const std::vector<long> rs =
            spec.r_values.empty() ? std::vector<long>{0} : spec.r_values;
        for (long r : rs) {
            GeneralizedCF<R> cf = spec.build(r);
            std::vector<R> want = spec.target(r, order);
            TruncatedSeries<R> got = cf.evaluate(order);
            for (long n = 0; n <= order; ++n) {
                if (!(got.coeff(n) == want[static_cast<std::size_t>(n)])) {
                    rep.passed = false;
                    rep.first_mismatch =
                        VerifyMismatch{n, ring_str(want[static_cast<std::size_t>(n)]),
                                       ring_str(got.coeff(n))};
                    if (!spec.r_values.empty()) note << "; first failure at r=" << r;
                    break;
                }
            }
            if (!rep.passed) break;
        }
        rep.detail = note.str();
        rep.elapsed_ms = timer.ms();
        return rep;
    };
    return e;
}

struct DetCheck {
    std::vector<long> r_values{};
    std::function<std::vector<Rational>(long, long)> seq;  // (r, hi) -> c_0..c_hi
    std::function<Rational(long, long)> closed;            // (r, size) -> determinant
    std::function<long(long)> size_of;                     // index -> matrix size
};

FormulaEntry make_determinant(std::string id, std::string title, DetCheck spec) {
    FormulaEntry e;
    e.id = std::move(id);
    e.kind = EntryKind::Determinant;
    e.title = std::move(title);
    e.verify = [spec, eid = e.id](const VerifyOptions& opt) -> VerifyReport {
        Timer timer;
        VerifyReport rep;
        rep.id = eid;
        rep.passed = true;
        const auto size_of =
            spec.size_of ? spec.size_of : std::function<long(long)>([](long n) { return n; });
        const long max_size = size_of(opt.n_max);
        std::ostringstream note;
        note << "matrix sizes";
        for (long m = 0; m <= opt.n_max; ++m) note << (m ? "," : " ") << size_of(m);
        if (!spec.r_values.empty()) note << r_set_str(spec.r_values);
        const std::vector<long> rs =
            spec.r_values.empty() ? std::vector<long>{0} : spec.r_values;
        for (long r : rs) {
            std::vector<Rational> c = spec.seq(r, 2 * max_size);
            for (long m = 0; m <= opt.n_max; ++m) {
                const long size = size_of(m);
                const Rational got = hankel_determinant(c, size);
                const Rational want = spec.closed(r, size);
                if (got != want) {
                    rep.passed = false;
                    rep.first_mismatch =
                        VerifyMismatch{size, want.to_string(), got.to_string()};
                    if (!spec.r_values.empty()) note << "; first failure at r=" << r;
                    break;
                }
            }
            if (!rep.passed) break;
        }
        rep.detail = note.str();
        rep.elapsed_ms = timer.ms();
        return rep;
    };
    return e;
}

// One rewriting step of a derivation chain: `need` maps the number of output
// levels wanted to the number of input levels consumed, `apply` performs the
// rewrite on a finite fraction.
struct ChainStep {
    std::function<long(long)> need;
    std::function<CF(const CF&)> apply;
};
using Chain = std::vector<ChainStep>;

ChainStep step_even() {
    return {[](long out) { return 2 * out; },
            [](const CF& cf) { return contract_even(cf, cf.depth() / 2); }};
}
ChainStep step_odd() {
    return {[](long out) { return 2 * out + 1; },
            [](const CF& cf) { return contract_odd(cf, (cf.depth() - 1) / 2); }};
}
ChainStep step_chop(long p) {
    return {[p](long out) { return std::max(out + 1, p + 2); },
            [p](const CF& cf) { return chop_at(cf, p, cf.depth()); }};
}
ChainStep step_strip(P expected_b0, Rational c, long e) {
    return {[](long out) { return out; }, [expected_b0, c, e](const CF& cf) {
                return strip_front(cf, expected_b0, c, e, cf.depth());
            }};
}
ChainStep step_halve() {
    return {[](long out) { return out; },
            [](const CF& cf) { return substitute_halve_cf(cf, cf.depth()); }};
}
ChainStep step_square_times_x() {
    return {[](long out) { return out; },
            [](const CF& cf) { return substitute_square_cf(cf, cf.depth(), true); }};
}
ChainStep step_haircut(Rational alpha) {
    return {[](long out) { return std::max<long>(out, 3); },
            [alpha](const CF& cf) { return haircut(cf, alpha, cf.depth()); }};
}
ChainStep step_scale_mono(long j, Rational c, long e) {
    return {[j](long out) { return std::max(out, j + 1); }, [j, c, e](const CF& cf) {
                return scale_level_monomial(cf, j, c, e, cf.depth());
            }};
}
ChainStep step_equivalence(std::function<Rational(long)> factor) {
    return {[](long out) { return out; }, [factor](const CF& cf) {
                std::vector<Rational> r;
                r.reserve(static_cast<std::size_t>(cf.depth()));
                for (long j = 1; j <= cf.depth(); ++j) r.push_back(factor(j));
                return equivalence_scale(cf, r);
            }};
}

CF run_chain(const CF& start, const Chain& steps, long final_depth) {
    long d = final_depth;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) d = it->need(d);
    CF cur = start.prefix(d);
    for (const auto& s : steps) cur = s.apply(cur);
    return cur;
}

// chop positions that collapse a depth-6-periodic staircase into the
// depth-3-periodic one: a head position, then two per period
Chain chop_schedule(long head, long base, long compare_depth) {
    const long periods = (compare_depth + 5) / 4 + 1;
    Chain ch{step_chop(head)};
    for (long k = 1; k <= periods; ++k) {
        ch.push_back(step_chop(4 * k + base));
        ch.push_back(step_chop(4 * k + base + 1));
    }
    return ch;
}

struct DerivCheck {
    std::vector<long> r_values{};
    std::function<CF(long)> start;
    std::function<Chain(long, long)> steps;  // (r, compare_depth)
    std::function<CF(long)> target;
    std::function<Chain(long, long)> target_steps;  // optional
};

FormulaEntry make_derivation(std::string id, std::string title, DerivCheck spec) {
    FormulaEntry e;
    e.id = std::move(id);
    e.kind = EntryKind::Derivation;
    e.title = std::move(title);
    e.verify = [spec, eid = e.id](const VerifyOptions& opt) -> VerifyReport {
        Timer timer;
        VerifyReport rep;
        rep.id = eid;
        rep.passed = true;
        const long depth = opt.depth;
        std::ostringstream note;
        note << "b0 and levels 1.." << depth << " compared";
        if (!spec.r_values.empty()) note << r_set_str(spec.r_values);
        const std::vector<long> rs =
            spec.r_values.empty() ? std::vector<long>{0} : spec.r_values;
        for (long r : rs) {
            CF got = run_chain(spec.start(r), spec.steps(r, depth), depth);
            CF want = spec.target_steps
                          ? run_chain(spec.target(r), spec.target_steps(r, depth), depth)
                          : spec.target(r).prefix(depth);
            if (got.b0() != want.b0()) {
                rep.passed = false;
                rep.first_mismatch =
                    VerifyMismatch{0, want.b0().to_string(), got.b0().to_string()};
            } else {
                for (long j = 1; j <= depth; ++j) {
                    if (got.level(j) != want.level(j)) {
                        rep.passed = false;
                        rep.first_mismatch =
                            VerifyMismatch{j, level_str(want.level(j)), level_str(got.level(j))};
                        break;
                    }
                }
            }
            if (!rep.passed) {
                if (!spec.r_values.empty()) note << "; first failure at r=" << r;
                break;
            }
        }
        rep.detail = note.str();
        rep.elapsed_ms = timer.ms();
        return rep;
    };
    return e;
}

// ---------------------------------------------------------------------------
// Joint-statistic fractions with randomized specializations
// ---------------------------------------------------------------------------

CF pcf_fraction(const Rational& u1, const Rational& u2, const Rational& u3,
                const Rational& u4) {
    const Rational s = u3 + u4;
    return CF(P::zero(), [u1, u2, s](long j) -> Lv {
        if (j == 1) return level(monoq(u1, 1), lin(Rational(1), -s));
        return level(monoq(-(Rational((j - 1) * j) * u1 * u2), 2),
                     lin(Rational(1), -(Rational(j) * s)));
    });
}

CF ecf_fraction(const Rational& u1, const Rational& u2, const Rational& u3,
                const Rational& u4) {
    const Rational c = (u3 + u4) / Rational(2);
    const Rational w = c * c - u1 * u2;
    return CF(P::zero(), [u1, c, w](long j) -> Lv {
        if (j == 1) return level(monoq(u1, 1), lin(Rational(1), -c));
        return level(monoq(w, 2), P(Rational(2 * j - 1)));
    });
}

FormulaEntry make_statistic(std::string id, std::string title, bool exponential) {
    FormulaEntry e;
    e.id = std::move(id);
    e.kind = EntryKind::Statistic;
    e.title = std::move(title);
    e.verify = [exponential, eid = e.id](const VerifyOptions& opt) -> VerifyReport {
        Timer timer;
        VerifyReport rep;
        rep.id = eid;
        rep.passed = true;
        const long N = 8;
        std::vector<PeakValleyDistribution> dist;
        dist.reserve(static_cast<std::size_t>(N));
        for (long n = 1; n <= N; ++n) dist.emplace_back(n);
        std::mt19937_64 rng(opt.seed ^ (exponential ? 0x9e3779b97f4a7c15ULL : 0ULL));
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        auto draw = [&]() {
            int v = 0;
            while (v == 0) v = num(rng);
            return Rational(v, den(rng));
        };
        const int kTrials = 5;
        std::ostringstream note;
        note << "orders 1.." << N << " against full enumeration; " << kTrials
             << " random weight specializations";
        for (int t = 0; t < kTrials && rep.passed; ++t) {
            const Rational u1 = draw();
            const Rational u2 = draw();
            const Rational u3 = draw();
            const Rational u4 = draw();
            std::vector<Rational> want(static_cast<std::size_t>(N) + 1, Rational(0));
            for (long n = 1; n <= N; ++n) {
                Rational s = dist[static_cast<std::size_t>(n - 1)].quadruple_sum(u1, u2, u3, u4);
                if (exponential) s = s / Rational(factorial(n));
                want[static_cast<std::size_t>(n)] = s;
            }
            CF cf = exponential ? ecf_fraction(u1, u2, u3, u4) : pcf_fraction(u1, u2, u3, u4);
            TruncatedSeries<Rational> got = cf.evaluate(N);
            for (long n = 0; n <= N; ++n) {
                if (got.coeff(n) != want[static_cast<std::size_t>(n)]) {
                    rep.passed = false;
                    rep.first_mismatch = VerifyMismatch{n, want[static_cast<std::size_t>(n)].to_string(),
                                                        got.coeff(n).to_string()};
                    note << "; first failure at trial " << t << " with (u1,u2,u3,u4)=("
                         << u1.to_string() << "," << u2.to_string() << "," << u3.to_string()
                         << "," << u4.to_string() << ")";
                    break;
                }
            }
        }
        rep.detail = note.str();
        rep.elapsed_ms = timer.ms();
        return rep;
    };
    return e;
}

// ---------------------------------------------------------------------------
// Functional-equation entry
// ---------------------------------------------------------------------------

FormulaEntry make_fu_entry() {
    FormulaEntry e;
    e.id = "FU";
    e.kind = EntryKind::Equation;
    e.title = "One-parameter deformed fraction satisfies its first-order "
              "algebraic differential equation";
    e.verify = [](const VerifyOptions& opt) -> VerifyReport {
        Timer timer;
        VerifyReport rep;
        rep.id = "FU";
        rep.passed = true;
        const long so = std::min<long>(opt.order, 24);
        std::ostringstream note;
        note << "parameter kept symbolic through order " << so
             << "; parameter = 0 through order " << opt.order;

        // Residual of (x-1)x^3 F' - u(x-1)(x-2)x^2 F^2 + (x-1)(2x^2+x-2) F + (x-2),
        // which expands to (x^4-x^3)F' - u(x^4-3x^3+2x^2)F^2 + (2x^3-x^2-3x+2)F + (x-2).
        TruncatedSeries<QP> F = cf_FU().evaluate(so);
        TruncatedSeries<QP> G = F * F;
        auto fc = [&](long n) { return (n < 0 || n > so) ? QP::zero() : F.coeff(n); };
        auto gc = [&](long n) { return (n < 0 || n > so) ? QP::zero() : G.coeff(n); };
        auto fd = [&](long n) { return (n < 0) ? QP::zero() : fc(n + 1) * QP(Rational(n + 1)); };
        const QP u({Rational(0), Rational(1)});
        for (long n = 0; n <= so && rep.passed; ++n) {
            QP res = fd(n - 4) - fd(n - 3);
            res = res - u * (gc(n - 4) - QP(Rational(3)) * gc(n - 3) + QP(Rational(2)) * gc(n - 2));
            res = res + QP(Rational(2)) * fc(n - 3) - fc(n - 2) - QP(Rational(3)) * fc(n - 1) +
                  QP(Rational(2)) * fc(n);
            if (n == 0) res = res - QP(Rational(2));
            if (n == 1) res = res + QP::one();
            if (!res.is_zero()) {
                rep.passed = false;
                rep.first_mismatch = VerifyMismatch{n, "0", res.to_string("u")};
            }
        }

        // Parameter = 0: the quadratic term drops out; run at full order.
        if (rep.passed) {
            const long ro = opt.order;
            TruncatedSeries<Rational> F0 = cf_NEG1(0).evaluate(ro);
            auto f0 = [&](long n) { return (n < 0 || n > ro) ? Rational(0) : F0.coeff(n); };
            auto fd0 = [&](long n) { return (n < 0) ? Rational(0) : f0(n + 1) * Rational(n + 1); };
            for (long n = 0; n <= ro && rep.passed; ++n) {
                Rational res = fd0(n - 4) - fd0(n - 3);
                res = res + Rational(2) * f0(n - 3) - f0(n - 2) - Rational(3) * f0(n - 1) +
                      Rational(2) * f0(n);
                if (n == 0) res = res - Rational(2);
                if (n == 1) res = res + Rational(1);
                if (!res.is_zero()) {
                    rep.passed = false;
                    rep.first_mismatch = VerifyMismatch{n, "0", res.to_string()};
                    note << "; failure in the parameter-0 run";
                }
            }
        }
        rep.detail = note.str();
        rep.elapsed_ms = timer.ms();
        return rep;
    };
    return e;
}

// ---------------------------------------------------------------------------
// Closed-form determinant helpers
// ---------------------------------------------------------------------------

Rational fct(long n) { return Rational(factorial(n)); }
Rational pow2(long e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(BigInt(1), BigInt(1) << (-e));
}
Rational sgn(long parity) { return (parity % 2 == 0) ? Rational(1) : Rational(-1); }
Rational rising(long r, long k) { return rising_factorial(Rational(r), k); }

// product over j=1..m of ((2j+1)!)^4
Rational odd_fact_fourth(long m) {
    Rational acc(1);
    for (long j = 1; j <= m; ++j) acc = acc * fct(2 * j + 1).pow(4);
    return acc;
}

Rational hd_closed(long, long n) {
    if (n == 0) return Rational(1);
    switch (n % 4) {
        case 1: {
            const long k = (n - 1) / 4;
            return sgn(k) * fct(2 * k).pow(2) * pow2(-4 * k * (2 * k - 1)) *
                   odd_fact_fourth(2 * k - 1);
        }
        case 2:
            return Rational(0);
        case 3: {
            const long k = (n - 3) / 4;
            return sgn(k + 1) * fct(2 * k + 1).pow(2) * pow2(-4 * k * (2 * k + 1)) *
                   odd_fact_fourth(2 * k);
        }
        default: {
            const long k = (n - 4) / 4;
            return sgn(k + 1) * fct(2 * k + 1).pow(2) * fct(4 * k + 3).pow(2) *
                   pow2(-2 * (2 * k + 1) * (2 * k + 1)) * odd_fact_fourth(2 * k);
        }
    }
}

Rational h10_closed(long, long n) {
    if (n == 0) return Rational(1);
    switch (n % 4) {
        case 0: {
            const long k = n / 4;
            return sgn(k) * Rational(k * k) * fct(2 * k - 1).pow(2) *
                   pow2(-(8 * k * k - 4 * k - 2)) * odd_fact_fourth(2 * k - 1);
        }
        case 1: {
            const long k = (n - 1) / 4;
            return sgn(k) * fct(2 * k).pow(2) / fct(4 * k + 1).pow(2) * pow2(-8 * k * k) *
                   odd_fact_fourth(2 * k);
        }
        case 2: {
            const long k = (n - 2) / 4;
            return sgn(k) * fct(2 * k + 1).pow(2) * pow2(-(8 * k * k + 4 * k)) *
                   odd_fact_fourth(2 * k);
        }
        default:
            return Rational(0);
    }
}

// product over k=a..b of (fct(num(k)) / fct(den(k)))^2 -- the recurring shape
Rational sq_ratio_prod(long a, long b, const std::function<long(long)>& num,
                       const std::function<long(long)>& den) {
    Rational acc(1);
    for (long k = a; k <= b; ++k) acc = acc * (fct(num(k)) / fct(den(k))).pow(2);
    return acc;
}

Rational ratio_prod(long a, long b, const std::function<long(long)>& num,
                    const std::function<long(long)>& den) {
    Rational acc(1);
    for (long k = a; k <= b; ++k) acc = acc * fct(num(k)) / fct(den(k));
    return acc;
}

// ---------------------------------------------------------------------------
// The registry
// ---------------------------------------------------------------------------

// the ordinary generating fraction specialized at the secant-tangent weights
// (u1, u2, u3, u4) = (1, 1/2, 0, 1): same levels as the Jacobi-type Euler
// fraction but with a vanishing integer part
CF cf_Eq21(long) {
    return CF(P::zero(), [](long j) -> Lv {
        if (j == 1) return level(mono(1, 1), lin(Rational(1), Rational(-1)));
        return level(mono(-j * (j - 1) / 2, 2), lin(Rational(1), Rational(-j)));
    });
}

std::vector<FormulaEntry> build_entries() {
    std::vector<FormulaEntry> es;
    const std::vector<long> r1234{1, 2, 3, 4};
    const auto id_size = std::function<long(long)>();

    const FractionCheck<Rational> hf_spec{
        {}, -1, cf_HF, [](long, long o) { return tgt_E(0, o); }};
    const FractionCheck<Rational> sf1_spec{
        {}, -1, cf_SF1, [](long, long o) { return tgt_E(0, o); }};
    const FractionCheck<Rational> jt_spec{
        {}, -1, cf_JT, [](long, long o) { return tgt_E(0, o); }};
    const FractionCheck<Rational> s_even_spec{
        {}, -1, cf_S_even, [](long, long o) { return tgt_E_even(0, o); }};
    const FractionCheck<Rational> s_odd_spec{
        {}, -1, cf_S_odd, [](long, long o) { return tgt_E_odd(0, o); }};
    const FractionCheck<Rational> eq21_spec{
        {}, -1, cf_Eq21, [](long, long o) {
            auto E = euler_rat(o);
            return dense_seq(o, [&](long n) {
                return n == 0 ? Rational(0) : E[static_cast<std::size_t>(n)];
            });
        }};
    const DetCheck hd_spec{
        {}, [](long, long hi) { return tgt_E(0, hi); }, hd_closed, id_size};

    // ---- fractions: Euler numbers and relatives -------------------------
    es.push_back(make_fraction<Rational>(
        "HF", "Euler numbers: depth-3-periodic fraction with cubic partial numerators",
        hf_spec));
    es.push_back(make_fraction<Rational>(
        "SF1", "Euler numbers: depth-6-periodic staircase fraction", sf1_spec));
    es.push_back(make_fraction<Rational>(
        "JT", "Euler numbers: Jacobi-type fraction with triangular-number numerators",
        jt_spec));
    es.push_back(make_fraction<Rational>(
        "GX", "Twice-shifted Euler numbers: depth-6-periodic staircase fraction",
        {{}, -1, cf_GX, [](long, long o) { return tgt_E(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "JX", "Twice-shifted Euler numbers: Jacobi-type fraction",
        {{}, -1, cf_JX, [](long, long o) { return tgt_E(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "S-even", "Secant numbers: staircase fraction with squared numerators",
        s_even_spec));
    es.push_back(make_fraction<Rational>(
        "S-odd", "Tangent numbers: staircase fraction with product numerators",
        s_odd_spec));
    es.push_back(make_fraction<Rational>(
        "LT", "Tangent series: odd-constant-denominator fraction",
        {{}, -1, cf_LT, [](long, long o) { return tgt_e_odd(0, o); }}));
    es.push_back(make_fraction<Rational>(
        "LTH", "Hyperbolic tangent series: odd-constant-denominator fraction",
        {{}, -1, cf_LTH, tgt_LTH}));

    // ---- fractions: the numbered bank -----------------------------------
    es.push_back(make_fraction<Rational>(
        "F1", "Even secant-power coefficients: staircase fraction",
        {r1234, -1, cf_F1, tgt_F1}));
    es.push_back(make_fraction<Rational>(
        "F2", "Secant-power coefficients, even part: Jacobi-type fraction",
        {r1234, -1, cf_F2, tgt_F2}));
    es.push_back(make_fraction<Rational>(
        "F3", "Secant-power coefficients, odd part: Jacobi-type fraction",
        {r1234, -1, cf_F3, tgt_F3}));
    es.push_back(make_fraction<Rational>(
        "F4", "Tangent numbers on even slots: staircase fraction",
        {{}, -1, cf_F4, [](long, long o) { return tgt_E_even(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F5", "Tangent numbers, compressed: Jacobi-type fraction",
        {{}, -1, cf_F5, [](long, long o) { return tgt_E2(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F6", "Shifted tangent numbers, compressed: Jacobi-type fraction",
        {{}, -1, cf_F6, [](long, long o) { return tgt_E2(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "F7", "Shifted Euler numbers: Jacobi-type fraction",
        {{}, -1, cf_F7, [](long, long o) { return tgt_E(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F8", "Scaled secant-power coefficients on odd slots: quartic-numerator fraction",
        {r1234, -1, cf_F8, tgt_F8}));
    es.push_back(make_fraction<Rational>(
        "F9", "Tangent numbers on odd slots: quartic-numerator fraction",
        {{}, -1, cf_F9, [](long, long o) { return tgt_E_odd(0, o); }}));
    es.push_back(make_fraction<Rational>(
        "F10", "Twice-shifted Euler numbers: depth-3-periodic fraction",
        {{}, -1, cf_F10, [](long, long o) { return tgt_E(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "F11", "Shifted tangent numbers on odd slots: quartic-numerator fraction",
        {{}, -1, cf_F11, [](long, long o) { return tgt_E_odd(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "F12", "Normalized tangent coefficients on even slots: zero-linear-part fraction",
        {{}, -1, cf_F12, [](long, long o) { return tgt_e_even(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F13", "Normalized tangent coefficients, compressed: Jacobi-type fraction",
        {{}, -1, cf_F13, [](long, long o) { return tgt_e2(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F14", "Normalized shifted tangent coefficients on odd slots",
        {{}, -1, cf_F14, [](long, long o) { return tgt_e_odd(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "F15", "Tangent series: Jacobi-type fraction in the squared variable",
        {{}, -1, cf_F15, [](long, long o) { return tgt_e_odd(0, o); }}));
    es.push_back(make_fraction<Rational>(
        "F16", "Once-shifted normalized Euler coefficients: Jacobi-type fraction",
        {{}, -1, cf_F16, [](long, long o) { return tgt_e(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "F17", "Normalized Euler coefficients: signed Jacobi-type fraction",
        {{}, -1, cf_F17, [](long, long o) { return tgt_e(0, o); }}));
    es.push_back(make_fraction<Rational>(
        "F18", "Twice-shifted normalized Euler coefficients: signed Jacobi-type fraction",
        {{}, -1, cf_F18, [](long, long o) { return tgt_e(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "F19", "Thrice-shifted normalized Euler coefficients: signed Jacobi-type fraction",
        {{}, -1, cf_F19, [](long, long o) { return tgt_e(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "F20", "Four-fold-shifted normalized Euler coefficients: signed Jacobi-type fraction",
        {{}, -1, cf_F20, [](long, long o) { return tgt_e(4, o); }}));
    es.push_back(make_fraction<Rational>(
        "F21", "Shifted normalized tangent coefficients on even slots: staircase fraction",
        {{}, -1, cf_F21, [](long, long o) { return tgt_e_even(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "F22", "Shifted normalized tangent coefficients, compressed: Jacobi-type fraction",
        {{}, -1, cf_F22, [](long, long o) { return tgt_e2(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "F23", "Five-fold-shifted normalized tangent coefficients, compressed",
        {{}, -1, cf_F23, [](long, long o) { return tgt_e2(5, o); }}));
    es.push_back(make_fraction<Rational>(
        "F24", "Seven-fold-shifted normalized tangent coefficients, compressed",
        {{}, -1, cf_F24, [](long, long o) { return tgt_e2(7, o); }}));

    // ---- fractions: staircase proof intermediates ------------------------
    es.push_back(make_fraction<Rational>(
        "f13", "Compressed tangent coefficients: staircase intermediate",
        {{}, -1, cf_s13, [](long, long o) { return tgt_e2(1, o); }}));
    es.push_back(make_fraction<Rational>(
        "f17", "Normalized Euler coefficients: signed staircase intermediate",
        {{}, -1, cf_s17, [](long, long o) { return tgt_e(0, o); }}));
    es.push_back(make_fraction<Rational>(
        "f18", "Twice-shifted normalized Euler coefficients: signed staircase intermediate",
        {{}, -1, cf_s18, [](long, long o) { return tgt_e(2, o); }}));
    es.push_back(make_fraction<Rational>(
        "f19", "Thrice-shifted normalized Euler coefficients: signed staircase intermediate",
        {{}, -1, cf_s19, [](long, long o) { return tgt_e(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "f22", "Shifted compressed tangent coefficients: staircase intermediate",
        {{}, -1, cf_s22, [](long, long o) { return tgt_e2(3, o); }}));
    es.push_back(make_fraction<Rational>(
        "f23", "Five-fold-shifted compressed tangent coefficients: staircase intermediate",
        {{}, -1, cf_s23, [](long, long o) { return tgt_e2(5, o); }}));

    // ---- fractions: q-deformations and specializations --------------------
    es.push_back(make_fraction<QPolynomial>(
        "QE", "q-deformed Euler polynomials: Jacobi-type fraction with q-binomial numerators",
        {{}, 12, cf_QE, tgt_QE}));
    es.push_back(make_fraction<QPolynomial>(
        "QSEC", "q-deformed secant analogues: staircase fraction with squared q-integers",
        {{}, 12, cf_QSEC, tgt_QSEC}));
    es.push_back(make_fraction<QPolynomial>(
        "QTAN", "q-deformed tangent analogues: staircase fraction with q-integer products",
        {{}, 12, cf_QTAN, tgt_QTAN}));
    es.push_back(make_fraction<Rational>(
        "NEG1", "Alternating specialization of the q-deformation: binomial-sum sequence",
        {{}, -1, cf_NEG1, tgt_NEG1}));

    // ---- permutation-statistic fractions ----------------------------------
    es.push_back(make_statistic(
        "PCF",
        "Ordinary generating fraction of the joint valley/peak/double-rise/double-fall "
        "distribution",
        false));
    es.push_back(make_statistic(
        "ECF",
        "Exponential generating fraction of the joint valley/peak/double-rise/double-fall "
        "distribution",
        true));

    // ---- functional equation ----------------------------------------------
    es.push_back(make_fu_entry());

    // ---- Hankel determinant identities ------------------------------------
    es.push_back(make_determinant(
        "HD", "Hankel determinants of the Euler numbers", hd_spec));
    es.push_back(make_determinant(
        "H1", "Hankel determinants of the even secant-power sequence with vanishing odd slots",
        {r1234, tgt_F1,
         [](long r, long n) {
             Rational acc(1);
             for (long k = 1; k <= n - 1; ++k) acc = acc * fct(k) * rising(r, k);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H2", "Hankel determinants of the even secant-power coefficients",
        {r1234, tgt_F2,
         [](long r, long n) {
             Rational acc(1);
             for (long k = 1; k <= n - 1; ++k) acc = acc * fct(2 * k) * rising(r, 2 * k);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H3", "Hankel determinants of the shifted even secant-power coefficients",
        {r1234, tgt_F3,
         [](long r, long n) {
             Rational acc(1);
             for (long k = 0; k <= n - 1; ++k) acc = acc * fct(2 * k + 1) * rising(r, 2 * k + 1);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H4", "Hankel determinants of the tangent numbers on even slots",
        {{}, [](long, long hi) { return tgt_E_even(1, hi); },
         [](long, long n) {
             Rational acc = fct(n);
             for (long k = 1; k <= n - 1; ++k) acc = acc * fct(k).pow(2);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H5", "Hankel determinants of the compressed tangent numbers",
        {{}, [](long, long hi) { return tgt_E2(1, hi); },
         [](long, long n) {
             Rational acc(1);
             for (long k = 1; k <= 2 * n - 1; ++k) acc = acc * fct(k);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H6", "Hankel determinants of the shifted compressed tangent numbers",
        {{}, [](long, long hi) { return tgt_E2(3, hi); },
         [](long, long n) {
             Rational acc(1);
             for (long k = 1; k <= 2 * n; ++k) acc = acc * fct(k);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H7", "Hankel determinants of the shifted Euler numbers",
        {{}, [](long, long hi) { return tgt_E(1, hi); },
         [](long, long n) {
             Rational acc = fct(n) * pow2(-n * (n - 1) / 2);
             for (long k = 2; k <= n - 1; ++k) acc = acc * fct(k).pow(2);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H8", "Hankel determinants of the scaled secant-power sequence on odd slots",
        {r1234, tgt_F8,
         [](long r, long n) {
             if (n % 2 == 1) return Rational(0);
             const long m = n / 2;
             Rational acc = sgn(m);
             for (long k = 1; k <= m - 1; ++k) {
                 Rational rise(1);
                 for (long i = 1; i <= 2 * k; ++i) rise = rise * Rational(r + i);
                 acc = acc * (fct(2 * k + 1) * rise).pow(2);
             }
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H9", "Hankel determinants of the tangent numbers on odd slots",
        {{}, [](long, long hi) { return tgt_E_odd(0, hi); },
         [](long, long n) {
             if (n % 2 == 1) return Rational(0);
             const long m = n / 2;
             Rational acc = sgn(m);
             for (long k = 1; k <= 2 * m - 1; ++k) acc = acc * fct(k).pow(2);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H10", "Hankel determinants of the twice-shifted Euler numbers",
        {{}, [](long, long hi) { return tgt_E(2, hi); }, h10_closed, id_size}));
    es.push_back(make_determinant(
        "H11", "Hankel determinants of the shifted tangent numbers on odd slots",
        {{}, [](long, long hi) { return tgt_E_odd(2, hi); },
         [](long, long n) {
             if (n % 2 == 1) return Rational(0);
             const long m = n / 2;
             Rational acc = sgn(m);
             for (long k = 1; k <= 2 * m; ++k) acc = acc * fct(k).pow(2);
             return acc;
         },
         id_size}));
    es.push_back(make_determinant(
        "H12", "Hankel determinants of the normalized tangent coefficients on even slots",
        {{}, [](long, long hi) { return tgt_e_even(1, hi); },
         [](long, long n) {
             if (n == 0) return Rational(1);
             Rational acc = pow2((n - 1) * (n - 1)) * fct(n - 1) / fct(2 * n - 1);
             return acc * sq_ratio_prod(1, n - 1, [](long k) { return k - 1; },
                                        [](long k) { return 2 * k - 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H13", "Hankel determinants of the compressed normalized tangent coefficients",
        {{}, [](long, long hi) { return tgt_e2(1, hi); },
         [](long, long n) {
             if (n == 0) return Rational(1);
             return pow2((n - 1) * (2 * n - 1)) *
                    ratio_prod(1, 2 * n - 2, [](long k) { return k; },
                               [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H14", "Hankel determinants of the normalized shifted tangent coefficients on odd slots",
        {{}, [](long, long hi) { return tgt_e_odd(2, hi); },
         [](long, long n) {
             if (n % 2 == 1) return Rational(0);
             const long m = n / 2;
             return sgn(m) * pow2(2 * m * (2 * m - 1)) *
                    sq_ratio_prod(1, 2 * m - 1, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H15", "Hankel determinants of the tangent series coefficients",
        {{}, [](long, long hi) { return tgt_e_odd(0, hi); },
         [](long, long n) {
             if (n % 2 == 1) return Rational(0);
             if (n == 0) return Rational(1);
             const long m = n / 2;
             return sgn(m) * pow2(2 * (m - 1) * (2 * m - 1)) *
                    sq_ratio_prod(1, 2 * m - 2, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H16", "Hankel determinants of the once-shifted normalized Euler coefficients",
        {{}, [](long, long hi) { return tgt_e(1, hi); },
         [](long, long n) {
             if (n == 0) return Rational(1);
             return fct(n - 1) / (pow2(n - 1) * fct(2 * n - 1)) *
                    sq_ratio_prod(1, n - 2, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H17", "Hankel determinants of the normalized Euler coefficients",
        {{}, [](long, long hi) { return tgt_e(0, hi); },
         [](long, long n) {
             if (n == 0) return Rational(1);
             return sgn(n * (n - 1) / 2) * pow2(-(n - 1)) *
                    sq_ratio_prod(2, n - 1, [](long k) { return k - 1; },
                                  [](long k) { return 2 * k - 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H18", "Hankel determinants of the twice-shifted normalized Euler coefficients",
        {{}, [](long, long hi) { return tgt_e(2, hi); },
         [](long, long n) {
             return sgn(n * (n - 1) / 2) * pow2(-n) *
                    sq_ratio_prod(2, n, [](long k) { return k - 1; },
                                  [](long k) { return 2 * k - 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H19", "Hankel determinants of the thrice-shifted normalized Euler coefficients",
        {{}, [](long, long hi) { return tgt_e(3, hi); },
         [](long, long n) {
             return Rational(n + 1) * fct(n + 1) / (pow2(n) * fct(2 * n + 1)) *
                    sq_ratio_prod(1, n - 1, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H20", "Hankel determinants of the four-fold-shifted normalized Euler coefficients",
        {{}, [](long, long hi) { return tgt_e(4, hi); },
         [](long, long n) {
             return sgn(n * (n - 1) / 2) *
                    Rational((n + 1) * (n + 2) * (n * n + 3 * n + 1)) * pow2(-(n + 1)) *
                    sq_ratio_prod(1, n, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H21", "Hankel determinants of the shifted normalized tangent coefficients on even slots",
        {{}, [](long, long hi) { return tgt_e_even(3, hi); },
         [](long, long n) {
             if (n % 2 == 0) {
                 const long m = n / 2;
                 return pow2(4 * m * m - 1) * fct(2 * m + 2) / fct(4 * m + 1) *
                        sq_ratio_prod(1, 2 * m - 1, [](long k) { return k; },
                                      [](long k) { return 2 * k + 1; });
             }
             const long m = (n - 1) / 2;
             return pow2(4 * m * (m + 1)) * Rational(2 * m + 1) * fct(2 * m + 2) /
                    fct(4 * m + 3) *
                    sq_ratio_prod(1, 2 * m, [](long k) { return k; },
                                  [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H22", "Hankel determinants of the shifted compressed normalized tangent coefficients",
        {{}, [](long, long hi) { return tgt_e2(3, hi); },
         [](long, long n) {
             return pow2(n * (2 * n - 1)) * ratio_prod(1, 2 * n - 1, [](long k) { return k; },
                                                       [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H23",
        "Hankel determinants of the five-fold-shifted compressed normalized tangent "
        "coefficients",
        {{}, [](long, long hi) { return tgt_e2(5, hi); },
         [](long, long n) {
             return pow2(n * (2 * n + 1)) * Rational((n + 1) * (2 * n + 1)) *
                    ratio_prod(1, 2 * n, [](long k) { return k; },
                               [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "H24",
        "Hankel determinants of the seven-fold-shifted compressed normalized tangent "
        "coefficients",
        {{}, [](long, long hi) { return tgt_e2(7, hi); },
         [](long, long n) {
             return pow2(n * (2 * n + 3)) * Rational(2 * n + 1) *
                    Rational(4 * n * n + 10 * n + 3) *
                    Rational((n + 1) * (n + 2) * (2 * n + 3)) / Rational(3) *
                    ratio_prod(1, 2 * n + 1, [](long k) { return k; },
                               [](long k) { return 2 * k + 1; });
         },
         id_size}));
    es.push_back(make_determinant(
        "NEG1-Heven", "Even-size Hankel determinants of the alternating specialization",
        {{}, tgt_NEG1,
         [](long, long size) {
             const long m = size / 2;
             Rational acc(1);
             for (long k = 1; k <= m; ++k) acc = acc * fct(k - 1).pow(3) * fct(k);
             return acc;
         },
         [](long n) { return 2 * n; }}));
    es.push_back(make_determinant(
        "NEG1-Hodd", "Odd-size Hankel determinants of the alternating specialization",
        {{}, tgt_NEG1,
         [](long, long size) {
             const long m = (size - 1) / 2;
             Rational acc(1);
             for (long k = 1; k <= m; ++k) acc = acc * fct(k - 1) * fct(k).pow(3);
             return acc;
         },
         [](long n) { return 2 * n + 1; }}));

    // ---- derivation chains -------------------------------------------------
    const auto no_target_steps = std::function<Chain(long, long)>();
    es.push_back(make_derivation(
        "deriv:HF", "Even contraction of the periodic staircase gives the cubic-numerator form",
        {{}, cf_SF1, [](long, long) { return Chain{step_even()}; }, cf_HF, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:JT", "Repeated chops collapse the periodic staircase to the Jacobi-type form",
        {{}, cf_SF1, [](long, long d) { return chop_schedule(1, 0, d); }, cf_JT,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:GX", "Repeated chops collapse the shifted staircase to its Jacobi-type form",
        {{}, cf_GX, [](long, long d) { return chop_schedule(3, 2, d); }, cf_JX,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:JX", "Head split and renormalization connect the two shifted Jacobi-type forms",
        {{}, cf_F7,
         [](long, long) {
             return Chain{step_haircut(Rational(1)), step_scale_mono(2, Rational(1), -1),
                          step_strip(P::one(), Rational(1), 1)};
         },
         cf_JX, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F2", "Compression and even contraction of the secant-power staircase",
        {r1234, cf_F1, [](long, long) { return Chain{step_halve(), step_even()}; }, cf_F2,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F3", "Compression and odd contraction of the secant-power staircase",
        {r1234, cf_F1,
         [](long, long) {
             return Chain{step_halve(), step_odd(), step_strip(P::one(), Rational(1), 1)};
         },
         cf_F3, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F4", "Dividing the tangent staircase by its leading variable",
        {{}, cf_S_odd, [](long, long) { return Chain{step_strip(P::zero(), Rational(1), 1)}; },
         cf_F4, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F5", "Compression and even contraction of the tangent staircase",
        {{}, cf_F4, [](long, long) { return Chain{step_halve(), step_even()}; }, cf_F5,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F6", "Compression and odd contraction of the tangent staircase",
        {{}, cf_F4,
         [](long, long) {
             return Chain{step_halve(), step_odd(), step_strip(P::one(), Rational(1), 1)};
         },
         cf_F6, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F7", "Removing the constant head of the Jacobi-type Euler fraction",
        {{}, cf_JT, [](long, long) { return Chain{step_strip(P::one(), Rational(1), 1)}; },
         cf_F7, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F8", "Chop, head removal and even contraction of the secant-power staircase",
        {r1234, cf_F1,
         [](long r, long) {
             return Chain{step_chop(1), step_strip(P::one(), Rational(r), 1), step_even()};
         },
         cf_F8, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F9", "Even contraction of the tangent staircase",
        {{}, cf_S_odd, [](long, long) { return Chain{step_even()}; }, cf_F9,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F10", "Even contraction of the shifted staircase",
        {{}, cf_GX, [](long, long) { return Chain{step_even()}; }, cf_F10, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F11", "Squared-variable substitution of the compressed shifted tangent fraction",
        {{}, cf_F6, [](long, long) { return Chain{step_square_times_x()}; }, cf_F11,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F12", "Equivalence rescaling of the classical tangent fraction",
        {{}, cf_LT,
         [](long, long) {
             return Chain{step_equivalence([](long j) { return Rational(1, 2 * j - 1); }),
                          step_strip(P::zero(), Rational(1), 1)};
         },
         cf_F12, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:f13", "Compression of the even-slot tangent fraction",
        {{}, cf_F12, [](long, long) { return Chain{step_halve()}; }, cf_s13,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F13", "Even contraction of the compressed tangent staircase",
        {{}, cf_s13, [](long, long) { return Chain{step_even()}; }, cf_F13,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F14", "Odd contraction of the even-slot tangent fraction",
        {{}, cf_F12,
         [](long, long) { return Chain{step_odd(), step_strip(P::one(), Rational(1), 1)}; },
         cf_F14, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F15", "Squared-variable substitution of the compressed tangent fraction",
        {{}, cf_F13, [](long, long) { return Chain{step_square_times_x()}; }, cf_F15,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F16", "Odd contraction of the signed staircase",
        {{}, cf_s17,
         [](long, long) { return Chain{step_odd(), step_strip(P::one(), Rational(1), 1)}; },
         cf_F16, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F17", "Even contraction of the signed staircase",
        {{}, cf_s17, [](long, long) { return Chain{step_even()}; }, cf_F17,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F18", "Even contraction of the twice-shifted signed staircase",
        {{}, cf_s18, [](long, long) { return Chain{step_even()}; }, cf_F18,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F19", "Odd contraction of the twice-shifted signed staircase",
        {{}, cf_s18,
         [](long, long) {
             return Chain{step_odd(), step_strip(P(Rational(1, 2)), Rational(1), 1)};
         },
         cf_F19, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F19-alt", "Even contraction of the thrice-shifted signed staircase",
        {{}, cf_s19, [](long, long) { return Chain{step_even()}; }, cf_F19,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F20", "Odd contraction of the thrice-shifted signed staircase",
        {{}, cf_s19,
         [](long, long) {
             return Chain{step_odd(), step_strip(P(Rational(1, 3)), Rational(1), 1)};
         },
         cf_F20, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F21", "Even contraction of the even-slot staircase matches the odd-slot form",
        {{}, cf_F21, [](long, long) { return Chain{step_even()}; }, cf_F14,
         [](long, long) { return Chain{step_strip(P::zero(), Rational(1), 1)}; }}));
    es.push_back(make_derivation(
        "deriv:f22", "Compression of the shifted even-slot staircase",
        {{}, cf_F21, [](long, long) { return Chain{step_halve()}; }, cf_s22,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F22", "Even contraction of the shifted compressed staircase",
        {{}, cf_s22, [](long, long) { return Chain{step_even()}; }, cf_F22,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F23", "Odd contraction of the shifted compressed staircase",
        {{}, cf_s22,
         [](long, long) {
             return Chain{step_odd(), step_strip(P(Rational(1, 3)), Rational(1), 1)};
         },
         cf_F23, no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F23-alt", "Even contraction of the five-fold-shifted compressed staircase",
        {{}, cf_s23, [](long, long) { return Chain{step_even()}; }, cf_F23,
         no_target_steps}));
    es.push_back(make_derivation(
        "deriv:F24", "Odd contraction of the five-fold-shifted compressed staircase",
        {{}, cf_s23,
         [](long, long) {
             return Chain{step_odd(), step_strip(P(Rational(2, 15)), Rational(1), 1)};
         },
         cf_F24, no_target_steps}));

    // ---- alternate lookup keys --------------------------------------------
    // Short citation-style ids accepted by the command line in addition to the
    // descriptive ids above; each re-runs the same check under its own name.
    es.push_back(make_fraction<Rational>(
        "Thm1.1", "Euler numbers: depth-3-periodic fraction with cubic partial numerators",
        hf_spec));
    es.push_back(make_determinant(
        "Thm1.2", "Hankel determinants of the Euler numbers", hd_spec));
    es.push_back(make_fraction<Rational>(
        "Eq3", "Secant numbers: staircase fraction with squared numerators",
        s_even_spec));
    es.push_back(make_fraction<Rational>(
        "Eq4", "Tangent numbers: staircase fraction with product numerators",
        s_odd_spec));
    es.push_back(make_fraction<Rational>(
        "Eq21", "Euler numbers without constant term: specialized statistic fraction",
        eq21_spec));
    es.push_back(make_fraction<Rational>(
        "Eq22", "Euler numbers: Jacobi-type fraction with triangular-number numerators",
        jt_spec));
    es.push_back(make_fraction<Rational>(
        "Eq23", "Euler numbers: depth-6-periodic staircase fraction", sf1_spec));

    return es;
}

}  // namespace

Catalog::Catalog() : entries_(build_entries()) {
    for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].id] = i;
}

const Catalog& Catalog::instance() {
    static const Catalog kCatalog;
    return kCatalog;
}

const FormulaEntry* Catalog::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<VerifyReport> Catalog::verify_all(const VerifyOptions& options) const {
    std::vector<VerifyReport> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.verify(options));
    return out;
}

}  // namespace hfrac
