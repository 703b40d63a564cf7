// Copyright 2026 The hfrac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Command-line front end: exact sequence generation, continued fraction
/// expansion, Hankel determinants, permutation statistics, and identity
/// verification. All numeric output is exact ("p/q" fraction strings,
/// integers without a "/1" suffix); identical arguments produce identical
/// bytes. Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hfrac/catalog.hpp"
#include "hfrac/error.hpp"
#include "hfrac/euler.hpp"
#include "hfrac/hankel.hpp"
#include "hfrac/io.hpp"
#include "hfrac/numeric.hpp"
#include "hfrac/perms.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"
#include "hfrac/superfrac.hpp"

namespace {

using hfrac::BigInt;
using hfrac::Rational;
using Series = hfrac::TruncatedSeries<Rational>;

/// A request that violates usage rules (unknown name, out-of-range order).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Enforces the HFRAC_MAX_ORDER guard against runaway jobs.
void check_order_cap(long requested, const std::string& flag) {
    const char* cap_text = std::getenv("HFRAC_MAX_ORDER");
    if (cap_text == nullptr || *cap_text == '\0') return;
    char* end = nullptr;
    const long cap = std::strtol(cap_text, &end, 10);
    if (end == cap_text || *end != '\0') {
        throw UsageError("HFRAC_MAX_ORDER is not an integer: " + std::string(cap_text));
    }
    if (requested > cap) {
        throw UsageError(flag + " " + std::to_string(requested) +
                         " exceeds HFRAC_MAX_ORDER=" + std::to_string(cap));
    }
}

std::string big_to_string(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

/// Builds a named coefficient sequence c_0..c_order. The power-sequence
/// names place their even-index values in even slots and zero elsewhere,
/// matching the generating functions they come from.
Series named_series(const std::string& name, long r, long order) {
    if (name == "euler") {
        const auto e = hfrac::euler_numbers(order);
        return Series::generate(
            order, [&](long n) { return Rational(e[static_cast<std::size_t>(n)]); });
    }
    if (name == "secant" || name == "tangent") {
        const auto e = hfrac::euler_numbers(order);
        const long parity = (name == "secant") ? 0 : 1;
        return Series::generate(order, [&](long n) {
            if (n % 2 != parity) return Rational(0);
            return Rational(e[static_cast<std::size_t>(n)]);
        });
    }
    if (name == "secant-power") {
        const auto s = hfrac::secant_power_numbers(r, order / 2);
        return Series::generate(order, [&](long n) {
            if (n % 2 != 0) return Rational(0);
            return Rational(s[static_cast<std::size_t>(n / 2)]);
        });
    }
    throw UsageError("unknown series name: " + name +
                     " (expected euler, secant, tangent, or secant-power)");
}

/// Loads the coefficient source for --series/--in subcommands.
Series resolve_series(const std::string& series_name, const std::string& in_path, long r,
                      long order) {
    if (!series_name.empty() && !in_path.empty()) {
        throw UsageError("--series and --in are mutually exclusive");
    }
    if (!series_name.empty()) return named_series(series_name, r, order);
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw UsageError("cannot open input file: " + in_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        Series s = hfrac::io::series_from_json(buf.str());
        if (s.order() < order) {
            throw UsageError("input series order " + std::to_string(s.order()) +
                             " is below the requested order " + std::to_string(order));
        }
        return s.truncated(order);
    }
    throw UsageError("one of --series or --in is required");
}

std::string join_space(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ' ';
        out += parts[i];
    }
    return out;
}

int cmd_euler(long n, bool json) {
    check_order_cap(n, "--n");
    const auto e = hfrac::euler_numbers(n);
    std::vector<std::string> vals;
    vals.reserve(e.size());
    for (const BigInt& v : e) vals.push_back(big_to_string(v));
    if (json) {
        std::vector<Rational> rats;
        rats.reserve(e.size());
        for (const BigInt& v : e) rats.emplace_back(v);
        std::cout << hfrac::io::sequence_to_json("euler", rats) << "\n";
    } else {
        std::cout << join_space(vals) << "\n";
    }
    return 0;
}

int cmd_qeuler(long n, const std::string& q_text, bool json) {
    check_order_cap(n, "--n");
    const auto polys = hfrac::q_euler_numbers(n);
    if (q_text.empty()) {
        if (json) {
            std::cout << hfrac::io::sequence_to_json("qeuler", polys) << "\n";
        } else {
            for (const hfrac::QPolynomial& p : polys) std::cout << p.to_string("q") << "\n";
        }
        return 0;
    }
    const Rational q = Rational::from_string(q_text);
    std::vector<Rational> vals;
    vals.reserve(polys.size());
    for (const hfrac::QPolynomial& p : polys) vals.push_back(p.evaluate(q));
    if (json) {
        std::cout << hfrac::io::sequence_to_json("qeuler(q=" + q.to_string() + ")", vals) << "\n";
    } else {
        std::vector<std::string> parts;
        parts.reserve(vals.size());
        for (const Rational& v : vals) parts.push_back(v.to_string());
        std::cout << join_space(parts) << "\n";
    }
    return 0;
}

int cmd_hfrac(const std::string& series_name, const std::string& in_path, long delta, long order,
              long r, bool json) {
    check_order_cap(order, "--order");
    const Series f = resolve_series(series_name, in_path, r, order);
    const hfrac::SuperFraction<Rational> sf = hfrac::expand(f, delta);
    if (json) {
        std::cout << hfrac::io::super_to_json(sf) << "\n";
        return 0;
    }
    std::cout << "delta " << sf.delta() << "\n";
    for (long j = 0; j < sf.depth(); ++j) {
        const auto& lv = sf.level(j);
        std::cout << "v_" << j << " = " << lv.v.to_string() << "  k_" << j << " = " << lv.k
                  << "  u_" << (j + 1) << " = " << lv.u.to_string("x") << "\n";
    }
    return 0;
}

int cmd_hankel(const std::string& series_name, const std::string& in_path, long max_size, long r,
               bool json) {
    check_order_cap(max_size, "--max");
    // An m x m determinant reads coefficients through index 2m - 2.
    const long order = std::max<long>(0, 2 * max_size);
    const Series f = resolve_series(series_name, in_path, r, order);
    const std::vector<Rational>& c = f.coefficients();
    std::vector<Rational> dets;
    dets.reserve(static_cast<std::size_t>(max_size) + 1);
    for (long m = 0; m <= max_size; ++m) dets.push_back(hfrac::hankel_determinant(c, m));
    if (json) {
        const std::string label = series_name.empty() ? "hankel" : "hankel:" + series_name;
        std::cout << hfrac::io::sequence_to_json(label, dets) << "\n";
    } else {
        std::vector<std::string> parts;
        parts.reserve(dets.size());
        for (const Rational& v : dets) parts.push_back(v.to_string());
        std::cout << join_space(parts) << "\n";
    }
    return 0;
}

int cmd_perm_stats(long n, const std::string& weight, bool json) {
    check_order_cap(n, "--n");
    const std::map<std::string, hfrac::WeightFamily> families{
        {"W1", hfrac::WeightFamily::SignedDoubleAscent},
        {"W2", hfrac::WeightFamily::KillDoubleAscents},
        {"W3", hfrac::WeightFamily::HalveNonPeaks},
        {"W4", hfrac::WeightFamily::ComplexSplit},
    };
    if (!weight.empty()) {
        const auto it = families.find(weight);
        if (it == families.end()) {
            throw UsageError("unknown weight family: " + weight + " (expected W1, W2, W3, or W4)");
        }
        std::vector<std::string> parts;
        parts.reserve(static_cast<std::size_t>(n));
        std::vector<Rational> vals;
        for (long m = 1; m <= n; ++m) {
            const hfrac::GaussianRational s = hfrac::weight_sum(m, it->second);
            parts.push_back(s.to_string());
            if (s.is_real()) vals.push_back(s.real());
        }
        if (json) {
            if (vals.size() == parts.size()) {
                std::cout << hfrac::io::sequence_to_json("perm-stats:" + weight, vals) << "\n";
            } else {
                nlohmann::ordered_json doc;
                doc["name"] = "perm-stats:" + weight;
                doc["values"] = parts;
                std::cout << doc.dump() << "\n";
            }
        } else {
            std::cout << join_space(parts) << "\n";
        }
        return 0;
    }
    // No family selected: all four sums per size, one row per size.
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long m = 1; m <= n; ++m) {
        std::vector<std::string> row{std::to_string(m)};
        for (const char* w : {"W1", "W2", "W3", "W4"}) {
            row.push_back(hfrac::weight_sum(m, families.at(w)).to_string());
        }
        if (json) {
            rows.push_back(std::vector<std::string>(row.begin() + 1, row.end()));
        } else {
            std::cout << join_space(row) << "\n";
        }
    }
    if (json) {
        nlohmann::ordered_json doc;
        doc["name"] = "perm-stats";
        doc["values"] = std::move(rows);
        std::cout << doc.dump() << "\n";
    }
    return 0;
}

void print_report_text(const hfrac::VerifyReport& rep, bool with_id) {
    if (with_id) std::cout << rep.id << " ";
    std::cout << (rep.passed ? "PASS" : "FAIL") << "\n";
    if (!rep.passed && rep.first_mismatch) {
        std::cout << "first mismatch at n=" << rep.first_mismatch->n << ": expected "
                  << rep.first_mismatch->expected << ", got " << rep.first_mismatch->got << "\n";
    }
}

int cmd_verify(const std::string& id, bool all, const hfrac::VerifyOptions& opts, bool json) {
    check_order_cap(opts.order, "--order");
    check_order_cap(opts.n_max, "--nmax");
    check_order_cap(opts.depth, "--depth");
    const hfrac::Catalog& cat = hfrac::Catalog::instance();
    if (all == !id.empty()) {
        throw UsageError("exactly one of --id or --all is required");
    }
    if (!id.empty()) {
        const hfrac::FormulaEntry* entry = cat.find(id);
        if (entry == nullptr) throw UsageError("unknown id: " + id);
        const hfrac::VerifyReport rep = entry->verify(opts);
        if (json) {
            std::cout << hfrac::io::report_to_json(rep) << "\n";
        } else {
            print_report_text(rep, /*with_id=*/false);
        }
        return rep.passed ? 0 : 1;
    }
    std::vector<hfrac::VerifyReport> reps = cat.verify_all(opts);
    std::sort(reps.begin(), reps.end(),
              [](const hfrac::VerifyReport& x, const hfrac::VerifyReport& y) { return x.id < y.id; });
    bool ok = true;
    for (const hfrac::VerifyReport& rep : reps) ok = ok && rep.passed;
    if (json) {
        std::cout << hfrac::io::reports_to_json(reps) << "\n";
    } else {
        long passed = 0;
        for (const hfrac::VerifyReport& rep : reps) {
            print_report_text(rep, /*with_id=*/true);
            if (rep.passed) ++passed;
        }
        std::cout << passed << "/" << reps.size() << " passed\n";
    }
    return ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact continued fractions, Hankel determinants, and identity checks"};
    app.require_subcommand(1);

    // euler
    long euler_n = 0;
    bool euler_json = false;
    CLI::App* euler = app.add_subcommand("euler", "Print E_0..E_n");
    euler->add_option("--n", euler_n, "Largest index")->required()->check(CLI::NonNegativeNumber);
    euler->add_flag("--json", euler_json, "JSON output");

    // qeuler
    long qeuler_n = 0;
    std::string qeuler_q;
    bool qeuler_json = false;
    CLI::App* qeuler = app.add_subcommand("qeuler", "Print the q-analog polynomials E_0(q)..E_n(q)");
    qeuler->add_option("--n", qeuler_n, "Largest index")->required()->check(CLI::NonNegativeNumber);
    qeuler->add_option("--q", qeuler_q, "Evaluate at this exact rational instead");
    qeuler->add_flag("--json", qeuler_json, "JSON output");

    // hfrac
    std::string hf_series, hf_in;
    long hf_delta = 2, hf_order = 20, hf_r = 1;
    bool hf_json = false;
    CLI::App* hf = app.add_subcommand("hfrac", "Expand a series into its ladder fraction");
    hf->add_option("--series", hf_series, "Named series: euler, secant, tangent, secant-power");
    hf->add_option("--in", hf_in, "Series JSON file");
    hf->add_option("--delta", hf_delta, "Exponent jump delta >= 1")->check(CLI::PositiveNumber);
    hf->add_option("--order", hf_order, "Series truncation order")->check(CLI::NonNegativeNumber);
    hf->add_option("--r", hf_r, "Power parameter for secant-power")->check(CLI::PositiveNumber);
    hf->add_flag("--json", hf_json, "JSON output");

    // hankel
    std::string hk_series, hk_in;
    long hk_max = 0, hk_r = 1;
    bool hk_json = false;
    CLI::App* hk = app.add_subcommand("hankel", "Print Hankel determinants H_0..H_max");
    hk->add_option("--series", hk_series, "Named series: euler, secant, tangent, secant-power");
    hk->add_option("--in", hk_in, "Series JSON file");
    hk->add_option("--max", hk_max, "Largest matrix size")->required()->check(CLI::NonNegativeNumber);
    hk->add_option("--r", hk_r, "Power parameter for secant-power")->check(CLI::PositiveNumber);
    hk->add_flag("--json", hk_json, "JSON output");

    // perm-stats
    long ps_n = 0;
    std::string ps_weight;
    bool ps_json = false;
    CLI::App* ps = app.add_subcommand("perm-stats", "Weighted permutation sums");
    ps->add_option("--n", ps_n, "Largest permutation size")->required()->check(CLI::PositiveNumber);
    ps->add_option("--weight", ps_weight, "Weight family: W1, W2, W3, or W4");
    ps->add_flag("--json", ps_json, "JSON output");

    // verify
    std::string vf_id;
    bool vf_all = false, vf_json = false;
    hfrac::VerifyOptions vf_opts;
    CLI::App* vf = app.add_subcommand("verify", "Check registered identities");
    vf->add_option("--id", vf_id, "Identity id (see --all output for the registry)");
    vf->add_flag("--all", vf_all, "Check every registered identity");
    vf->add_option("--order", vf_opts.order, "Series order for fraction checks")
        ->check(CLI::NonNegativeNumber);
    vf->add_option("--nmax", vf_opts.n_max, "Largest determinant size")
        ->check(CLI::NonNegativeNumber);
    vf->add_option("--depth", vf_opts.depth, "Compared level depth for derivations")
        ->check(CLI::NonNegativeNumber);
    vf->add_option("--seed", vf_opts.seed, "Seed for randomized specializations");
    vf->add_flag("--json", vf_json, "JSON output");

    // Shared --format alias for the --json flags.
    const std::vector<std::pair<CLI::App*, bool*>> format_targets{
        {euler, &euler_json}, {qeuler, &qeuler_json}, {hf, &hf_json},
        {hk, &hk_json},       {ps, &ps_json},         {vf, &vf_json}};
    for (const auto& [sub, target] : format_targets) {
        sub->add_option_function<std::string>(
            "--format",
            [target](const std::string& fmt) {
                if (fmt == "json") {
                    *target = true;
                } else if (fmt != "text") {
                    throw CLI::ValidationError("--format", "expected text or json");
                }
            },
            "Output format: text (default) or json");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (euler->parsed()) return cmd_euler(euler_n, euler_json);
        if (qeuler->parsed()) return cmd_qeuler(qeuler_n, qeuler_q, qeuler_json);
        if (hf->parsed()) return cmd_hfrac(hf_series, hf_in, hf_delta, hf_order, hf_r, hf_json);
        if (hk->parsed()) return cmd_hankel(hk_series, hk_in, hk_max, hk_r, hk_json);
        if (ps->parsed()) return cmd_perm_stats(ps_n, ps_weight, ps_json);
        if (vf->parsed()) return cmd_verify(vf_id, vf_all, vf_opts, vf_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hfrac::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hfrac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
