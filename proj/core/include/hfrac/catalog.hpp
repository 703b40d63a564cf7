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
#include <optional>
#include <string>
#include <vector>

namespace hfrac {

/// First point where two sides of an identity disagreed. `n` is the
/// coefficient index, determinant size, level index, or trial number,
/// depending on the entry kind.
struct VerifyMismatch {
    long n = 0;
    std::string expected;
    std::string got;
};

/// Outcome of checking one catalog entry.
struct VerifyReport {
    std::string id;
    bool passed = false;
    std::optional<VerifyMismatch> first_mismatch;
    long long elapsed_ms = 0;
    std::string detail;  // what was exercised (parameters, order, depth, ...)
};

/// What an entry asserts.
enum class EntryKind {
    Fraction,     // a continued fraction equals a coefficient sequence
    Determinant,  // Hankel determinants of a sequence equal a closed form
    Derivation,   // a transform chain carries one fraction into another
    Statistic,    // a fraction equals a permutation-statistic polynomial sum
    Equation,     // a fraction value satisfies a functional equation
};

const char* to_string(EntryKind kind);

/// Knobs shared by the verifiers. Individual entries may cap a knob when
/// their coefficient ring makes the default budget impractical; the report's
/// detail string records what was actually used.
struct VerifyOptions {
    long order = 30;                 // series order for fraction entries
    long n_max = 8;                  // largest determinant size
    long depth = 12;                 // compared prefix depth for derivations
    unsigned long long seed = 20260822ULL;  // randomized specializations
};

/// A registered identity with a self-contained verifier.
struct FormulaEntry {
    std::string id;
    EntryKind kind = EntryKind::Fraction;
    std::string title;
    std::function<VerifyReport(const VerifyOptions&)> verify;
};

/// The registry of all built-in identities, keyed by stable ids (F1..F24,
/// H1..H24, lowercase f-ids for proof intermediates, named extras, and
/// deriv:<id> transform chains).
class Catalog {
   public:
    static const Catalog& instance();

    const FormulaEntry* find(const std::string& id) const;
    const std::vector<FormulaEntry>& entries() const { return entries_; }

    /// Runs every verifier in registry order.
    std::vector<VerifyReport> verify_all(const VerifyOptions& options) const;

    Catalog(const Catalog&) = delete;
    Catalog& operator=(const Catalog&) = delete;

   private:
    Catalog();

    std::vector<FormulaEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace hfrac
