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

#ifndef HFRAC_IO_HPP_
#define HFRAC_IO_HPP_

/// \file
/// JSON serialization for the library's value types.
///
/// Schemas (all numbers are exact fraction strings, never floating point;
/// integers are printed without a "/1" suffix):
///
///   series    {"order": N, "coeffs": ["c0", "c1", ...]}        (order+1 entries)
///   fraction  {"b0": [poly], "levels": [{"a": [poly], "b": [poly]}, ...]}
///   ladder    {"delta": d, "levels": [{"v": "p/q", "k": k, "u": [poly]}, ...]}
///   sequence  {"name": "...", "values": [...]}
///   report    {"id": "...", "status": "PASS"|"FAIL",
///              "first_mismatch": {"n": n, "expected": "...", "got": "..."} | null,
///              "elapsed_ms": t}
///
/// A polynomial is the array of its coefficients from the constant term up;
/// the zero polynomial is the empty array. Serialization is deterministic:
/// the same value always yields the same bytes.

#include <string>
#include <vector>

#include "hfrac/catalog.hpp"
#include "hfrac/contfrac.hpp"
#include "hfrac/polynomial.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"
#include "hfrac/superfrac.hpp"

namespace hfrac {
namespace io {

/// Renders a series as {"order": N, "coeffs": [...]}.
std::string series_to_json(const TruncatedSeries<Rational>& s);

/// Parses the series schema. Throws ParseError on malformed input.
TruncatedSeries<Rational> series_from_json(const std::string& text);

/// Renders the first `depth` levels of a fraction as
/// {"b0": [...], "levels": [...]}; depth < 0 renders every level of a
/// finite fraction.
std::string cf_to_json(const GeneralizedCF<Rational>& cf, long depth = -1);

/// Parses the fraction schema into a finite fraction.
GeneralizedCF<Rational> cf_from_json(const std::string& text);

/// Renders a ladder as {"delta": d, "levels": [...]}.
std::string super_to_json(const SuperFraction<Rational>& sf);

/// Parses the ladder schema. Throws ParseError on malformed input and
/// StructureError when the parsed data violates the ladder constraints.
SuperFraction<Rational> super_from_json(const std::string& text);

/// Renders a named list of exact values as {"name": ..., "values": [...]}.
std::string sequence_to_json(const std::string& name, const std::vector<Rational>& values);

/// Same schema with polynomial values, each an array of coefficient strings.
std::string sequence_to_json(const std::string& name, const std::vector<QPolynomial>& values);

/// Renders one verification report.
std::string report_to_json(const VerifyReport& rep);

/// Renders a batch of verification reports as a JSON array, in input order.
std::string reports_to_json(const std::vector<VerifyReport>& reps);

}  // namespace io
}  // namespace hfrac

#endif  // HFRAC_IO_HPP_
