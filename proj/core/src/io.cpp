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

#include "hfrac/io.hpp"

#include <cstddef>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfrac/error.hpp"

namespace hfrac {
namespace io {
namespace {

// Insertion-ordered objects so rendered key order matches the documented
// schemas byte for byte.
using Json = nlohmann::ordered_json;

Json poly_to_array(const Polynomial<Rational>& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

Polynomial<Rational> poly_from_array(const Json& arr, const char* where) {
    if (!arr.is_array()) {
        throw ParseError(std::string(where) + ": polynomial must be an array of fraction strings");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const Json& c : arr) {
        if (!c.is_string()) {
            throw ParseError(std::string(where) + ": polynomial coefficient must be a string");
        }
        coeffs.push_back(Rational::from_string(c.get<std::string>()));
    }
    return Polynomial<Rational>(std::move(coeffs));
}

Json parse_document(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

const Json& require(const Json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    }
    return *it;
}

long require_long(const Json& obj, const char* key, const char* what) {
    const Json& v = require(obj, key, what);
    if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + ": \"" + key + "\" must be an integer");
    }
    return v.get<long>();
}

}  // namespace

std::string series_to_json(const TruncatedSeries<Rational>& s) {
    Json doc;
    doc["order"] = s.order();
    Json coeffs = Json::array();
    for (const Rational& c : s.coefficients()) coeffs.push_back(c.to_string());
    doc["coeffs"] = std::move(coeffs);
    return doc.dump();
}

TruncatedSeries<Rational> series_from_json(const std::string& text) {
    const Json doc = parse_document(text, "series");
    if (!doc.is_object()) throw ParseError("series: document must be an object");
    const long order = require_long(doc, "order", "series");
    const Json& arr = require(doc, "coeffs", "series");
    if (!arr.is_array()) throw ParseError("series: \"coeffs\" must be an array");
    if (order < 0 || arr.size() != static_cast<std::size_t>(order) + 1) {
        throw ParseError("series: \"coeffs\" must hold exactly order + 1 entries");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const Json& c : arr) {
        if (!c.is_string()) throw ParseError("series: coefficient must be a string");
        coeffs.push_back(Rational::from_string(c.get<std::string>()));
    }
    return TruncatedSeries<Rational>(std::move(coeffs), order);
}

std::string cf_to_json(const GeneralizedCF<Rational>& cf, long depth) {
    if (depth < 0) depth = cf.depth();
    Json doc;
    doc["b0"] = poly_to_array(cf.b0());
    Json levels = Json::array();
    for (long j = 1; j <= depth; ++j) {
        Json lv;
        lv["a"] = poly_to_array(cf.level(j).a);
        lv["b"] = poly_to_array(cf.level(j).b);
        levels.push_back(std::move(lv));
    }
    doc["levels"] = std::move(levels);
    return doc.dump();
}

GeneralizedCF<Rational> cf_from_json(const std::string& text) {
    const Json doc = parse_document(text, "fraction");
    if (!doc.is_object()) throw ParseError("fraction: document must be an object");
    Polynomial<Rational> b0 = poly_from_array(require(doc, "b0", "fraction"), "fraction");
    const Json& arr = require(doc, "levels", "fraction");
    if (!arr.is_array()) throw ParseError("fraction: \"levels\" must be an array");
    std::vector<CFLevel<Rational>> levels;
    levels.reserve(arr.size());
    for (const Json& lv : arr) {
        if (!lv.is_object()) throw ParseError("fraction: level must be an object");
        CFLevel<Rational> out;
        out.a = poly_from_array(require(lv, "a", "fraction"), "fraction");
        out.b = poly_from_array(require(lv, "b", "fraction"), "fraction");
        levels.push_back(std::move(out));
    }
    return GeneralizedCF<Rational>(std::move(b0), std::move(levels));
}

std::string super_to_json(const SuperFraction<Rational>& sf) {
    Json doc;
    doc["delta"] = sf.delta();
    Json levels = Json::array();
    for (const SuperLevel<Rational>& lv : sf.levels()) {
        Json out;
        out["v"] = lv.v.to_string();
        out["k"] = lv.k;
        out["u"] = poly_to_array(lv.u);
        levels.push_back(std::move(out));
    }
    doc["levels"] = std::move(levels);
    return doc.dump();
}

SuperFraction<Rational> super_from_json(const std::string& text) {
    const Json doc = parse_document(text, "ladder");
    if (!doc.is_object()) throw ParseError("ladder: document must be an object");
    const long delta = require_long(doc, "delta", "ladder");
    const Json& arr = require(doc, "levels", "ladder");
    if (!arr.is_array()) throw ParseError("ladder: \"levels\" must be an array");
    std::vector<SuperLevel<Rational>> levels;
    levels.reserve(arr.size());
    for (const Json& lv : arr) {
        if (!lv.is_object()) throw ParseError("ladder: level must be an object");
        const Json& v = require(lv, "v", "ladder");
        if (!v.is_string()) throw ParseError("ladder: \"v\" must be a string");
        SuperLevel<Rational> out;
        out.v = Rational::from_string(v.get<std::string>());
        out.k = require_long(lv, "k", "ladder");
        out.u = poly_from_array(require(lv, "u", "ladder"), "ladder");
        levels.push_back(std::move(out));
    }
    return SuperFraction<Rational>(delta, std::move(levels));
}

std::string sequence_to_json(const std::string& name, const std::vector<Rational>& values) {
    Json doc;
    doc["name"] = name;
    Json vals = Json::array();
    for (const Rational& v : values) vals.push_back(v.to_string());
    doc["values"] = std::move(vals);
    return doc.dump();
}

std::string sequence_to_json(const std::string& name, const std::vector<QPolynomial>& values) {
    Json doc;
    doc["name"] = name;
    Json vals = Json::array();
    for (const QPolynomial& v : values) vals.push_back(poly_to_array(v));
    doc["values"] = std::move(vals);
    return doc.dump();
}

namespace {

Json report_to_object(const VerifyReport& rep) {
    Json doc;
    doc["id"] = rep.id;
    doc["status"] = rep.passed ? "PASS" : "FAIL";
    if (rep.first_mismatch) {
        Json mm;
        mm["n"] = rep.first_mismatch->n;
        mm["expected"] = rep.first_mismatch->expected;
        mm["got"] = rep.first_mismatch->got;
        doc["first_mismatch"] = std::move(mm);
    } else {
        doc["first_mismatch"] = nullptr;
    }
    doc["elapsed_ms"] = rep.elapsed_ms;
    return doc;
}

}  // namespace

std::string report_to_json(const VerifyReport& rep) { return report_to_object(rep).dump(); }

std::string reports_to_json(const std::vector<VerifyReport>& reps) {
    Json arr = Json::array();
    for (const VerifyReport& rep : reps) arr.push_back(report_to_object(rep));
    return arr.dump();
}

}  // namespace io
}  // namespace hfrac
