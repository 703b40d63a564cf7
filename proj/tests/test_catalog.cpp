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

/// @file test_catalog.cpp
/// @brief Tests for the identity registry: lookup, registry integrity, and
///        a full verification sweep at reduced budgets.

#include "hfrac/catalog.hpp"

#include <set>
#include <string>

#include <gtest/gtest.h>

namespace hfrac {
namespace {

/// Smaller budgets than the defaults so the whole sweep stays fast in unit
/// tests; the acceptance run exercises the full budgets.
VerifyOptions reduced_options() {
    VerifyOptions opt;
    opt.order = 12;
    opt.n_max = 4;
    opt.depth = 6;
    return opt;
}

TEST(CatalogTest, FindLocatesKnownIdsAndRejectsUnknown) {
    const Catalog& cat = Catalog::instance();
    ASSERT_NE(cat.find("F10"), nullptr);
    EXPECT_EQ(cat.find("F10")->id, "F10");
    ASSERT_NE(cat.find("H7"), nullptr);
    EXPECT_EQ(cat.find("H7")->kind, EntryKind::Determinant);
    EXPECT_EQ(cat.find("no-such-id"), nullptr);
    EXPECT_EQ(cat.find(""), nullptr);
    EXPECT_EQ(cat.find("f10"), nullptr);  // ids are case sensitive
}

TEST(CatalogTest, ExpectedIdFamiliesAreRegistered) {
    const Catalog& cat = Catalog::instance();
    for (int k = 1; k <= 24; ++k) {
        EXPECT_NE(cat.find("F" + std::to_string(k)), nullptr) << "F" << k;
        EXPECT_NE(cat.find("H" + std::to_string(k)), nullptr) << "H" << k;
        if (k >= 2) EXPECT_NE(cat.find("deriv:F" + std::to_string(k)), nullptr) << "deriv:F" << k;
    }
    for (const char* id : {"HF", "HD", "JT", "SF1", "S-even", "S-odd", "PCF", "ECF", "QE",
                           "QSEC", "QTAN", "FU", "NEG1", "NEG1-Heven", "NEG1-Hodd", "LT", "LTH",
                           "GX", "JX"}) {
        EXPECT_NE(cat.find(id), nullptr) << id;
    }
    // Citation-style alternate keys resolve as well.
    for (const char* id : {"Thm1.1", "Thm1.2", "Eq3", "Eq4", "Eq21", "Eq22", "Eq23"}) {
        EXPECT_NE(cat.find(id), nullptr) << id;
    }
}

TEST(CatalogTest, RegistryIdsAreUniqueAndIndexed) {
    const Catalog& cat = Catalog::instance();
    std::set<std::string> seen;
    for (const FormulaEntry& e : cat.entries()) {
        EXPECT_TRUE(seen.insert(e.id).second) << "duplicate id " << e.id;
        EXPECT_FALSE(e.title.empty()) << e.id;
        EXPECT_TRUE(static_cast<bool>(e.verify)) << e.id;
        const FormulaEntry* found = cat.find(e.id);
        ASSERT_NE(found, nullptr) << e.id;
        EXPECT_EQ(found, &e) << e.id;
    }
    EXPECT_GE(seen.size(), 100u);
}

TEST(CatalogTest, KindNamesRender) {
    EXPECT_STREQ(to_string(EntryKind::Fraction), "fraction");
    EXPECT_STREQ(to_string(EntryKind::Determinant), "determinant");
    EXPECT_STREQ(to_string(EntryKind::Derivation), "derivation");
    EXPECT_STREQ(to_string(EntryKind::Statistic), "statistic");
    EXPECT_STREQ(to_string(EntryKind::Equation), "equation");
}

TEST(CatalogTest, SingleEntriesReportTheirOwnIdAndDetail) {
    const Catalog& cat = Catalog::instance();
    const VerifyOptions opt = reduced_options();
    for (const char* id : {"F1", "H1", "deriv:F2", "PCF", "FU", "Thm1.1"}) {
        const FormulaEntry* e = cat.find(id);
        ASSERT_NE(e, nullptr) << id;
        const VerifyReport rep = e->verify(opt);
        EXPECT_EQ(rep.id, id);
        EXPECT_TRUE(rep.passed) << id;
        EXPECT_FALSE(rep.first_mismatch.has_value()) << id;
        EXPECT_FALSE(rep.detail.empty()) << id;
        EXPECT_GE(rep.elapsed_ms, 0) << id;
    }
}

TEST(CatalogTest, AliasKeysRunTheSameCheckUnderTheirOwnName) {
    const Catalog& cat = Catalog::instance();
    const VerifyOptions opt = reduced_options();
    const struct {
        const char* alias;
        const char* primary;
    } pairs[] = {{"Thm1.1", "HF"}, {"Thm1.2", "HD"}, {"Eq3", "S-even"},
                 {"Eq4", "S-odd"}, {"Eq22", "JT"},   {"Eq23", "SF1"}};
    for (const auto& p : pairs) {
        const FormulaEntry* a = cat.find(p.alias);
        const FormulaEntry* b = cat.find(p.primary);
        ASSERT_NE(a, nullptr) << p.alias;
        ASSERT_NE(b, nullptr) << p.primary;
        EXPECT_EQ(a->kind, b->kind);
        const VerifyReport ra = a->verify(opt);
        EXPECT_EQ(ra.id, p.alias);
        EXPECT_TRUE(ra.passed) << p.alias;
    }
}

TEST(CatalogTest, FullSweepPassesAtReducedBudgets) {
    const Catalog& cat = Catalog::instance();
    const auto reports = cat.verify_all(reduced_options());
    ASSERT_EQ(reports.size(), cat.entries().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_EQ(reports[i].id, cat.entries()[i].id);
        EXPECT_TRUE(reports[i].passed)
            << reports[i].id << ": "
            << (reports[i].first_mismatch
                    ? "n=" + std::to_string(reports[i].first_mismatch->n) + " expected " +
                          reports[i].first_mismatch->expected + " got " +
                          reports[i].first_mismatch->got
                    : std::string("no mismatch recorded"));
    }
}

}  // namespace
}  // namespace hfrac
