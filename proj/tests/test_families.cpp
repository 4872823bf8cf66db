// Copyright 2026 The wirecut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include "json.hpp"
#include <set>

#include "wirecut/errors.hpp"
#include "wirecut/families.hpp"

#ifndef WIRECUT_FIXTURE_DIR
#error "WIRECUT_FIXTURE_DIR must be defined"
#endif

namespace wirecut {
namespace {

using StringSet = std::set<std::string>;

StringSet names(const std::vector<PauliString>& v) {
    StringSet out;
    for (const auto& p : v) out.insert(p.str());
    return out;
}

std::vector<PauliString> parse_all(const std::vector<std::string>& v) {
    std::vector<PauliString> out;
    for (const auto& s : v) out.push_back(PauliString::from_string(s));
    return out;
}

nlohmann::json load_fixture(int n) {
    std::ifstream in(std::string(WIRECUT_FIXTURE_DIR) + "/golden_n" + std::to_string(n) + ".json");
    return nlohmann::json::parse(in);
}

// Every maximal commuting subspace for small n, by exhaustive search over
// n-subsets of non-identity strings.
std::set<StringSet> all_lagrangian_families(int n) {
    auto strings = all_pauli_strings(n);
    strings.erase(strings.begin());
    std::set<StringSet> out;
    const std::size_t m = strings.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == static_cast<std::size_t>(n)) {
            std::vector<PauliString> gens;
            for (auto i : idx) gens.push_back(strings[i]);
            std::set<std::uint64_t> span{0};
            for (const auto& g : gens) {
                std::set<std::uint64_t> next = span;
                for (auto s : span) next.insert(s ^ g.lex_key());
                span = std::move(next);
            }
            if (span.size() != (std::size_t{1} << n)) return;
            StringSet fam;
            for (const auto& p : strings)
                if (p.lex_key() != 0 && span.count(p.lex_key())) fam.insert(p.str());
            out.insert(fam);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) ok = ok && commutes(strings[idx[d]], strings[i]);
            if (!ok) continue;
            idx[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = 31 - std::countl_zero(b);
    while (a != 0 && 31 - std::countl_zero(a) >= db) a ^= b << ((31 - std::countl_zero(a)) - db);
    return a;
}

TEST(GaloisField, TableIsPrimitive) {
    for (int n = 1; n <= kMaxPartitionQubits; ++n) {
        const auto poly = gf2n::modulus(n);
        EXPECT_EQ(31 - std::countl_zero(poly), n);
        for (std::uint32_t d = 2; d < (1u << (n / 2 + 1)); ++d) {
            if (31 - std::countl_zero(d) > n / 2) continue;
            EXPECT_NE(poly_mod(poly, d), 0u) << "n=" << n << " divisor " << d;
        }
        if (n == 1) continue;
        // x generates the multiplicative group.
        std::uint32_t power = 1;
        std::uint32_t order = 0;
        do {
            power = gf2n::multiply(power, 2, n);
            ++order;
        } while (power != 1);
        EXPECT_EQ(order, (1u << n) - 1u) << "n=" << n;
    }
    EXPECT_THROW(gf2n::modulus(13), ResourceLimit);
}

TEST(GaloisField, TraceIsLinearAndBalanced) {
    for (int n = 1; n <= 6; ++n) {
        std::uint32_t ones = 0;
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            ones += gf2n::trace(a, n);
            for (std::uint32_t b = 0; b < (1u << n); b += 3)
                EXPECT_EQ(gf2n::trace(a ^ b, n), gf2n::trace(a, n) ^ gf2n::trace(b, n));
        }
        EXPECT_EQ(ones, 1u << (n - 1));
    }
}

TEST(GeneratePartition, SingleQubit) {
    const auto p = generate_partition(1);
    ASSERT_EQ(p.families.size(), 3u);
    EXPECT_EQ(names(p.families[0].members()), StringSet{"X"});
    EXPECT_EQ(names(p.families[1].members()), StringSet{"Y"});
    EXPECT_EQ(names(p.families[2].members()), StringSet{"Z"});
}

TEST(GeneratePartition, TwoQubitsMatchesPaperAsSets) {
    const auto p = generate_partition(2);
    std::set<StringSet> got;
    for (const auto& f : p.families) got.insert(names(f.members()));
    const std::set<StringSet> expect{{"XI", "IX", "XX"}, {"YZ", "ZX", "XY"}, {"XZ", "ZY", "YX"},
                                     {"YI", "IY", "YY"}, {"ZI", "IZ", "ZZ"}};
    EXPECT_EQ(got, expect);
    EXPECT_EQ(names(p.families.back().members()), (StringSet{"ZI", "IZ", "ZZ"}));
}

TEST(GeneratePartition, CanonicalOrdering) {
    for (int n = 1; n <= 5; ++n) {
        const auto p = generate_partition(n);
        for (std::size_t i = 0; i + 2 < p.families.size(); ++i) {
            EXPECT_LT(p.families[i].min_member().lex_key(), p.families[i + 1].min_member().lex_key());
        }
        EXPECT_TRUE(p.families.back().members().front().is_diagonal());
    }
}

TEST(GeneratePartition, InvariantsExhaustive) {
    for (int n = 1; n <= 4; ++n) {
        const auto p = generate_partition(n);
        ASSERT_EQ(p.families.size(), (std::size_t{1} << n) + 1);
        std::set<std::uint64_t> seen;
        for (std::size_t i = 0; i < p.families.size(); ++i) {
            const auto& members = p.families[i].members();
            ASSERT_EQ(members.size(), (std::size_t{1} << n) - 1);
            for (std::size_t a = 0; a < members.size(); ++a) {
                EXPECT_FALSE(members[a].is_identity());
                EXPECT_TRUE(seen.insert(members[a].lex_key()).second);
                if (i + 1 < p.families.size()) EXPECT_FALSE(members[a].is_diagonal());
                for (std::size_t b = a + 1; b < members.size(); ++b) EXPECT_TRUE(commutes(members[a], members[b]));
            }
        }
        EXPECT_EQ(seen.size(), (std::size_t{1} << (2 * n)) - 1);
        EXPECT_NO_THROW(validate_partition(p));
    }
}

TEST(GeneratePartition, FamiliesAreMaximalCommutingSubspaces) {
    for (int n = 1; n <= 3; ++n) {
        const auto all = all_lagrangian_families(n);
        if (n == 3) EXPECT_EQ(all.size(), 135u);
        if (n == 2) EXPECT_EQ(all.size(), 15u);
        for (const auto& f : generate_partition(n).families) EXPECT_TRUE(all.count(names(f.members())));
    }
}

TEST(GeneratePartition, Deterministic) {
    const auto a = partition_generators(6);
    const auto b = partition_generators(6);
    EXPECT_EQ(a, b);
}

TEST(GeneratePartition, LargeNValidates) {
    for (int n : {5, 6, 7, 8}) EXPECT_NO_THROW(validate_partition(generate_partition(n)));
    EXPECT_THROW(generate_partition(13), ResourceLimit);
    EXPECT_THROW(generate_partition(0), ResourceLimit);
}

TEST(GeneratePartition, GeneratorsHaveUnitXBlock) {
    for (int n = 1; n <= 10; ++n) {
        const auto gens = partition_generators(n);
        for (std::size_t f = 0; f + 1 < gens.size(); ++f) {
            for (int k = 0; k < n; ++k) EXPECT_EQ(gens[f][static_cast<std::size_t>(k)].xbits(), 1u << k);
        }
    }
}

TEST(ValidatePartition, DetectsOverlapAndBadLastFamily) {
    auto p = generate_partition(2);
    std::swap(p.families[0], p.families.back());
    EXPECT_THROW(validate_partition(p), InvalidInput);
    auto q = generate_partition(2);
    q.families[1] = q.families[0];
    EXPECT_THROW(validate_partition(q), InvalidInput);
    auto r = generate_partition(2);
    r.families.pop_back();
    EXPECT_THROW(validate_partition(r), InvalidInput);
}

TEST(ExtractGenerators, Examples) {
    EXPECT_EQ(extract_generators(parse_all({"X"})), parse_all({"X"}));
    EXPECT_EQ(extract_generators(parse_all({"XI", "IX", "XX"})), parse_all({"XI", "IX"}));
    const auto gens = extract_generators(parse_all({"YZ", "ZX", "XY"}));
    ASSERT_EQ(gens.size(), 2u);
    EXPECT_EQ(names(expand_family(gens)), (StringSet{"YZ", "ZX", "XY"}));
}

TEST(ExtractGenerators, RejectsInvalid) {
    EXPECT_THROW(extract_generators(parse_all({"XI", "ZI", "YI"})), InvalidInput);
    EXPECT_THROW(extract_generators(parse_all({"XI", "IX"})), InvalidInput);
    EXPECT_THROW(extract_generators(parse_all({"II", "XI", "IX"})), InvalidInput);
    EXPECT_THROW(CommutingFamily::from_members(parse_all({"XX", "ZZ", "YY", "XI"})), InvalidInput);
}

TEST(ExpandFamily, Examples) {
    EXPECT_EQ(names(expand_family(parse_all({"X"}))), StringSet{"X"});
    EXPECT_EQ(names(expand_family(parse_all({"XI", "IX"}))), (StringSet{"XI", "IX", "XX"}));
    EXPECT_EQ(names(expand_family(parse_all({"YZ", "ZX"}))), (StringSet{"YZ", "ZX", "XY"}));
    const auto yz_zx = multiply(PauliString::from_string("YZ"), PauliString::from_string("ZX"));
    EXPECT_EQ(yz_zx.pauli.str(), "XY");
    EXPECT_THROW(expand_family(parse_all({"XI", "XI"})), InvalidInput);
}

TEST(ExpandFamily, RoundTripsThroughExtraction) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& f : generate_partition(n).families) {
            const auto gens = extract_generators(f.members());
            EXPECT_EQ(expand_family(gens), f.members());
            EXPECT_EQ(gens, f.generators());
        }
    }
}

TEST(Fixtures, GoldenTablesFormPartitions) {
    for (int n = 1; n <= 4; ++n) {
        const auto j = load_fixture(n);
        FamilyPartition p{n, {}};
        for (const auto& f : j["families"]) {
            const auto gens = parse_all(f["generators"].get<std::vector<std::string>>());
            auto fam = CommutingFamily::from_generators(gens);
            EXPECT_EQ(names(fam.members()), StringSet(f["members"].begin(), f["members"].end()));
            EXPECT_EQ(extract_generators(fam.members()), gens) << "n=" << n;
            p.families.push_back(std::move(fam));
        }
        EXPECT_NO_THROW(validate_partition(p)) << "n=" << n;
    }
}

TEST(MubOverlap, SingleQubit) {
    const CMatrix h = gates::hadamard();
    const CMatrix sh = gates::phase_s() * gates::hadamard();
    const CMatrix id = CMatrix::Identity(2, 2);
    const std::vector<CMatrix> bases{h, sh, id};
    EXPECT_LT(mub_overlap_check(bases), 1e-12);
    const std::vector<CMatrix> twice{h, h};
    EXPECT_NEAR(mub_overlap_check(twice), 0.5, 1e-12);
    const std::vector<CMatrix> bad{CMatrix::Ones(2, 2)};
    EXPECT_THROW(mub_overlap_check(bad), InvalidInput);
}

TEST(MubOverlap, IdenticalBasesDeviation) {
    const CMatrix id = CMatrix::Identity(8, 8);
    const std::vector<CMatrix> twice{id, id};
    EXPECT_NEAR(mub_overlap_check(twice), 1.0 - 1.0 / 8.0, 1e-15);
}

}  // namespace
}  // namespace wirecut
