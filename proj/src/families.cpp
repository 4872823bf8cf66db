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

#include "wirecut/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_set>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace gf2n {

std::uint32_t modulus(int degree) {
    static constexpr std::array<std::uint32_t, 13> kPolys{
        0,       0x3,    0x7,    0xB,    0x13,   0x25,  0x43,
        0x83,    0x11D,  0x211,  0x409,  0x805,  0x1053,
    };
    if (degree < 1 || degree > kMaxPartitionQubits) {
        throw ResourceLimit("GF(2^n) tables cover 1 <= n <= 12, got n=" + std::to_string(degree));
    }
    return kPolys[static_cast<std::size_t>(degree)];
}

std::uint32_t multiply(std::uint32_t a, std::uint32_t b, int degree) {
    const std::uint32_t poly = modulus(degree);
    const std::uint32_t top = 1u << degree;
    std::uint32_t acc = 0;
    while (b != 0) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly;
    }
    return acc;
}

std::uint32_t trace(std::uint32_t a, int degree) {
    std::uint32_t acc = 0;
    std::uint32_t power = a;
    for (int k = 0; k < degree; ++k) {
        acc ^= power;
        power = multiply(power, power, degree);
    }
    // The trace lands in the prime subfield {0, 1}.
    return acc & 1u;
}

}  // namespace gf2n

namespace {

std::uint32_t width_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

void check_partition_range(int n) {
    if (n < 1 || n > kMaxPartitionQubits) {
        throw ResourceLimit("partitions are supported for 1 <= n <= 12, got n=" + std::to_string(n));
    }
}

// Row vector over GF(2) in column order (x_1..x_n, z_1..z_n); packed with x_1 at bit 0.
std::uint64_t pivot_row(const PauliString& p) {
    return static_cast<std::uint64_t>(p.xbits()) | (static_cast<std::uint64_t>(p.zbits()) << p.num_qubits());
}

PauliString from_pivot_row(std::uint64_t row, int n) {
    const auto mask = width_mask(n);
    return PauliString(n, static_cast<std::uint32_t>(row >> n) & mask, static_cast<std::uint32_t>(row) & mask);
}

// Reduced echelon basis of the rows, pivots in increasing bit order.
std::vector<std::uint64_t> reduced_basis(std::vector<std::uint64_t> rows, int width) {
    std::vector<std::uint64_t> basis;
    std::vector<int> pivots;
    for (int col = 0; col < width; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        auto it = std::find_if(rows.begin(), rows.end(), [bit](std::uint64_t r) { return (r & bit) != 0; });
        if (it == rows.end()) continue;
        const std::uint64_t pivot = *it;
        rows.erase(it);
        for (auto& r : rows)
            if (r & bit) r ^= pivot;
        for (auto& b : basis)
            if (b & bit) b ^= pivot;
        basis.push_back(pivot);
        pivots.push_back(col);
    }
    return basis;
}

std::vector<PauliString> sorted_members(std::vector<PauliString> members) {
    std::sort(members.begin(), members.end(),
              [](const PauliString& a, const PauliString& b) { return a.lex_key() < b.lex_key(); });
    return members;
}

}  // namespace

std::vector<PauliString> expand_family(std::span<const PauliString> generators) {
    if (generators.empty()) throw InvalidInput("a family needs at least one generator");
    const int n = generators.front().num_qubits();
    const std::size_t k = generators.size();
    if (k > 24) throw ResourceLimit("too many generators to expand");
    std::vector<std::uint64_t> rows;
    for (const auto& g : generators) {
        if (g.num_qubits() != n) throw InvalidInput("generators act on different qubit counts");
        rows.push_back(pivot_row(g));
    }
    if (reduced_basis(rows, 2 * n).size() != k) {
        throw InvalidInput("generators are linearly dependent over GF(2)");
    }
    std::vector<PauliString> out;
    out.reserve((std::size_t{1} << k) - 1);
    // Gray-code walk: each step multiplies in one generator.
    PauliString acc(n);
    for (std::size_t i = 1; i < (std::size_t{1} << k); ++i) {
        const int flip = std::countr_zero(i);
        acc = multiply_unsigned(acc, generators[static_cast<std::size_t>(flip)]);
        out.push_back(acc);
    }
    return sorted_members(std::move(out));
}

std::vector<PauliString> extract_generators(std::span<const PauliString> members) {
    if (members.empty()) throw InvalidInput("empty family");
    const int n = members.front().num_qubits();
    std::vector<std::uint64_t> rows;
    rows.reserve(members.size());
    for (const auto& m : members) {
        if (m.num_qubits() != n) throw InvalidInput("family members act on different qubit counts");
        if (m.is_identity()) throw InvalidInput("a family must not contain the identity");
        rows.push_back(pivot_row(m));
    }
    const auto basis = reduced_basis(rows, 2 * n);
    if (static_cast<int>(basis.size()) != n) {
        throw InvalidInput("family spans a " + std::to_string(basis.size()) + "-dimensional space, expected " +
                           std::to_string(n));
    }
    std::vector<PauliString> generators;
    for (auto row : basis) generators.push_back(from_pivot_row(row, n));
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!commutes(generators[i], generators[j])) {
                throw InvalidInput("family members do not commute: " + generators[i].str() + ", " +
                                   generators[j].str());
            }
    auto expected = expand_family(generators);
    auto given = sorted_members({members.begin(), members.end()});
    if (expected != given) throw InvalidInput("family is not closed under multiplication or has duplicates");
    return generators;
}

CommutingFamily CommutingFamily::from_generators(std::vector<PauliString> generators) {
    if (generators.empty()) throw InvalidInput("a family needs at least one generator");
    const int n = generators.front().num_qubits();
    if (static_cast<int>(generators.size()) != n) {
        throw InvalidInput("a maximal family on " + std::to_string(n) + " qubits needs " + std::to_string(n) +
                           " generators");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!commutes(generators[i], generators[j])) {
                throw InvalidInput("generators do not commute: " + generators[i].str() + ", " + generators[j].str());
            }
    auto members = expand_family(generators);
    return CommutingFamily(n, std::move(generators), std::move(members));
}

CommutingFamily CommutingFamily::from_members(std::vector<PauliString> members) {
    auto generators = extract_generators(members);
    const int n = generators.front().num_qubits();
    return CommutingFamily(n, std::move(generators), sorted_members(std::move(members)));
}

bool CommutingFamily::contains(const PauliString& p) const {
    const auto key = p.lex_key();
    auto it = std::lower_bound(members_.begin(), members_.end(), key,
                               [](const PauliString& m, std::uint64_t k) { return m.lex_key() < k; });
    return it != members_.end() && *it == p;
}

std::vector<std::vector<PauliString>> partition_generators(int num_qubits) {
    check_partition_range(num_qubits);
    const int n = num_qubits;
    const std::uint32_t field_size = 1u << n;

    // trace(alpha^k) for k < 2n-1 defines every symmetric form Tr(a alpha^i alpha^j).
    std::vector<std::uint32_t> alpha_powers(static_cast<std::size_t>(2 * n - 1));
    std::uint32_t alpha = n == 1 ? 1u : 2u;
    alpha_powers[0] = 1;
    for (std::size_t k = 1; k < alpha_powers.size(); ++k) alpha_powers[k] = gf2n::multiply(alpha_powers[k - 1], alpha, n);

    struct Keyed {
        std::uint64_t key;
        std::vector<PauliString> generators;
    };
    std::vector<Keyed> families;
    families.reserve(field_size);
    for (std::uint32_t a = 0; a < field_size; ++a) {
        std::vector<std::uint32_t> form(alpha_powers.size());
        for (std::size_t k = 0; k < form.size(); ++k) form[k] = gf2n::trace(gf2n::multiply(a, alpha_powers[k], n), n);
        // Generator k: X on qubit k, Z part = column k of M_a, M_a[i][j] = form[i + j].
        std::vector<PauliString> gens;
        std::vector<std::uint32_t> zcols(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            std::uint32_t z = 0;
            for (int i = 0; i < n; ++i)
                if (form[static_cast<std::size_t>(i + k)]) z |= 1u << i;
            zcols[static_cast<std::size_t>(k)] = z;
            gens.emplace_back(n, z, 1u << k);
        }
        // Smallest member key over the span, enumerated by Gray code.
        std::uint64_t best = ~std::uint64_t{0};
        std::uint32_t zacc = 0;
        std::uint32_t xacc = 0;
        for (std::uint32_t i = 1; i < field_size; ++i) {
            const int flip = std::countr_zero(i);
            zacc ^= zcols[static_cast<std::size_t>(flip)];
            xacc ^= 1u << flip;
            best = std::min(best, PauliString(n, zacc, xacc).lex_key());
        }
        families.push_back({best, std::move(gens)});
    }
    std::sort(families.begin(), families.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

    std::vector<std::vector<PauliString>> out;
    out.reserve(field_size + 1);
    for (auto& f : families) out.push_back(std::move(f.generators));
    std::vector<PauliString> zgens;
    for (int k = 0; k < n; ++k) zgens.emplace_back(n, 1u << k, 0u);
    out.push_back(std::move(zgens));
    return out;
}

FamilyPartition generate_partition(int num_qubits) {
    FamilyPartition partition{num_qubits, {}};
    for (auto& gens : partition_generators(num_qubits)) {
        partition.families.push_back(CommutingFamily::from_generators(std::move(gens)));
    }
    return partition;
}

void validate_partition(const FamilyPartition& partition) {
    const int n = partition.num_qubits;
    check_partition_range(n);
    const std::size_t expected_families = (std::size_t{1} << n) + 1;
    if (partition.families.size() != expected_families) {
        throw InvalidInput("expected " + std::to_string(expected_families) + " families, got " +
                           std::to_string(partition.families.size()));
    }
    const std::size_t family_size = (std::size_t{1} << n) - 1;
    std::vector<bool> seen(std::size_t{1} << (2 * n), false);
    for (std::size_t i = 0; i < partition.families.size(); ++i) {
        const auto& fam = partition.families[i];
        if (fam.num_qubits() != n) throw InvalidInput("family " + std::to_string(i + 1) + " has the wrong width");
        if (fam.members().size() != family_size) {
            throw InvalidInput("family " + std::to_string(i + 1) + " has " + std::to_string(fam.members().size()) +
                               " members, expected " + std::to_string(family_size));
        }
        // Members equal the span of independent, pairwise-commuting generators,
        // so the whole family commutes.
        const auto regenerated = CommutingFamily::from_generators(fam.generators());
        if (regenerated.members() != fam.members()) {
            throw InvalidInput("family " + std::to_string(i + 1) + " members do not match its generators");
        }
        for (const auto& m : fam.members()) {
            const auto key = m.lex_key();
            if (seen[key]) throw InvalidInput("Pauli string " + m.str() + " appears in more than one family");
            seen[key] = true;
        }
    }
    const auto& last = partition.families.back();
    for (const auto& m : last.members()) {
        if (!m.is_diagonal()) throw InvalidInput("last family must be {I,Z}^n \\ I^n, found " + m.str());
    }
}

double mub_overlap_check(std::span<const CMatrix> bases) {
    if (bases.empty()) return 0.0;
    const auto dim = bases.front().rows();
    for (const auto& b : bases) {
        if (b.rows() != dim || !is_unitary(b, 1e-10)) throw InvalidInput("every basis must be a unitary of equal size");
    }
    const double target = 1.0 / static_cast<double>(dim);
    double worst = 0.0;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            const CMatrix overlaps = bases[i].adjoint() * bases[j];
            worst = std::max(worst, (overlaps.cwiseAbs2().array() - target).abs().maxCoeff());
        }
    }
    return worst;
}

}  // namespace wirecut
