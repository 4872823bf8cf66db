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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wirecut/dense.hpp"
#include "wirecut/pauli.hpp"

namespace wirecut {

inline constexpr int kMaxPartitionQubits = 12;

/// A maximal set of 2^n - 1 mutually commuting non-identity Pauli strings,
/// stored with a canonical GF(2) generator basis. Members are sorted by
/// PauliString::lex_key and carry no sign.
class CommutingFamily {
  public:
    static CommutingFamily from_generators(std::vector<PauliString> generators);
    static CommutingFamily from_members(std::vector<PauliString> members);

    int num_qubits() const { return num_qubits_; }
    const std::vector<PauliString>& generators() const { return generators_; }
    const std::vector<PauliString>& members() const { return members_; }
    bool contains(const PauliString& p) const;
    /// Smallest member under lexicographic order of the binary vector.
    const PauliString& min_member() const { return members_.front(); }

  private:
    CommutingFamily(int n, std::vector<PauliString> generators, std::vector<PauliString> members)
        : num_qubits_(n), generators_(std::move(generators)), members_(std::move(members)) {}

    int num_qubits_ = 0;
    std::vector<PauliString> generators_;
    std::vector<PauliString> members_;
};

/// 2^n + 1 pairwise disjoint families covering every non-identity string,
/// with {I,Z}^n \ I^n last.
struct FamilyPartition {
    int num_qubits = 0;
    std::vector<CommutingFamily> families;
};

/// All 2^n - 1 non-identity products of the generators, signs dropped.
std::vector<PauliString> expand_family(std::span<const PauliString> generators);

/// Canonical basis of span(members): reduced echelon form with pivot priority
/// x_1..x_n, z_1..z_n. A family with a full-rank X block therefore yields
/// generators whose X parts are e_1..e_n.
std::vector<PauliString> extract_generators(std::span<const PauliString> members);

/// Generator lists of every family (Z-family last) without materializing
/// members. Used where n is too large to expand 4^n strings cheaply.
std::vector<std::vector<PauliString>> partition_generators(int num_qubits);

FamilyPartition generate_partition(int num_qubits);

/// Throws InvalidInput describing the first violated partition condition.
void validate_partition(const FamilyPartition& partition);

/// Maximum over pairs of distinct bases and basis vectors of
/// | |<a_i|b_j>|^2 - 2^-n |. Columns of each matrix are the basis vectors.
double mub_overlap_check(std::span<const CMatrix> bases);

namespace gf2n {

/// Fixed primitive polynomial of degree n (bit k = coefficient of x^k).
std::uint32_t modulus(int degree);
std::uint32_t multiply(std::uint32_t a, std::uint32_t b, int degree);
/// Absolute trace to GF(2): a + a^2 + ... + a^{2^{n-1}}.
std::uint32_t trace(std::uint32_t a, int degree);

}  // namespace gf2n

}  // namespace wirecut
