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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wirecut/clifford.hpp"
#include "wirecut/dense.hpp"
#include "wirecut/families.hpp"

namespace wirecut {

using Weight = boost::rational<std::int64_t>;

inline double to_double(const Weight& w) { return boost::rational_cast<double>(w); }

inline constexpr double kChannelTolerance = 1e-10;
inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-8;
inline constexpr int kMaxPtmQubits = 6;

/// One outcome of a measure-and-prepare channel: a * Tr[effect (.)] prep.
struct MPTerm {
    int a = 1;
    CMatrix effect;
    CMatrix prep;
};

/// Measure-and-prepare channel sum_mu a_mu Tr[E_mu (.)] rho_mu. The effects
/// form a POVM and every prep is a density matrix; both are checked on
/// construction.
class MPChannel {
  public:
    MPChannel(int num_qubits, std::vector<MPTerm> terms);

    int num_qubits() const { return num_qubits_; }
    const std::vector<MPTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Applies the channel to a density matrix.
    CMatrix apply(const CMatrix& rho) const;

  private:
    int num_qubits_ = 0;
    std::vector<MPTerm> terms_;
};

struct WeightedChannel {
    Weight c;
    MPChannel channel;
};

/// sum_i c_i E_i approximating the n-qubit identity channel.
struct Decomposition {
    std::string label;
    int num_qubits = 0;
    std::vector<WeightedChannel> channels;

    Weight gamma() const;
    std::size_t m() const { return channels.size(); }
};

/// Real 4^n x 4^n matrix in the normalized Pauli basis, ordered as all_pauli_strings.
struct TransferMatrix {
    int num_qubits = 0;
    RMatrix entries;
};

TransferMatrix ptm(const MPChannel& channel);
/// sum_i c_i PTM(E_i)
TransferMatrix ptm(const Decomposition& d);
TransferMatrix identity_ptm(int num_qubits);
/// Transfer matrix of the k-fold tensor power (Kronecker power in the Pauli basis).
TransferMatrix kron_power(const TransferMatrix& t, int k);

/// max-abs entry of PTM(d) - I.
double verify_decomposition(const Decomposition& d);
double residual(const TransferMatrix& t);

/// ceil((rank - 1) / (2^n - 1)), at least 1, rank taken at tolerance 1e-8.
int numerical_rank(const TransferMatrix& t);
int rank_bound_check(const TransferMatrix& target);

Decomposition build_peng_1q();
Decomposition build_optimal_1q();

/// Uses the given partition and circuits; circuits[i] must diagonalize family i
/// for i < 2^n (the Z-family circuit, if present, is ignored).
Decomposition build_mub_nq(int num_qubits, const FamilyPartition& partition, const std::vector<CliffordCircuit>& circuits);
/// Generates the partition and circuits internally.
Decomposition build_mub_nq(int num_qubits);

struct WeightedUnitary {
    CMatrix unitary;
    Weight probability;
};

/// Throws DesignViolation when the set is not a unitary 2-design.
Decomposition build_randomized_nq(int num_qubits, const std::vector<WeightedUnitary>& unitary_set);
/// Uniform weights over the Clifford group (n <= 2).
Decomposition build_randomized_nq(int num_qubits);

Decomposition build_teleport_nq(int num_qubits);

/// The n-qubit Clifford group modulo global phase, found by closure over H, S and CZ.
/// 24 elements for n = 1, 11520 for n = 2.
std::vector<CMatrix> clifford_group(int num_qubits);

MPChannel tensor_product(const MPChannel& a, const MPChannel& b);
Decomposition tensor_product(const Decomposition& a, const Decomposition& b);
Decomposition tensor_power(const Decomposition& d, int k);

/// Builder by label: peng, optimal1q (tensor powers for n > 1), mub,
/// randomized, teleport.
Decomposition build_decomposition(std::string_view method, int num_qubits);

/// Decomposition with the weights given, useful for probing verification.
Decomposition with_weight(Decomposition d, std::size_t index, Weight c);

}  // namespace wirecut
