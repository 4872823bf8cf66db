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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wirecut/dense.hpp"
#include "wirecut/families.hpp"
#include "wirecut/pauli.hpp"

namespace wirecut {

enum class GateKind { H, S, Sdg, CZ };

/// One gate; qubits are 1-based, `b` is used by CZ only.
struct Gate {
    GateKind kind = GateKind::H;
    int a = 1;
    int b = 0;

    std::string str() const;
    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates grouped into layers of qubit-disjoint gates, applied in time order.
struct CliffordCircuit {
    int num_qubits = 0;
    std::vector<std::vector<Gate>> layers;

    std::vector<Gate> gates() const;
    int depth() const;
    friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;
};

struct GateStats {
    int n_h = 0;
    int n_s = 0;  // S and S-dagger together
    int n_cz = 0;
    int depth = 0;

    friend bool operator==(const GateStats&, const GateStats&) = default;
};

using QubitPair = std::pair<int, int>;

/// Algorithm 1: H on every qubit, S-dagger where C_kk = 1, CZ where C_lm = 1.
/// With optimize_depth the CZ gates follow a proper edge coloring of K_n,
/// otherwise they are emitted one per layer.
CliffordCircuit synthesize(const CommutingFamily& family, bool optimize_depth = true);

/// Circuits for every family of a partition; the final Z-family gets the
/// empty circuit.
std::vector<CliffordCircuit> synthesize_partition(const FamilyPartition& partition, bool optimize_depth = true);

/// Dense check that U^dagger P U = +-D with D in {I,Z}^n for every member.
bool verify_diagonalizes(const CliffordCircuit& circuit, const CommutingFamily& family);

/// Same check on binary vectors only (signs not tracked).
bool verify_diagonalizes_symplectic(const CliffordCircuit& circuit, const CommutingFamily& family);

/// Action of a single gate on a binary vector: H swaps (z_i, x_i), S and
/// S-dagger add x_i to z_i, CZ(i,j) adds x_j to z_i and x_i to z_j.
PauliString symplectic_conjugate(const Gate& gate, const PauliString& p);

/// Binary vector of U^dagger P U for the whole circuit.
PauliString symplectic_conjugate(const CliffordCircuit& circuit, const PauliString& p);

/// Round-robin coloring of K_n restricted to `pairs`, then greedy layer compaction.
std::vector<std::vector<QubitPair>> edge_color_cz(const std::vector<QubitPair>& pairs, int num_qubits);

GateStats gate_stats(const CliffordCircuit& circuit);

/// Dense unitary of the circuit (qubit 1 is the most significant index bit).
CMatrix to_dense(const CliffordCircuit& circuit);

/// Applies the circuit to the columns of `state` in place.
void apply_circuit(const CliffordCircuit& circuit, CMatrix& state);

/// Parses one gate per line ("H 1", "S 2", "SDG 3", "CZ 1 2"). "TICK" lines
/// close a layer; without any TICK the gates are layered as early as possible.
/// Blank lines and text after '#' are ignored. A non-positive num_qubits is
/// inferred from the largest qubit index.
CliffordCircuit parse_circuit(std::string_view text, int num_qubits = 0);
std::string format_circuit(const CliffordCircuit& circuit);

/// Places gates into the earliest layer after every gate they share a qubit with.
CliffordCircuit layer_asap(int num_qubits, const std::vector<Gate>& gates);

}  // namespace wirecut
