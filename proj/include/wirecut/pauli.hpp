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

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wirecut/dense.hpp"

namespace wirecut {

inline constexpr int kMaxSymplecticQubits = 16;
inline constexpr int kMaxDenseQubits = 10;

/// An n-qubit Hermitian Pauli string in binary-symplectic form.
///
/// The string (z, x) denotes (-i)^{z.x} Z^{z_1}X^{x_1} (x) ... (x) Z^{z_n}X^{x_n},
/// which is always one of the sign-free operators {I,X,Y,Z}^{(x)n}. Qubit q
/// (1-based) is stored at bit q-1 of both masks.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int num_qubits);
    PauliString(int num_qubits, std::uint32_t zbits, std::uint32_t xbits);

    /// Parses "XZI"-style text; leftmost letter is qubit 1.
    static PauliString from_string(std::string_view text);

    int num_qubits() const { return num_qubits_; }
    std::uint32_t zbits() const { return zbits_; }
    std::uint32_t xbits() const { return xbits_; }
    bool z(int qubit) const { return (zbits_ >> (qubit - 1)) & 1u; }
    bool x(int qubit) const { return (xbits_ >> (qubit - 1)) & 1u; }
    bool is_identity() const { return (zbits_ | xbits_) == 0; }
    bool is_diagonal() const { return xbits_ == 0; }
    int weight() const { return std::popcount(zbits_ | xbits_); }

    std::string str() const;

    /// Packed 2n-bit key: bit (2n-1-k) holds element k of (z_1..z_n, x_1..x_n),
    /// so integer order equals lexicographic order of the binary vector.
    std::uint64_t lex_key() const;

    friend auto operator<=>(const PauliString&, const PauliString&) = default;

  private:
    std::uint8_t num_qubits_ = 0;
    std::uint32_t zbits_ = 0;
    std::uint32_t xbits_ = 0;
};

/// Fourth root of unity i^k, stored as k mod 4.
struct Phase {
    std::uint8_t power = 0;

    std::complex<double> value() const;
    friend Phase operator*(Phase a, Phase b) { return Phase{static_cast<std::uint8_t>((a.power + b.power) & 3u)}; }
    friend bool operator==(Phase, Phase) = default;
};

struct PhasedPauli {
    Phase phase;
    PauliString pauli;

    std::string str() const;
    friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

PauliString phi(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> phi_inv(const PauliString& p);

bool commutes(const PauliString& a, const PauliString& b);
PhasedPauli multiply(const PauliString& a, const PauliString& b);
/// Product ignoring phase; the binary vectors add over GF(2).
PauliString multiply_unsigned(const PauliString& a, const PauliString& b);

/// Basis-index mask of the given qubit mask (qubit 1 is the most significant bit).
std::uint64_t qubit_mask_to_index(std::uint32_t mask, int num_qubits);

CMatrix to_dense(const PauliString& p);

/// Every Pauli string on n qubits, in base-4 order (I,X,Y,Z per qubit,
/// qubit 1 most significant). Index 0 is the identity.
std::vector<PauliString> all_pauli_strings(int num_qubits);
std::size_t pauli_index(const PauliString& p);

/// Tr[P X] for every Pauli P, in all_pauli_strings order. Uses the monomial
/// structure of P so the cost is O(4^n 2^n).
CVector pauli_traces(const CMatrix& m, int num_qubits);

}  // namespace wirecut
