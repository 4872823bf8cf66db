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

#include "wirecut/pauli.hpp"

#include <array>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace {

void check_qubits(int n) {
    if (n < 0 || n > kMaxSymplecticQubits) {
        throw ResourceLimit("Pauli strings support at most " + std::to_string(kMaxSymplecticQubits) +
                            " qubits, got " + std::to_string(n));
    }
}

void check_same_width(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InvalidInput("Pauli strings act on different qubit counts: " + a.str() + " vs " + b.str());
    }
}

constexpr std::array<char, 4> kLetters{'I', 'X', 'Z', 'Y'};  // indexed by x + 2z

}  // namespace

PauliString::PauliString(int num_qubits) : PauliString(num_qubits, 0, 0) {}

PauliString::PauliString(int num_qubits, std::uint32_t zbits, std::uint32_t xbits)
    : num_qubits_(static_cast<std::uint8_t>(num_qubits)), zbits_(zbits), xbits_(xbits) {
    check_qubits(num_qubits);
    const std::uint32_t mask = num_qubits == 32 ? ~0u : ((1u << num_qubits) - 1u);
    if ((zbits & ~mask) != 0 || (xbits & ~mask) != 0) {
        throw InvalidInput("Pauli bit masks exceed the qubit count");
    }
}

PauliString PauliString::from_string(std::string_view text) {
    const int n = static_cast<int>(text.size());
    check_qubits(n);
    std::uint32_t z = 0;
    std::uint32_t x = 0;
    for (int q = 0; q < n; ++q) {
        switch (text[static_cast<std::size_t>(q)]) {
            case 'I': break;
            case 'X': x |= 1u << q; break;
            case 'Y': x |= 1u << q; z |= 1u << q; break;
            case 'Z': z |= 1u << q; break;
            default: throw InvalidInput("invalid Pauli letter in '" + std::string(text) + "'");
        }
    }
    return PauliString(n, z, x);
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(num_qubits_);
    for (int q = 0; q < num_qubits_; ++q) {
        out.push_back(kLetters[((xbits_ >> q) & 1u) + 2 * ((zbits_ >> q) & 1u)]);
    }
    return out;
}

std::uint64_t PauliString::lex_key() const {
    const int n = num_qubits_;
    std::uint64_t key = 0;
    for (int q = 0; q < n; ++q) {
        key |= static_cast<std::uint64_t>((zbits_ >> q) & 1u) << (2 * n - 1 - q);
        key |= static_cast<std::uint64_t>((xbits_ >> q) & 1u) << (n - 1 - q);
    }
    return key;
}

std::complex<double> Phase::value() const {
    switch (power & 3u) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::string PhasedPauli::str() const {
    static constexpr std::array<const char*, 4> prefix{"+", "+i", "-", "-i"};
    return prefix[phase.power & 3u] + pauli.str();
}

PauliString phi(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) {
        throw InvalidInput("binary vector length must be even, got " + std::to_string(bits.size()));
    }
    const int n = static_cast<int>(bits.size() / 2);
    check_qubits(n);
    std::uint32_t z = 0;
    std::uint32_t x = 0;
    for (int q = 0; q < n; ++q) {
        if (bits[static_cast<std::size_t>(q)] > 1 || bits[static_cast<std::size_t>(n + q)] > 1) {
            throw InvalidInput("binary vector entries must be 0 or 1");
        }
        z |= static_cast<std::uint32_t>(bits[static_cast<std::size_t>(q)]) << q;
        x |= static_cast<std::uint32_t>(bits[static_cast<std::size_t>(n + q)]) << q;
    }
    return PauliString(n, z, x);
}

std::vector<std::uint8_t> phi_inv(const PauliString& p) {
    const int n = p.num_qubits();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * n));
    for (int q = 0; q < n; ++q) {
        bits[static_cast<std::size_t>(q)] = (p.zbits() >> q) & 1u;
        bits[static_cast<std::size_t>(n + q)] = (p.xbits() >> q) & 1u;
    }
    return bits;
}

bool commutes(const PauliString& a, const PauliString& b) {
    check_same_width(a, b);
    const int form = std::popcount(a.zbits() & b.xbits()) + std::popcount(b.zbits() & a.xbits());
    return form % 2 == 0;
}

PhasedPauli multiply(const PauliString& a, const PauliString& b) {
    check_same_width(a, b);
    const PauliString w = multiply_unsigned(a, b);
    // phi(a) phi(b) = i^k phi(a xor b) with
    // k = |w_z & w_x| - |a_z & a_x| - |b_z & b_x| + 2 |a_x & b_z|.
    const int k = std::popcount(w.zbits() & w.xbits()) - std::popcount(a.zbits() & a.xbits()) -
                  std::popcount(b.zbits() & b.xbits()) + 2 * std::popcount(a.xbits() & b.zbits());
    return PhasedPauli{Phase{static_cast<std::uint8_t>(((k % 4) + 4) % 4)}, w};
}

PauliString multiply_unsigned(const PauliString& a, const PauliString& b) {
    check_same_width(a, b);
    return PauliString(a.num_qubits(), a.zbits() ^ b.zbits(), a.xbits() ^ b.xbits());
}

std::uint64_t qubit_mask_to_index(std::uint32_t mask, int num_qubits) {
    std::uint64_t out = 0;
    for (int q = 0; q < num_qubits; ++q) {
        if ((mask >> q) & 1u) out |= std::uint64_t{1} << (num_qubits - 1 - q);
    }
    return out;
}

namespace {

// Entry of phi(b) at (col ^ x, col), given index-space masks.
std::complex<double> monomial_entry(std::uint64_t zidx, std::uint64_t col_flipped, Phase base) {
    const bool negative = std::popcount(zidx & col_flipped) % 2 == 1;
    const auto v = base.value();
    return negative ? -v : v;
}

Phase base_phase(const PauliString& p) {
    // (-i)^{z.x} = i^{3 z.x}
    return Phase{static_cast<std::uint8_t>((3 * std::popcount(p.zbits() & p.xbits())) & 3)};
}

}  // namespace

CMatrix to_dense(const PauliString& p) {
    const int n = p.num_qubits();
    if (n > kMaxDenseQubits) {
        throw ResourceLimit("dense Pauli matrices are limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t xidx = qubit_mask_to_index(p.xbits(), n);
    const std::uint64_t zidx = qubit_mask_to_index(p.zbits(), n);
    const Phase base = base_phase(p);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const std::uint64_t row = col ^ xidx;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = monomial_entry(zidx, row, base);
    }
    return m;
}

std::vector<PauliString> all_pauli_strings(int num_qubits) {
    check_qubits(num_qubits);
    if (num_qubits > kMaxDenseQubits) throw ResourceLimit("Pauli enumeration limited to 10 qubits");
    const std::size_t count = std::size_t{1} << (2 * num_qubits);
    std::vector<PauliString> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::uint32_t z = 0;
        std::uint32_t x = 0;
        for (int q = 0; q < num_qubits; ++q) {
            const auto digit = (k >> (2 * (num_qubits - 1 - q))) & 3u;  // 0=I 1=X 2=Y 3=Z
            if (digit == 1 || digit == 2) x |= 1u << q;
            if (digit == 2 || digit == 3) z |= 1u << q;
        }
        out.emplace_back(num_qubits, z, x);
    }
    return out;
}

std::size_t pauli_index(const PauliString& p) {
    const int n = p.num_qubits();
    std::size_t k = 0;
    for (int q = 0; q < n; ++q) {
        const unsigned zq = (p.zbits() >> q) & 1u;
        const unsigned xq = (p.xbits() >> q) & 1u;
        const unsigned digit = zq ? (xq ? 2u : 3u) : (xq ? 1u : 0u);
        k = k * 4 + digit;
    }
    return k;
}

CVector pauli_traces(const CMatrix& m, int num_qubits) {
    const auto paulis = all_pauli_strings(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (static_cast<std::uint64_t>(m.rows()) != dim || m.rows() != m.cols()) {
        throw InvalidInput("matrix shape does not match the qubit count");
    }
    CVector out(static_cast<Eigen::Index>(paulis.size()));
    for (std::size_t k = 0; k < paulis.size(); ++k) {
        const auto& p = paulis[k];
        const std::uint64_t xidx = qubit_mask_to_index(p.xbits(), num_qubits);
        const std::uint64_t zidx = qubit_mask_to_index(p.zbits(), num_qubits);
        const Phase base = base_phase(p);
        std::complex<double> acc = 0;
        for (std::uint64_t col = 0; col < dim; ++col) {
            const std::uint64_t row = col ^ xidx;
            acc += monomial_entry(zidx, row, base) * m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row));
        }
        out(static_cast<Eigen::Index>(k)) = acc;
    }
    return out;
}

}  // namespace wirecut
