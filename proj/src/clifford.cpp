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

#include "wirecut/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace {

void check_gate(const Gate& g, int n) {
    const bool a_ok = g.a >= 1 && g.a <= n;
    const bool b_ok = g.kind != GateKind::CZ || (g.b >= 1 && g.b <= n && g.b != g.a);
    if (!a_ok || !b_ok) throw InvalidInput("gate " + g.str() + " is out of range for " + std::to_string(n) + " qubits");
}

std::uint64_t index_bit(int qubit, int n) { return std::uint64_t{1} << (n - qubit); }

void apply_gate(const Gate& g, int n, CMatrix& m) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    const std::uint64_t ba = index_bit(g.a, n);
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & ba) continue;
                const auto i0 = static_cast<Eigen::Index>(i);
                const auto i1 = static_cast<Eigen::Index>(i | ba);
                const CVector lo = m.row(i0).transpose();
                const CVector hi = m.row(i1).transpose();
                m.row(i0) = (r * (lo + hi)).transpose();
                m.row(i1) = (r * (lo - hi)).transpose();
            }
            break;
        }
        case GateKind::S:
        case GateKind::Sdg: {
            const std::complex<double> ph = g.kind == GateKind::S ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
            for (std::uint64_t i = 0; i < dim; ++i)
                if (i & ba) m.row(static_cast<Eigen::Index>(i)) *= ph;
            break;
        }
        case GateKind::CZ: {
            const std::uint64_t both = ba | index_bit(g.b, n);
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & both) == both) m.row(static_cast<Eigen::Index>(i)) *= -1.0;
            break;
        }
    }
}

// Rows of P*U, with P a signed permutation.
CMatrix apply_pauli(const PauliString& p, const CMatrix& u) {
    const int n = p.num_qubits();
    const std::uint64_t xidx = qubit_mask_to_index(p.xbits(), n);
    const std::uint64_t zidx = qubit_mask_to_index(p.zbits(), n);
    const Phase base{static_cast<std::uint8_t>((4 - std::popcount(p.zbits() & p.xbits()) % 4) % 4)};
    CMatrix out(u.rows(), u.cols());
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(u.rows()); ++k) {
        const std::uint64_t target = k ^ xidx;
        Phase ph = base;
        if (std::popcount(zidx & target) & 1) ph = ph * Phase{2};
        out.row(static_cast<Eigen::Index>(target)) = ph.value() * u.row(static_cast<Eigen::Index>(k));
    }
    return out;
}

}  // namespace

std::string Gate::str() const {
    switch (kind) {
        case GateKind::H: return "H " + std::to_string(a);
        case GateKind::S: return "S " + std::to_string(a);
        case GateKind::Sdg: return "SDG " + std::to_string(a);
        case GateKind::CZ: return "CZ " + std::to_string(a) + " " + std::to_string(b);
    }
    return {};
}

std::vector<Gate> CliffordCircuit::gates() const {
    std::vector<Gate> out;
    for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

int CliffordCircuit::depth() const {
    return static_cast<int>(std::count_if(layers.begin(), layers.end(), [](const auto& l) { return !l.empty(); }));
}

std::vector<std::vector<QubitPair>> edge_color_cz(const std::vector<QubitPair>& pairs, int num_qubits) {
    std::set<QubitPair> wanted;
    for (auto [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > num_qubits || a == b) {
            throw InvalidInput("CZ pair (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid");
        }
        wanted.insert({a, b});
    }
    if (wanted.empty()) return {};
    const int m = num_qubits % 2 == 0 ? num_qubits : num_qubits + 1;
    std::vector<std::vector<QubitPair>> rounds;
    for (int r = 0; r < m - 1; ++r) {
        std::vector<QubitPair> round;
        auto add = [&](int u, int v) {
            if (u == num_qubits || v == num_qubits) return;  // dummy vertex for odd n
            QubitPair e{std::min(u, v) + 1, std::max(u, v) + 1};
            if (wanted.count(e)) round.push_back(e);
        };
        add(r, m - 1);
        for (int k = 1; k < m / 2; ++k) add((r + k) % (m - 1), (r - k + m - 1) % (m - 1));
        std::sort(round.begin(), round.end());
        if (!round.empty()) rounds.push_back(std::move(round));
    }
    // First fit in round order never needs more layers than there are rounds.
    std::vector<std::vector<QubitPair>> layers;
    std::vector<std::vector<bool>> busy;
    for (const auto& round : rounds) {
        for (const auto& e : round) {
            std::size_t l = 0;
            while (l < layers.size() && (busy[l][static_cast<std::size_t>(e.first)] || busy[l][static_cast<std::size_t>(e.second)])) ++l;
            if (l == layers.size()) {
                layers.emplace_back();
                busy.emplace_back(static_cast<std::size_t>(num_qubits) + 1, false);
            }
            layers[l].push_back(e);
            busy[l][static_cast<std::size_t>(e.first)] = true;
            busy[l][static_cast<std::size_t>(e.second)] = true;
        }
    }
    for (auto& l : layers) std::sort(l.begin(), l.end());
    return layers;
}

CliffordCircuit synthesize(const CommutingFamily& family, bool optimize_depth) {
    const int n = family.num_qubits();
    const auto& gens = family.generators();
    if (static_cast<int>(gens.size()) != n) throw InvalidInput("family must have exactly n generators");
    std::vector<std::uint32_t> xcol(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> zcol(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        xcol[static_cast<std::size_t>(c)] = gens[static_cast<std::size_t>(c)].xbits();
        zcol[static_cast<std::size_t>(c)] = gens[static_cast<std::size_t>(c)].zbits();
    }
    // Column elimination until the X block is the identity.
    for (int j = 0; j < n; ++j) {
        const std::uint32_t bit = 1u << j;
        int pivot = -1;
        for (int c = j; c < n && pivot < 0; ++c)
            if (xcol[static_cast<std::size_t>(c)] & bit) pivot = c;
        if (pivot < 0) {
            throw SynthesisFailure("X block is rank deficient after the Hadamard layer (row " + std::to_string(j + 1) + ")");
        }
        std::swap(xcol[static_cast<std::size_t>(j)], xcol[static_cast<std::size_t>(pivot)]);
        std::swap(zcol[static_cast<std::size_t>(j)], zcol[static_cast<std::size_t>(pivot)]);
        for (int c = 0; c < n; ++c) {
            if (c == j || !(xcol[static_cast<std::size_t>(c)] & bit)) continue;
            xcol[static_cast<std::size_t>(c)] ^= xcol[static_cast<std::size_t>(j)];
            zcol[static_cast<std::size_t>(c)] ^= zcol[static_cast<std::size_t>(j)];
        }
    }
    auto c_entry = [&](int row, int col) { return (zcol[static_cast<std::size_t>(col)] >> row) & 1u; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c_entry(i, j) != c_entry(j, i)) throw SynthesisFailure("C block is not symmetric");

    CliffordCircuit circuit{n, {}};
    std::vector<Gate> hadamards;
    for (int q = 1; q <= n; ++q) hadamards.push_back({GateKind::H, q, 0});
    circuit.layers.push_back(std::move(hadamards));
    std::vector<Gate> phases;
    for (int q = 1; q <= n; ++q)
        if (c_entry(q - 1, q - 1)) phases.push_back({GateKind::Sdg, q, 0});
    if (!phases.empty()) circuit.layers.push_back(std::move(phases));
    std::vector<QubitPair> pairs;
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
            if (c_entry(l - 1, m - 1)) pairs.push_back({l, m});
    if (optimize_depth) {
        for (const auto& layer : edge_color_cz(pairs, n)) {
            std::vector<Gate> gates;
            for (auto [a, b] : layer) gates.push_back({GateKind::CZ, a, b});
            circuit.layers.push_back(std::move(gates));
        }
    } else {
        for (auto [a, b] : pairs) circuit.layers.push_back({Gate{GateKind::CZ, a, b}});
    }
    return circuit;
}

std::vector<CliffordCircuit> synthesize_partition(const FamilyPartition& partition, bool optimize_depth) {
    std::vector<CliffordCircuit> out;
    for (std::size_t i = 0; i + 1 < partition.families.size(); ++i) {
        out.push_back(synthesize(partition.families[i], optimize_depth));
    }
    out.push_back(CliffordCircuit{partition.num_qubits, {}});
    return out;
}

void apply_circuit(const CliffordCircuit& circuit, CMatrix& state) {
    const int n = circuit.num_qubits;
    if (n > kMaxDenseQubits) throw ResourceLimit("dense circuits support at most 10 qubits");
    if (state.rows() != (Eigen::Index{1} << n)) throw InvalidInput("state dimension does not match the circuit");
    for (const auto& layer : circuit.layers) {
        for (const auto& g : layer) {
            check_gate(g, n);
            apply_gate(g, n, state);
        }
    }
}

CMatrix to_dense(const CliffordCircuit& circuit) {
    if (circuit.num_qubits > kMaxDenseQubits) throw ResourceLimit("dense circuits support at most 10 qubits");
    const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits;
    CMatrix u = CMatrix::Identity(dim, dim);
    apply_circuit(circuit, u);
    return u;
}

bool verify_diagonalizes(const CliffordCircuit& circuit, const CommutingFamily& family) {
    const int n = family.num_qubits();
    if (circuit.num_qubits != n) return false;
    const CMatrix u = to_dense(circuit);
    constexpr double kTol = 1e-10;
    for (const auto& p : family.members()) {
        const CMatrix pu = apply_pauli(p, u);
        // U^dagger P U = D  <=>  P U = U D for unitary U.
        auto diag_entry = [&](std::uint64_t k) {
            const auto c = static_cast<Eigen::Index>(k);
            return u.col(c).dot(pu.col(c));
        };
        const std::complex<double> s = diag_entry(0);
        const double sign = s.real() >= 0 ? 1.0 : -1.0;
        if (std::abs(s - sign) > kTol) return false;
        std::uint64_t zidx = 0;
        for (int q = 1; q <= n; ++q) {
            const std::uint64_t e = index_bit(q, n);
            if ((diag_entry(e) * sign).real() < 0) zidx |= e;
        }
        for (Eigen::Index k = 0; k < u.cols(); ++k) {
            const double d = (std::popcount(zidx & static_cast<std::uint64_t>(k)) & 1) ? -sign : sign;
            if ((pu.col(k) - d * u.col(k)).cwiseAbs().maxCoeff() > kTol) return false;
        }
    }
    return true;
}

PauliString symplectic_conjugate(const Gate& gate, const PauliString& p) {
    const int n = p.num_qubits();
    check_gate(gate, n);
    std::uint32_t z = p.zbits();
    std::uint32_t x = p.xbits();
    const std::uint32_t ma = 1u << (gate.a - 1);
    switch (gate.kind) {
        case GateKind::H: {
            const std::uint32_t zi = z & ma;
            const std::uint32_t xi = x & ma;
            z = (z & ~ma) | xi;
            x = (x & ~ma) | zi;
            break;
        }
        case GateKind::S:
        case GateKind::Sdg:
            if (x & ma) z ^= ma;
            break;
        case GateKind::CZ: {
            const std::uint32_t mb = 1u << (gate.b - 1);
            if (x & mb) z ^= ma;
            if (x & ma) z ^= mb;
            break;
        }
    }
    return PauliString(n, z, x);
}

PauliString symplectic_conjugate(const CliffordCircuit& circuit, const PauliString& p) {
    if (circuit.num_qubits != p.num_qubits()) throw InvalidInput("circuit and Pauli string widths differ");
    // U^dagger P U peels gates off from the last one in time.
    PauliString out = p;
    for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend(); ++layer)
        for (auto g = layer->rbegin(); g != layer->rend(); ++g) out = symplectic_conjugate(*g, out);
    return out;
}

bool verify_diagonalizes_symplectic(const CliffordCircuit& circuit, const CommutingFamily& family) {
    if (circuit.num_qubits != family.num_qubits()) return false;
    for (const auto& p : family.members())
        if (!symplectic_conjugate(circuit, p).is_diagonal()) return false;
    return true;
}

GateStats gate_stats(const CliffordCircuit& circuit) {
    GateStats s;
    for (const auto& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::H: ++s.n_h; break;
            case GateKind::S:
            case GateKind::Sdg: ++s.n_s; break;
            case GateKind::CZ: ++s.n_cz; break;
        }
    }
    s.depth = circuit.depth();
    return s;
}

CliffordCircuit layer_asap(int num_qubits, const std::vector<Gate>& gates) {
    CliffordCircuit c{num_qubits, {}};
    std::vector<int> next_free(static_cast<std::size_t>(num_qubits) + 1, 0);
    for (const auto& g : gates) {
        check_gate(g, num_qubits);
        int layer = next_free[static_cast<std::size_t>(g.a)];
        if (g.kind == GateKind::CZ) layer = std::max(layer, next_free[static_cast<std::size_t>(g.b)]);
        if (layer == static_cast<int>(c.layers.size())) c.layers.emplace_back();
        c.layers[static_cast<std::size_t>(layer)].push_back(g);
        next_free[static_cast<std::size_t>(g.a)] = layer + 1;
        if (g.kind == GateKind::CZ) next_free[static_cast<std::size_t>(g.b)] = layer + 1;
    }
    return c;
}

CliffordCircuit parse_circuit(std::string_view text, int num_qubits) {
    std::vector<std::vector<Gate>> layers(1);
    bool ticked = false;
    int max_qubit = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tok(line);
        std::string name;
        if (!(tok >> name)) continue;
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
        auto fail = [&](const std::string& why) {
            throw InvalidInput("circuit line " + std::to_string(lineno) + ": " + why);
        };
        if (name == "TICK") {
            ticked = true;
            layers.emplace_back();
            continue;
        }
        Gate g;
        if (name == "H") g.kind = GateKind::H;
        else if (name == "S") g.kind = GateKind::S;
        else if (name == "SDG") g.kind = GateKind::Sdg;
        else if (name == "CZ") g.kind = GateKind::CZ;
        else fail("unknown gate '" + name + "'");
        if (!(tok >> g.a)) fail("missing qubit index");
        if (g.kind == GateKind::CZ && !(tok >> g.b)) fail("CZ needs two qubits");
        std::string extra;
        if (tok >> extra) fail("trailing text '" + extra + "'");
        if (g.a < 1 || (g.kind == GateKind::CZ && (g.b < 1 || g.b == g.a))) fail("bad qubit index");
        max_qubit = std::max({max_qubit, g.a, g.b});
        layers.back().push_back(g);
    }
    const int n = num_qubits > 0 ? num_qubits : max_qubit;
    if (max_qubit > n) throw InvalidInput("circuit uses qubit " + std::to_string(max_qubit) + " beyond width " + std::to_string(n));
    if (!ticked) return layer_asap(n, layers.front());
    CliffordCircuit c{n, {}};
    for (auto& layer : layers) {
        if (layer.empty()) continue;
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (const auto& g : layer) {
            for (int q : {g.a, g.b}) {
                if (q == 0) continue;
                if (used[static_cast<std::size_t>(q)]) throw InvalidInput("qubit " + std::to_string(q) + " used twice in one layer");
                used[static_cast<std::size_t>(q)] = true;
            }
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

std::string format_circuit(const CliffordCircuit& circuit) {
    std::string out;
    for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
        if (l > 0) out += "TICK\n";
        for (const auto& g : circuit.layers[l]) out += g.str() + "\n";
    }
    return out;
}

}  // namespace wirecut
