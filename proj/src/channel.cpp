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

#include "wirecut/channel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace {

Eigen::Index dim_of(int n) { return Eigen::Index{1} << n; }

void check_ptm_size(int n) {
    if (n < 1 || n > kMaxPtmQubits) {
        throw ResourceLimit("transfer matrices support 1 <= n <= 6, got n=" + std::to_string(n));
    }
}

CMatrix ket_projector(const CVector& v) { return v * v.adjoint(); }

// Rounded, phase-normalized entries used as a hash key for unitaries modulo phase.
std::vector<long long> phase_free_key(const CMatrix& u) {
    std::complex<double> ref = 1.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (std::abs(u.data()[i]) > 1e-6) {
            ref = std::conj(u.data()[i]) / std::abs(u.data()[i]);
            break;
        }
    }
    std::vector<long long> key;
    key.reserve(static_cast<std::size_t>(2 * u.size()));
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const auto z = u.data()[i] * ref;
        key.push_back(std::llround(z.real() * 1e6));
        key.push_back(std::llround(z.imag() * 1e6));
    }
    return key;
}

CMatrix embed_1q(const CMatrix& g, int qubit, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 1; q <= n; ++q) out = kron(out, q == qubit ? g : CMatrix::Identity(2, 2)).eval();
    return out;
}

CMatrix pauli_correction(std::uint32_t abits, std::uint32_t bbits, int n) {
    // V_mu = (x)_l Z^{a_l} X^{b_l}, qubit 1 leftmost.
    CMatrix out = CMatrix::Identity(1, 1);
    for (int l = 0; l < n; ++l) {
        CMatrix v = CMatrix::Identity(2, 2);
        if ((bbits >> l) & 1u) v = gates::pauli_x();
        if ((abits >> l) & 1u) v = (gates::pauli_z() * v).eval();
        out = kron(out, v).eval();
    }
    return out;
}

}  // namespace

MPChannel::MPChannel(int num_qubits, std::vector<MPTerm> terms) : num_qubits_(num_qubits), terms_(std::move(terms)) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) throw ResourceLimit("channel width out of range");
    if (terms_.empty()) throw InvalidInput("a channel needs at least one term");
    const Eigen::Index d = dim_of(num_qubits);
    CMatrix total = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        const std::string where = "term " + std::to_string(k) + ": ";
        if (t.a != 1 && t.a != -1) throw InvalidInput(where + "coefficient a must be +1 or -1");
        if (t.effect.rows() != d || t.effect.cols() != d || t.prep.rows() != d || t.prep.cols() != d) {
            throw InvalidInput(where + "matrix shape does not match the channel width");
        }
        if (!is_hermitian(t.effect, kChannelTolerance) || min_eigenvalue(t.effect) < -kChannelTolerance) {
            throw InvalidInput(where + "effect is not positive semidefinite");
        }
        if (!is_hermitian(t.prep, kChannelTolerance) || min_eigenvalue(t.prep) < -kChannelTolerance ||
            std::abs(t.prep.trace() - 1.0) > kChannelTolerance) {
            throw InvalidInput(where + "prep is not a density matrix");
        }
        total += t.effect;
    }
    if ((total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kChannelTolerance) {
        throw InvalidInput("effects do not sum to the identity");
    }
}

CMatrix MPChannel::apply(const CMatrix& rho) const {
    const Eigen::Index d = dim_of(num_qubits_);
    CMatrix out = CMatrix::Zero(d, d);
    for (const auto& t : terms_) out += static_cast<double>(t.a) * (t.effect * rho).trace() * t.prep;
    return out;
}

Weight Decomposition::gamma() const {
    Weight g = 0;
    for (const auto& ch : channels) g += boost::abs(ch.c);
    return g;
}

TransferMatrix ptm(const MPChannel& channel) {
    const int n = channel.num_qubits();
    check_ptm_size(n);
    const auto count = static_cast<Eigen::Index>(channel.size());
    const Eigen::Index d2 = Eigen::Index{1} << (2 * n);
    CMatrix prep_traces(d2, count);
    CMatrix effect_traces(d2, count);
    for (Eigen::Index mu = 0; mu < count; ++mu) {
        const auto& t = channel.terms()[static_cast<std::size_t>(mu)];
        prep_traces.col(mu) = pauli_traces(t.prep, n);
        effect_traces.col(mu) = static_cast<double>(t.a) * pauli_traces(t.effect, n);
    }
    // S_kl = Tr[P_k Lambda(P_l)] / d
    const CMatrix s = prep_traces * effect_traces.transpose() / static_cast<double>(dim_of(n));
    return {n, s.real()};
}

TransferMatrix ptm(const Decomposition& d) {
    check_ptm_size(d.num_qubits);
    const Eigen::Index d2 = Eigen::Index{1} << (2 * d.num_qubits);
    RMatrix sum = RMatrix::Zero(d2, d2);
    for (const auto& ch : d.channels) sum += to_double(ch.c) * ptm(ch.channel).entries;
    return {d.num_qubits, sum};
}

TransferMatrix identity_ptm(int num_qubits) {
    check_ptm_size(num_qubits);
    const Eigen::Index d2 = Eigen::Index{1} << (2 * num_qubits);
    return {num_qubits, RMatrix::Identity(d2, d2)};
}

TransferMatrix kron_power(const TransferMatrix& t, int k) {
    if (k < 1) throw InvalidInput("Kronecker power needs k >= 1");
    check_ptm_size(t.num_qubits * k);
    RMatrix out = t.entries;
    for (int i = 1; i < k; ++i) out = kron(out, t.entries).eval();
    return {t.num_qubits * k, out};
}

double residual(const TransferMatrix& t) {
    return (t.entries - RMatrix::Identity(t.entries.rows(), t.entries.cols())).cwiseAbs().maxCoeff();
}

double verify_decomposition(const Decomposition& d) { return residual(ptm(d)); }

int numerical_rank(const TransferMatrix& t) {
    Eigen::BDCSVD<RMatrix> svd(t.entries);
    const auto& s = svd.singularValues();
    return static_cast<int>((s.array() > kRankTolerance).count());
}

int rank_bound_check(const TransferMatrix& target) {
    const int rank = numerical_rank(target);
    const int denom = (1 << target.num_qubits) - 1;
    return std::max(1, (rank - 1 + denom - 1) / denom);
}

Decomposition build_peng_1q() {
    const CVector k0 = basis_ket<double>(2, 0);
    const CVector k1 = basis_ket<double>(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    const CVector plus = r * (k0 + k1);
    const CVector minus = r * (k0 - k1);
    const std::complex<double> i(0, 1);
    const CVector plus_i = r * (k0 + i * k1);
    const CVector minus_i = r * (k0 - i * k1);
    struct Row {
        Weight c;
        int a1;
        const CVector* e0;
        const CVector* e1;
        const CVector* p0;
        const CVector* p1;
    };
    const std::vector<Row> table{
        {Weight(1, 2), 1, &k0, &k1, &k0, &k0},
        {Weight(1, 2), 1, &k0, &k1, &k1, &k1},
        {Weight(1, 2), -1, &plus, &minus, &plus, &plus},
        {Weight(-1, 2), -1, &plus, &minus, &minus, &minus},
        {Weight(1, 2), -1, &plus_i, &minus_i, &plus_i, &plus_i},
        {Weight(-1, 2), -1, &plus_i, &minus_i, &minus_i, &minus_i},
        {Weight(1, 2), -1, &k0, &k1, &k0, &k0},
        {Weight(-1, 2), -1, &k0, &k1, &k1, &k1},
    };
    Decomposition d{"peng", 1, {}};
    for (const auto& row : table) {
        std::vector<MPTerm> terms{{1, ket_projector(*row.e0), ket_projector(*row.p0)},
                                  {row.a1, ket_projector(*row.e1), ket_projector(*row.p1)}};
        d.channels.push_back({row.c, MPChannel(1, std::move(terms))});
    }
    return d;
}

Decomposition build_optimal_1q() {
    const CVector k0 = basis_ket<double>(2, 0);
    const CVector k1 = basis_ket<double>(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    const std::complex<double> i(0, 1);
    const std::vector<std::pair<CVector, CVector>> bases{
        {r * (k0 + k1), r * (k0 - k1)},
        {r * (k0 + i * k1), r * (k0 - i * k1)},
    };
    Decomposition d{"optimal1q", 1, {}};
    for (const auto& [b0, b1] : bases) {
        std::vector<MPTerm> terms{{1, ket_projector(b0), ket_projector(b0)}, {1, ket_projector(b1), ket_projector(b1)}};
        d.channels.push_back({Weight(1), MPChannel(1, std::move(terms))});
    }
    std::vector<MPTerm> flip{{1, ket_projector(k0), ket_projector(k1)}, {1, ket_projector(k1), ket_projector(k0)}};
    d.channels.push_back({Weight(-1), MPChannel(1, std::move(flip))});
    return d;
}

Decomposition build_mub_nq(int num_qubits, const FamilyPartition& partition, const std::vector<CliffordCircuit>& circuits) {
    const int n = num_qubits;
    check_ptm_size(n);
    const Eigen::Index d = dim_of(n);
    const std::size_t count = std::size_t{1} << n;
    if (partition.num_qubits != n || partition.families.size() != count + 1) {
        throw InvalidInput("partition does not match n=" + std::to_string(n));
    }
    if (circuits.size() < count) throw InvalidInput("need one circuit per non-Z family");
    Decomposition out{"mub", n, {}};
    for (std::size_t i = 0; i < count; ++i) {
        if (!verify_diagonalizes(circuits[i], partition.families[i])) {
            throw InvalidInput("circuit " + std::to_string(i + 1) + " does not diagonalize its family");
        }
        const CMatrix u = to_dense(circuits[i]);
        std::vector<MPTerm> terms;
        for (Eigen::Index j = 0; j < d; ++j) {
            const CMatrix proj = ket_projector(u.col(j));
            terms.push_back({1, proj, proj});
        }
        out.channels.push_back({Weight(1), MPChannel(n, std::move(terms))});
    }
    std::vector<MPTerm> terms;
    for (Eigen::Index j = 0; j < d; ++j) {
        const CMatrix proj = ket_projector(basis_ket<double>(static_cast<std::size_t>(d), static_cast<std::size_t>(j)));
        const CMatrix rho_j = (CMatrix::Identity(d, d) - proj) / static_cast<double>(d - 1);
        terms.push_back({1, proj, rho_j});
    }
    out.channels.push_back({Weight(-(d - 1)), MPChannel(n, std::move(terms))});
    return out;
}

Decomposition build_mub_nq(int num_qubits) {
    check_ptm_size(num_qubits);
    const auto partition = generate_partition(num_qubits);
    return build_mub_nq(num_qubits, partition, synthesize_partition(partition));
}

Decomposition build_randomized_nq(int num_qubits, const std::vector<WeightedUnitary>& unitary_set) {
    const int n = num_qubits;
    check_ptm_size(n);
    const Eigen::Index d = dim_of(n);
    if (unitary_set.empty()) throw InvalidInput("unitary set is empty");
    Weight total = 0;
    Decomposition out{"randomized", n, {}};
    for (const auto& wu : unitary_set) {
        if (wu.unitary.rows() != d || !is_unitary(wu.unitary, kChannelTolerance)) {
            throw InvalidInput("every element of the set must be a unitary of dimension 2^n");
        }
        if (wu.probability <= Weight(0)) throw InvalidInput("probabilities must be positive");
        total += wu.probability;
        std::vector<MPTerm> terms;
        for (Eigen::Index j = 0; j < d; ++j) {
            const CMatrix proj = ket_projector(wu.unitary.col(j));
            terms.push_back({1, proj, proj});
        }
        out.channels.push_back({Weight(d + 1) * wu.probability, MPChannel(n, std::move(terms))});
    }
    if (total != Weight(1)) throw InvalidInput("probabilities must sum to 1");
    std::vector<MPTerm> terms;
    const CMatrix mixed = CMatrix::Identity(d, d) / static_cast<double>(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        terms.push_back({1, ket_projector(basis_ket<double>(static_cast<std::size_t>(d), static_cast<std::size_t>(j))), mixed});
    }
    out.channels.push_back({Weight(-d), MPChannel(n, std::move(terms))});
    const double res = verify_decomposition(out);
    if (res > kResidualTolerance) {
        throw DesignViolation("unitary set is not a 2-design: PTM residual " + std::to_string(res));
    }
    return out;
}

Decomposition build_randomized_nq(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw ResourceLimit("the Clifford group is enumerated for n <= 2 only");
    }
    const auto group = clifford_group(num_qubits);
    std::vector<WeightedUnitary> set;
    set.reserve(group.size());
    const Weight p(1, static_cast<std::int64_t>(group.size()));
    for (const auto& u : group) set.push_back({u, p});
    return build_randomized_nq(num_qubits, set);
}

Decomposition build_teleport_nq(int num_qubits) {
    const int n = num_qubits;
    if (n < 1 || n > 2) throw ResourceLimit("teleportation decomposition is limited to n <= 2");
    const Eigen::Index d = dim_of(n);
    const std::int64_t states = (std::int64_t{1} << d) - 1;  // 2^{2^n} - 1
    const std::complex<double> i(0, 1);

    // Rows of W^dagger |mu>, mu = (a, b) per wire, on (A_1..A_n, C_1..C_n).
    // W_l^dagger |a b> = (|0, b> + (-1)^a |1, b xor 1>) / sqrt 2.
    struct Outcome {
        std::uint32_t abits;
        std::uint32_t bbits;
        CMatrix state;  // d x d: row = A index, column = C index
    };
    std::vector<Outcome> outcomes;
    for (std::uint32_t abits = 0; abits < (1u << n); ++abits) {
        for (std::uint32_t bbits = 0; bbits < (1u << n); ++bbits) {
            CMatrix psi = CMatrix::Zero(d, d);
            for (Eigen::Index alpha = 0; alpha < d; ++alpha) {
                for (Eigen::Index kappa = 0; kappa < d; ++kappa) {
                    std::complex<double> amp = 1.0;
                    for (int l = 0; l < n && amp != 0.0; ++l) {
                        const int shift = n - 1 - l;  // wire l+1 is the most significant
                        const auto al = static_cast<std::uint32_t>((alpha >> shift) & 1);
                        const auto kl = static_cast<std::uint32_t>((kappa >> shift) & 1);
                        const std::uint32_t a = (abits >> l) & 1u;
                        const std::uint32_t b = (bbits >> l) & 1u;
                        if (al == 0) amp *= kl == b ? std::numbers::sqrt2 / 2 : 0.0;
                        else amp *= kl == (b ^ 1u) ? (a ? -1.0 : 1.0) * std::numbers::sqrt2 / 2 : 0.0;
                    }
                    psi(alpha, kappa) = amp;
                }
            }
            outcomes.push_back({abits, bbits, psi});
        }
    }
    // Effect for ancilla state |c>: v = (I (x) <c|) W^dagger |mu>, E = v v^dagger.
    auto effect = [&](const Outcome& o, const CVector& c) -> CMatrix {
        const CVector v = o.state * c.conjugate();
        return v * v.adjoint();
    };

    Decomposition out{"teleport", n, {}};
    const Weight c_r(d, states);
    for (std::int64_t r = 1; r <= states; ++r) {
        CVector e(d);
        for (Eigen::Index j = 1; j <= d; ++j) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(r) *
                                 static_cast<double>((std::int64_t{1} << (j - 1)) - 1) / static_cast<double>(states);
            e(j - 1) = std::exp(i * phase) / std::sqrt(static_cast<double>(d));
        }
        const CVector e_conj = e.conjugate();
        std::vector<MPTerm> terms;
        for (const auto& o : outcomes) {
            const CVector prep = pauli_correction(o.abits, o.bbits, n) * e_conj;
            terms.push_back({1, effect(o, e), ket_projector(prep)});
        }
        out.channels.push_back({c_r, MPChannel(n, std::move(terms))});
    }
    const Weight c_jk(-1, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
            if (j == k) continue;
            const CVector cj = basis_ket<double>(static_cast<std::size_t>(d), static_cast<std::size_t>(j));
            const CVector ck = basis_ket<double>(static_cast<std::size_t>(d), static_cast<std::size_t>(k));
            std::vector<MPTerm> terms;
            for (const auto& o : outcomes) {
                const CVector prep = pauli_correction(o.abits, o.bbits, n) * ck;
                terms.push_back({1, effect(o, cj), ket_projector(prep)});
            }
            out.channels.push_back({c_jk, MPChannel(n, std::move(terms))});
        }
    }
    return out;
}

std::vector<CMatrix> clifford_group(int num_qubits) {
    const int n = num_qubits;
    if (n < 1 || n > 2) throw ResourceLimit("the Clifford group is enumerated for n <= 2 only");
    std::vector<CMatrix> generators;
    for (int q = 1; q <= n; ++q) {
        generators.push_back(embed_1q(gates::hadamard(), q, n));
        generators.push_back(embed_1q(gates::phase_s(), q, n));
    }
    if (n == 2) generators.push_back(gates::cz());
    const Eigen::Index d = dim_of(n);
    std::vector<CMatrix> group{CMatrix::Identity(d, d)};
    std::map<std::vector<long long>, std::size_t> seen{{phase_free_key(group.front()), 0}};
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto& g : generators) {
            CMatrix next = g * group[head];
            auto key = phase_free_key(next);
            if (seen.emplace(std::move(key), group.size()).second) group.push_back(std::move(next));
        }
    }
    return group;
}

MPChannel tensor_product(const MPChannel& a, const MPChannel& b) {
    std::vector<MPTerm> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) terms.push_back({ta.a * tb.a, kron(ta.effect, tb.effect), kron(ta.prep, tb.prep)});
    return MPChannel(a.num_qubits() + b.num_qubits(), std::move(terms));
}

Decomposition tensor_product(const Decomposition& a, const Decomposition& b) {
    Decomposition out{a.label + "*" + b.label, a.num_qubits + b.num_qubits, {}};
    out.channels.reserve(a.m() * b.m());
    for (const auto& ca : a.channels)
        for (const auto& cb : b.channels) out.channels.push_back({ca.c * cb.c, tensor_product(ca.channel, cb.channel)});
    return out;
}

Decomposition tensor_power(const Decomposition& d, int k) {
    if (k < 1) throw InvalidInput("tensor power needs k >= 1");
    Decomposition out = d;
    for (int i = 1; i < k; ++i) out = tensor_product(out, d);
    return out;
}

Decomposition build_decomposition(std::string_view method, int num_qubits) {
    if (num_qubits < 1) throw InvalidInput("n must be positive");
    if (method == "peng" || method == "optimal1q") {
        Decomposition d = tensor_power(method == "peng" ? build_peng_1q() : build_optimal_1q(), num_qubits);
        d.label = std::string(method);
        return d;
    }
    if (method == "mub") return build_mub_nq(num_qubits);
    if (method == "randomized") return build_randomized_nq(num_qubits);
    if (method == "teleport") return build_teleport_nq(num_qubits);
    throw InvalidInput("unknown method: " + std::string(method));
}

Decomposition with_weight(Decomposition d, std::size_t index, Weight c) {
    if (index >= d.channels.size()) throw InvalidInput("channel index out of range");
    d.channels[index].c = c;
    return d;
}

}  // namespace wirecut
