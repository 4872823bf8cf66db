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

#include "wirecut/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace {

constexpr double kPieceCutoff = 1e-13;
constexpr double kOffDiagonalCutoff = 1e-12;
constexpr std::uint64_t kChunkShots = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

bool is_diagonal_matrix(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && std::abs(m(i, j)) > kOffDiagonalCutoff) return false;
    return true;
}

// Rank-1 pieces w_k |v_k><v_k| of a PSD matrix.
PrepPlan split_psd(const CMatrix& m) {
    PrepPlan out;
    const auto dim = static_cast<std::size_t>(m.rows());
    if (is_diagonal_matrix(m)) {
        for (std::size_t k = 0; k < dim; ++k) {
            const double w = m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
            if (w <= kPieceCutoff) continue;
            out.probabilities.push_back(w);
            out.kets.push_back(basis_ket<double>(dim, k));
            out.labels.push_back(static_cast<long>(k));
        }
        return out;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    if (es.info() != Eigen::Success) throw NumericFailure("eigendecomposition failed");
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double w = es.eigenvalues()(k);
        if (w <= kPieceCutoff) continue;
        out.probabilities.push_back(w);
        out.kets.push_back(es.eigenvectors().col(k));
        out.labels.push_back(-1);
    }
    return out;
}

std::size_t pick(const std::vector<double>& weights, double total, std::mt19937_64& rng) {
    const double u = std::generate_canonical<double, 64>(rng) * total;
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        last = i;
        if (u < acc) return i;
    }
    return last;
}

struct Effects {
    std::vector<std::size_t> term;
    std::vector<double> weight;
    std::vector<CVector> vec;
};

struct ChannelPlan {
    double sign = 1.0;
    double probability = 0.0;
    std::vector<int> a;
    Effects effects;
    std::vector<PrepPlan> preps;
};

struct LocationPlan {
    std::vector<int> wires;
    double gamma = 1.0;
    std::vector<double> channel_probabilities;
    std::vector<ChannelPlan> channels;
};

LocationPlan plan_location(const CutLocation& loc) {
    LocationPlan plan;
    plan.wires = loc.wires;
    plan.gamma = to_double(loc.decomposition.gamma());
    for (const auto& wc : loc.decomposition.channels) {
        ChannelPlan cp;
        const double c = to_double(wc.c);
        cp.sign = c < 0 ? -1.0 : 1.0;
        cp.probability = std::abs(c) / plan.gamma;
        const auto& terms = wc.channel.terms();
        for (std::size_t mu = 0; mu < terms.size(); ++mu) {
            cp.a.push_back(terms[mu].a);
            auto pieces = split_psd(terms[mu].effect);
            for (std::size_t k = 0; k < pieces.kets.size(); ++k) {
                cp.effects.term.push_back(mu);
                cp.effects.weight.push_back(pieces.probabilities[k]);
                cp.effects.vec.push_back(std::move(pieces.kets[k]));
            }
            cp.preps.push_back(plan_prep(terms[mu].prep));
        }
        plan.channel_probabilities.push_back(cp.probability);
        plan.channels.push_back(std::move(cp));
    }
    return plan;
}

// Bit-deposit tables: register index = outer[r] | inner[w].
struct Split {
    std::vector<std::size_t> inner;
    std::vector<std::size_t> outer;
    std::vector<int> rest;  // positions not selected, register order
};

Split split_positions(int k, const std::vector<int>& positions) {
    Split s;
    std::vector<bool> chosen(static_cast<std::size_t>(k), false);
    for (int p : positions) chosen[static_cast<std::size_t>(p)] = true;
    for (int p = 0; p < k; ++p)
        if (!chosen[static_cast<std::size_t>(p)]) s.rest.push_back(p);
    auto deposit = [k](std::size_t v, const std::vector<int>& pos) {
        std::size_t out = 0;
        const auto n = pos.size();
        for (std::size_t i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1U) out |= std::size_t{1} << (k - 1 - pos[i]);
        return out;
    };
    s.inner.resize(std::size_t{1} << positions.size());
    for (std::size_t w = 0; w < s.inner.size(); ++w) s.inner[w] = deposit(w, positions);
    s.outer.resize(std::size_t{1} << s.rest.size());
    for (std::size_t r = 0; r < s.outer.size(); ++r) s.outer[r] = deposit(r, s.rest);
    return s;
}

struct Register {
    std::vector<int> wires;  // wires[0] is the most significant bit of amp
    CVector amp;
};

// Product of independent statevector registers over the circuit wires.
class RegisterSet {
  public:
    explicit RegisterSet(int width) : width_(width), owner_(static_cast<std::size_t>(width) + 1, 0) {
        for (int w = 1; w <= width; ++w) {
            owner_[static_cast<std::size_t>(w)] = static_cast<int>(regs_.size());
            regs_.push_back(Register{{w}, basis_ket<double>(2, 0)});
        }
    }

    Register& merge(const std::vector<int>& wires) {
        const int base = owner_[static_cast<std::size_t>(wires.front())];
        for (int w : wires) {
            const int o = owner_[static_cast<std::size_t>(w)];
            if (o == base) continue;
            Register& b = regs_[static_cast<std::size_t>(base)];
            Register& other = regs_[static_cast<std::size_t>(o)];
            if (b.wires.size() + other.wires.size() > static_cast<std::size_t>(kMaxRegisterQubits))
                throw ResourceLimit("sub-circuit register exceeds " + std::to_string(kMaxRegisterQubits) + " qubits");
            b.amp = CVector(kron(b.amp, other.amp));
            for (int ow : other.wires) {
                b.wires.push_back(ow);
                owner_[static_cast<std::size_t>(ow)] = base;
            }
            other.wires.clear();
            other.amp.resize(0);
        }
        return regs_[static_cast<std::size_t>(base)];
    }

    static std::vector<int> positions_of(const Register& r, const std::vector<int>& wires) {
        std::vector<int> pos;
        pos.reserve(wires.size());
        for (int w : wires)
            pos.push_back(static_cast<int>(std::find(r.wires.begin(), r.wires.end(), w) - r.wires.begin()));
        return pos;
    }

    void apply(const CircuitLayer& layer) {
        Register& r = merge(layer.qubits);
        const auto s = split_positions(static_cast<int>(r.wires.size()), positions_of(r, layer.qubits));
        CVector v(static_cast<Eigen::Index>(s.inner.size()));
        for (std::size_t o : s.outer) {
            for (std::size_t w = 0; w < s.inner.size(); ++w) v(static_cast<Eigen::Index>(w)) = r.amp(static_cast<Eigen::Index>(o | s.inner[w]));
            const CVector out = layer.matrix * v;
            for (std::size_t w = 0; w < s.inner.size(); ++w) r.amp(static_cast<Eigen::Index>(o | s.inner[w])) = out(static_cast<Eigen::Index>(w));
        }
    }

    CMatrix reduced(const std::vector<int>& wires) {
        Register& r = merge(wires);
        const auto s = split_positions(static_cast<int>(r.wires.size()), positions_of(r, wires));
        const auto d = static_cast<Eigen::Index>(s.inner.size());
        CMatrix rho = CMatrix::Zero(d, d);
        CVector v(d);
        for (std::size_t o : s.outer) {
            for (Eigen::Index w = 0; w < d; ++w) v(w) = r.amp(static_cast<Eigen::Index>(o | s.inner[static_cast<std::size_t>(w)]));
            rho.noalias() += v * v.adjoint();
        }
        return rho;
    }

    // Projects the cut wires onto <e|, removes them and starts a fresh register
    // holding `ket` on the same wires.
    void measure_and_prepare(const std::vector<int>& wires, const CVector& e, const CVector& ket) {
        Register& r = merge(wires);
        const auto s = split_positions(static_cast<int>(r.wires.size()), positions_of(r, wires));
        CVector phi(static_cast<Eigen::Index>(s.outer.size()));
        for (std::size_t o = 0; o < s.outer.size(); ++o) {
            std::complex<double> acc = 0.0;
            for (std::size_t w = 0; w < s.inner.size(); ++w)
                acc += std::conj(e(static_cast<Eigen::Index>(w))) * r.amp(static_cast<Eigen::Index>(s.outer[o] | s.inner[w]));
            phi(static_cast<Eigen::Index>(o)) = acc;
        }
        const double norm = phi.norm();
        if (!(norm > 0.0)) throw NumericFailure("zero-probability outcome selected");
        std::vector<int> rest;
        for (int p : s.rest) rest.push_back(r.wires[static_cast<std::size_t>(p)]);
        r.wires = std::move(rest);
        r.amp = phi / norm;
        const int idx = static_cast<int>(regs_.size());
        for (int w : wires) owner_[static_cast<std::size_t>(w)] = idx;
        regs_.push_back(Register{wires, ket});
    }

    std::uint64_t sample_outcome(std::mt19937_64& rng) const {
        std::uint64_t y = 0;
        std::vector<double> probs;
        for (const auto& r : regs_) {
            if (r.wires.empty()) continue;
            probs.resize(static_cast<std::size_t>(r.amp.size()));
            double total = 0.0;
            for (Eigen::Index i = 0; i < r.amp.size(); ++i) total += probs[static_cast<std::size_t>(i)] = std::norm(r.amp(i));
            const std::size_t idx = pick(probs, total, rng);
            const auto k = r.wires.size();
            for (std::size_t p = 0; p < k; ++p)
                if ((idx >> (k - 1 - p)) & 1U) y |= std::uint64_t{1} << (width_ - r.wires[p]);
        }
        return y;
    }

    double expectation(const PostProcess& f) {
        std::vector<int> all;
        for (int w = 1; w <= width_; ++w) all.push_back(w);
        const Register& r = merge(all);
        const auto k = r.wires.size();
        double acc = 0.0;
        for (Eigen::Index i = 0; i < r.amp.size(); ++i) {
            const double p = std::norm(r.amp(i));
            if (p == 0.0) continue;
            std::uint64_t y = 0;
            for (std::size_t q = 0; q < k; ++q)
                if ((static_cast<std::uint64_t>(i) >> (k - 1 - q)) & 1U) y |= std::uint64_t{1} << (width_ - r.wires[q]);
            acc += p * f(y, width_);
        }
        return acc;
    }

  private:
    int width_;
    std::vector<int> owner_;
    std::vector<Register> regs_;
};

void check_post_process(const PostProcess& f, int width) {
    if (f.kind() == PostProcess::Kind::Bit && (f.bit_index() < 1 || f.bit_index() > width))
        throw InvalidInput("bit index out of range for circuit width");
    if (f.kind() == PostProcess::Kind::Table && f.values().size() != (std::size_t{1} << width))
        throw InvalidInput("post-processing table must have 2^L entries");
}

// Cuts grouped by the number of layers that precede them.
std::vector<std::vector<std::size_t>> schedule(const LayeredCircuit& circuit, const CutSpec& cuts) {
    const auto layers = circuit.layers.size();
    std::vector<std::vector<std::size_t>> at(layers + 1);
    for (std::size_t i = 0; i < cuts.locations.size(); ++i) {
        const auto& loc = cuts.locations[i];
        if (loc.after_layer < 0 || static_cast<std::size_t>(loc.after_layer) > layers)
            throw InvalidInput("cut after_layer out of range");
        if (loc.wires.empty()) throw InvalidInput("cut has no wires");
        for (std::size_t k = 0; k < loc.wires.size(); ++k) {
            if (loc.wires[k] < 1 || loc.wires[k] > circuit.width) throw InvalidInput("cut wire out of range");
            if (k > 0 && loc.wires[k] <= loc.wires[k - 1]) throw InvalidInput("cut wires must be ascending and distinct");
        }
        if (loc.decomposition.num_qubits != static_cast<int>(loc.wires.size()))
            throw InvalidInput("decomposition size does not match cut width");
        if (loc.decomposition.channels.empty()) throw InvalidInput("empty decomposition");
        for (std::size_t j : at[static_cast<std::size_t>(loc.after_layer)])
            for (int w : cuts.locations[j].wires)
                if (std::find(loc.wires.begin(), loc.wires.end(), w) != loc.wires.end())
                    throw InvalidInput("overlapping cuts at the same position");
        at[static_cast<std::size_t>(loc.after_layer)].push_back(i);
    }
    return at;
}

struct ChunkResult {
    double sum = 0.0;
    double sumsq = 0.0;
    std::vector<std::vector<std::uint64_t>> tallies;
};

template <typename T, typename Op>
T pairwise(const std::vector<T>& items, std::size_t lo, std::size_t hi, Op op) {
    if (hi - lo == 1) return items[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return op(pairwise(items, lo, mid, op), pairwise(items, mid, hi, op));
}

}  // namespace

void LayeredCircuit::validate() const {
    if (width < 1) throw InvalidInput("circuit width must be positive");
    if (width > 62) throw ResourceLimit("circuit width too large");
    for (const auto& layer : layers) {
        if (layer.qubits.empty()) throw InvalidInput("layer acts on no qubits");
        for (std::size_t k = 0; k < layer.qubits.size(); ++k) {
            if (layer.qubits[k] < 1 || layer.qubits[k] > width) throw InvalidInput("layer qubit out of range");
            if (k > 0 && layer.qubits[k] <= layer.qubits[k - 1]) throw InvalidInput("layer qubits must be ascending");
        }
        if (layer.qubits.size() > static_cast<std::size_t>(kMaxRegisterQubits)) throw ResourceLimit("layer too wide");
        const auto dim = Eigen::Index{1} << layer.qubits.size();
        if (layer.matrix.rows() != dim || layer.matrix.cols() != dim) throw InvalidInput("layer matrix has wrong shape");
        if (!is_unitary(layer.matrix, 1e-8)) throw InvalidInput("layer matrix is not unitary");
    }
}

PostProcess PostProcess::table(std::vector<double> values) {
    if (values.empty() || !std::has_single_bit(values.size())) throw InvalidInput("table size must be a power of two");
    for (double v : values)
        if (!(std::abs(v) <= 1.0)) throw InvalidInput("post-processing values must lie in [-1, 1]");
    return PostProcess(Kind::Table, 0, std::move(values));
}

double PostProcess::operator()(std::uint64_t y, int width) const {
    switch (kind_) {
        case Kind::Parity: return (std::popcount(y) & 1) ? -1.0 : 1.0;
        case Kind::Bit: return static_cast<double>((y >> (width - bit_)) & 1U);
        case Kind::Table: return table_[static_cast<std::size_t>(y)];
    }
    return 0.0;
}

double PostProcess::max_abs() const {
    if (kind_ != Kind::Table) return 1.0;
    double m = 0.0;
    for (double v : table_) m = std::max(m, std::abs(v));
    return m;
}

std::string PostProcess::str() const {
    switch (kind_) {
        case Kind::Parity: return "parity";
        case Kind::Bit: return "bit:" + std::to_string(bit_);
        case Kind::Table: return "table";
    }
    return "";
}

double CutSpec::gamma_total() const {
    double g = 1.0;
    for (const auto& loc : locations) g *= to_double(loc.decomposition.gamma());
    return g;
}

PrepPlan plan_prep(const CMatrix& rho) {
    PrepPlan plan = split_psd(rho);
    double total = 0.0;
    for (double p : plan.probabilities) total += p;
    if (!(total > 0.0)) throw InvalidInput("prep has zero trace");
    for (double& p : plan.probabilities) p /= total;
    return plan;
}

std::size_t sample_prep(const PrepPlan& plan, std::mt19937_64& rng) {
    if (plan.kets.empty()) throw InvalidInput("empty prep plan");
    return pick(plan.probabilities, 1.0, rng);
}

std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(shot)));
}

unsigned worker_threads() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WIRECUT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) n = static_cast<unsigned>(std::min(v, 256L));
    }
    return n;
}

double exact_expectation(const LayeredCircuit& circuit, const PostProcess& f) {
    circuit.validate();
    if (circuit.width > kMaxExactWidth)
        throw ResourceLimit("exact simulation limited to " + std::to_string(kMaxExactWidth) + " qubits");
    check_post_process(f, circuit.width);
    RegisterSet regs(circuit.width);
    for (const auto& layer : circuit.layers) regs.apply(layer);
    return regs.expectation(f);
}

EstimateReport run_monte_carlo(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f,
                               std::uint64_t shots, std::uint64_t seed) {
    circuit.validate();
    check_post_process(f, circuit.width);
    if (shots == 0) throw InvalidInput("shot count must be positive");
    const auto at = schedule(circuit, cuts);
    std::vector<LocationPlan> plans;
    for (const auto& loc : cuts.locations) plans.push_back(plan_location(loc));
    const double gamma = cuts.gamma_total();

    auto run_shot = [&](std::uint64_t shot, std::vector<std::vector<std::uint64_t>>& tallies) {
        auto rng = shot_rng(seed, shot);
        RegisterSet regs(circuit.width);
        double value = 1.0;
        std::vector<double> probs;
        for (std::size_t t = 0; t < at.size(); ++t) {
            for (std::size_t li : at[t]) {
                const auto& plan = plans[li];
                const std::size_t ci = pick(plan.channel_probabilities, 1.0, rng);
                ++tallies[li][ci];
                const auto& ch = plan.channels[ci];
                const CMatrix rho = regs.reduced(plan.wires);
                probs.resize(ch.effects.vec.size());
                double total = 0.0;
                for (std::size_t k = 0; k < probs.size(); ++k) {
                    const auto& e = ch.effects.vec[k];
                    double p = ch.effects.weight[k] * e.dot(rho * e).real();
                    if (p < kProbabilityFloor) throw NumericFailure("negative outcome probability");
                    p = std::max(p, 0.0);
                    probs[k] = p;
                    total += p;
                }
                const std::size_t piece = pick(probs, total, rng);
                const std::size_t mu = ch.effects.term[piece];
                const auto& prep = ch.preps[mu];
                const std::size_t pk = sample_prep(prep, rng);
                regs.measure_and_prepare(plan.wires, ch.effects.vec[piece], prep.kets[pk]);
                value *= ch.sign * ch.a[mu];
            }
            if (t < circuit.layers.size()) regs.apply(circuit.layers[t]);
        }
        return value * f(regs.sample_outcome(rng), circuit.width);
    };

    const std::uint64_t chunks = (shots + kChunkShots - 1) / kChunkShots;
    std::vector<ChunkResult> results(chunks);
    auto fresh_tallies = [&] {
        std::vector<std::vector<std::uint64_t>> t;
        for (const auto& p : plans) t.emplace_back(p.channels.size(), 0);
        return t;
    };
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                ChunkResult r;
                r.tallies = fresh_tallies();
                const std::uint64_t end = std::min(shots, (c + 1) * kChunkShots);
                for (std::uint64_t s = c * kChunkShots; s < end; ++s) {
                    const double v = run_shot(s, r.tallies);
                    r.sum += v;
                    r.sumsq += v * v;
                }
                results[c] = std::move(r);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
        }
    };
    const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(worker_threads(), chunks));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    const ChunkResult total = pairwise(results, 0, results.size(), [](ChunkResult a, const ChunkResult& b) {
        a.sum += b.sum;
        a.sumsq += b.sumsq;
        for (std::size_t i = 0; i < a.tallies.size(); ++i)
            for (std::size_t j = 0; j < a.tallies[i].size(); ++j) a.tallies[i][j] += b.tallies[i][j];
        return a;
    });

    EstimateReport rep;
    const double n = static_cast<double>(shots);
    const double mean = total.sum / n;
    rep.estimate = gamma * mean;
    rep.shots = shots;
    rep.gamma_total = gamma;
    rep.seed = seed;
    const double var = shots > 1 ? std::max(0.0, (total.sumsq - total.sum * mean) / (n - 1.0)) : 0.0;
    rep.shot_variance = gamma * gamma * var;
    rep.std_error = std::sqrt(rep.shot_variance / n);
    rep.tallies = total.tallies;
    return rep;
}

double analytic_mean(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f) {
    circuit.validate();
    if (circuit.width > kMaxExactWidth)
        throw ResourceLimit("exact simulation limited to " + std::to_string(kMaxExactWidth) + " qubits");
    check_post_process(f, circuit.width);
    const auto at = schedule(circuit, cuts);
    std::vector<LocationPlan> plans;
    for (const auto& loc : cuts.locations) plans.push_back(plan_location(loc));
    const double gamma = cuts.gamma_total();

    // Events: (layer index) or (cut index), in execution order.
    std::vector<std::pair<bool, std::size_t>> events;
    for (std::size_t t = 0; t < at.size(); ++t) {
        for (std::size_t li : at[t]) events.emplace_back(true, li);
        if (t < circuit.layers.size()) events.emplace_back(false, t);
    }

    std::function<double(std::size_t, RegisterSet)> recurse = [&](std::size_t ev, RegisterSet regs) -> double {
        for (; ev < events.size() && !events[ev].first; ++ev) regs.apply(circuit.layers[events[ev].second]);
        if (ev == events.size()) return regs.expectation(f);
        const auto& plan = plans[events[ev].second];
        const CMatrix rho = regs.reduced(plan.wires);
        double acc = 0.0;
        for (const auto& ch : plan.channels) {
            for (std::size_t k = 0; k < ch.effects.vec.size(); ++k) {
                const auto& e = ch.effects.vec[k];
                const double p = ch.effects.weight[k] * e.dot(rho * e).real();
                if (p < kProbabilityFloor) throw NumericFailure("negative outcome probability");
                if (p <= 1e-15) continue;
                const std::size_t mu = ch.effects.term[k];
                const auto& prep = ch.preps[mu];
                for (std::size_t pk = 0; pk < prep.kets.size(); ++pk) {
                    RegisterSet next = regs;
                    next.measure_and_prepare(plan.wires, e, prep.kets[pk]);
                    acc += ch.probability * p * prep.probabilities[pk] * ch.sign * ch.a[mu] * recurse(ev + 1, next);
                }
            }
        }
        return acc;
    };
    return gamma * recurse(0, RegisterSet(circuit.width));
}

double variance_probe(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f, int trials,
                      std::uint64_t shots, std::uint64_t seed) {
    if (trials < 2) throw InvalidInput("variance probe needs at least two trials");
    std::vector<double> est;
    for (int t = 0; t < trials; ++t) est.push_back(run_monte_carlo(circuit, cuts, f, shots, seed + static_cast<std::uint64_t>(t)).estimate);
    double mean = 0.0;
    for (double e : est) mean += e;
    mean /= trials;
    double ss = 0.0;
    for (double e : est) ss += (e - mean) * (e - mean);
    return ss / (trials - 1);
}

LayeredCircuit demo_circuit() {
    LayeredCircuit c;
    c.width = 3;
    c.layers.push_back({{1}, gates::hadamard()});
    c.layers.push_back({{1, 2}, gates::cx()});
    c.layers.push_back({{2, 3}, gates::cx()});
    return c;
}

CutSpec demo_cuts(const Decomposition& d) {
    CutSpec s;
    s.locations.push_back(CutLocation{2, {2}, d});
    return s;
}

}  // namespace wirecut
