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
#include <random>
#include <string>
#include <vector>

#include "wirecut/channel.hpp"
#include "wirecut/dense.hpp"

namespace wirecut {

inline constexpr int kMaxExactWidth = 12;
inline constexpr int kMaxRegisterQubits = 12;
inline constexpr double kProbabilityFloor = -1e-9;

/// A unitary on an ascending list of qubits (1-based); the first listed qubit
/// is the most significant index bit of the matrix.
struct CircuitLayer {
    std::vector<int> qubits;
    CMatrix matrix;
};

/// Layers applied in order to |0...0>, followed by a computational measurement.
struct LayeredCircuit {
    int width = 0;
    std::vector<CircuitLayer> layers;

    void validate() const;
};

/// f : {0,1}^L -> [-1, 1]. Outcomes y are basis indices with qubit 1 as the
/// most significant bit.
class PostProcess {
  public:
    enum class Kind { Parity, Bit, Table };

    static PostProcess parity() { return PostProcess(Kind::Parity, 0, {}); }
    /// Value y_k in {0, 1}.
    static PostProcess bit(int k) { return PostProcess(Kind::Bit, k, {}); }
    static PostProcess table(std::vector<double> values);

    double operator()(std::uint64_t y, int width) const;
    double max_abs() const;
    Kind kind() const { return kind_; }
    int bit_index() const { return bit_; }
    const std::vector<double>& values() const { return table_; }
    std::string str() const;

  private:
    PostProcess(Kind kind, int bit, std::vector<double> table) : kind_(kind), bit_(bit), table_(std::move(table)) {}

    Kind kind_ = Kind::Parity;
    int bit_ = 0;
    std::vector<double> table_;
};

/// Cut applied after `after_layer` layers have run, on the listed wires.
struct CutLocation {
    int after_layer = 0;
    std::vector<int> wires;
    Decomposition decomposition;
};

struct CutSpec {
    std::vector<CutLocation> locations;

    double gamma_total() const;
};

struct EstimateReport {
    double estimate = 0.0;
    std::uint64_t shots = 0;
    double gamma_total = 1.0;
    double std_error = 0.0;
    /// Sample variance of the per-shot value gamma_total * sign * a * f(y).
    double shot_variance = 0.0;
    std::uint64_t seed = 0;
    /// tallies[location][channel] = shots that drew that channel.
    std::vector<std::vector<std::uint64_t>> tallies;
};

/// Sum_y P[y] f(y) by statevector simulation of the uncut circuit.
double exact_expectation(const LayeredCircuit& circuit, const PostProcess& f);

/// Monte-Carlo estimator: per shot and location, channel i with probability
/// |c_i| / gamma, then POVM outcome and prep sampled exactly; the estimate is
/// gamma_total times the mean of sign(c) * a * f(y). Results do not depend on the
/// thread count.
EstimateReport run_monte_carlo(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f,
                               std::uint64_t shots, std::uint64_t seed);

/// Expected value of the Monte-Carlo estimate, by enumerating every channel,
/// outcome and prep with its exact probability.
double analytic_mean(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f);

/// Sample variance of the estimate over `trials` runs with seeds seed, seed+1, ...
double variance_probe(const LayeredCircuit& circuit, const CutSpec& cuts, const PostProcess& f, int trials,
                      std::uint64_t shots, std::uint64_t seed);

/// Pure-state pieces of a density matrix. Diagonal matrices split into
/// computational basis states (label = basis index); others use the
/// eigendecomposition (label = -1).
struct PrepPlan {
    std::vector<double> probabilities;
    std::vector<CVector> kets;
    std::vector<long> labels;
};

PrepPlan plan_prep(const CMatrix& rho);
/// Index into plan.kets drawn with plan.probabilities.
std::size_t sample_prep(const PrepPlan& plan, std::mt19937_64& rng);

/// Per-shot generator derived from (seed, shot) only.
std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot);

/// Threads used by run_monte_carlo: WIRECUT_THREADS if set (at most 256),
/// else hardware concurrency.
unsigned worker_threads();

/// 3-qubit demo: H on 1, CX(1,2), cut on wire 2, CX(2,3); f = parity.
LayeredCircuit demo_circuit();
CutSpec demo_cuts(const Decomposition& d);

}  // namespace wirecut
