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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "wirecut/channel.hpp"
#include "wirecut/errors.hpp"
#include "wirecut/estimator.hpp"

namespace wirecut {
namespace {

CMatrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ();
}

// Full 2^L unitary per layer, then Sum_y |psi_y|^2 f(y).
double dense_oracle(const LayeredCircuit& c, const PostProcess& f) {
    const Eigen::Index dim = Eigen::Index{1} << c.width;
    CVector psi = basis_ket<double>(static_cast<std::size_t>(dim), 0);
    for (const auto& layer : c.layers) {
        const int q = layer.qubits.front();
        const int k = static_cast<int>(layer.qubits.size());
        const CMatrix left = CMatrix::Identity(Eigen::Index{1} << (q - 1), Eigen::Index{1} << (q - 1));
        const CMatrix right = CMatrix::Identity(Eigen::Index{1} << (c.width - q - k + 1), Eigen::Index{1} << (c.width - q - k + 1));
        const CMatrix full = kron(kron(left, layer.matrix), right);
        psi = full * psi;
    }
    double acc = 0.0;
    for (Eigen::Index y = 0; y < dim; ++y) acc += std::norm(psi(y)) * f(static_cast<std::uint64_t>(y), c.width);
    return acc;
}

LayeredCircuit random_circuit(int width, int layers, std::mt19937_64& rng) {
    LayeredCircuit c;
    c.width = width;
    std::uniform_int_distribution<int> kind(0, 1);
    for (int l = 0; l < layers; ++l) {
        if (kind(rng) == 0) {
            const int q = std::uniform_int_distribution<int>(1, width)(rng);
            c.layers.push_back({{q}, random_unitary(2, rng)});
        } else {
            const int q = std::uniform_int_distribution<int>(1, width - 1)(rng);
            c.layers.push_back({{q, q + 1}, random_unitary(4, rng)});
        }
    }
    return c;
}

PostProcess random_table(int width, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(std::size_t{1} << width);
    for (auto& x : v) x = u(rng);
    return PostProcess::table(v);
}

struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { setenv("WIRECUT_THREADS", v, 1); }
    ~ThreadsEnv() { unsetenv("WIRECUT_THREADS"); }
};

TEST(PostProcess, Values) {
    const auto parity = PostProcess::parity();
    EXPECT_EQ(parity(0b000, 3), 1.0);
    EXPECT_EQ(parity(0b101, 3), 1.0);
    EXPECT_EQ(parity(0b111, 3), -1.0);
    const auto b1 = PostProcess::bit(1);
    EXPECT_EQ(b1(0b100, 3), 1.0);
    EXPECT_EQ(b1(0b011, 3), 0.0);
    EXPECT_EQ(PostProcess::bit(3)(0b001, 3), 1.0);
    const auto t = PostProcess::table({0.5, -0.25});
    EXPECT_EQ(t(1, 1), -0.25);
    EXPECT_THROW(PostProcess::table({0.0, 2.0}), InvalidInput);
    EXPECT_THROW(PostProcess::table({0.0, 0.0, 0.0}), InvalidInput);
}

TEST(Exact, DemoValues) {
    const auto c = demo_circuit();
    EXPECT_NEAR(exact_expectation(c, PostProcess::parity()), 0.0, 1e-12);
    EXPECT_NEAR(exact_expectation(c, PostProcess::bit(1)), 0.5, 1e-12);
    LayeredCircuit plain{3, {{{1, 2}, gates::cx()}, {{2, 3}, gates::cx()}}};
    EXPECT_NEAR(exact_expectation(plain, PostProcess::parity()), 1.0, 1e-12);
    EXPECT_NEAR(exact_expectation(plain, PostProcess::bit(1)), 0.0, 1e-12);
}

TEST(Exact, MatchesDenseOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int width = 2 + trial % 4;
        const auto c = random_circuit(width, 6, rng);
        const auto f = random_table(width, rng);
        EXPECT_NEAR(exact_expectation(c, f), dense_oracle(c, f), 1e-12);
    }
}

TEST(Exact, RejectsBadInput) {
    LayeredCircuit c{2, {{{1, 2}, gates::hadamard()}}};
    EXPECT_THROW(exact_expectation(c, PostProcess::parity()), InvalidInput);
    LayeredCircuit wide{13, {}};
    EXPECT_THROW(exact_expectation(wide, PostProcess::parity()), ResourceLimit);
    EXPECT_THROW(exact_expectation(demo_circuit(), PostProcess::bit(4)), InvalidInput);
}

TEST(SamplePrep, ComplementFrequencies) {
    const int d = 4;
    const int j = 2;
    CMatrix rho = CMatrix::Identity(d, d);
    rho(j, j) = 0.0;
    rho /= d - 1;
    const auto plan = plan_prep(rho);
    ASSERT_EQ(plan.kets.size(), 3U);
    std::vector<long> counts(d, 0);
    std::mt19937_64 rng(5);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(plan.labels[sample_prep(plan, rng)])];
    EXPECT_EQ(counts[j], 0);
    const double p = 1.0 / 3.0;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (int k = 0; k < d; ++k)
        if (k != j) EXPECT_LT(std::abs(counts[static_cast<std::size_t>(k)] - draws * p), 3 * sigma) << k;
}

TEST(SamplePrep, PureStateIsDeterministic) {
    CVector v(2);
    v << 1.0, std::complex<double>(0.0, 1.0);
    v.normalize();
    const auto plan = plan_prep(v * v.adjoint());
    ASSERT_EQ(plan.kets.size(), 1U);
    EXPECT_NEAR(std::abs(plan.kets[0].dot(v)), 1.0, 1e-12);
    std::mt19937_64 rng(1);
    EXPECT_EQ(sample_prep(plan, rng), 0U);
}

TEST(Analytic, UnbiasedOnDemo) {
    const auto c = demo_circuit();
    const double exact = exact_expectation(c, PostProcess::parity());
    for (const auto& d : {build_peng_1q(), build_optimal_1q(), build_mub_nq(1), build_randomized_nq(1),
                          build_teleport_nq(1)}) {
        EXPECT_NEAR(analytic_mean(c, demo_cuts(d), PostProcess::parity()), exact, 1e-10) << d.label;
        EXPECT_NEAR(analytic_mean(c, demo_cuts(d), PostProcess::bit(3)), 0.5, 1e-10) << d.label;
    }
}

TEST(Analytic, UnbiasedOnRandomCircuits) {
    std::mt19937_64 rng(23);
    const auto opt = build_optimal_1q();
    const auto peng = build_peng_1q();
    for (int trial = 0; trial < 25; ++trial) {
        const auto c = random_circuit(3, 5, rng);
        const auto f = random_table(3, rng);
        CutSpec cuts;
        const int after = std::uniform_int_distribution<int>(1, 4)(rng);
        const int wire = std::uniform_int_distribution<int>(1, 3)(rng);
        cuts.locations.push_back({after, {wire}, trial % 2 ? opt : peng});
        EXPECT_NEAR(analytic_mean(c, cuts, f), exact_expectation(c, f), 1e-10) << trial;
    }
}

TEST(Analytic, TwoWireCuts) {
    std::mt19937_64 rng(31);
    const auto mub2 = build_mub_nq(2);
    const auto tele2 = build_teleport_nq(2);
    for (int trial = 0; trial < 4; ++trial) {
        const auto c = random_circuit(4, 6, rng);
        const auto f = random_table(4, rng);
        CutSpec cuts;
        cuts.locations.push_back({3, {2, 3}, trial % 2 ? mub2 : tele2});
        EXPECT_NEAR(analytic_mean(c, cuts, f), exact_expectation(c, f), 1e-10) << trial;
    }
}

TEST(Analytic, TwoIndependentCuts) {
    std::mt19937_64 rng(41);
    const auto opt = build_optimal_1q();
    const auto c = random_circuit(3, 6, rng);
    const auto f = random_table(3, rng);
    CutSpec cuts;
    cuts.locations.push_back({2, {1}, opt});
    cuts.locations.push_back({4, {3}, opt});
    EXPECT_DOUBLE_EQ(cuts.gamma_total(), 9.0);
    EXPECT_NEAR(analytic_mean(c, cuts, f), exact_expectation(c, f), 1e-10);
    const auto rep = run_monte_carlo(c, cuts, f, 20000, 3);
    EXPECT_DOUBLE_EQ(rep.gamma_total, 9.0);
    ASSERT_EQ(rep.tallies.size(), 2U);
}

TEST(MonteCarlo, ConvergesOnDemo) {
    const auto c = demo_circuit();
    for (const auto& d : {build_peng_1q(), build_optimal_1q()}) {
        const auto rep = run_monte_carlo(c, demo_cuts(d), PostProcess::parity(), 100000, 7);
        EXPECT_LT(std::abs(rep.estimate), 4 * rep.std_error) << d.label;
        std::uint64_t total = 0;
        for (auto t : rep.tallies[0]) total += t;
        EXPECT_EQ(total, 100000U);
    }
}

TEST(MonteCarlo, EstimateBoundedByGamma) {
    std::mt19937_64 rng(8);
    const auto peng = build_peng_1q();
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = random_circuit(3, 4, rng);
        CutSpec cuts;
        cuts.locations.push_back({2, {2}, peng});
        const auto rep = run_monte_carlo(c, cuts, random_table(3, rng), 50, static_cast<std::uint64_t>(trial));
        EXPECT_LE(std::abs(rep.estimate), rep.gamma_total);
    }
}

TEST(MonteCarlo, IdentityCircuitCut) {
    LayeredCircuit c{1, {}};
    CutSpec cuts;
    cuts.locations.push_back({0, {1}, build_optimal_1q()});
    const auto rep = run_monte_carlo(c, cuts, PostProcess::parity(), 50000, 2);
    EXPECT_LT(std::abs(rep.estimate - 1.0), 4 * rep.std_error);
    EXPECT_NEAR(analytic_mean(c, cuts, PostProcess::parity()), 1.0, 1e-12);
}

TEST(MonteCarlo, DeterministicAcrossThreads) {
    const auto c = demo_circuit();
    const auto cuts = demo_cuts(build_optimal_1q());
    EstimateReport one, many;
    {
        ThreadsEnv env("1");
        one = run_monte_carlo(c, cuts, PostProcess::parity(), 30000, 99);
    }
    {
        ThreadsEnv env("3");
        many = run_monte_carlo(c, cuts, PostProcess::parity(), 30000, 99);
    }
    EXPECT_EQ(one.estimate, many.estimate);
    EXPECT_EQ(one.tallies, many.tallies);
    const auto other = run_monte_carlo(c, cuts, PostProcess::parity(), 30000, 100);
    EXPECT_NE(one.estimate, other.estimate);
}

TEST(MonteCarlo, OptimalVarianceBound) {
    const auto c = demo_circuit();
    const std::uint64_t n = 200000;
    const auto rep = run_monte_carlo(c, demo_cuts(build_optimal_1q()), PostProcess::parity(), n, 4);
    EXPECT_LE(rep.std_error * rep.std_error, 9.0 / static_cast<double>(n) * 1.02);
    const auto peng = run_monte_carlo(c, demo_cuts(build_peng_1q()), PostProcess::parity(), n, 4);
    const double ratio = peng.shot_variance / rep.shot_variance;
    EXPECT_GE(ratio, 1.0);
    EXPECT_LE(ratio, 16.0 / 9.0 * 1.3);
}

TEST(MonteCarlo, VarianceHalvesWithShots) {
    const auto c = demo_circuit();
    const auto cuts = demo_cuts(build_optimal_1q());
    const double v1 = variance_probe(c, cuts, PostProcess::parity(), 400, 500, 1000);
    const double v2 = variance_probe(c, cuts, PostProcess::parity(), 400, 1000, 5000);
    EXPECT_NEAR(v1 / v2, 2.0, 0.5);
}

TEST(MonteCarlo, RejectsBadInput) {
    const auto c = demo_circuit();
    const auto opt = build_optimal_1q();
    EXPECT_THROW(run_monte_carlo(c, demo_cuts(opt), PostProcess::parity(), 0, 0), InvalidInput);
    CutSpec bad;
    bad.locations.push_back({1, {4}, opt});
    EXPECT_THROW(run_monte_carlo(c, bad, PostProcess::parity(), 10, 0), InvalidInput);
    CutSpec mismatch;
    mismatch.locations.push_back({1, {1}, build_mub_nq(2)});
    EXPECT_THROW(run_monte_carlo(c, mismatch, PostProcess::parity(), 10, 0), InvalidInput);
    CutSpec late;
    late.locations.push_back({4, {1}, opt});
    EXPECT_THROW(run_monte_carlo(c, late, PostProcess::parity(), 10, 0), InvalidInput);
}

}  // namespace
}  // namespace wirecut
