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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "wirecut/channel.hpp"
#include "wirecut/clifford.hpp"
#include "wirecut/cost.hpp"
#include "wirecut/estimator.hpp"
#include "wirecut/families.hpp"
#include "wirecut/json_io.hpp"

using namespace wirecut;

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kOverlapTol = 1e-10;
constexpr double kUnbiasedTol = 1e-10;
constexpr double kSigmaMultiple = 5.0;
constexpr double kRatioSlack = 1.3;
constexpr std::uint64_t kShots = 1000000;
constexpr double kBudget1 = 60.0;
constexpr double kBudget3 = 300.0;
constexpr double kBudget6 = 30.0;
constexpr double kBudget7 = 300.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.ok) o.detail = why;
    o.ok = false;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BigInt big_gamma_sq(const Decomposition& d) {
    const Weight g = d.gamma();
    if (g.denominator() != 1) return -1;
    return BigInt(g.numerator()) * g.numerator();
}

Outcome criterion1() {
    Outcome o;
    std::vector<Decomposition> ds = {build_peng_1q(), build_optimal_1q(), build_randomized_nq(1),
                                     build_teleport_nq(1), build_teleport_nq(2)};
    for (int n = 1; n <= 4; ++n) ds.push_back(build_mub_nq(n));
    double worst = 0.0;
    for (const auto& d : ds) {
        const double r = verify_decomposition(d);
        worst = std::max(worst, r);
        if (!(r < kResidualTol)) fail(o, d.label + " n=" + std::to_string(d.num_qubits) + " residual " + sci(r));
    }
    if (o.ok) o.detail = "max residual " + sci(worst);
    return o;
}

Outcome criterion2() {
    Outcome o;
    const std::vector<std::pair<Decomposition, int>> n1 = {
        {build_peng_1q(), 16}, {build_randomized_nq(1), 25}, {build_mub_nq(1), 9}, {build_teleport_nq(1), 9}};
    for (const auto& [d, want] : n1)
        if (big_gamma_sq(d) != want) fail(o, d.label + " gamma^2 at n=1");
    const auto mub2 = build_mub_nq(2);
    const auto mub3 = build_mub_nq(3);
    if (big_gamma_sq(mub2) != 49 || mub2.m() != 5) fail(o, "mub n=2");
    if (big_gamma_sq(mub3) != 225 || mub3.m() != 9) fail(o, "mub n=3");
    if (build_teleport_nq(1).m() != 5) fail(o, "teleport m n=1");
    if (build_teleport_nq(2).m() != 27) fail(o, "teleport m n=2");
    for (int n = 1; n <= 4; ++n) {
        const std::size_t formula = ((std::size_t{1} << (2 * n)) - 1) / ((std::size_t{1} << n) - 1);
        const auto bound = static_cast<std::size_t>(rank_bound_check(identity_ptm(n)));
        if (build_mub_nq(n).m() != formula || bound != formula)
            fail(o, "mub m vs rank bound at n=" + std::to_string(n));
    }
    if (o.ok) o.detail = "gamma^2 (16, 25, 9, 9); mub 49/225, m 5/9; teleport m 5/27";
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto partition = generate_partition(n);
        const auto circuits = synthesize_partition(partition);
        for (std::size_t i = 0; i + 1 < circuits.size(); ++i) {
            const auto& c = circuits[i];
            const bool verified = n <= 6 ? verify_diagonalizes(c, partition.families[i])
                                         : verify_diagonalizes_symplectic(c, partition.families[i]);
            const auto s = gate_stats(c);
            const std::string tag = "n=" + std::to_string(n) + " U" + std::to_string(i + 1);
            if (!verified) fail(o, tag + " does not diagonalize");
            if (s.depth > n + 2) fail(o, tag + " depth " + std::to_string(s.depth));
            if (s.n_h != n) fail(o, tag + " N_H");
            if (s.n_s > n) fail(o, tag + " N_S");
            if (s.n_cz > n * (n - 1) / 2) fail(o, tag + " N_CZ");
            ++count;
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " circuits, n = 1..8";
    return o;
}

Outcome criterion4() {
    Outcome o;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<CMatrix> bases;
        for (const auto& c : synthesize_partition(generate_partition(n))) bases.push_back(to_dense(c));
        const double dev = mub_overlap_check(bases);
        worst = std::max(worst, dev);
        if (!(dev < kOverlapTol)) fail(o, "n=" + std::to_string(n) + " overlap deviation " + sci(dev));
    }
    if (o.ok) o.detail = "max deviation " + sci(worst);
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto partition =
            partition_from_json(read_json_file(std::string(WIRECUT_FIXTURE_DIR) + "/golden_n" + std::to_string(n) + ".json"));
        validate_partition(partition);
        for (std::size_t i = 0; i + 1 < partition.families.size(); ++i) {
            const auto path = std::string(WIRECUT_FIXTURE_DIR) + "/circuits/n" + std::to_string(n) + "_U" +
                              std::to_string(i + 1) + ".txt";
            const auto golden = parse_circuit(read_file(path), n);
            if (!verify_diagonalizes(golden, partition.families[i])) fail(o, path);
            ++count;
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " golden circuits";
    return o;
}

LayeredCircuit random_circuit(std::mt19937_64& rng) {
    auto unitary = [&](int dim) {
        std::normal_distribution<double> g;
        CMatrix a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
        Eigen::HouseholderQR<CMatrix> qr(a);
        return CMatrix(qr.householderQ());
    };
    LayeredCircuit c;
    c.width = 3;
    c.layers.push_back({{1, 2}, unitary(4)});
    c.layers.push_back({{3}, unitary(2)});
    c.layers.push_back({{2, 3}, unitary(4)});
    c.layers.push_back({{1}, unitary(2)});
    return c;
}

Outcome criterion6() {
    Outcome o;
    double worst = 0.0;
    const std::vector<Decomposition> ds = {build_peng_1q(), build_optimal_1q()};
    auto check = [&](const LayeredCircuit& c, const CutSpec& cuts, const PostProcess& f, const std::string& tag) {
        const double dev = std::abs(analytic_mean(c, cuts, f) - exact_expectation(c, f));
        worst = std::max(worst, dev);
        if (!(dev <= kUnbiasedTol)) fail(o, tag);
    };
    for (const auto& d : ds) check(demo_circuit(), demo_cuts(d), PostProcess::parity(), "demo " + d.label);
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const auto c = random_circuit(rng);
        std::vector<double> table(8);
        for (auto& v : table) v = u(rng);
        const auto f = PostProcess::table(table);
        const int wire = 1 + t % 3;
        const int after = 1 + t % 3;
        for (const auto& d : ds) {
            CutSpec cuts;
            cuts.locations.push_back({after, {wire}, d});
            check(c, cuts, f, "random circuit " + std::to_string(t) + " " + d.label);
        }
    }
    if (o.ok) o.detail = "max |analytic - exact| " + sci(worst);
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto c = demo_circuit();
    const auto f = PostProcess::parity();
    const double exact = exact_expectation(c, f);
    const auto peng = run_monte_carlo(c, demo_cuts(build_peng_1q()), f, kShots, 0);
    const auto opt = run_monte_carlo(c, demo_cuts(build_optimal_1q()), f, kShots, 0);
    for (const auto* r : {&opt, &peng}) {
        const double tol = kSigmaMultiple * r->gamma_total / std::sqrt(static_cast<double>(kShots));
        if (!(std::abs(r->estimate - exact) <= tol))
            fail(o, "estimate " + std::to_string(r->estimate) + " outside " + std::to_string(tol));
    }
    const double ratio = peng.shot_variance / opt.shot_variance;
    if (!(ratio >= 1.0 && ratio <= 16.0 / 9.0 * kRatioSlack)) fail(o, "variance ratio " + std::to_string(ratio));
    if (o.ok) {
        std::ostringstream s;
        s << "optimal1q " << opt.estimate << ", peng " << peng.estimate << " (exact " << exact << "), variance ratio "
          << ratio;
        o.detail = s.str();
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const std::vector<TimeModelParams> grid = {{5, 1000, 1.0, 0.01},  {1000000, 100, 1.0, 0.01}, {1, 1, 2.0, 0.5},
                                               {0, 10, 3.0, 0.25},    {10, 0, 3.0, 0.25},        {7, 7, 1.5, 0.125},
                                               {8, 7, 1.5, 0.125},    {6, 7, 1.5, 0.125},        {100, 1, 0.0, 1.0},
                                               {1, 100, 1.0, 0.0}};
    for (const auto& p : grid) {
        const double m = static_cast<double>(p.m);
        const double n = static_cast<double>(p.shots);
        const double want = p.m <= p.shots ? m * p.t_c + n * p.t_q : n * p.t_c + n * p.t_q;
        if (predict_time(p) != want) fail(o, "time model at m=" + std::to_string(p.m) + " N=" + std::to_string(p.shots));
    }
    std::istringstream csv(overhead_csv(overhead_table(12)));
    std::string line;
    std::getline(csv, line);
    if (line != "method,n,gamma_sq,m") fail(o, "overhead CSV header");
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        std::istringstream ls(line);
        std::string method, n_s, g_s, m_s;
        std::getline(ls, method, ',');
        std::getline(ls, n_s, ',');
        std::getline(ls, g_s, ',');
        std::getline(ls, m_s, ',');
        const int n = std::stoi(n_s);
        const BigInt p = pow(BigInt(2), n);
        BigInt g, m;
        if (method == "no-cc") {
            g = pow(p, 4);
            m = pow(p, 3);
        } else if (method == "randomized") {
            g = pow(2 * p + 1, 2);
            m = pow(p, 4) - 2 * pow(p, 2) + 3;
        } else if (method == "mub") {
            g = pow(2 * p - 1, 2);
            m = p + 1;
        } else if (method == "teleport") {
            g = pow(2 * p - 1, 2);
            m = pow(BigInt(2), static_cast<unsigned>(1U << n)) + pow(p, 2) - p - 1;
        } else {
            fail(o, "unknown method " + method);
            continue;
        }
        if (BigInt(g_s) != g || BigInt(m_s) != m) fail(o, "overhead row " + line.substr(0, 40));
        ++rows;
    }
    if (rows != 48) fail(o, "overhead rows " + std::to_string(rows));
    if (multi_cut_overhead("optimal1q", 3, 1) != 729) fail(o, "multi-cut overhead");
    if (o.ok) o.detail = "10 time-model points, 48 overhead rows, 3 cuts -> 729";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "decomposition residuals", kBudget1, criterion1},
        {2, "overhead and channel-count numbers", 0.0, criterion2},
        {3, "circuit synthesis bounds", kBudget3, criterion3},
        {4, "mutually unbiased bases", 0.0, criterion4},
        {5, "golden generator tables and circuits", 0.0, criterion5},
        {6, "estimator unbiasedness", kBudget6, criterion6},
        {7, "estimator sampling behaviour", kBudget7, criterion7},
        {8, "cost models", 0.0, criterion8},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget > 0.0 && secs > c.budget) fail(o, "took " + std::to_string(secs) + " s");
        if (!o.ok) ++failures;
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << timing
                  << "): " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
