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

#include "wirecut/cost.hpp"

#include <algorithm>
#include <sstream>

#include "wirecut/clifford.hpp"
#include "wirecut/errors.hpp"
#include "wirecut/families.hpp"

namespace wirecut {

namespace {

BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt square(const BigInt& x) { return x * x; }

void check_n(int n) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (n > kMaxCostQubits) throw ResourceLimit("n exceeds " + std::to_string(kMaxCostQubits));
}

}  // namespace

double predict_time(const TimeModelParams& p) {
    if (p.t_c < 0 || p.t_q < 0) throw InvalidInput("unit times must be nonnegative");
    const auto n = static_cast<double>(p.shots);
    if (p.m <= p.shots) return static_cast<double>(p.m) * p.t_c + n * p.t_q;
    return n * p.t_c + n * p.t_q;
}

MethodRow closed_form(std::string_view method, int n) {
    check_n(n);
    const auto un = static_cast<unsigned>(n);
    MethodRow row;
    row.n = n;
    if (method == "no-cc" || method == "peng") {
        row.method = "no-cc";
        row.gamma_sq = pow2(4 * un);
        row.m = pow2(3 * un);
    } else if (method == "randomized") {
        row.method = "randomized";
        row.gamma_sq = square(pow2(un + 1) + 1);
        row.m = pow2(4 * un) - 2 * pow2(2 * un) + 3;
    } else if (method == "mub" || method == "optimal1q") {
        if (method == "optimal1q" && n != 1) throw InvalidInput("optimal1q is a single-wire decomposition");
        row.method = std::string(method);
        row.gamma_sq = square(pow2(un + 1) - 1);
        row.m = pow2(un) + 1;
    } else if (method == "teleport") {
        row.method = "teleport";
        row.gamma_sq = square(pow2(un + 1) - 1);
        row.m = pow2(1U << un) + pow2(2 * un) - pow2(un) - 1;
    } else {
        throw InvalidInput("unknown method: " + std::string(method));
    }
    return row;
}

std::vector<MethodRow> overhead_table(int n_max) {
    check_n(n_max);
    std::vector<MethodRow> rows;
    for (int n = 1; n <= n_max; ++n)
        for (const char* m : {"no-cc", "randomized", "mub", "teleport"}) rows.push_back(closed_form(m, n));
    return rows;
}

std::vector<GateCountRow> gate_count_bench(int n_max, bool optimize_depth) {
    check_n(n_max);
    std::vector<GateCountRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        GateCountRow row;
        row.n = n;
        row.bound_cz = n * (n - 1) / 2;
        row.bound_all = 2 * n + row.bound_cz;
        for (auto& gens : partition_generators(n)) {
            if (std::all_of(gens.begin(), gens.end(), [](const PauliString& p) { return p.is_diagonal(); })) continue;
            const auto stats = gate_stats(synthesize(CommutingFamily::from_generators(std::move(gens)), optimize_depth));
            row.ns_max = std::max(row.ns_max, stats.n_s);
            row.ncz_max = std::max(row.ncz_max, stats.n_cz);
            row.nall_max = std::max(row.nall_max, stats.n_h + stats.n_s + stats.n_cz);
        }
        rows.push_back(row);
    }
    return rows;
}

BigInt multi_cut_overhead(std::string_view method, int k_cuts, int n_per_cut) {
    if (k_cuts < 0) throw InvalidInput("cut count must be nonnegative");
    if (k_cuts == 0) return 1;
    const BigInt g = closed_form(method, n_per_cut).gamma_sq;
    BigInt total = 1;
    for (int k = 0; k < k_cuts; ++k) total *= g;
    return total;
}

std::string overhead_csv(const std::vector<MethodRow>& rows) {
    std::ostringstream out;
    out << "method,n,gamma_sq,m\n";
    for (const auto& r : rows) out << r.method << ',' << r.n << ',' << r.gamma_sq << ',' << r.m << '\n';
    return out.str();
}

std::string gate_count_csv(const std::vector<GateCountRow>& rows) {
    std::ostringstream out;
    out << "n,NS_max,NCZ_max,Nall_max,bound_CZ,bound_all\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.ns_max << ',' << r.ncz_max << ',' << r.nall_max << ',' << r.bound_cz << ',' << r.bound_all
            << '\n';
    return out.str();
}

}  // namespace wirecut
