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
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wirecut {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxCostQubits = 12;

struct TimeModelParams {
    std::uint64_t m = 0;
    std::uint64_t shots = 0;
    double t_c = 1.0;
    double t_q = 0.01;
};

/// T = T_C + T_Q: m t_c + N t_q if m <= N, else N t_c + N t_q.
double predict_time(const TimeModelParams& p);

/// Method labels used in tables: "no-cc", "randomized", "mub", "teleport".
struct MethodRow {
    std::string method;
    int n = 0;
    BigInt gamma_sq;
    BigInt m;
};

/// Closed-form gamma^2 and channel count for one method at n wires. Also
/// accepts "peng" (same as no-cc) and "optimal1q" (n = 1 only).
MethodRow closed_form(std::string_view method, int n);

/// Rows for no-cc, randomized, mub, teleport at each n in 1..n_max.
std::vector<MethodRow> overhead_table(int n_max);

struct GateCountRow {
    int n = 0;
    int ns_max = 0;
    int ncz_max = 0;
    int nall_max = 0;
    int bound_cz = 0;
    int bound_all = 0;
};

/// Max S-dagger, CZ and total gate counts over the 2^n circuits at each n.
/// Depth optimisation is off unless requested.
std::vector<GateCountRow> gate_count_bench(int n_max, bool optimize_depth = false);

/// Product of per-location gamma^2 over k identical cuts of n wires each.
BigInt multi_cut_overhead(std::string_view method, int k_cuts, int n_per_cut);

std::string overhead_csv(const std::vector<MethodRow>& rows);
std::string gate_count_csv(const std::vector<GateCountRow>& rows);

}  // namespace wirecut
