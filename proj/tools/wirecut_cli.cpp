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

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wirecut/channel.hpp"
#include "wirecut/clifford.hpp"
#include "wirecut/cost.hpp"
#include "wirecut/errors.hpp"
#include "wirecut/estimator.hpp"
#include "wirecut/families.hpp"
#include "wirecut/json_io.hpp"

namespace {

using namespace wirecut;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Shortest round-trip representation.
std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        write_text_file(out, text);
    }
}

struct Options {
    int n = 1;
    int nmax = 4;
    std::string method = "optimal1q";
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::string circuit;
    std::string cuts;
    bool optimize_depth = true;
    bool bench_optimize_depth = false;
    std::uint64_t m = 5;
    std::uint64_t big_n = 1000;
    double tc = 1.0;
    double tq = 0.01;
};

int cmd_families(const Options& o) {
    if (o.n < 1) throw InvalidInput("n must be positive");
    const auto partition = generate_partition(o.n);
    validate_partition(partition);
    emit(partition_to_json(partition).dump(1) + "\n", o.out);
    return kExitOk;
}

int cmd_synth(const Options& o) {
    if (o.n < 1) throw InvalidInput("n must be positive");
    const auto partition = generate_partition(o.n);
    const auto circuits = synthesize_partition(partition, o.optimize_depth);
    const bool dense = o.n <= 6;
    std::ostringstream csv;
    csv << "index,n_h,n_s,n_cz,depth,verified\n";
    bool ok = true;
    if (!o.out.empty()) std::filesystem::create_directories(o.out);
    // The last family is {I,Z}^n and needs no circuit.
    for (std::size_t i = 0; i + 1 < circuits.size(); ++i) {
        const auto& c = circuits[i];
        const bool verified = dense ? verify_diagonalizes(c, partition.families[i])
                                    : verify_diagonalizes_symplectic(c, partition.families[i]);
        const auto s = gate_stats(c);
        ok = ok && verified && s.depth <= o.n + 2;
        csv << i + 1 << ',' << s.n_h << ',' << s.n_s << ',' << s.n_cz << ',' << s.depth << ','
            << (verified ? (dense ? "dense" : "symplectic") : "FAILED") << '\n';
        if (!o.out.empty())
            write_text_file((std::filesystem::path(o.out) / ("U" + std::to_string(i + 1) + ".txt")).string(),
                            format_circuit(c));
    }
    if (o.out.empty())
        std::cout << csv.str();
    else
        write_text_file((std::filesystem::path(o.out) / "stats.csv").string(), csv.str());
    if (!ok) {
        std::cerr << "wirecut: synthesized circuit failed verification or depth bound\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    const int n = o.n;
    if (n < 1) throw InvalidInput("n must be positive");
    const std::string& method = o.method;
    const int limit = method == "teleport" || method == "randomized" ? 2 : 5;
    if (method != "peng" && method != "optimal1q" && method != "mub" && method != "teleport" && method != "randomized")
        throw InvalidInput("unknown method: " + method);
    if (n > limit) throw ResourceLimit(method + " verification is limited to n <= " + std::to_string(limit));

    Weight gamma;
    std::size_t m = 0;
    double res = 0.0;
    if (method == "peng" || method == "optimal1q") {
        const auto d1 = build_decomposition(method, 1);
        res = residual(kron_power(ptm(d1), n));
        gamma = Weight(1);
        m = 1;
        for (int k = 0; k < n; ++k) {
            gamma *= d1.gamma();
            m *= d1.m();
        }
    } else {
        const auto d = build_decomposition(method, n);
        res = verify_decomposition(d);
        gamma = d.gamma();
        m = d.m();
    }

    BigInt want_gsq;
    BigInt want_m;
    if (method == "optimal1q") {
        want_gsq = 1;
        want_m = 1;
        for (int k = 0; k < n; ++k) {
            want_gsq *= 9;
            want_m *= 3;
        }
    } else {
        const auto row = closed_form(method, n);
        want_gsq = row.gamma_sq;
        want_m = row.m;
    }
    const BigInt gsq = gamma.denominator() == 1 ? BigInt(gamma.numerator()) * gamma.numerator() : BigInt(-1);
    // The randomized closed form is a minimum channel count.
    const bool m_ok = method == "randomized" ? BigInt(m) >= want_m : BigInt(m) == want_m;
    const bool ok = res < kResidualTolerance && gsq == want_gsq && m_ok;

    if (o.format == "json") {
        Json j{{"method", method},      {"n", n},
               {"gamma", to_double(gamma)}, {"m", m},
               {"residual", res},       {"gamma_sq_expected", want_gsq.str()},
               {"m_expected", want_m.str()}, {"ok", ok}};
        emit(j.dump(1) + "\n", o.out);
    } else {
        std::ostringstream s;
        s << "method=" << method << " n=" << n << " gamma=" << num(to_double(gamma)) << " m=" << m
          << " residual=" << num(res) << " status=" << (ok ? "ok" : "MISMATCH") << '\n';
        emit(s.str(), o.out);
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_exact(const Options& o) {
    const auto c = circuit_from_json(read_json_file(o.circuit));
    const double v = exact_expectation(c.circuit, c.f);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f\n", v);
    emit(buf, o.out);
    return kExitOk;
}

int cmd_estimate(const Options& o) {
    const auto c = circuit_from_json(read_json_file(o.circuit));
    const auto requests = cuts_from_json(read_json_file(o.cuts));
    std::map<std::pair<std::string, std::size_t>, Decomposition> cache;
    CutSpec spec;
    for (const auto& r : requests) {
        const std::string method = r.method.value_or(o.method);
        const auto key = std::make_pair(method, r.wires.size());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build_decomposition(method, static_cast<int>(r.wires.size()))).first;
        spec.locations.push_back({r.after_layer, r.wires, it->second});
    }
    const auto rep = run_monte_carlo(c.circuit, spec, c.f, o.shots, o.seed);
    Json j = report_to_json(rep);
    j["method"] = o.method;
    emit(j.dump(1) + "\n", o.out);
    return kExitOk;
}

int cmd_bench_gatecount(const Options& o) {
    const auto rows = gate_count_bench(o.nmax, o.bench_optimize_depth);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"NS_max", r.ns_max},
                           {"NCZ_max", r.ncz_max},
                           {"Nall_max", r.nall_max},
                           {"bound_CZ", r.bound_cz},
                           {"bound_all", r.bound_all}});
        emit(arr.dump(1) + "\n", o.out);
    } else {
        emit(gate_count_csv(rows), o.out);
    }
    for (const auto& r : rows)
        if (r.ns_max > r.n || r.ncz_max > r.bound_cz || r.nall_max > r.bound_all) return kExitMismatch;
    return kExitOk;
}

int cmd_bench_timemodel(const Options& o) {
    const double t = predict_time({o.m, o.big_n, o.tc, o.tq});
    if (o.format == "json") {
        Json j{{"m", o.m}, {"N", o.big_n}, {"t_c", o.tc}, {"t_q", o.tq}, {"T", t}};
        emit(j.dump(1) + "\n", o.out);
    } else {
        emit("m,N,t_c,t_q,T\n" + std::to_string(o.m) + ',' + std::to_string(o.big_n) + ',' + num(o.tc) + ',' + num(o.tq) +
                 ',' + num(t) + '\n',
             o.out);
    }
    return kExitOk;
}

int cmd_bench_overhead(const Options& o) {
    const auto rows = overhead_table(o.nmax);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"method", r.method}, {"n", r.n}, {"gamma_sq", r.gamma_sq.str()}, {"m", r.m.str()}});
        emit(arr.dump(1) + "\n", o.out);
    } else {
        emit(overhead_csv(rows), o.out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wire cutting with measure-and-prepare channels"};
    app.require_subcommand(1);
    Options o;

    auto* families = app.add_subcommand("families", "Write the MUB family partition as JSON");
    families->add_option("--n", o.n, "Qubits per wire cut")->required();
    families->add_option("--out", o.out, "Output file (default stdout)");

    auto* synth = app.add_subcommand("synth", "Synthesize the diagonalizing circuits");
    synth->add_option("--n", o.n, "Qubits")->required();
    synth->add_option("--out", o.out, "Directory for circuit files and stats.csv");
    synth->add_option("--optimize-depth", o.optimize_depth, "Pack CZ gates into layers (true|false)");

    auto* verify = app.add_subcommand("verify", "Check a decomposition against the identity channel");
    verify->add_option("--method", o.method, "peng|optimal1q|mub|randomized|teleport")->required();
    verify->add_option("--n", o.n, "Wires");
    verify->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", o.out, "Output file");

    auto* exact = app.add_subcommand("exact", "Exact expectation of an uncut circuit");
    exact->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    exact->add_option("--out", o.out, "Output file");

    auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of a cut circuit");
    estimate->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    estimate->add_option("--cuts", o.cuts, "Cuts JSON")->required();
    estimate->add_option("--method", o.method, "Default decomposition for cuts");
    estimate->add_option("--shots", o.shots, "Shots N");
    estimate->add_option("--seed", o.seed, "RNG seed");
    estimate->add_option("--out", o.out, "Output file");

    auto* bench = app.add_subcommand("bench", "Cost-model tables");
    bench->require_subcommand(1);
    auto* gatecount = bench->add_subcommand("gatecount", "Max gate counts per n");
    gatecount->add_option("--nmax", o.nmax, "Largest n");
    gatecount->add_option("--optimize-depth", o.bench_optimize_depth, "Pack CZ gates into layers (true|false)");
    auto* timemodel = bench->add_subcommand("timemodel", "Execution time T = T_C + T_Q");
    timemodel->add_option("--m", o.m, "Channel count");
    timemodel->add_option("--N", o.big_n, "Shots");
    timemodel->add_option("--tc", o.tc, "Compile time per circuit");
    timemodel->add_option("--tq", o.tq, "Run time per shot");
    auto* overhead = bench->add_subcommand("overhead", "Sampling overhead and channel counts");
    overhead->add_option("--nmax", o.nmax, "Largest n");
    for (auto* sub : {gatecount, timemodel, overhead}) {
        sub->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "Output file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (families->parsed()) return cmd_families(o);
        if (synth->parsed()) return cmd_synth(o);
        if (verify->parsed()) return cmd_verify(o);
        if (exact->parsed()) return cmd_exact(o);
        if (estimate->parsed()) return cmd_estimate(o);
        if (gatecount->parsed()) return cmd_bench_gatecount(o);
        if (timemodel->parsed()) return cmd_bench_timemodel(o);
        if (overhead->parsed()) return cmd_bench_overhead(o);
    } catch (const InvalidInput& e) {
        std::cerr << "wirecut: invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "wirecut: resource limit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "wirecut: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "wirecut: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
