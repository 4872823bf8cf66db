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

#include "wirecut/json_io.hpp"

#include <fstream>
#include <sstream>

#include "wirecut/errors.hpp"

namespace wirecut {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidInput(std::string("field \"") + key + "\" has the wrong type");
    }
}

Json pauli_list(const std::vector<PauliString>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.str());
    return out;
}

}  // namespace

Json partition_to_json(const FamilyPartition& partition) {
    Json j;
    j["n"] = partition.num_qubits;
    j["families"] = Json::array();
    for (const auto& fam : partition.families)
        j["families"].push_back({{"generators", pauli_list(fam.generators())}, {"members", pauli_list(fam.members())}});
    return j;
}

FamilyPartition partition_from_json(const Json& j) {
    FamilyPartition out;
    out.num_qubits = get_field<int>(j, "n");
    if (!j.contains("families") || !j["families"].is_array()) throw InvalidInput("missing families array");
    for (const auto& f : j["families"]) {
        std::vector<PauliString> gens;
        for (const auto& s : get_field<std::vector<std::string>>(f, "generators")) gens.push_back(PauliString::from_string(s));
        auto fam = CommutingFamily::from_generators(std::move(gens));
        if (f.contains("members")) {
            std::vector<PauliString> members;
            for (const auto& s : get_field<std::vector<std::string>>(f, "members")) members.push_back(PauliString::from_string(s));
            if (CommutingFamily::from_members(std::move(members)).members() != fam.members())
                throw InvalidInput("family members do not match generators");
        }
        if (fam.num_qubits() != out.num_qubits) throw InvalidInput("family size does not match n");
        out.families.push_back(std::move(fam));
    }
    return out;
}

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
    if (cols == 0) throw InvalidInput("matrix rows must be non-empty arrays");
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw InvalidInput("ragged matrix");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& e = row[static_cast<std::size_t>(c)];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = {e[0].get<double>(), e[1].get<double>()};
            } else {
                throw InvalidInput("matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

Json decomposition_to_json(const Decomposition& d) {
    Json j;
    const Weight g = d.gamma();
    j["label"] = d.label;
    j["n"] = d.num_qubits;
    j["gamma"] = to_double(g);
    j["gamma_exact"] = std::to_string(g.numerator()) + (g.denominator() == 1 ? "" : "/" + std::to_string(g.denominator()));
    j["m"] = d.m();
    j["channels"] = Json::array();
    for (const auto& wc : d.channels) {
        Json ch;
        ch["weight"] = to_double(wc.c);
        ch["weight_exact"] =
            std::to_string(wc.c.numerator()) + (wc.c.denominator() == 1 ? "" : "/" + std::to_string(wc.c.denominator()));
        ch["terms"] = Json::array();
        for (const auto& t : wc.channel.terms())
            ch["terms"].push_back({{"a", t.a}, {"effect", matrix_to_json(t.effect)}, {"prep", matrix_to_json(t.prep)}});
        j["channels"].push_back(std::move(ch));
    }
    return j;
}

CircuitFile circuit_from_json(const Json& j) {
    CircuitFile out;
    out.circuit.width = get_field<int>(j, "width");
    if (j.contains("layers")) {
        if (!j["layers"].is_array()) throw InvalidInput("layers must be an array");
        for (const auto& l : j["layers"]) {
            CircuitLayer layer;
            layer.qubits = get_field<std::vector<int>>(l, "qubits");
            if (!l.contains("matrix")) throw InvalidInput("layer is missing its matrix");
            layer.matrix = matrix_from_json(l["matrix"]);
            out.circuit.layers.push_back(std::move(layer));
        }
    }
    const std::string f = j.contains("f") ? get_field<std::string>(j, "f") : "parity";
    if (f == "parity") {
        out.f = PostProcess::parity();
    } else if (f.rfind("bit:", 0) == 0) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(f.substr(4), &used);
            if (used != f.size() - 4) throw InvalidInput("bad bit index");
        } catch (const std::logic_error&) {
            throw InvalidInput("bad post-processing spec: " + f);
        }
        out.f = PostProcess::bit(k);
    } else if (f == "table") {
        out.f = PostProcess::table(get_field<std::vector<double>>(j, "table"));
    } else {
        throw InvalidInput("unknown post-processing spec: " + f);
    }
    out.circuit.validate();
    if (out.f.kind() == PostProcess::Kind::Bit && (out.f.bit_index() < 1 || out.f.bit_index() > out.circuit.width))
        throw InvalidInput("bit index out of range");
    if (out.f.kind() == PostProcess::Kind::Table && out.f.values().size() != (std::size_t{1} << out.circuit.width))
        throw InvalidInput("table must have 2^width entries");
    return out;
}

Json circuit_to_json(const CircuitFile& c) {
    Json j;
    j["width"] = c.circuit.width;
    j["layers"] = Json::array();
    for (const auto& l : c.circuit.layers) j["layers"].push_back({{"qubits", l.qubits}, {"matrix", matrix_to_json(l.matrix)}});
    j["f"] = c.f.kind() == PostProcess::Kind::Table ? "table" : c.f.str();
    if (c.f.kind() == PostProcess::Kind::Table) j["table"] = c.f.values();
    return j;
}

std::vector<CutRequest> cuts_from_json(const Json& j) {
    if (!j.contains("cuts") || !j["cuts"].is_array()) throw InvalidInput("missing cuts array");
    std::vector<CutRequest> out;
    for (const auto& c : j["cuts"]) {
        CutRequest r;
        r.after_layer = get_field<int>(c, "after_layer");
        r.wires = get_field<std::vector<int>>(c, "wires");
        if (c.contains("method")) r.method = get_field<std::string>(c, "method");
        out.push_back(std::move(r));
    }
    return out;
}

Json cuts_to_json(const std::vector<CutRequest>& cuts) {
    Json arr = Json::array();
    for (const auto& c : cuts) {
        Json e{{"after_layer", c.after_layer}, {"wires", c.wires}};
        if (c.method) e["method"] = *c.method;
        arr.push_back(std::move(e));
    }
    return Json{{"cuts", arr}};
}

Json report_to_json(const EstimateReport& r) {
    Json j;
    j["estimate"] = r.estimate;
    j["shots"] = r.shots;
    j["gamma_total"] = r.gamma_total;
    j["std_error"] = r.std_error;
    j["shot_variance"] = r.shot_variance;
    j["seed"] = r.seed;
    j["tallies"] = r.tallies;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("cannot parse " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ResourceLimit("cannot write " + path);
    out << text;
    if (!out) throw ResourceLimit("write failed for " + path);
}

}  // namespace wirecut
