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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wirecut/channel.hpp"
#include "wirecut/estimator.hpp"
#include "wirecut/families.hpp"

namespace wirecut {

using Json = nlohmann::ordered_json;

/// {"n": n, "families": [{"generators": [...], "members": [...]}]}
Json partition_to_json(const FamilyPartition& partition);
/// Members, when present, must match the expansion of the generators.
FamilyPartition partition_from_json(const Json& j);

/// Row-major [[ [re, im], ... ], ...]. Plain reals are accepted on input.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);

struct CircuitFile {
    LayeredCircuit circuit;
    PostProcess f = PostProcess::parity();
};

/// {"width": L, "layers": [{"qubits": [...], "matrix": [[...]]}], "f": "parity" | "bit:k" | "table", "table": [...]}
CircuitFile circuit_from_json(const Json& j);
Json circuit_to_json(const CircuitFile& c);

struct CutRequest {
    int after_layer = 0;
    std::vector<int> wires;
    std::optional<std::string> method;
};

/// {"cuts": [{"after_layer": t, "wires": [...], "method": "..."}]}; method is optional.
std::vector<CutRequest> cuts_from_json(const Json& j);
Json cuts_to_json(const std::vector<CutRequest>& cuts);

Json report_to_json(const EstimateReport& r);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wirecut
