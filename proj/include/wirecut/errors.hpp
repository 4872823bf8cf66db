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

#include <stdexcept>
#include <string>

namespace wirecut {

// Error taxonomy shared by every module. The CLI maps InvalidInput and
// ResourceLimit to exit code 2 and verification failures to exit code 1.

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a commuting family cannot be diagonalized by Algorithm-style
/// synthesis (X-block rank deficient).
struct SynthesisFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The supplied unitary ensemble does not reproduce the identity channel.
struct DesignViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wirecut
