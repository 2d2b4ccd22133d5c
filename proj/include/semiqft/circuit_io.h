// Copyright 2026 The semiqft Authors
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

#ifndef SEMIQFT_CIRCUIT_IO_H
#define SEMIQFT_CIRCUIT_IO_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "semiqft/circuit.h"

namespace semiqft {

/// Malformed circuit text. `where()` is a JSON path such as "instructions[3].m", or
/// "byte 17" for syntax errors.
class CircuitFormatError : public std::runtime_error {
   public:
    CircuitFormatError(std::string where, const std::string &reason)
        : std::runtime_error(where + ": " + reason), where_(std::move(where)) {
    }

    const std::string &where() const noexcept {
        return where_;
    }

   private:
    std::string where_;
};

/// JSON circuit file:
///
///     {"n_qubits": 2, "n_cbits": 2, "instructions": [
///         {"kind": "split", "target": 1, "phase": {"num": 0, "log2den": 0}},
///         {"kind": "cphase", "a": 1, "b": 0, "m": 2},
///         {"kind": "measure", "target": 1, "cbit": 0},
///         {"kind": "ccsplit", "target": 0, "const": {"num": 0, "log2den": 0},
///          "terms": [{"cbit": 0, "coeff": {"num": 1, "log2den": 2}}]},
///         {"kind": "measure", "target": 0, "cbit": 1}]}
///
/// Phases are exact integer pairs. Output is deterministic.
std::string serialize(const Circuit &circuit);

/// Parses the format written by `serialize`. Field order is irrelevant; unknown fields, unknown
/// kinds, out-of-range ids, m < 1, identical cphase operands and non-canonical phases are rejected
/// with a CircuitFormatError. Program-order invariants are left to `validate`.
Circuit deserialize(std::string_view text);

}  // namespace semiqft

#endif
