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

#ifndef SEMIQFT_REWRITE_H
#define SEMIQFT_REWRITE_H

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiqft/circuit.h"
#include "semiqft/state_vector.h"

namespace semiqft {

/// A terminal quantum Fourier transform found in a circuit.
struct QftMatch {
    /// Instructions [span_begin, span_end) are the transform and its measurements; span_end is
    /// always the end of the circuit.
    std::size_t span_begin = 0;
    std::size_t span_end = 0;
    /// Qubits in transform order: wires[0] is split first and yields the least significant
    /// output bit.
    std::vector<QubitId> wires;
    /// readout_cbits[i] is the classical bit that wires[i] is measured into.
    std::vector<CbitId> readout_cbits;

    friend bool operator==(const QftMatch &, const QftMatch &) = default;
};

struct DetectionResult {
    std::optional<QftMatch> match;
    /// First structural mismatch when there is no match.
    std::string diagnostic;

    explicit operator bool() const noexcept {
        return match.has_value();
    }
};

/// Finds a coherent QFT followed by measurement of every one of its wires at the end of the
/// circuit. Wires may be any permutation of qubits. Within the block the controlled phases may
/// appear in any order, as long as each pair's gate comes after the split of its earlier wire and
/// before the split of its later wire (all the diagonal gates commute). Requires a valid circuit.
DetectionResult detect_terminal_qft(const Circuit &circuit);

struct RewriteReport {
    std::size_t two_bit_gates_removed = 0;
    std::size_t classically_controlled_gates_added = 0;
    std::size_t measurements = 0;
    bool matched = false;

    friend bool operator==(const RewriteReport &, const RewriteReport &) = default;
};

struct RewriteResult {
    Circuit circuit;
    RewriteReport report;
};

class RewriteError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Replaces the matched terminal QFT with measure-and-feedforward boxes on the same wires and
/// classical bits. The prefix is kept verbatim. Throws RewriteError carrying the detector's
/// diagnostic when there is no match, or when the circuit fails validation.
RewriteResult rewrite_semiclassical(const Circuit &circuit);

struct EquivalenceReport {
    double max_tv_distance = 0;
    std::size_t worst_input = 0;
    std::vector<double> distances;
};

/// Total-variation distance between the exact readout distributions of `a` and `b` on each input.
/// Throws std::invalid_argument if register sizes differ or an input has the wrong width.
EquivalenceReport equivalence_report(const Circuit &a, const Circuit &b, std::span<const StateVector> inputs);

}  // namespace semiqft

#endif
