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

#ifndef SEMIQFT_QFT_H
#define SEMIQFT_QFT_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semiqft/circuit.h"
#include "semiqft/dyadic_phase.h"
#include "semiqft/simulator.h"
#include "semiqft/state_vector.h"

namespace semiqft {

/// Register layout for transforming (s+1)-bit numbers, q = 2^{s+1}.
///
/// Qubit j carries input bit a_j. Output bit c_k is read from qubit s-k: the most significant
/// input wire yields the least significant output bit, so no swap gates are needed.
struct QftLayout {
    static constexpr unsigned kMaxS = 29;

    unsigned s = 0;

    explicit QftLayout(unsigned s);

    std::size_t width() const noexcept {
        return s + 1;
    }
    uint64_t q() const noexcept {
        return uint64_t{1} << (s + 1);
    }
    QubitId wire_of_readout(CbitId k) const noexcept {
        return s - k;
    }
    CbitId readout_of_wire(QubitId w) const noexcept {
        return s - w;
    }
};

/// The coherent transform followed by measurement. For wire w = s..0: a Hadamard-type split on
/// w, then cphase(w, w-d, m=d+1) for d = 1..w. Then measure qubit s-k into c_k for k = 0..s.
Circuit build_coherent_qft(unsigned s);

/// The measure-and-feedforward replacement. For k = 0..s, on qubit s-k: a classically controlled
/// split whose phase is sum_{j<k} c_j / 2^{k+1-j}, then measure into c_k. No two-qubit gates.
Circuit build_semiclassical_qft(unsigned s);

/// Feedforward phase for the box that follows boxes reading into `earlier[0..k-1]` (in box order):
/// coefficient 1/2^{k+1-j} on earlier[j], constant zero.
PhaseExpression semiclassical_box_phase(std::span<const CbitId> earlier);

/// The same phase obtained by iterating phase_halve_plus from zero over the earlier outcomes.
DyadicPhase feedforward_phase_by_recursion(std::span<const uint8_t> earlier_outcomes);

/// Direct O(q^2) evaluation of (F psi)_c = q^{-1/2} sum_a e^{2 pi i a c / q} psi_a.
StateVector dft_oracle(const StateVector &input);

/// |<c|F psi>|^2 as a distribution over c.
OutcomeDistribution oracle_distribution(const StateVector &input);

/// Exact phases phi_j = sum_{k=0}^{s-j} a_k 2^{j+k-s-1}, j = 0..s.
std::vector<DyadicPhase> product_form_phases(uint64_t a, unsigned s);

/// Tensor product over j of (|0> + e^{2 pi i phi_j}|1>)/sqrt2 on bit j of the output index.
/// Throws std::out_of_range if a >= q.
StateVector product_form_state(uint64_t a, unsigned s);

/// Equal superposition of |offset>, |offset + r>, ... below q.
/// Throws std::invalid_argument unless 0 <= offset < r <= q.
StateVector periodic_state(unsigned s, uint64_t r, uint64_t offset);

/// Per-qubit result of `trace_basis_phases`.
struct TracedWire {
    /// True once the wire has passed a split and is in the state |p(phase)>.
    bool split = false;
    /// Computational bit while unsplit, unused afterwards.
    bool bit = false;
    DyadicPhase phase;
};

/// Symbolically pushes the basis input |a> through the unitary gates of `circuit`, tracking each
/// qubit as either a computational bit or a |p(phi)> state (global phases dropped). Measurements
/// are ignored. Returns nullopt if the state stops being a product of such factors: a split of an
/// already split wire, a cphase between two split wires, or any classically controlled gate.
std::optional<std::vector<TracedWire>> trace_basis_phases(const Circuit &circuit, uint64_t a);

}  // namespace semiqft

#endif
