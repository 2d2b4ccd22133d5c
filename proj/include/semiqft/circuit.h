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

#ifndef SEMIQFT_CIRCUIT_H
#define SEMIQFT_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiqft/dyadic_phase.h"

namespace semiqft {

using QubitId = uint32_t;
using CbitId = uint32_t;

/// |0> -> (|0> + |1>)/sqrt2, |1> -> e^{2 pi i phase} (|0> - |1>)/sqrt2.
/// A phase shift on |1> followed by a Hadamard; phase 0 is the plain Hadamard.
struct OneBitSplit {
    QubitId target = 0;
    DyadicPhase phase;

    friend bool operator==(const OneBitSplit &, const OneBitSplit &) = default;
};

/// Multiplies |11> by e^{2 pi i / 2^m}. Symmetric in its operands, so equality ignores their order.
struct ControlledPhase {
    QubitId a = 0;
    QubitId b = 0;
    uint32_t m = 1;

    DyadicPhase phase() const {
        return DyadicPhase::power_of_half(m);
    }

    friend bool operator==(const ControlledPhase &x, const ControlledPhase &y) {
        return x.m == y.m && ((x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a));
    }
};

struct Measure {
    QubitId target = 0;
    CbitId cbit = 0;

    friend bool operator==(const Measure &, const Measure &) = default;
};

struct PhaseTerm {
    CbitId cbit = 0;
    DyadicPhase coefficient;

    friend bool operator==(const PhaseTerm &, const PhaseTerm &) = default;
};

/// constant + sum(bit * coefficient) mod 1, evaluated against classical bits at run time.
struct PhaseExpression {
    DyadicPhase constant;
    std::vector<PhaseTerm> terms;

    /// `cbits[i]` is the value of classical bit i. Referenced bits must be in range.
    DyadicPhase evaluate(std::span<const uint8_t> cbits) const;

    friend bool operator==(const PhaseExpression &, const PhaseExpression &) = default;
};

/// OneBitSplit whose phase is chosen by earlier measurement results.
struct ClassicallyControlledSplit {
    QubitId target = 0;
    PhaseExpression phase;

    friend bool operator==(const ClassicallyControlledSplit &, const ClassicallyControlledSplit &) = default;
};

using Instruction = std::variant<OneBitSplit, ControlledPhase, Measure, ClassicallyControlledSplit>;

/// A flat program over `n_qubits` qubits and `n_cbits` classical bits.
struct Circuit {
    std::size_t n_qubits = 0;
    std::size_t n_cbits = 0;
    std::vector<Instruction> instructions;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Short human-readable rendering, e.g. "cphase(3, 1, m=3)".
std::string describe(const Instruction &instruction);

/// Qubits acted on by the instruction (one or two entries).
std::vector<QubitId> qubits_of(const Instruction &instruction);

enum class ViolationKind {
    QubitOutOfRange,
    CbitOutOfRange,
    SameOperands,
    InvalidM,
    QuantumAfterMeasure,
    RepeatedMeasure,
    CbitReassigned,
    CbitNeverWritten,
    ReadBeforeWrite,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    /// Offending instruction; equals instructions.size() for whole-program violations.
    std::size_t instruction_index = 0;
    ViolationKind kind = ViolationKind::QubitOutOfRange;
    std::string message;
};

/// Every invariant violation in program order. Empty iff the circuit is well-formed.
std::vector<Violation> validate(const Circuit &circuit);

struct GateCounts {
    std::size_t one_bit = 0;
    std::size_t two_bit = 0;
    std::size_t measurements = 0;
    std::size_t classically_controlled = 0;

    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

GateCounts gate_counts(const Circuit &circuit);

}  // namespace semiqft

#endif
