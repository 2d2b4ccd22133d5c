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

#include "semiqft/circuit.h"

#include <sstream>

#include "overloaded.h"

namespace semiqft {

using internal::overloaded;

DyadicPhase PhaseExpression::evaluate(std::span<const uint8_t> cbits) const {
    DyadicPhase total = constant;
    for (const auto &term : terms) {
        if (cbits[term.cbit]) {
            total += term.coefficient;
        }
    }
    return total;
}

std::string describe(const Instruction &instruction) {
    std::ostringstream out;
    std::visit(
        overloaded{
            [&](const OneBitSplit &g) { out << "split(" << g.target << ", phase=" << g.phase << ")"; },
            [&](const ControlledPhase &g) { out << "cphase(" << g.a << ", " << g.b << ", m=" << g.m << ")"; },
            [&](const Measure &g) { out << "measure(" << g.target << " -> c" << g.cbit << ")"; },
            [&](const ClassicallyControlledSplit &g) {
                out << "ccsplit(" << g.target << ", phase=" << g.phase.constant;
                for (const auto &t : g.phase.terms) {
                    out << " + c" << t.cbit << "*" << t.coefficient;
                }
                out << ")";
            },
        },
        instruction);
    return out.str();
}

std::vector<QubitId> qubits_of(const Instruction &instruction) {
    return std::visit(
        overloaded{
            [](const OneBitSplit &g) { return std::vector<QubitId>{g.target}; },
            [](const ControlledPhase &g) { return std::vector<QubitId>{g.a, g.b}; },
            [](const Measure &g) { return std::vector<QubitId>{g.target}; },
            [](const ClassicallyControlledSplit &g) { return std::vector<QubitId>{g.target}; },
        },
        instruction);
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::QubitOutOfRange:
            return "qubit-out-of-range";
        case ViolationKind::CbitOutOfRange:
            return "cbit-out-of-range";
        case ViolationKind::SameOperands:
            return "same-operands";
        case ViolationKind::InvalidM:
            return "invalid-m";
        case ViolationKind::QuantumAfterMeasure:
            return "quantum-after-measure";
        case ViolationKind::RepeatedMeasure:
            return "repeated-measure";
        case ViolationKind::CbitReassigned:
            return "cbit-reassigned";
        case ViolationKind::CbitNeverWritten:
            return "cbit-never-written";
        case ViolationKind::ReadBeforeWrite:
            return "read-before-write";
    }
    return "unknown";
}

std::vector<Violation> validate(const Circuit &circuit) {
    std::vector<Violation> violations;
    std::vector<bool> measured(circuit.n_qubits, false);
    std::vector<bool> written(circuit.n_cbits, false);

    for (std::size_t index = 0; index < circuit.instructions.size(); ++index) {
        const Instruction &instruction = circuit.instructions[index];
        auto report = [&](ViolationKind kind, const std::string &detail) {
            violations.push_back({index, kind, "instruction " + std::to_string(index) + " " + describe(instruction) + ": " + detail});
        };

        bool qubits_ok = true;
        for (QubitId q : qubits_of(instruction)) {
            if (q >= circuit.n_qubits) {
                report(ViolationKind::QubitOutOfRange,
                       "qubit " + std::to_string(q) + " >= n_qubits " + std::to_string(circuit.n_qubits));
                qubits_ok = false;
            }
        }
        if (const auto *g = std::get_if<ControlledPhase>(&instruction)) {
            if (g->a == g->b) {
                report(ViolationKind::SameOperands, "operands must be distinct qubits");
            }
            if (g->m < 1) {
                report(ViolationKind::InvalidM, "m must be >= 1");
            }
        }

        if (const auto *g = std::get_if<Measure>(&instruction)) {
            if (g->cbit >= circuit.n_cbits) {
                report(ViolationKind::CbitOutOfRange,
                       "cbit " + std::to_string(g->cbit) + " >= n_cbits " + std::to_string(circuit.n_cbits));
            } else if (written[g->cbit]) {
                report(ViolationKind::CbitReassigned, "cbit " + std::to_string(g->cbit) + " already written");
            } else {
                written[g->cbit] = true;
            }
            if (qubits_ok) {
                if (measured[g->target]) {
                    report(ViolationKind::RepeatedMeasure, "qubit " + std::to_string(g->target) + " already measured");
                }
                measured[g->target] = true;
            }
            continue;
        }

        if (const auto *g = std::get_if<ClassicallyControlledSplit>(&instruction)) {
            for (const auto &term : g->phase.terms) {
                if (term.cbit >= circuit.n_cbits) {
                    report(ViolationKind::CbitOutOfRange,
                           "cbit " + std::to_string(term.cbit) + " >= n_cbits " + std::to_string(circuit.n_cbits));
                } else if (!written[term.cbit]) {
                    report(ViolationKind::ReadBeforeWrite,
                           "cbit " + std::to_string(term.cbit) + " read before any measurement writes it");
                }
            }
        }

        if (qubits_ok) {
            for (QubitId q : qubits_of(instruction)) {
                if (measured[q]) {
                    report(ViolationKind::QuantumAfterMeasure, "qubit " + std::to_string(q) + " was already measured");
                }
            }
        }
    }

    for (std::size_t c = 0; c < circuit.n_cbits; ++c) {
        if (!written[c]) {
            violations.push_back({circuit.instructions.size(), ViolationKind::CbitNeverWritten,
                                  "cbit " + std::to_string(c) + " is never written by a measurement"});
        }
    }
    return violations;
}

GateCounts gate_counts(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &instruction : circuit.instructions) {
        std::visit(overloaded{
                       [&](const OneBitSplit &) { ++counts.one_bit; },
                       [&](const ControlledPhase &) { ++counts.two_bit; },
                       [&](const Measure &) { ++counts.measurements; },
                       [&](const ClassicallyControlledSplit &) { ++counts.classically_controlled; },
                   },
                   instruction);
    }
    return counts;
}

}  // namespace semiqft
