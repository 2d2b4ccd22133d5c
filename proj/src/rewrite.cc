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

#include "semiqft/rewrite.h"

#include <algorithm>
#include <string>
#include <utility>

#include "semiqft/qft.h"
#include "semiqft/simulator.h"

namespace semiqft {

namespace {

DetectionResult no_match(std::string diagnostic) {
    return {std::nullopt, std::move(diagnostic)};
}

std::string qubit_name(QubitId q) {
    return "qubit " + std::to_string(q);
}

}  // namespace

DetectionResult detect_terminal_qft(const Circuit &circuit) {
    if (auto violations = validate(circuit); !violations.empty()) {
        return no_match("circuit is invalid: " + violations.front().message);
    }
    const auto &ins = circuit.instructions;
    const std::size_t end = ins.size();

    std::size_t measure_begin = end;
    while (measure_begin > 0 && std::holds_alternative<Measure>(ins[measure_begin - 1])) {
        --measure_begin;
    }
    if (measure_begin == end) {
        return no_match("circuit does not end with measurements");
    }

    std::vector<bool> in_block(circuit.n_qubits, false);
    std::vector<CbitId> cbit_of(circuit.n_qubits, 0);
    std::vector<QubitId> measured;
    for (std::size_t i = measure_begin; i < end; ++i) {
        const auto &m = std::get<Measure>(ins[i]);
        in_block[m.target] = true;
        cbit_of[m.target] = m.cbit;
        measured.push_back(m.target);
    }
    const std::size_t n = measured.size();
    const std::size_t body_size = n + n * (n - 1) / 2;

    auto is_transform_gate = [&](const Instruction &instruction) {
        if (const auto *g = std::get_if<OneBitSplit>(&instruction)) {
            return g->phase.is_zero() && in_block[g->target];
        }
        if (const auto *g = std::get_if<ControlledPhase>(&instruction)) {
            return in_block[g->a] && in_block[g->b];
        }
        return false;
    };
    std::size_t begin = measure_begin;
    while (begin > 0 && measure_begin - begin < body_size && is_transform_gate(ins[begin - 1])) {
        --begin;
    }
    auto stop_context = [&]() -> std::string {
        if (begin == 0 || measure_begin - begin == body_size) {
            return "";
        }
        return " (transform block starts after instruction " + std::to_string(begin - 1) + " " + describe(ins[begin - 1]) +
               ")";
    };

    // Each wire is split exactly once; the split order fixes the wire order.
    std::vector<std::optional<std::size_t>> split_at(circuit.n_qubits);
    for (std::size_t i = begin; i < measure_begin; ++i) {
        if (const auto *g = std::get_if<OneBitSplit>(&ins[i])) {
            if (split_at[g->target]) {
                return no_match(qubit_name(g->target) + " is split twice in the transform block (instructions " +
                                std::to_string(*split_at[g->target]) + " and " + std::to_string(i) + ")");
            }
            split_at[g->target] = i;
        }
    }
    for (QubitId q : measured) {
        if (!split_at[q]) {
            return no_match("measured " + qubit_name(q) + " has no phase-free split before its measurement" +
                            stop_context());
        }
    }
    std::vector<QubitId> wires = measured;
    std::sort(wires.begin(), wires.end(), [&](QubitId x, QubitId y) { return *split_at[x] < *split_at[y]; });
    std::vector<std::size_t> role(circuit.n_qubits, 0);
    for (std::size_t r = 0; r < n; ++r) {
        role[wires[r]] = r;
    }

    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t i = begin; i < measure_begin; ++i) {
        const auto *g = std::get_if<ControlledPhase>(&ins[i]);
        if (g == nullptr) {
            continue;
        }
        std::size_t lo = std::min(role[g->a], role[g->b]);
        std::size_t hi = std::max(role[g->a], role[g->b]);
        const std::string where = "instruction " + std::to_string(i) + " " + describe(ins[i]);
        const auto expected_m = static_cast<uint32_t>(hi - lo + 1);
        if (g->m != expected_m) {
            return no_match(where + ": expected m=" + std::to_string(expected_m) + " between " + qubit_name(wires[lo]) +
                            " and " + qubit_name(wires[hi]));
        }
        if (seen[lo][hi]) {
            return no_match(where + ": duplicate controlled phase between " + qubit_name(wires[lo]) + " and " +
                            qubit_name(wires[hi]));
        }
        if (i < *split_at[wires[lo]]) {
            return no_match(where + ": comes before the split of " + qubit_name(wires[lo]));
        }
        if (i > *split_at[wires[hi]]) {
            return no_match(where + ": comes after the split of " + qubit_name(wires[hi]));
        }
        seen[lo][hi] = true;
    }
    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = lo + 1; hi < n; ++hi) {
            if (!seen[lo][hi]) {
                return no_match("missing cphase(" + std::to_string(wires[lo]) + ", " + std::to_string(wires[hi]) +
                                ", m=" + std::to_string(hi - lo + 1) + ") between " + qubit_name(wires[lo]) + " and " +
                                qubit_name(wires[hi]) + stop_context());
            }
        }
    }

    QftMatch match{begin, end, wires, {}};
    for (QubitId w : wires) {
        match.readout_cbits.push_back(cbit_of[w]);
    }
    return {std::move(match), ""};
}

RewriteResult rewrite_semiclassical(const Circuit &circuit) {
    DetectionResult detection = detect_terminal_qft(circuit);
    if (!detection) {
        throw RewriteError("no terminal QFT to rewrite: " + detection.diagnostic);
    }
    const QftMatch &match = *detection.match;

    RewriteResult result;
    result.circuit.n_qubits = circuit.n_qubits;
    result.circuit.n_cbits = circuit.n_cbits;
    result.circuit.instructions.assign(circuit.instructions.begin(),
                                       circuit.instructions.begin() + static_cast<std::ptrdiff_t>(match.span_begin));
    std::vector<CbitId> earlier;
    for (std::size_t k = 0; k < match.wires.size(); ++k) {
        result.circuit.instructions.push_back(ClassicallyControlledSplit{match.wires[k], semiclassical_box_phase(earlier)});
        result.circuit.instructions.push_back(Measure{match.wires[k], match.readout_cbits[k]});
        earlier.push_back(match.readout_cbits[k]);
    }

    for (std::size_t i = match.span_begin; i < match.span_end; ++i) {
        if (std::holds_alternative<ControlledPhase>(circuit.instructions[i])) {
            ++result.report.two_bit_gates_removed;
        }
    }
    result.report.classically_controlled_gates_added = match.wires.size();
    result.report.measurements = match.wires.size();
    result.report.matched = true;
    return result;
}

EquivalenceReport equivalence_report(const Circuit &a, const Circuit &b, std::span<const StateVector> inputs) {
    if (a.n_qubits != b.n_qubits || a.n_cbits != b.n_cbits) {
        throw std::invalid_argument("circuits have different registers: " + std::to_string(a.n_qubits) + " qubits / " +
                                    std::to_string(a.n_cbits) + " cbits vs " + std::to_string(b.n_qubits) + " qubits / " +
                                    std::to_string(b.n_cbits) + " cbits");
    }
    EquivalenceReport report;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].n_qubits() != a.n_qubits) {
            throw std::invalid_argument("input " + std::to_string(i) + " has " + std::to_string(inputs[i].n_qubits()) +
                                        " qubits, circuits have " + std::to_string(a.n_qubits));
        }
        double tv = total_variation_distance(run_exact(a, inputs[i]), run_exact(b, inputs[i]));
        report.distances.push_back(tv);
        if (tv > report.max_tv_distance) {
            report.max_tv_distance = tv;
            report.worst_input = i;
        }
    }
    return report;
}

}  // namespace semiqft
