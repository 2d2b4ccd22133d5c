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

#include "semiqft/simulator.h"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "overloaded.h"

namespace semiqft {

using internal::overloaded;

OutcomeDistribution::OutcomeDistribution(std::size_t n_cbits) : n_cbits_(n_cbits) {
    if (n_cbits > kMaxCbits) {
        throw std::invalid_argument("distribution over " + std::to_string(n_cbits) + " classical bits is too large");
    }
    probabilities_.assign(std::size_t{1} << n_cbits, 0.0);
}

OutcomeDistribution::OutcomeDistribution(std::size_t n_cbits, std::vector<double> probabilities)
    : OutcomeDistribution(n_cbits) {
    if (probabilities.size() != probabilities_.size()) {
        throw std::invalid_argument("expected " + std::to_string(probabilities_.size()) + " probabilities, got " +
                                    std::to_string(probabilities.size()));
    }
    probabilities_ = std::move(probabilities);
}

void OutcomeDistribution::add(uint64_t c, double probability) {
    probabilities_.at(c) += probability;
}

double OutcomeDistribution::total() const {
    double sum = 0;
    for (double p : probabilities_) {
        sum += p;
    }
    return sum;
}

double total_variation_distance(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("distributions cover different numbers of classical bits: " +
                                    std::to_string(p.n_cbits()) + " vs " + std::to_string(q.n_cbits()));
    }
    double sum = 0;
    for (std::size_t c = 0; c < p.size(); ++c) {
        sum += std::abs(p[c] - q[c]);
    }
    return sum / 2;
}

uint64_t Trajectory::readout_value() const {
    uint64_t value = 0;
    for (std::size_t j = 0; j < readout.size(); ++j) {
        value |= static_cast<uint64_t>(readout[j] & 1) << j;
    }
    return value;
}

namespace {

void check_runnable(const Circuit &circuit, const StateVector &input) {
    auto violations = validate(circuit);
    if (!violations.empty()) {
        std::string message = "invalid circuit: " + violations.front().message;
        if (violations.size() > 1) {
            message += " (and " + std::to_string(violations.size() - 1) + " more)";
        }
        throw InvalidCircuitError(message);
    }
    if (input.n_qubits() != circuit.n_qubits) {
        throw InvalidCircuitError("input state has " + std::to_string(input.n_qubits()) + " qubits, circuit has " +
                                  std::to_string(circuit.n_qubits));
    }
    if (circuit.n_cbits > OutcomeDistribution::kMaxCbits) {
        throw InvalidCircuitError("circuit has too many classical bits to enumerate");
    }
}

/// One partially executed run: state, classical bits written so far, and the probability of
/// the measurement branches taken to get here.
struct Branch {
    StateVector state;
    std::vector<uint8_t> cbits;
    double probability;
    std::size_t next;
};

/// Advances `branch` through unitary and feedforward instructions. Stops at the next Measure
/// (returning it) or at the end of the program (returning nullptr).
const Measure *advance_to_measure(const Circuit &circuit, Branch &branch) {
    while (branch.next < circuit.instructions.size()) {
        const Instruction &instruction = circuit.instructions[branch.next];
        if (const auto *m = std::get_if<Measure>(&instruction)) {
            return m;
        }
        std::visit(overloaded{
                       [&](const OneBitSplit &g) { branch.state.apply_one_bit_split(g.target, g.phase); },
                       [&](const ControlledPhase &g) { branch.state.apply_controlled_phase(g.a, g.b, g.m); },
                       [&](const ClassicallyControlledSplit &g) {
                           branch.state.apply_one_bit_split(g.target, g.phase.evaluate(branch.cbits));
                       },
                       [](const Measure &) {},
                   },
                   instruction);
        ++branch.next;
    }
    return nullptr;
}

uint64_t readout_of(const std::vector<uint8_t> &cbits) {
    uint64_t value = 0;
    for (std::size_t j = 0; j < cbits.size(); ++j) {
        value |= static_cast<uint64_t>(cbits[j]) << j;
    }
    return value;
}

}  // namespace

Trajectory run_trajectory(const Circuit &circuit, const StateVector &input, uint64_t seed) {
    check_runnable(circuit, input);
    std::mt19937_64 rng(seed);
    Branch branch{input, std::vector<uint8_t>(circuit.n_cbits, 0), 1.0, 0};
    while (const Measure *m = advance_to_measure(circuit, branch)) {
        // 53 random bits mapped onto [0, 1); portable across standard libraries.
        double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
        MeasurementOutcome outcome = branch.state.measure(m->target, u);
        branch.cbits[m->cbit] = outcome.bit;
        branch.probability *= outcome.probability;
        ++branch.next;
    }
    return Trajectory{std::move(branch.cbits), std::move(branch.state), branch.probability};
}

std::vector<Leaf> enumerate_leaves(const Circuit &circuit, const StateVector &input) {
    check_runnable(circuit, input);
    std::vector<Leaf> leaves;
    std::vector<Branch> stack;
    stack.push_back(Branch{input, std::vector<uint8_t>(circuit.n_cbits, 0), 1.0, 0});
    while (!stack.empty()) {
        Branch branch = std::move(stack.back());
        stack.pop_back();
        const Measure *m = advance_to_measure(circuit, branch);
        if (m == nullptr) {
            leaves.push_back({readout_of(branch.cbits), branch.probability});
            continue;
        }
        double p1 = branch.state.probability_of_one(m->target);
        double p0 = branch.state.norm_squared() - p1;
        // Push outcome 1 first so outcome 0 is explored first.
        bool want_one = p1 >= kBranchPruneThreshold;
        bool want_zero = p0 >= kBranchPruneThreshold;
        if (want_one) {
            Branch one = want_zero ? branch : std::move(branch);
            double p = one.state.collapse(m->target, true);
            one.cbits[m->cbit] = 1;
            one.probability *= p;
            ++one.next;
            stack.push_back(std::move(one));
        }
        if (want_zero) {
            double p = branch.state.collapse(m->target, false);
            branch.cbits[m->cbit] = 0;
            branch.probability *= p;
            ++branch.next;
            stack.push_back(std::move(branch));
        }
    }
    return leaves;
}

OutcomeDistribution run_exact(const Circuit &circuit, const StateVector &input) {
    OutcomeDistribution distribution(circuit.n_cbits);
    for (const Leaf &leaf : enumerate_leaves(circuit, input)) {
        distribution.add(leaf.readout, leaf.probability);
    }
    return distribution;
}

}  // namespace semiqft
