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

#ifndef SEMIQFT_SIMULATOR_H
#define SEMIQFT_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "semiqft/circuit.h"
#include "semiqft/state_vector.h"

namespace semiqft {

/// Thrown when a circuit handed to the simulator fails `validate`, or the input has the wrong size.
class InvalidCircuitError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Probability of each readout integer c = sum_j c_j 2^j over the classical bits.
class OutcomeDistribution {
   public:
    static constexpr std::size_t kMaxCbits = 30;

    explicit OutcomeDistribution(std::size_t n_cbits);
    OutcomeDistribution(std::size_t n_cbits, std::vector<double> probabilities);

    std::size_t n_cbits() const noexcept {
        return n_cbits_;
    }
    std::size_t size() const noexcept {
        return probabilities_.size();
    }
    double operator[](std::size_t c) const {
        return probabilities_[c];
    }
    std::span<const double> probabilities() const noexcept {
        return probabilities_;
    }

    void add(uint64_t c, double probability);
    double total() const;

    friend bool operator==(const OutcomeDistribution &, const OutcomeDistribution &) = default;

   private:
    std::size_t n_cbits_;
    std::vector<double> probabilities_;
};

/// 1/2 sum_c |p(c) - q(c)|. Throws std::invalid_argument on size mismatch.
double total_variation_distance(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// One sampled run of a circuit.
struct Trajectory {
    /// Value of each classical bit.
    std::vector<uint8_t> readout;
    StateVector final_state;
    /// Product of the probabilities of the branches taken.
    double probability_of_path = 1;

    uint64_t readout_value() const;
};

/// A leaf of the measurement-branch tree.
struct Leaf {
    uint64_t readout = 0;
    double probability = 0;
};

/// Runs the circuit once, drawing each measurement from a 64-bit Mersenne Twister seeded with
/// `seed`. Deterministic in (circuit, input, seed).
Trajectory run_trajectory(const Circuit &circuit, const StateVector &input, uint64_t seed);

/// Every reachable leaf (branch probability >= kBranchPruneThreshold at each measurement),
/// depth-first with outcome 0 explored before outcome 1.
std::vector<Leaf> enumerate_leaves(const Circuit &circuit, const StateVector &input);

/// Exact readout distribution, summing the leaves of `enumerate_leaves` in order.
OutcomeDistribution run_exact(const Circuit &circuit, const StateVector &input);

}  // namespace semiqft

#endif
