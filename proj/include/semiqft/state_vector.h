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

#ifndef SEMIQFT_STATE_VECTOR_H
#define SEMIQFT_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "semiqft/circuit.h"
#include "semiqft/dyadic_phase.h"

namespace semiqft {

using Amplitude = std::complex<double>;

/// e^{2 pi i phase}. Exact for multiples of a quarter turn.
Amplitude unit_phase(DyadicPhase phase);

/// Probabilities below this are treated as unreachable measurement branches.
inline constexpr double kBranchPruneThreshold = 1e-15;

struct MeasurementOutcome {
    bool bit = false;
    /// Probability of the branch that was taken, before renormalization.
    double probability = 0;
};

/// Dense state of n qubits. Basis index b holds qubit j in bit j of b (little-endian).
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 30;

    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);

    static StateVector basis(std::size_t n_qubits, uint64_t index);

    /// Takes amplitudes as given (no renormalization). The length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    /// Normalized state with i.i.d. Gaussian real and imaginary parts (unitarily invariant).
    static StateVector random(std::size_t n_qubits, std::mt19937_64 &rng);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Amplitude &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;

    /// Applies |0> -> (|0>+|1>)/sqrt2, |1> -> e^{2 pi i phase}(|0>-|1>)/sqrt2 to `target`.
    void apply_one_bit_split(QubitId target, DyadicPhase phase);

    /// Multiplies every amplitude with both qubits set by e^{2 pi i / 2^m}.
    void apply_controlled_phase(QubitId a, QubitId b, uint32_t m);

    /// Total probability of basis states with `target` set.
    double probability_of_one(QubitId target) const;

    /// Projects `target` onto `outcome` and renormalizes. Returns the branch probability.
    /// Throws std::domain_error if that branch is unreachable.
    double collapse(QubitId target, bool outcome);

    /// Computational-basis measurement driven by an explicit draw u in [0, 1): the outcome is 1
    /// iff u < P(1). Throws std::logic_error if P(1) lies outside [0, 1] by more than 1e-12.
    MeasurementOutcome measure(QubitId target, double u);

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    void check_qubit(QubitId q) const;

    std::size_t n_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// Largest componentwise |a_i - b_i|. Throws std::invalid_argument on size mismatch.
double max_abs_difference(const StateVector &a, const StateVector &b);

}  // namespace semiqft

#endif
