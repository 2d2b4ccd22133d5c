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

#include "semiqft/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace semiqft {

Amplitude unit_phase(DyadicPhase phase) {
    if (phase.log2_denominator() <= 2) {
        switch (phase.numerator() << (2 - phase.log2_denominator())) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            case 3:
                return {0, -1};
        }
    }
    return std::polar(1.0, 2 * std::numbers::pi * phase.turns());
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("state of " + std::to_string(n_qubits) + " qubits exceeds the limit of " +
                                    std::to_string(kMaxQubits));
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{});
    amplitudes_[0] = 1;
}

StateVector StateVector::basis(std::size_t n_qubits, uint64_t index) {
    StateVector state(n_qubits);
    if (index >= state.size()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " + std::to_string(n_qubits) +
                                " qubits");
    }
    state.amplitudes_[0] = 0;
    state.amplitudes_[index] = 1;
    return state;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count " + std::to_string(amplitudes.size()) + " is not a power of two");
    }
    StateVector state(static_cast<std::size_t>(std::countr_zero(amplitudes.size())));
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

StateVector StateVector::random(std::size_t n_qubits, std::mt19937_64 &rng) {
    StateVector state(n_qubits);
    std::normal_distribution<double> gauss;
    double total = 0;
    for (auto &amp : state.amplitudes_) {
        amp = {gauss(rng), gauss(rng)};
        total += std::norm(amp);
    }
    double scale = 1 / std::sqrt(total);
    for (auto &amp : state.amplitudes_) {
        amp *= scale;
    }
    return state;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &amp : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

void StateVector::check_qubit(QubitId q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_one_bit_split(QubitId target, DyadicPhase phase) {
    check_qubit(target);
    const Amplitude w = unit_phase(phase);
    const double r = std::numbers::sqrt2 / 2;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            Amplitude zero = amplitudes_[i];
            Amplitude one = w * amplitudes_[i + stride];
            amplitudes_[i] = r * (zero + one);
            amplitudes_[i + stride] = r * (zero - one);
        }
    }
}

void StateVector::apply_controlled_phase(QubitId a, QubitId b, uint32_t m) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("controlled phase needs two distinct qubits, got " + std::to_string(a) + " twice");
    }
    if (m < 1) {
        throw std::invalid_argument("controlled phase m must be >= 1");
    }
    const Amplitude w = unit_phase(DyadicPhase::power_of_half(m));
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == mask) {
            amplitudes_[i] *= w;
        }
    }
}

double StateVector::probability_of_one(QubitId target) const {
    check_qubit(target);
    const std::size_t bit = std::size_t{1} << target;
    double p = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & bit) {
            p += std::norm(amplitudes_[i]);
        }
    }
    return p;
}

double StateVector::collapse(QubitId target, bool outcome) {
    check_qubit(target);
    const std::size_t bit = std::size_t{1} << target;
    double p = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (static_cast<bool>(i & bit) == outcome) {
            p += std::norm(amplitudes_[i]);
        }
    }
    if (p < kBranchPruneThreshold) {
        throw std::domain_error("measurement branch " + std::to_string(outcome) + " on qubit " + std::to_string(target) +
                                " is unreachable");
    }
    const double scale = 1 / std::sqrt(p);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (static_cast<bool>(i & bit) == outcome) {
            amplitudes_[i] *= scale;
        } else {
            amplitudes_[i] = 0;
        }
    }
    return p;
}

MeasurementOutcome StateVector::measure(QubitId target, double u) {
    double p1 = probability_of_one(target);
    if (p1 < -1e-12 || p1 > 1 + 1e-12) {
        throw std::logic_error("P(1) = " + std::to_string(p1) + " on qubit " + std::to_string(target) +
                               "; the state is not normalized");
    }
    p1 = std::clamp(p1, 0.0, 1.0);
    bool bit = u < p1;
    // A draw can only land on a negligible branch through rounding; take the other one.
    if ((bit ? p1 : 1 - p1) < kBranchPruneThreshold) {
        bit = !bit;
    }
    return {bit, collapse(target, bit)};
}

double max_abs_difference(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace semiqft
