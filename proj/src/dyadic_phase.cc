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

#include "semiqft/dyadic_phase.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace semiqft {

DyadicPhase DyadicPhase::from_fraction(uint64_t numerator, uint32_t log2_denominator) {
    if (numerator == 0) {
        return {};
    }
    // Strip common factors of two first so large exponents with even numerators still fit.
    uint32_t twos = std::min<uint32_t>(static_cast<uint32_t>(std::countr_zero(numerator)), log2_denominator);
    numerator >>= twos;
    log2_denominator -= twos;
    if (log2_denominator > kMaxLog2Denominator) {
        throw std::overflow_error(
            "dyadic phase denominator 2^" + std::to_string(log2_denominator) + " exceeds 2^" +
            std::to_string(kMaxLog2Denominator));
    }
    if (log2_denominator == 0) {
        // Integer number of turns.
        return {};
    }
    numerator &= (uint64_t{1} << log2_denominator) - 1;
    if (numerator == 0) {
        return {};
    }
    // After the mask the numerator is still odd, so the value is canonical.
    return DyadicPhase(numerator, log2_denominator);
}

DyadicPhase DyadicPhase::power_of_half(uint32_t m) {
    return from_fraction(1, m);
}

double DyadicPhase::turns() const noexcept {
    return std::ldexp(static_cast<double>(numerator_), -static_cast<int>(log2_denominator_));
}

DyadicPhase DyadicPhase::halved() const {
    return from_fraction(numerator_, log2_denominator_ + 1);
}

DyadicPhase DyadicPhase::operator-() const {
    if (is_zero()) {
        return {};
    }
    return DyadicPhase((uint64_t{1} << log2_denominator_) - numerator_, log2_denominator_);
}

DyadicPhase &DyadicPhase::operator+=(DyadicPhase other) {
    uint32_t common = std::max(log2_denominator_, other.log2_denominator_);
    // Both numerators are below 2^common <= 2^62, so the sum fits in 63 bits.
    uint64_t sum = (numerator_ << (common - log2_denominator_)) + (other.numerator_ << (common - other.log2_denominator_));
    *this = from_fraction(sum, common);
    return *this;
}

DyadicPhase &DyadicPhase::operator-=(DyadicPhase other) {
    return *this += -other;
}

std::string DyadicPhase::to_string() const {
    if (is_zero()) {
        return "0";
    }
    return std::to_string(numerator_) + "/" + std::to_string(uint64_t{1} << log2_denominator_);
}

std::ostream &operator<<(std::ostream &out, const DyadicPhase &phase) {
    return out << phase.to_string();
}

DyadicPhase phase_add(DyadicPhase a, DyadicPhase b) {
    return a + b;
}

DyadicPhase phase_halve_plus(DyadicPhase phi, bool c) {
    DyadicPhase result = phi.halved();
    if (c) {
        result += DyadicPhase::power_of_half(2);
    }
    return result;
}

}  // namespace semiqft
