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

#ifndef SEMIQFT_DYADIC_PHASE_H
#define SEMIQFT_DYADIC_PHASE_H

#include <cstdint>
#include <ostream>
#include <string>

namespace semiqft {

/// An exact phase measured in turns: numerator / 2^log2_denominator, always reduced modulo 1.
///
/// The physical rotation angle is 2*pi*turns(). Values are kept canonical: the numerator is odd,
/// or the value is the zero phase 0/2^0. Two phases are equal iff their representations are equal.
class DyadicPhase {
   public:
    /// Largest supported denominator exponent. Sums of two phases must fit in 63 bits.
    static constexpr uint32_t kMaxLog2Denominator = 62;

    constexpr DyadicPhase() noexcept = default;

    /// Reduces numerator / 2^log2_denominator modulo 1 and canonicalizes it.
    /// Throws std::overflow_error if the reduced denominator still exceeds 2^kMaxLog2Denominator.
    static DyadicPhase from_fraction(uint64_t numerator, uint32_t log2_denominator);

    /// 2^-m, reduced mod 1 (so m = 0 gives zero).
    static DyadicPhase power_of_half(uint32_t m);

    constexpr uint64_t numerator() const noexcept {
        return numerator_;
    }
    constexpr uint32_t log2_denominator() const noexcept {
        return log2_denominator_;
    }
    constexpr bool is_zero() const noexcept {
        return numerator_ == 0;
    }

    /// Nearest double to the exact value; only for amplitudes and display.
    double turns() const noexcept;

    /// Halves the phase exactly (no reduction needed: the result stays in [0, 1/2)).
    DyadicPhase halved() const;

    DyadicPhase operator-() const;
    DyadicPhase &operator+=(DyadicPhase other);
    DyadicPhase &operator-=(DyadicPhase other);

    friend DyadicPhase operator+(DyadicPhase a, DyadicPhase b) {
        return a += b;
    }
    friend DyadicPhase operator-(DyadicPhase a, DyadicPhase b) {
        return a -= b;
    }
    friend constexpr bool operator==(const DyadicPhase &, const DyadicPhase &) = default;

    /// "0", "1/2", "3/8", ...
    std::string to_string() const;

   private:
    constexpr DyadicPhase(uint64_t numerator, uint32_t log2_denominator) noexcept
        : numerator_(numerator), log2_denominator_(log2_denominator) {
    }

    uint64_t numerator_ = 0;
    uint32_t log2_denominator_ = 0;
};

std::ostream &operator<<(std::ostream &out, const DyadicPhase &phase);

/// (a + b) mod 1.
DyadicPhase phase_add(DyadicPhase a, DyadicPhase b);

/// phi/2 + c/4 mod 1: the phase one semiclassical box forwards to the next, given its
/// own measured bit c.
DyadicPhase phase_halve_plus(DyadicPhase phi, bool c);

}  // namespace semiqft

#endif
