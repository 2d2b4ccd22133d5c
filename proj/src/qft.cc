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

#include "semiqft/qft.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "overloaded.h"

namespace semiqft {

using internal::overloaded;

QftLayout::QftLayout(unsigned s) : s(s) {
    if (s > kMaxS) {
        throw std::invalid_argument("s = " + std::to_string(s) + " exceeds " + std::to_string(kMaxS));
    }
}

Circuit build_coherent_qft(unsigned s) {
    QftLayout layout(s);
    Circuit circuit{layout.width(), layout.width(), {}};
    for (unsigned w = s + 1; w-- > 0;) {
        circuit.instructions.push_back(OneBitSplit{w, DyadicPhase{}});
        for (unsigned d = 1; d <= w; ++d) {
            circuit.instructions.push_back(ControlledPhase{w, w - d, d + 1});
        }
    }
    for (CbitId k = 0; k <= s; ++k) {
        circuit.instructions.push_back(Measure{layout.wire_of_readout(k), k});
    }
    return circuit;
}

PhaseExpression semiclassical_box_phase(std::span<const CbitId> earlier) {
    PhaseExpression expression;
    const auto k = static_cast<uint32_t>(earlier.size());
    for (uint32_t j = 0; j < k; ++j) {
        expression.terms.push_back({earlier[j], DyadicPhase::power_of_half(k + 1 - j)});
    }
    return expression;
}

DyadicPhase feedforward_phase_by_recursion(std::span<const uint8_t> earlier_outcomes) {
    DyadicPhase phi;
    for (uint8_t c : earlier_outcomes) {
        phi = phase_halve_plus(phi, c != 0);
    }
    return phi;
}

Circuit build_semiclassical_qft(unsigned s) {
    QftLayout layout(s);
    Circuit circuit{layout.width(), layout.width(), {}};
    std::vector<CbitId> earlier;
    for (CbitId k = 0; k <= s; ++k) {
        QubitId wire = layout.wire_of_readout(k);
        circuit.instructions.push_back(ClassicallyControlledSplit{wire, semiclassical_box_phase(earlier)});
        circuit.instructions.push_back(Measure{wire, k});
        earlier.push_back(k);
    }
    return circuit;
}

StateVector dft_oracle(const StateVector &input) {
    const std::size_t q = input.size();
    std::vector<Amplitude> roots(q);
    for (std::size_t k = 0; k < q; ++k) {
        roots[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
    }
    const double norm = 1 / std::sqrt(static_cast<double>(q));
    std::vector<Amplitude> out(q);
    for (std::size_t c = 0; c < q; ++c) {
        Amplitude sum = 0;
        for (std::size_t a = 0; a < q; ++a) {
            sum += roots[(a * c) % q] * input[a];
        }
        out[c] = norm * sum;
    }
    return StateVector::from_amplitudes(std::move(out));
}

OutcomeDistribution oracle_distribution(const StateVector &input) {
    StateVector transformed = dft_oracle(input);
    OutcomeDistribution distribution(input.n_qubits());
    for (std::size_t c = 0; c < transformed.size(); ++c) {
        distribution.add(c, std::norm(transformed[c]));
    }
    return distribution;
}

std::vector<DyadicPhase> product_form_phases(uint64_t a, unsigned s) {
    QftLayout layout(s);
    if (a >= layout.q()) {
        throw std::out_of_range("a = " + std::to_string(a) + " out of range for q = " + std::to_string(layout.q()));
    }
    std::vector<DyadicPhase> phases(layout.width());
    for (unsigned j = 0; j <= s; ++j) {
        for (unsigned k = 0; k <= s - j; ++k) {
            if ((a >> k) & 1) {
                phases[j] += DyadicPhase::power_of_half(s + 1 - j - k);
            }
        }
    }
    return phases;
}

StateVector product_form_state(uint64_t a, unsigned s) {
    std::vector<DyadicPhase> phases = product_form_phases(a, s);
    std::vector<Amplitude> factors;
    for (DyadicPhase phi : phases) {
        factors.push_back(unit_phase(phi));
    }
    const std::size_t q = std::size_t{1} << phases.size();
    const double norm = std::pow(std::numbers::sqrt2 / 2, static_cast<double>(phases.size()));
    std::vector<Amplitude> amplitudes(q);
    for (std::size_t c = 0; c < q; ++c) {
        Amplitude amp = norm;
        for (std::size_t j = 0; j < phases.size(); ++j) {
            if ((c >> j) & 1) {
                amp *= factors[j];
            }
        }
        amplitudes[c] = amp;
    }
    return StateVector::from_amplitudes(std::move(amplitudes));
}

StateVector periodic_state(unsigned s, uint64_t r, uint64_t offset) {
    QftLayout layout(s);
    if (r == 0 || r > layout.q()) {
        throw std::invalid_argument("period r = " + std::to_string(r) + " must lie in [1, q = " +
                                    std::to_string(layout.q()) + "]");
    }
    if (offset >= r) {
        throw std::invalid_argument("offset " + std::to_string(offset) + " must be below the period " + std::to_string(r));
    }
    std::vector<Amplitude> amplitudes(layout.q());
    uint64_t terms = (layout.q() - offset + r - 1) / r;
    const double amp = 1 / std::sqrt(static_cast<double>(terms));
    for (uint64_t a = offset; a < layout.q(); a += r) {
        amplitudes[a] = amp;
    }
    return StateVector::from_amplitudes(std::move(amplitudes));
}

std::optional<std::vector<TracedWire>> trace_basis_phases(const Circuit &circuit, uint64_t a) {
    std::vector<TracedWire> wires(circuit.n_qubits);
    for (std::size_t q = 0; q < wires.size(); ++q) {
        wires[q].bit = (a >> q) & 1;
    }
    for (const auto &instruction : circuit.instructions) {
        bool product = std::visit(
            overloaded{
                [&](const OneBitSplit &g) {
                    TracedWire &w = wires.at(g.target);
                    if (w.split) {
                        return false;
                    }
                    // The gate's own phase only multiplies |1>, which is global on a basis state.
                    w.split = true;
                    w.phase = w.bit ? DyadicPhase::power_of_half(1) : DyadicPhase{};
                    return true;
                },
                [&](const ControlledPhase &g) {
                    TracedWire &x = wires.at(g.a);
                    TracedWire &y = wires.at(g.b);
                    if (x.split && y.split) {
                        return false;
                    }
                    if (x.split && y.bit) {
                        x.phase += g.phase();
                    } else if (y.split && x.bit) {
                        y.phase += g.phase();
                    }
                    return true;
                },
                [](const Measure &) { return true; },
                [](const ClassicallyControlledSplit &) { return false; },
            },
            instruction);
        if (!product) {
            return std::nullopt;
        }
    }
    return wires;
}

}  // namespace semiqft
