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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "semiqft/qft.h"
#include "semiqft/simulator.h"

using namespace semiqft;

namespace {

std::vector<StateVector> basis_inputs(std::size_t n) {
    std::vector<StateVector> inputs;
    for (uint64_t a = 0; a < (uint64_t{1} << n); ++a) {
        inputs.push_back(StateVector::basis(n, a));
    }
    return inputs;
}

std::vector<StateVector> random_inputs(std::size_t n, std::size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<StateVector> inputs;
    for (std::size_t i = 0; i < count; ++i) {
        inputs.push_back(StateVector::random(n, rng));
    }
    return inputs;
}

/// Relabels qubits through `perm` (old -> new) and classical bits through `cperm`.
Circuit relabel(const Circuit &c, const std::vector<QubitId> &perm, const std::vector<CbitId> &cperm) {
    Circuit out{c.n_qubits, c.n_cbits, {}};
    for (const auto &instruction : c.instructions) {
        if (const auto *g = std::get_if<OneBitSplit>(&instruction)) {
            out.instructions.push_back(OneBitSplit{perm[g->target], g->phase});
        } else if (const auto *g = std::get_if<ControlledPhase>(&instruction)) {
            out.instructions.push_back(ControlledPhase{perm[g->a], perm[g->b], g->m});
        } else if (const auto *g = std::get_if<Measure>(&instruction)) {
            out.instructions.push_back(Measure{perm[g->target], cperm[g->cbit]});
        }
    }
    return out;
}

/// A prefix of non-trivial splits on every wire, then the coherent transform.
Circuit prefixed_qft(unsigned s) {
    Circuit qft = build_coherent_qft(s);
    Circuit c{qft.n_qubits, qft.n_cbits, {}};
    for (QubitId q = 0; q <= s; ++q) {
        c.instructions.push_back(OneBitSplit{q, DyadicPhase::from_fraction(2 * q + 1, 3)});
    }
    c.instructions.push_back(ControlledPhase{0, s, 3});
    c.instructions.insert(c.instructions.end(), qft.instructions.begin(), qft.instructions.end());
    return c;
}

}  // namespace

TEST(rewrite, detects_builder_output) {
    DetectionResult d = detect_terminal_qft(build_coherent_qft(3));
    ASSERT_TRUE(d) << d.diagnostic;
    EXPECT_EQ(d.match->span_begin, 0u);
    EXPECT_EQ(d.match->span_end, 14u);
    EXPECT_EQ(d.match->wires, (std::vector<QubitId>{3, 2, 1, 0}));
    EXPECT_EQ(d.match->readout_cbits, (std::vector<CbitId>{0, 1, 2, 3}));
}

TEST(rewrite, missing_gate_is_named) {
    Circuit c = build_coherent_qft(3);
    // instructions[2] is cphase(3, 1, m=3).
    c.instructions.erase(c.instructions.begin() + 2);
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_FALSE(d);
    EXPECT_NE(d.diagnostic.find("missing cphase(3, 1, m=3)"), std::string::npos) << d.diagnostic;
}

TEST(rewrite, matches_trailing_span_after_prefix) {
    Circuit c = prefixed_qft(3);
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_TRUE(d) << d.diagnostic;
    EXPECT_EQ(d.match->span_begin, 5u);
    EXPECT_EQ(d.match->span_end, c.instructions.size());
}

TEST(rewrite, prefix_hadamards_are_not_absorbed) {
    // Phase-free splits directly before the transform look like part of it; the block size bounds the scan.
    Circuit qft = build_coherent_qft(2);
    Circuit c{3, 3, {OneBitSplit{0, {}}, OneBitSplit{1, {}}, OneBitSplit{2, {}}}};
    c.instructions.insert(c.instructions.end(), qft.instructions.begin(), qft.instructions.end());
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_TRUE(d) << d.diagnostic;
    EXPECT_EQ(d.match->span_begin, 3u);
}

TEST(rewrite, tolerates_wire_permutation_and_commuting_phases) {
    Circuit c = relabel(build_coherent_qft(3), {2, 0, 3, 1}, {3, 1, 0, 2});
    // Controlled phases from the same wire commute.
    std::swap(c.instructions[1], c.instructions[3]);
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_TRUE(d) << d.diagnostic;
    EXPECT_EQ(d.match->wires, (std::vector<QubitId>{1, 3, 0, 2}));
    EXPECT_EQ(d.match->readout_cbits, (std::vector<CbitId>{3, 1, 0, 2}));

    RewriteResult r = rewrite_semiclassical(c);
    EXPECT_LT(equivalence_report(c, r.circuit, random_inputs(4, 20, 5)).max_tv_distance, 1e-10);
}

TEST(rewrite, delayed_controlled_phase_still_matches) {
    // cphase(3, 0, m=4) commutes with everything on wires 2 and 1, so it may follow their gates.
    Circuit c = build_coherent_qft(3);
    Instruction moved = c.instructions[3];
    c.instructions.erase(c.instructions.begin() + 3);
    c.instructions.insert(c.instructions.begin() + 8, moved);
    ASSERT_EQ(c.instructions[9], Instruction(OneBitSplit{0, {}}));
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_TRUE(d) << d.diagnostic;
    EXPECT_EQ(rewrite_semiclassical(c).circuit, build_semiclassical_qft(3));
}

TEST(rewrite, rejects_order_violations) {
    Circuit c = build_coherent_qft(2);
    // split(2), cphase(2,1,2), cphase(2,0,3), split(1), cphase(1,0,2), split(0): move cphase(1,0,2) after split(0).
    std::swap(c.instructions[4], c.instructions[5]);
    DetectionResult d = detect_terminal_qft(c);
    ASSERT_FALSE(d);
    EXPECT_NE(d.diagnostic.find("comes after the split of qubit 0"), std::string::npos) << d.diagnostic;

    Circuit wrong_m = build_coherent_qft(2);
    wrong_m.instructions[1] = ControlledPhase{2, 1, 3};
    d = detect_terminal_qft(wrong_m);
    ASSERT_FALSE(d);
    EXPECT_NE(d.diagnostic.find("expected m=2"), std::string::npos) << d.diagnostic;
}

TEST(rewrite, no_match_cases) {
    EXPECT_FALSE(detect_terminal_qft(Circuit{}));
    EXPECT_NE(detect_terminal_qft(Circuit{}).diagnostic.find("does not end with measurements"), std::string::npos);
    Circuit bare{2, 2, {Measure{0, 0}, Measure{1, 1}}};
    EXPECT_FALSE(detect_terminal_qft(bare));
    Circuit invalid{1, 1, {Measure{0, 0}, OneBitSplit{0, {}}}};
    EXPECT_NE(detect_terminal_qft(invalid).diagnostic.find("invalid"), std::string::npos);
    EXPECT_THROW(rewrite_semiclassical(bare), RewriteError);
}

TEST(rewrite, coherent_to_semiclassical) {
    RewriteResult r = rewrite_semiclassical(build_coherent_qft(3));
    EXPECT_EQ(r.circuit, build_semiclassical_qft(3));
    EXPECT_EQ(r.report, (RewriteReport{6, 4, 4, true}));
}

TEST(rewrite, single_bit) {
    RewriteResult r = rewrite_semiclassical(build_coherent_qft(0));
    EXPECT_EQ(r.report, (RewriteReport{0, 1, 1, true}));
    EXPECT_EQ(equivalence_report(build_coherent_qft(0), r.circuit, basis_inputs(1)).max_tv_distance, 0.0);
    EXPECT_LT(equivalence_report(build_coherent_qft(0), r.circuit, random_inputs(1, 10, 1)).max_tv_distance, 1e-15);
}

TEST(rewrite, prefix_preserved_and_sound) {
    Circuit c = prefixed_qft(3);
    RewriteResult r = rewrite_semiclassical(c);
    ASSERT_GE(r.circuit.instructions.size(), 5u);
    EXPECT_TRUE(std::equal(c.instructions.begin(), c.instructions.begin() + 5, r.circuit.instructions.begin()));
    EXPECT_EQ(gate_counts(r.circuit).two_bit, 1u);
    EXPECT_LT(equivalence_report(c, r.circuit, random_inputs(4, 20, 11)).max_tv_distance, 1e-10);
}

TEST(rewrite, sound_on_random_inputs) {
    for (unsigned s = 0; s <= 5; ++s) {
        Circuit c = build_coherent_qft(s);
        RewriteResult r = rewrite_semiclassical(c);
        EXPECT_LT(equivalence_report(c, r.circuit, random_inputs(s + 1, 50, 100 + s)).max_tv_distance, 1e-10) << "s=" << s;
    }
}

TEST(rewrite, count_law_and_idempotence) {
    for (unsigned s = 0; s <= 8; ++s) {
        RewriteResult r = rewrite_semiclassical(build_coherent_qft(s));
        const std::size_t n = s + 1;
        EXPECT_EQ(r.report.two_bit_gates_removed, n * (n - 1) / 2);
        EXPECT_EQ(r.report.two_bit_gates_removed, gate_counts(build_coherent_qft(s)).two_bit);
        EXPECT_EQ(r.report.classically_controlled_gates_added, n);
        EXPECT_EQ(r.report.measurements, n);
        EXPECT_EQ(gate_counts(r.circuit).two_bit, 0u);
        EXPECT_FALSE(detect_terminal_qft(r.circuit)) << "s=" << s;
    }
}

TEST(rewrite, equivalence_report_examples) {
    Circuit coherent = build_coherent_qft(3);
    Circuit semiclassical = build_semiclassical_qft(3);
    EquivalenceReport r = equivalence_report(coherent, semiclassical, basis_inputs(4));
    EXPECT_EQ(r.distances.size(), 16u);
    EXPECT_LT(r.max_tv_distance, 1e-12);

    std::vector<StateVector> inputs = random_inputs(4, 10, 3);
    EquivalenceReport same = equivalence_report(coherent, coherent, inputs);
    EXPECT_EQ(same.max_tv_distance, 0.0);
    EXPECT_EQ(same.worst_input, 0u);

    EXPECT_THROW(equivalence_report(coherent, build_coherent_qft(2), inputs), std::invalid_argument);
    std::vector<StateVector> narrow{StateVector(3)};
    EXPECT_THROW(equivalence_report(coherent, semiclassical, narrow), std::invalid_argument);
}

TEST(rewrite, corrupted_box_is_invisible_on_basis_inputs) {
    // Box 1 coefficient 1/4 -> 1/2. On a basis input every box sees a computational basis state,
    // so any phase it applies is global and the readout stays uniform.
    Circuit bad = build_semiclassical_qft(3);
    std::get<ClassicallyControlledSplit>(bad.instructions[2]).phase.terms[0].coefficient = DyadicPhase::power_of_half(1);
    std::vector<StateVector> one{StateVector::basis(4, 1)};
    EXPECT_LT(equivalence_report(bad, build_coherent_qft(3), one).max_tv_distance, 1e-12);
    EXPECT_LT(equivalence_report(bad, build_coherent_qft(3), basis_inputs(4)).max_tv_distance, 1e-12);

    // With qubit 2 in superposition, the c0 = 1 branch (weight 1/2) reads c1 deterministically
    // instead of uniformly: TV = 1/2 * 1/2.
    const double r = 1 / std::sqrt(2.0);
    std::vector<Amplitude> amps(16);
    amps[0] = r;
    amps[4] = r;
    std::vector<StateVector> mixed{StateVector::from_amplitudes(amps)};
    EXPECT_NEAR(equivalence_report(bad, build_coherent_qft(3), mixed).max_tv_distance, 0.25, 1e-12);
}

TEST(rewrite, every_phase_mutation_detected_by_superpositions) {
    Circuit semiclassical = build_semiclassical_qft(3);
    std::vector<StateVector> inputs = random_inputs(4, 20, 0);
    std::size_t mutants = 0;
    for (std::size_t i = 0; i < semiclassical.instructions.size(); i += 2) {
        const auto &box = std::get<ClassicallyControlledSplit>(semiclassical.instructions[i]);
        for (std::size_t slot = 0; slot <= box.phase.terms.size(); ++slot) {
            for (uint64_t k = 1; k < 32; ++k) {
                Circuit m = semiclassical;
                auto &e = std::get<ClassicallyControlledSplit>(m.instructions[i]).phase;
                DyadicPhase &target = slot == 0 ? e.constant : e.terms[slot - 1].coefficient;
                target += DyadicPhase::from_fraction(k, 5);
                ++mutants;
                ASSERT_GT(equivalence_report(m, semiclassical, inputs).max_tv_distance, 1e-4)
                    << "box " << i / 2 << " slot " << slot << " delta " << k << "/32";
            }
        }
    }
    EXPECT_EQ(mutants, 10u * 31u);
}
