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

#include <gtest/gtest.h>

#include <cmath>

#include "semiqft/qft.h"
#include "test_helpers.h"

using namespace semiqft;

TEST(simulator, trajectory_single_box_is_fair_coin) {
    Circuit box = build_semiclassical_qft(0);
    StateVector zero(1);
    const int runs = 10000;
    int ones = 0;
    for (int seed = 0; seed < runs; ++seed) {
        Trajectory t = run_trajectory(box, zero, static_cast<uint64_t>(seed));
        ASSERT_EQ(t.readout.size(), 1u);
        ASSERT_NEAR(t.probability_of_path, 0.5, 1e-15);
        ones += t.readout[0];
    }
    // F|0> has equal weights; allow 3 standard errors.
    double freq = static_cast<double>(ones) / runs;
    EXPECT_NEAR(freq, 0.5, 3 * std::sqrt(0.25 / runs));
}

TEST(simulator, trajectory_path_probability_on_zero_input) {
    Circuit semiclassical = build_semiclassical_qft(3);
    StateVector zero(4);
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Trajectory t = run_trajectory(semiclassical, zero, seed);
        EXPECT_NEAR(t.probability_of_path, 1.0 / 16, 1e-14);
        EXPECT_NEAR(t.final_state.norm_squared(), 1.0, 1e-12);
    }
}

TEST(simulator, trajectory_deterministic_in_seed) {
    Circuit semiclassical = build_semiclassical_qft(3);
    std::mt19937_64 rng(8);
    StateVector input = StateVector::random(4, rng);
    Trajectory a = run_trajectory(semiclassical, input, 42);
    Trajectory b = run_trajectory(semiclassical, input, 42);
    EXPECT_EQ(a.readout, b.readout);
    EXPECT_EQ(a.final_state, b.final_state);
    EXPECT_EQ(a.probability_of_path, b.probability_of_path);
}

TEST(simulator, trajectory_without_measurements) {
    Circuit c{1, 0, {OneBitSplit{0, {}}}};
    Trajectory t = run_trajectory(c, StateVector(1), 0);
    EXPECT_TRUE(t.readout.empty());
    EXPECT_EQ(t.probability_of_path, 1.0);
    EXPECT_EQ(t.readout_value(), 0u);
    OutcomeDistribution d = run_exact(c, StateVector(1));
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0], 1.0);
}

TEST(simulator, exact_coherent_on_zero_is_uniform) {
    OutcomeDistribution d = run_exact(build_coherent_qft(3), StateVector(4));
    ASSERT_EQ(d.size(), 16u);
    for (std::size_t c = 0; c < 16; ++c) {
        EXPECT_NEAR(d[c], 1.0 / 16, 1e-14);
    }
}

TEST(simulator, exact_semiclassical_matches_oracle_on_five) {
    StateVector five = StateVector::basis(4, 5);
    OutcomeDistribution d = run_exact(build_semiclassical_qft(3), five);
    OutcomeDistribution expected = oracle_distribution(five);
    for (std::size_t c = 0; c < 16; ++c) {
        EXPECT_NEAR(d[c], expected[c], 1e-12);
    }
}

TEST(simulator, exact_measure_only) {
    Circuit c{1, 1, {Measure{0, 0}}};
    const double r = 1 / std::sqrt(2.0);
    OutcomeDistribution d = run_exact(c, StateVector::from_amplitudes({r, r}));
    EXPECT_NEAR(d[0], 0.5, 1e-15);
    EXPECT_NEAR(d[1], 0.5, 1e-15);
}

TEST(simulator, readout_uses_classical_bit_positions) {
    // Qubit 0 is |1>, qubit 1 is |0>; measuring qubit 0 into c1 gives readout 2.
    Circuit c{2, 2, {Measure{0, 1}, Measure{1, 0}}};
    OutcomeDistribution d = run_exact(c, StateVector::basis(2, 1));
    EXPECT_EQ(d[2], 1.0);
    EXPECT_EQ(run_trajectory(c, StateVector::basis(2, 1), 0).readout_value(), 2u);
}

TEST(simulator, leaf_probabilities_sum_to_one) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c = test_util::random_valid_circuit(rng, 6);
        double total = 0;
        for (const Leaf &leaf : enumerate_leaves(c, StateVector::random(c.n_qubits, rng))) {
            EXPECT_GE(leaf.probability, kBranchPruneThreshold);
            total += leaf.probability;
        }
        ASSERT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(simulator, deterministic_inputs_prune_branches) {
    // A basis input measured directly has a single leaf.
    EXPECT_EQ(enumerate_leaves(Circuit{3, 3, {Measure{0, 0}, Measure{1, 1}, Measure{2, 2}}}, StateVector::basis(3, 6)).size(),
              1u);
    EXPECT_EQ(enumerate_leaves(build_semiclassical_qft(2), StateVector(3)).size(), 8u);
}

TEST(simulator, sampled_matches_exact) {
    Circuit semiclassical = build_semiclassical_qft(3);
    std::mt19937_64 rng(2024);
    StateVector input = StateVector::random(4, rng);
    OutcomeDistribution exact = run_exact(semiclassical, input);
    const int shots = 100000;
    std::vector<int> counts(16, 0);
    for (int shot = 0; shot < shots; ++shot) {
        ++counts[run_trajectory(semiclassical, input, static_cast<uint64_t>(shot)).readout_value()];
    }
    for (std::size_t c = 0; c < 16; ++c) {
        double p = exact[c];
        double se = std::sqrt(p * (1 - p) / shots);
        EXPECT_NEAR(static_cast<double>(counts[c]) / shots, p, 3 * se) << "c=" << c;
    }
}

TEST(simulator, rejects_invalid_programs) {
    Circuit bad{1, 1, {Measure{0, 0}, OneBitSplit{0, {}}}};
    EXPECT_THROW(run_exact(bad, StateVector(1)), InvalidCircuitError);
    EXPECT_THROW(run_trajectory(bad, StateVector(1), 0), InvalidCircuitError);
    Circuit read_early{2, 2,
                       {ClassicallyControlledSplit{0, {{}, {{1, DyadicPhase::power_of_half(2)}}}}, Measure{0, 0},
                        Measure{1, 1}}};
    EXPECT_THROW(run_exact(read_early, StateVector(2)), InvalidCircuitError);
    EXPECT_THROW(run_exact(build_coherent_qft(2), StateVector(2)), InvalidCircuitError);
}

TEST(simulator, total_variation_distance) {
    OutcomeDistribution p(1, {1.0, 0.0});
    OutcomeDistribution q(1, {0.25, 0.75});
    EXPECT_DOUBLE_EQ(total_variation_distance(p, q), 0.75);
    EXPECT_EQ(total_variation_distance(p, p), 0.0);
    EXPECT_THROW(total_variation_distance(p, OutcomeDistribution(2)), std::invalid_argument);
    EXPECT_THROW(OutcomeDistribution(1, {1.0}), std::invalid_argument);
}
