// Copyright 2026 The hcwalk Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "hcwalk/harness/state_spec.hpp"
#include "hcwalk/runners.hpp"

namespace hcwalk {
namespace {

const double kBound8 = 3.0 / 16.0;  // 3 / sqrt(256)

RunOptions light() {
    RunOptions o;
    o.optimizer.restarts = 8;
    return o;
}

double recomputed_mean(const RunResult& r) {
    double s = 0.0;
    for (const auto& tp : r.per_target) s += tp.probability;
    return s / static_cast<double>(r.per_target.size());
}

TEST(PredictedProbability, Examples) {
    ResourceReport r;
    r.f_c = 1.0;
    EXPECT_DOUBLE_EQ(predicted_probability(Algorithm::skw1, r), 0.5);
    r.E_g = 1.0;
    EXPECT_DOUBLE_EQ(predicted_probability(Algorithm::skw2, r), 0.0);
    r.C_f = 0.0;
    EXPECT_DOUBLE_EQ(predicted_probability(Algorithm::skw3, r), 0.5);
    EXPECT_THROW(predicted_probability(Algorithm::oskw1, r), std::invalid_argument);
    EXPECT_THROW(predicted_probability(Algorithm::skw2, ResourceReport{}), std::invalid_argument);
}

TEST(ParseAlgorithm, AcceptsSpellings) {
    EXPECT_EQ(parse_algorithm("skw-1"), Algorithm::skw1);
    EXPECT_EQ(parse_algorithm("OSKW_1"), Algorithm::oskw1);
    EXPECT_EQ(parse_algorithm("skw"), Algorithm::skw);
    EXPECT_THROW(parse_algorithm("skw4"), std::invalid_argument);
}

TEST(RunSkw1, EtaRecoversOriginalSearch) {
    const RunResult r = run_skw1(make_uniform_node_state(8), IterationPlan::explicit_steps(18), light());
    EXPECT_GE(r.p_avg, 0.4);
    EXPECT_LE(r.p_avg, 0.55);
    EXPECT_LE(std::abs(r.p_avg - 0.5), kBound8);
    EXPECT_EQ(r.per_target.size(), 256u);
    EXPECT_NEAR(r.p_avg, recomputed_mean(r), 1e-14);
}

TEST(RunSkw1, BasisZero) {
    const RunResult r = run_skw1(make_basis_node_state(8, 0), IterationPlan::skw_optimal(8), light());
    EXPECT_NEAR(r.p_pred, 1.0 / 512.0, 1e-15);
    EXPECT_LE(r.abs_dev, kBound8);
}

TEST(RunSkw1, MixtureIsLinearPerTarget) {
    const NodeState a = make_uniform_node_state(6), b = make_basis_node_state(6, 0), c = make_random_node_state(6, 4);
    const MixedEnsemble rho({{0.5, a}, {0.3, b}, {0.2, c}});
    const IterationPlan plan = IterationPlan::skw_optimal(6);
    const RunResult mixed = run_skw1(rho, plan, light());
    const RunResult ra = run_skw1(a, plan, light()), rb = run_skw1(b, plan, light()), rc = run_skw1(c, plan, light());
    for (std::size_t i = 0; i < mixed.per_target.size(); ++i) {
        const double want = 0.5 * ra.per_target[i].probability + 0.3 * rb.per_target[i].probability +
                            0.2 * rc.per_target[i].probability;
        EXPECT_NEAR(mixed.per_target[i].probability, want, 1e-12);
    }
    EXPECT_NEAR(mixed.p_avg, 0.5 * ra.p_avg + 0.3 * rb.p_avg + 0.2 * rc.p_avg, 1e-12);
}

TEST(RunSkw1, HalfEtaHalfBasis) {
    const IterationPlan plan = IterationPlan::skw_optimal(8);
    const MixedEnsemble rho({{0.5, make_uniform_node_state(8)}, {0.5, make_basis_node_state(8, 0)}});
    const double mixed = run_skw1(rho, plan, light()).p_avg;
    const double eta = run_skw1(make_uniform_node_state(8), plan, light()).p_avg;
    const double basis = run_skw1(make_basis_node_state(8, 0), plan, light()).p_avg;
    EXPECT_NEAR(mixed, 0.5 * (eta + basis), 1e-12);
}

TEST(RunSkw1, DirectAndTranslatedAgree) {
    RunOptions direct = light();
    direct.sweep = SweepMethod::direct;
    const NodeState psi = make_random_node_state(6, 8);
    const RunResult a = run_skw1(psi, IterationPlan::skw_optimal(6), direct);
    const RunResult b = run_skw1(psi, IterationPlan::skw_optimal(6), light());
    EXPECT_NEAR(a.p_avg, b.p_avg, 1e-12);
}

TEST(RunSkw1, SampledTargetsBeyondExactLimit) {
    RunOptions o = light();
    o.sweep = SweepMethod::direct;
    o.limits.max_exact_target_dimension = 5;
    o.limits.sampled_targets = 20;
    o.seed = 3;
    const RunResult r = run_skw1(make_uniform_node_state(7), IterationPlan::skw_optimal(7), o);
    EXPECT_EQ(r.per_target.size(), 20u);
    EXPECT_EQ(r.admissible_targets, 128u);
    const RunResult again = run_skw1(make_uniform_node_state(7), IterationPlan::skw_optimal(7), o);
    for (std::size_t i = 0; i < r.per_target.size(); ++i) EXPECT_EQ(r.per_target[i].target, again.per_target[i].target);
}

TEST(RunSkw2, ProductStateReachesOneHalf) {
    std::vector<Complex> amps{1.0};
    for (int j = 0; j < 8; ++j) {
        const double theta = 0.3 + 0.2 * j;
        std::vector<Complex> next(amps.size() * 2);
        for (std::size_t y = 0; y < amps.size(); ++y) {
            next[y] = amps[y] * std::cos(theta);
            next[y + amps.size()] = amps[y] * std::polar(std::sin(theta), 0.7 * j);
        }
        amps = std::move(next);
    }
    const RunResult r = run_skw2(NodeState::normalized(8, amps), IterationPlan::skw_optimal(8), light());
    EXPECT_NEAR(r.p_pred, 0.5, 1e-9);
    EXPECT_LE(std::abs(r.p_avg - 0.5), kBound8);
}

TEST(RunSkw2, GhzPredictsOneQuarter) {
    const RunResult r = run_skw2(harness::make_ghz_state(8), IterationPlan::skw_optimal(8), light());
    EXPECT_NEAR(r.p_pred, 0.25, 1e-9);
    EXPECT_LE(r.abs_dev, kBound8);
}

TEST(RunSkw2, MoreRestartsNeverLowerPrediction) {
    RunOptions one = light(), many = light();
    one.optimizer.restarts = 1;
    many.optimizer.restarts = 32;
    const NodeState psi = make_random_node_state(6, 31);
    EXPECT_GE(run_skw2(psi, IterationPlan::skw_optimal(6), many).p_pred,
              run_skw2(psi, IterationPlan::skw_optimal(6), one).p_pred - 1e-12);
}

TEST(RunSkw2, DominatesSkw1) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const NodeState psi = make_random_node_state(5, 60 + s);
        const IterationPlan plan = IterationPlan::skw_optimal(5);
        EXPECT_GE(run_skw2(psi, plan, light()).p_pred, run_skw1(psi, plan, light()).p_pred - 1e-12);
    }
}

TEST(RunSkw3, IncoherentEndpoint) {
    const RunResult r = run_skw3(make_basis_node_state(8, 77), IterationPlan::skw_optimal(8), light());
    EXPECT_NEAR(r.p_pred, 0.5, 1e-15);
    EXPECT_LE(r.abs_dev, kBound8);
}

TEST(RunSkw3, EtaEndpoint) {
    const RunResult r = run_skw3(make_uniform_node_state(8), IterationPlan::skw_optimal(8), light());
    EXPECT_NEAR(r.p_pred, 1.0 / 512.0, 1e-14);
    EXPECT_LT(r.p_avg, 0.02);
}

TEST(RunSkw3, ExhaustiveAndAnalyticAgree) {
    RunOptions ex = light(), an = light();
    ex.pauli = PauliSelection::exhaustive;
    an.pauli = PauliSelection::analytic;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const NodeState psi = make_random_node_state(5, 500 + s);
        const IterationPlan plan = IterationPlan::skw_optimal(5);
        EXPECT_NEAR(run_skw3(psi, plan, ex).p_pred, run_skw3(psi, plan, an).p_pred, 1e-12);
    }
}

TEST(RunSkw3, NeverAboveSkw2) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const NodeState psi = make_random_node_state(4, 700 + s);
        const IterationPlan plan = IterationPlan::skw_optimal(4);
        EXPECT_LE(run_skw3(psi, plan, light()).p_pred, run_skw2(psi, plan, light()).p_pred + 1e-9);
    }
}

TEST(RunOskw, EvenUniformSucceedsAtN8) {
    const RunResult r = run_oskw(8, default_plan(Algorithm::oskw, 8));
    EXPECT_EQ(r.tau, 13);
    EXPECT_GE(r.p_avg, 0.8);
    EXPECT_EQ(r.per_target.size(), 256u);
    EXPECT_EQ(*r.leaked_weight, 0.0);
}

TEST(RunOskw1, EvenBasisPrediction) {
    const RunResult r = run_oskw1(make_basis_node_state(9, 3), default_plan(Algorithm::oskw1, 8));
    EXPECT_NEAR(r.p_pred, 1.0 / 256.0, 1e-15);
}

TEST(RunOskw1, OddOnlyStateIsRejected) {
    EXPECT_THROW(run_oskw1(make_basis_node_state(5, 1), default_plan(Algorithm::oskw1, 4)), std::invalid_argument);
}

TEST(RunOskw1, AllVerticesNormalizationHalvesAverage) {
    RunOptions all_vertices;
    all_vertices.oskw_normalization = OskwNormalization::all_vertices;
    const NodeState psi = make_random_node_state(7, 3);
    const RunResult even = run_oskw1(psi, default_plan(Algorithm::oskw1, 6));
    const RunResult all = run_oskw1(psi, default_plan(Algorithm::oskw1, 6), all_vertices);
    EXPECT_NEAR(all.p_avg, even.p_avg / 2.0, 1e-15);
}

TEST(RunResult, ProbabilitiesInRangeAndMeanConsistent) {
    const RunResult r = run_skw2(make_random_node_state(6, 2), IterationPlan::skw_optimal(6), light());
    for (const auto& tp : r.per_target) {
        EXPECT_GE(tp.probability, 0.0);
        EXPECT_LE(tp.probability, 1.0);
    }
    EXPECT_NEAR(r.p_avg, recomputed_mean(r), 1e-14);
    EXPECT_NEAR(r.abs_dev, std::abs(r.p_avg - r.p_pred), 0.0);
}

}  // namespace
}  // namespace hcwalk
