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

#include "hcwalk/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcwalk/oracle.hpp"
#include "hcwalk/resources.hpp"
#include "hcwalk/target_sweep.hpp"
#include "hcwalk/walk.hpp"

namespace hcwalk::harness {
namespace {

constexpr double kExact = 1e-12;
constexpr int kLongTau = 50;

CheckResult check(std::string name, int n, double value, double tolerance) {
    return {std::move(name), n, value, tolerance, value <= tolerance};
}

/// Largest per-amplitude gap between dense powers and matrix-free evolution
/// from the (even-)uniform start.
double evolution_gap(const WalkSpec& spec, const NodeState& node) {
    const WalkerState start = compose_walker(spec.dimension, node);
    const oracle::DenseOperator v = oracle::build_dense_evolution(spec);
    std::vector<Complex> dense(start.amplitudes().begin(), start.amplitudes().end());
    WalkerState free = start;
    double worst = 0.0;
    for (int step = 1; step <= kLongTau; ++step) {
        dense = oracle::apply(v, dense);
        free = evolve(free, spec, IterationPlan::explicit_steps(1));
        const auto amps = free.amplitudes();
        for (std::size_t i = 0; i < dense.size(); ++i) worst = std::max(worst, std::abs(dense[i] - amps[i]));
    }
    return worst;
}

double sweep_gap(const WalkSpec& base, const IterationPlan& plan, const NodeState& node, int threads) {
    const TargetSweep direct(base, plan, SweepMethod::direct, SuccessMetric::vertex_marginal, threads);
    const TargetSweep translated(base, plan, SweepMethod::translated, SuccessMetric::vertex_marginal, threads);
    const std::vector<double> a = direct.all_probabilities(node);
    const std::vector<double> b = translated.all_probabilities(node);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(int max_n, std::uint64_t seed, int threads) {
    const Settings& settings = default_settings();
    if (max_n < 2 || max_n > settings.limits.max_dense_n) {
        throw std::invalid_argument("verify --max-n must lie in [2, " + std::to_string(settings.limits.max_dense_n) +
                                    "]");
    }
    std::vector<CheckResult> out;
    for (int n = 2; n <= max_n; ++n) {
        const std::uint64_t last = vertex_count(n) - 1;
        const WalkSpec skw = WalkSpec::skw(n, last);
        const WalkSpec oskw = WalkSpec::oskw(n, hamming_weight(last) % 2 == 0 ? last : last >> 1);

        out.push_back(check("dense_unitarity_skw", n, oracle::unitarity_defect(oracle::build_dense_evolution(skw)), kExact));
        out.push_back(
            check("dense_unitarity_oskw", n, oracle::unitarity_defect(oracle::build_dense_evolution(oskw)), kExact));
        out.push_back(check("dense_vs_matrix_free_skw", n, evolution_gap(skw, make_uniform_node_state(n)), kExact));
        out.push_back(
            check("dense_vs_matrix_free_oskw", n, evolution_gap(oskw, make_even_uniform_node_state(n + 1)), kExact));

        const NodeState haar = make_random_node_state(n, seed + static_cast<std::uint64_t>(n));
        out.push_back(check("sweep_routes_skw", n,
                            sweep_gap(WalkSpec::skw(n, 0), IterationPlan::skw_optimal(n), haar, threads), kExact));
        const NodeState haar_even = project_even_parity(make_random_node_state(n + 1, seed + 100 + n)).state;
        out.push_back(check("sweep_routes_oskw", n,
                            sweep_gap(WalkSpec::oskw(n, 0), IterationPlan::oskw_optimal(n + 1), haar_even, threads),
                            kExact));

        const double dense_avg = oracle::dense_average_success(make_uniform_node_state(n), n, WalkVariant::skw,
                                                               IterationPlan::skw_optimal(n).tau);
        const TargetSweep sweep(WalkSpec::skw(n, 0), IterationPlan::skw_optimal(n), SweepMethod::translated);
        const std::vector<double> probs = sweep.all_probabilities(make_uniform_node_state(n));
        double mean = 0.0;
        for (double p : probs) mean += p;
        mean /= static_cast<double>(probs.size());
        out.push_back(check("dense_average_success", n, std::abs(mean - dense_avg), kExact));

        const oracle::IdentityReport ids = oracle::verify_measure_identities(n, 10, seed);
        out.push_back(check("layer_overlap_identity", n, ids.worst_layer_deviation, 1e-8));
        out.push_back(check("pauli_enumeration_identity", n, ids.worst_pauli_deviation, kExact));
    }
    if (max_n >= 3) {
        const std::vector<Complex> ghz{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
        const NodeState state = NodeState::normalized(3, ghz);
        const double grid = oracle::grid_product_overlap(state, 48);
        const double optimizer = maximize_product_overlap(state, settings.optimizer, seed).overlap;
        out.push_back(check("grid_vs_optimizer_ghz3", 3, std::abs(grid - optimizer), 2e-3));
        out.push_back(check("grid_lower_bound_ghz3", 3, std::max(0.0, grid - optimizer), 1e-9));
    }
    return out;
}

}  // namespace hcwalk::harness
