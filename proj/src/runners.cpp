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

#include "hcwalk/runners.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hcwalk {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool is_optimized(Algorithm a) { return a == Algorithm::oskw || a == Algorithm::oskw1; }

/// Targets the average runs over: every admissible vertex, or a seeded uniform
/// sample of them when direct evolution would be too expensive.
std::vector<std::uint64_t> select_targets(const WalkSpec& base, const RunOptions& options) {
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t t = 0; t < base.node_count(); ++t) {
        if (base.variant == WalkVariant::skw || hamming_weight(t) % 2 == 0) admissible.push_back(t);
    }
    const bool sample = options.sweep == SweepMethod::direct &&
                        base.dimension > options.limits.max_exact_target_dimension &&
                        admissible.size() > static_cast<std::size_t>(options.limits.sampled_targets);
    if (!sample) return admissible;
    std::vector<std::uint64_t> picked;
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    std::sample(admissible.begin(), admissible.end(), std::back_inserter(picked),
                static_cast<std::size_t>(options.limits.sampled_targets), rng);
    return picked;
}

std::uint64_t admissible_count(const WalkSpec& base) {
    return base.variant == WalkVariant::skw ? base.node_count() : base.node_count() / 2;
}

std::vector<TargetProbability> sweep(const NodeState& node, const WalkSpec& base, const IterationPlan& plan,
                                     const RunOptions& options, std::span<const std::uint64_t> targets) {
    const TargetSweep engine(base, plan, options.sweep, options.metric, options.threads);
    const std::vector<double> probs = engine.probabilities(node, targets);
    std::vector<TargetProbability> out(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) out[i] = {targets[i], probs[i]};
    return out;
}

void finish(RunResult& result, const RunOptions& options, Clock::time_point start) {
    const double slack = default_settings().tolerances.probability_range;
    double total = 0.0;
    for (const auto& tp : result.per_target) {
        if (!(tp.probability >= -slack && tp.probability <= 1.0 + slack)) {
            throw InvariantViolation("probability_range", "target " + std::to_string(tp.target) + " has probability " +
                                                              std::to_string(tp.probability));
        }
        total += tp.probability;
    }
    const bool admissible_normalization = is_optimized(result.variant) &&
                                     options.oskw_normalization == OskwNormalization::all_vertices;
    const double denominator = admissible_normalization ? 2.0 * static_cast<double>(result.admissible_targets)
                                                   : static_cast<double>(result.per_target.size());
    result.p_avg = total / denominator;
    if (!std::isfinite(result.p_avg)) throw InvariantViolation("finite_average", "p_avg is not finite");
    result.p_pred = predicted_probability(result.variant, result.resource);
    result.abs_dev = std::abs(result.p_avg - result.p_pred);
    result.seed = options.seed;
    result.wall_ms = elapsed_ms(start);
}

ResourceReport base_resources(const NodeState& state, const RunOptions& options, bool need_entanglement) {
    if (need_entanglement || options.resources == ResourceDepth::full) {
        return groverian_entanglement(state, options.optimizer, options.seed, options.threads);
    }
    ResourceReport report;
    report.f_c = coherence_fraction(state);
    report.C_f = fidelity_coherence(state);
    return report;
}

RunResult skw_family_run(Algorithm variant, const NodeState& prepared, ResourceReport resource,
                         const IterationPlan& plan, const RunOptions& options, Clock::time_point start) {
    const WalkSpec base = WalkSpec::skw(prepared.qubits(), 0);
    const std::vector<std::uint64_t> targets = select_targets(base, options);
    RunResult result{};
    result.variant = variant;
    result.n = prepared.qubits();
    result.tau = plan.tau;
    result.tau_formula = plan.formula_value;
    result.per_target = sweep(prepared, base, plan, options, targets);
    result.admissible_targets = admissible_count(base);
    result.resource = std::move(resource);
    finish(result, options, start);
    return result;
}

}  // namespace

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::skw:
            return "skw";
        case Algorithm::skw1:
            return "skw1";
        case Algorithm::skw2:
            return "skw2";
        case Algorithm::skw3:
            return "skw3";
        case Algorithm::oskw:
            return "oskw";
        case Algorithm::oskw1:
            return "oskw1";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    std::string key;
    for (char c : name) {
        if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (Algorithm a : {Algorithm::skw, Algorithm::skw1, Algorithm::skw2, Algorithm::skw3, Algorithm::oskw,
                        Algorithm::oskw1}) {
        if (key == algorithm_name(a)) return a;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

double predicted_probability(Algorithm variant, const ResourceReport& resource) {
    auto need = [](const std::optional<double>& field, const char* name) {
        if (!field) throw std::invalid_argument(std::string("resource report is missing ") + name);
        return *field;
    };
    switch (variant) {
        case Algorithm::skw:
        case Algorithm::skw1:
            return need(resource.f_c, "f_c") / 2.0;
        case Algorithm::skw2: {
            const double e = need(resource.E_g, "E_g");
            return (1.0 - e * e) / 2.0;
        }
        case Algorithm::skw3: {
            const double c = need(resource.C_f, "C_f");
            return (1.0 - c * c) / 2.0;
        }
        case Algorithm::oskw:
        case Algorithm::oskw1:
            return need(resource.f_c_even, "f_c_even");
    }
    throw std::invalid_argument("unknown algorithm");
}

IterationPlan default_plan(Algorithm variant, int n) {
    return is_optimized(variant) ? IterationPlan::oskw_optimal(n + 1) : IterationPlan::skw_optimal(n);
}

RunResult run_skw(int n, const IterationPlan& plan, const RunOptions& options) {
    RunResult r = run_skw1(make_uniform_node_state(n), plan, options);
    r.variant = Algorithm::skw;
    return r;
}

RunResult run_skw1(const NodeState& state, const IterationPlan& plan, const RunOptions& options) {
    const auto start = Clock::now();
    return skw_family_run(Algorithm::skw1, state, base_resources(state, options, false), plan, options, start);
}

RunResult run_skw1(const MixedEnsemble& ensemble, const IterationPlan& plan, const RunOptions& options) {
    const auto start = Clock::now();
    const int n = ensemble.qubits();
    const WalkSpec base = WalkSpec::skw(n, 0);
    const std::vector<std::uint64_t> targets = select_targets(base, options);
    const TargetSweep engine(base, plan, options.sweep, options.metric, options.threads);

    std::vector<double> mixed(targets.size(), 0.0);
    for (const auto& member : ensemble.members()) {
        const std::vector<double> probs = engine.probabilities(member.state, targets);
        for (std::size_t i = 0; i < targets.size(); ++i) mixed[i] += member.weight * probs[i];
    }

    RunResult result{};
    result.variant = Algorithm::skw1;
    result.n = n;
    result.tau = plan.tau;
    result.tau_formula = plan.formula_value;
    result.per_target.resize(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) result.per_target[i] = {targets[i], mixed[i]};
    result.admissible_targets = admissible_count(base);
    result.resource.f_c = coherence_fraction(ensemble);
    finish(result, options, start);
    return result;
}

RunResult run_skw2(const NodeState& state, const IterationPlan& plan, const RunOptions& options) {
    const auto start = Clock::now();
    LayerOptimum optimum = optimize_local_layer_for_eta_overlap(state, options.optimizer, options.seed, options.threads);
    ResourceReport resource;
    resource.f_c = coherence_fraction(state);
    resource.C_f = fidelity_coherence(state);
    resource.E_g_overlap = optimum.product.overlap;
    resource.E_g = std::sqrt(std::max(0.0, 1.0 - optimum.product.overlap));
    resource.restarts_used = optimum.product.restarts_used;
    resource.converged = optimum.product.converged;

    const NodeState prepared = apply_local_layer(state, optimum.layer);
    RunResult result = skw_family_run(Algorithm::skw2, prepared, std::move(resource), plan, options, start);
    result.layer = std::move(optimum.layer);
    return result;
}

RunResult run_skw3(const NodeState& state, const IterationPlan& plan, const RunOptions& options) {
    const auto start = Clock::now();
    bool exhaustive = options.pauli == PauliSelection::exhaustive;
    if (options.pauli == PauliSelection::automatic) exhaustive = state.qubits() <= options.automatic_pauli_max_n;
    PauliLayerChoice choice = exhaustive ? enumerate_pauli_layers(state, options.limits.max_pauli_enumeration_n)
                                         : analytic_pauli_layer(state);

    const NodeState after_pauli = apply_local_layer(state, choice.layer);
    const NodeState prepared = apply_local_layer(after_pauli, LocalLayer::uniform(state.qubits(), gates::hadamard()));
    RunResult result = skw_family_run(Algorithm::skw3, prepared, base_resources(state, options, false), plan,
                                      options, start);
    result.layer = std::move(choice.layer);
    return result;
}

RunResult run_oskw1(const NodeState& state, const IterationPlan& plan, const RunOptions& options) {
    const auto start = Clock::now();
    EvenParityProjection projection = project_even_parity(state);
    const int dimension = state.qubits();
    const WalkSpec base = WalkSpec::oskw(dimension - 1, 0);
    const std::vector<std::uint64_t> targets = select_targets(base, options);

    RunResult result{};
    result.variant = Algorithm::oskw1;
    result.n = dimension - 1;
    result.tau = plan.tau;
    result.tau_formula = plan.formula_value;
    result.per_target = sweep(projection.state, base, plan, options, targets);
    result.admissible_targets = admissible_count(base);
    result.resource.f_c = coherence_fraction(projection.state);
    result.resource.f_c_even = even_coherence_fraction(projection.state);
    result.resource.C_f = fidelity_coherence(projection.state);
    result.leaked_weight = projection.leaked_weight;
    finish(result, options, start);
    return result;
}

RunResult run_oskw(int n, const IterationPlan& plan, const RunOptions& options) {
    RunResult r = run_oskw1(make_even_uniform_node_state(n + 1), plan, options);
    r.variant = Algorithm::oskw;
    return r;
}

}  // namespace hcwalk
