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

#pragma once

// End-to-end search runs. Each runner prepares the initial node state,
// averages the marked-vertex success probability over all admissible targets
// and pairs it with the closed-form prediction from the state's resources:
//
//   SKW-1   f_c / 2            (SKW: psi = eta, prediction 1/2)
//   SKW-2   (1 - E_g^2) / 2    best local layer applied first
//   SKW-3   (1 - C_f^2) / 2    best Pauli layer, then Hadamard on every qubit
//   OSKW-1  |<eta^e|psi^e>|^2  even-parity projection, optimized walk

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcwalk/resources.hpp"
#include "hcwalk/target_sweep.hpp"
#include "hcwalk/walk.hpp"

namespace hcwalk {

enum class Algorithm { skw, skw1, skw2, skw3, oskw, oskw1 };

std::string algorithm_name(Algorithm algorithm);
/// Accepts the names produced by algorithm_name ("skw", "skw1", ..., also "skw-1").
Algorithm parse_algorithm(const std::string& name);

enum class PauliSelection { automatic, exhaustive, analytic };
enum class OskwNormalization { even_targets, all_vertices };
enum class ResourceDepth { full, coherence_only };

struct RunOptions {
    SweepMethod sweep = SweepMethod::translated;
    SuccessMetric metric = SuccessMetric::vertex_marginal;
    int threads = 1;
    OptimizerSettings optimizer = default_settings().optimizer;
    std::uint64_t seed = 0;
    PauliSelection pauli = PauliSelection::automatic;
    /// Largest n for which `automatic` enumerates all 3^n Pauli layers.
    int automatic_pauli_max_n = 8;
    OskwNormalization oskw_normalization = OskwNormalization::even_targets;
    /// coherence_only skips the E_g optimizer where the run does not need it.
    ResourceDepth resources = ResourceDepth::full;
    Limits limits = default_settings().limits;
};

struct TargetProbability {
    std::uint64_t target;
    double probability;
};

struct RunResult {
    Algorithm variant;
    int n;               // node-register qubits of the search (OSKW: base n)
    int tau;             // applications of V or V_opt
    double tau_formula;  // real-valued formula behind tau
    std::vector<TargetProbability> per_target;
    std::uint64_t admissible_targets;  // targets the average is meant over
    double p_avg;
    double p_pred;
    double abs_dev;
    ResourceReport resource;
    std::optional<double> leaked_weight;  // OSKW family
    std::optional<LocalLayer> layer;      // SKW-2 / SKW-3 preparation layer
    std::uint64_t seed;
    double wall_ms;
};

/// Closed-form prediction for `variant`. Throws std::invalid_argument when the
/// needed resource field is missing.
double predicted_probability(Algorithm variant, const ResourceReport& resource);

RunResult run_skw(int n, const IterationPlan& plan, const RunOptions& options = {});
RunResult run_skw1(const NodeState& state, const IterationPlan& plan, const RunOptions& options = {});
RunResult run_skw1(const MixedEnsemble& ensemble, const IterationPlan& plan, const RunOptions& options = {});
RunResult run_skw2(const NodeState& state, const IterationPlan& plan, const RunOptions& options = {});
RunResult run_skw3(const NodeState& state, const IterationPlan& plan, const RunOptions& options = {});
/// `state` lives on the (n+1)-cube: it has n+1 qubits.
RunResult run_oskw1(const NodeState& state, const IterationPlan& plan, const RunOptions& options = {});
/// OSKW started from the even-parity uniform state on the (n+1)-cube.
RunResult run_oskw(int n, const IterationPlan& plan, const RunOptions& options = {});

/// Default plan for a variant at base n.
IterationPlan default_plan(Algorithm variant, int n);

}  // namespace hcwalk
