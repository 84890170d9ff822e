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

// Success probability of a walk for every admissible target vertex.
//
// Two independent routes:
//
//  direct      one forward evolution per target.
//  translated  the walk is covariant under vertex translation T_s
//              (V_t = T_t V_0 T_t), so
//                  <d, t| V_t^tau |S^c, psi> = sum_x k_d(x) psi(x ^ t),
//              with k_d the coin-contracted row <d, 0| V_0^tau. The rows come
//              from `dirs` adjoint evolutions; the XOR correlation is evaluated
//              with Walsh-Hadamard transforms, so each additional state costs
//              O(dirs * N log N).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcwalk/node_state.hpp"
#include "hcwalk/parallel.hpp"
#include "hcwalk/walk.hpp"

namespace hcwalk {

enum class SweepMethod { direct, translated };

std::string sweep_method_name(SweepMethod method);

/// Per-target success probabilities of the walk defined by `base` (its
/// target field is ignored) started from |S^c> (x) node.
class TargetSweep {
public:
    TargetSweep(WalkSpec base, IterationPlan plan, SweepMethod method,
                SuccessMetric metric = SuccessMetric::vertex_marginal, int threads = 1);

    /// Probability for each vertex in `targets`, in the same order. Targets
    /// must be admissible for the walk variant.
    std::vector<double> probabilities(const NodeState& node, std::span<const std::uint64_t> targets) const;

    /// Probability for every vertex 0..N-1. Inadmissible targets (odd vertices
    /// of an OSKW walk) report 0.
    std::vector<double> all_probabilities(const NodeState& node) const;

    const WalkSpec& base() const { return base_; }
    const IterationPlan& plan() const { return plan_; }
    SweepMethod method() const { return method_; }

private:
    std::vector<double> direct(const NodeState& node, std::span<const std::uint64_t> targets) const;
    std::vector<double> translated(const NodeState& node) const;

    WalkSpec base_;
    IterationPlan plan_;
    SweepMethod method_;
    SuccessMetric metric_;
    int threads_;
    // Walsh-Hadamard transforms of the correlation kernels (one per direction,
    // or a single coin-projected kernel).
    std::vector<std::vector<Complex>> kernel_spectra_;
};

}  // namespace hcwalk
