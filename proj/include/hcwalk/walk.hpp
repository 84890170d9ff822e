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

// Matrix-free walk operators on the hypercube.
//
//   shift S            |d, x> -> |d, x ^ (1 << d)>
//   perturbed coin C   C0 on every vertex except the target, C1 on the target
//   SKW step V         S C
//   OSKW step V_opt    S (C0 (x) I) S C, on a hypercube with one extra dimension
//
// Coin defaults: C0 = Grover diffusion (2/n) J - I, C1 = -I.

#include <cstdint>
#include <string>
#include <vector>

#include "hcwalk/node_state.hpp"
#include "hcwalk/walker_state.hpp"

namespace hcwalk {

class Coin {
public:
    enum class Kind { grover, negative_identity, identity, matrix };

    static Coin grover() { return Coin(Kind::grover); }
    static Coin negative_identity() { return Coin(Kind::negative_identity); }
    static Coin identity() { return Coin(Kind::identity); }
    /// Arbitrary dim x dim unitary, row-major. Throws when not unitary.
    static Coin matrix(int dim, std::vector<Complex> entries,
                       double tolerance = default_settings().tolerances.unitarity);

    Kind kind() const { return kind_; }
    /// Dimension of a `matrix` coin, 0 for the structured kinds.
    int matrix_dim() const { return dim_; }
    std::span<const Complex> entries() const { return entries_; }
    Coin adjoint() const;
    std::string name() const;

    /// In-place application to the coin vector of vertex x in a walker laid
    /// out as `dirs` rows of `node_count`.
    void apply_at(Complex* rows, int dirs, std::uint64_t node_count, std::uint64_t x) const;

    /// In-place application to every vertex.
    void apply_everywhere(Complex* rows, int dirs, std::uint64_t node_count) const;

private:
    explicit Coin(Kind kind) : kind_(kind) {}

    Kind kind_;
    int dim_ = 0;
    std::vector<Complex> entries_;
};

enum class WalkVariant { skw, oskw };

struct WalkSpec {
    int dimension;  // number of directions = hypercube dimension
    std::uint64_t target;
    WalkVariant variant;
    Coin coin0 = Coin::grover();
    Coin coin1 = Coin::negative_identity();

    /// SKW-family walk on the n-cube.
    static WalkSpec skw(int n, std::uint64_t target);
    /// OSKW-family walk: (n+1)-cube, target must have even Hamming weight.
    static WalkSpec oskw(int n, std::uint64_t target);

    std::uint64_t node_count() const { return vertex_count(dimension); }
    WalkSpec with_target(std::uint64_t t) const;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

enum class TauRule { explicit_steps, skw_optimal, oskw_optimal };

std::string tau_rule_name(TauRule rule);

/// Number of applications of V (SKW) or V_opt (OSKW) plus how it was chosen.
struct IterationPlan {
    int tau = 0;
    TauRule rule = TauRule::explicit_steps;
    /// Real-valued formula before rounding; equals tau for explicit plans.
    double formula_value = 0.0;

    static IterationPlan explicit_steps(int tau);
    /// tau = round((pi/2) sqrt(2^(n-1))).
    static IterationPlan skw_optimal(int n);
    /// The optimized walk's formula (pi/(2 sqrt 2)) sqrt(N), N = 2^dimension,
    /// counts single shift steps. Each V_opt contains two, so
    /// tau = round(formula / 2) applications of V_opt.
    static IterationPlan oskw_optimal(int dimension);
};

WalkerState apply_shift(const WalkerState& state);
WalkerState apply_perturbed_coin(const WalkerState& state, const WalkSpec& spec);

/// Applies V (or V_opt) `plan.tau` times. Throws InvariantViolation when the
/// norm drifts by more than the normalization tolerance.
WalkerState evolve(const WalkerState& state, const WalkSpec& spec, const IterationPlan& plan);

/// Applies the adjoint (V^dagger)^tau, i.e. the row <w| V^tau as a ket.
WalkerState evolve_adjoint(const WalkerState& state, const WalkSpec& spec, const IterationPlan& plan);

struct EvenParityProjection {
    NodeState state;       // renormalized projection
    double leaked_weight;  // probability on odd-weight vertices
};

/// Zeroes odd-Hamming-weight amplitudes and renormalizes. Throws
/// std::invalid_argument when no weight remains.
EvenParityProjection project_even_parity(const NodeState& state);

enum class SuccessMetric {
    vertex_marginal,  // sum_d |amp(d, target)|^2
    coin_projected,   // |<S^c, target | state>|^2
};

std::string success_metric_name(SuccessMetric metric);

double success_probability(const WalkerState& state, std::uint64_t target,
                           SuccessMetric metric = SuccessMetric::vertex_marginal);

}  // namespace hcwalk
