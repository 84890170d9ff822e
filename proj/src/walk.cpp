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

#include "hcwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcwalk/kernels.hpp"

namespace hcwalk {

// ---------------------------------------------------------------------------
// Coin

Coin Coin::matrix(int dim, std::vector<Complex> entries, double tolerance) {
    if (dim < 1 || entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("coin matrix must be dim x dim");
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex g{};
            for (int k = 0; k < dim; ++k) g += std::conj(entries[k * dim + i]) * entries[k * dim + j];
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > tolerance) {
                throw std::invalid_argument("coin matrix is not unitary");
            }
        }
    }
    Coin coin(Kind::matrix);
    coin.dim_ = dim;
    coin.entries_ = std::move(entries);
    return coin;
}

Coin Coin::adjoint() const {
    if (kind_ != Kind::matrix) return *this;  // structured coins are Hermitian
    Coin out(Kind::matrix);
    out.dim_ = dim_;
    out.entries_.resize(entries_.size());
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) out.entries_[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
    }
    return out;
}

std::string Coin::name() const {
    switch (kind_) {
        case Kind::grover:
            return "grover";
        case Kind::negative_identity:
            return "negative_identity";
        case Kind::identity:
            return "identity";
        case Kind::matrix:
            return "matrix";
    }
    return "unknown";
}

void Coin::apply_at(Complex* rows, int dirs, std::uint64_t node_count, std::uint64_t x) const {
    switch (kind_) {
        case Kind::identity:
            return;
        case Kind::negative_identity:
            for (int d = 0; d < dirs; ++d) rows[d * node_count + x] = -rows[d * node_count + x];
            return;
        case Kind::grover: {
            Complex sum{};
            for (int d = 0; d < dirs; ++d) sum += rows[d * node_count + x];
            const Complex scaled = (2.0 / dirs) * sum;
            for (int d = 0; d < dirs; ++d) rows[d * node_count + x] = scaled - rows[d * node_count + x];
            return;
        }
        case Kind::matrix: {
            std::vector<Complex> in(static_cast<std::size_t>(dirs));
            for (int d = 0; d < dirs; ++d) in[d] = rows[d * node_count + x];
            for (int i = 0; i < dirs; ++i) {
                Complex acc{};
                for (int j = 0; j < dirs; ++j) acc += entries_[i * dim_ + j] * in[j];
                rows[i * node_count + x] = acc;
            }
            return;
        }
    }
}

void Coin::apply_everywhere(Complex* rows, int dirs, std::uint64_t node_count) const {
    switch (kind_) {
        case Kind::identity:
            return;
        case Kind::negative_identity:
            for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dirs) * node_count; ++i) rows[i] = -rows[i];
            return;
        case Kind::grover:
            kernels::active().grover_coin(rows, static_cast<std::size_t>(dirs), node_count);
            return;
        case Kind::matrix:
            for (std::uint64_t x = 0; x < node_count; ++x) apply_at(rows, dirs, node_count, x);
            return;
    }
}

// ---------------------------------------------------------------------------
// WalkSpec / IterationPlan

WalkSpec WalkSpec::skw(int n, std::uint64_t target) {
    WalkSpec spec{n, target, WalkVariant::skw};
    spec.validate();
    return spec;
}

WalkSpec WalkSpec::oskw(int n, std::uint64_t target) {
    WalkSpec spec{n + 1, target, WalkVariant::oskw};
    spec.validate();
    return spec;
}

WalkSpec WalkSpec::with_target(std::uint64_t t) const {
    WalkSpec copy = *this;
    copy.target = t;
    return copy;
}

void WalkSpec::validate() const {
    if (dimension < 2 || dimension > 40) throw std::invalid_argument("walk dimension out of range");
    if (target >= node_count()) throw std::invalid_argument("target vertex out of range");
    if (variant == WalkVariant::oskw && hamming_weight(target) % 2 != 0) {
        throw std::invalid_argument("OSKW target must have even Hamming weight");
    }
    for (const Coin* c : {&coin0, &coin1}) {
        if (c->kind() == Coin::Kind::matrix && c->matrix_dim() != dimension) {
            throw std::invalid_argument("coin matrix dimension does not match walk dimension");
        }
    }
}

std::string tau_rule_name(TauRule rule) {
    switch (rule) {
        case TauRule::explicit_steps:
            return "explicit";
        case TauRule::skw_optimal:
            return "skw_optimal";
        case TauRule::oskw_optimal:
            return "oskw_optimal";
    }
    return "unknown";
}

IterationPlan IterationPlan::explicit_steps(int tau) {
    if (tau < 0) throw std::invalid_argument("iteration count must be non-negative");
    return {tau, TauRule::explicit_steps, static_cast<double>(tau)};
}

IterationPlan IterationPlan::skw_optimal(int n) {
    const double value = std::numbers::pi / 2.0 * std::sqrt(std::ldexp(1.0, n - 1));
    return {static_cast<int>(std::lround(value)), TauRule::skw_optimal, value};
}

IterationPlan IterationPlan::oskw_optimal(int dimension) {
    const double value = std::numbers::pi / (2.0 * std::numbers::sqrt2) * std::sqrt(std::ldexp(1.0, dimension));
    return {static_cast<int>(std::lround(value / 2.0)), TauRule::oskw_optimal, value};
}

// ---------------------------------------------------------------------------
// In-place primitives

namespace {

void require_layout(const WalkerState& state, const WalkSpec& spec) {
    spec.validate();
    if (state.directions() != spec.dimension) {
        throw std::invalid_argument("walker has " + std::to_string(state.directions()) +
                                    " directions, spec expects " + std::to_string(spec.dimension));
    }
}

void shift_in_place(std::span<Complex> amps, int dirs) {
    const std::uint64_t nodes = vertex_count(dirs);
    const auto& k = kernels::active();
    for (int d = 0; d < dirs; ++d) k.flip_bit(amps.data() + d * nodes, nodes, static_cast<unsigned>(d));
}

void perturbed_coin_in_place(std::span<Complex> amps, const WalkSpec& spec, bool adjoint) {
    const int dirs = spec.dimension;
    const std::uint64_t nodes = spec.node_count();
    std::vector<Complex> marked(static_cast<std::size_t>(dirs));
    for (int d = 0; d < dirs; ++d) marked[d] = amps[d * nodes + spec.target];

    const Coin c0 = adjoint ? spec.coin0.adjoint() : spec.coin0;
    const Coin c1 = adjoint ? spec.coin1.adjoint() : spec.coin1;
    c0.apply_everywhere(amps.data(), dirs, nodes);

    // Overwrite the target column with C1 applied to its original contents.
    for (int d = 0; d < dirs; ++d) amps[d * nodes + spec.target] = marked[d];
    c1.apply_at(amps.data(), dirs, nodes, spec.target);
}

void check_norm(double before, double after) {
    if (!(std::abs(after - before) <= default_settings().tolerances.normalization)) {
        throw InvariantViolation("walker_norm", "squared norm drifted from " + std::to_string(before) + " to " +
                                                    std::to_string(after));
    }
}

}  // namespace

WalkerState apply_shift(const WalkerState& state) {
    WalkerState out = state;
    shift_in_place(out.mutable_amplitudes(), out.directions());
    return out;
}

WalkerState apply_perturbed_coin(const WalkerState& state, const WalkSpec& spec) {
    require_layout(state, spec);
    WalkerState out = state;
    perturbed_coin_in_place(out.mutable_amplitudes(), spec, false);
    return out;
}

WalkerState evolve(const WalkerState& state, const WalkSpec& spec, const IterationPlan& plan) {
    require_layout(state, spec);
    WalkerState out = state;
    auto amps = out.mutable_amplitudes();
    const int dirs = spec.dimension;
    const std::uint64_t nodes = spec.node_count();
    for (int step = 0; step < plan.tau; ++step) {
        perturbed_coin_in_place(amps, spec, false);
        shift_in_place(amps, dirs);
        if (spec.variant == WalkVariant::oskw) {
            spec.coin0.apply_everywhere(amps.data(), dirs, nodes);
            shift_in_place(amps, dirs);
        }
    }
    check_norm(state.squared_norm(), out.squared_norm());
    return out;
}

WalkerState evolve_adjoint(const WalkerState& state, const WalkSpec& spec, const IterationPlan& plan) {
    require_layout(state, spec);
    WalkerState out = state;
    auto amps = out.mutable_amplitudes();
    const int dirs = spec.dimension;
    const std::uint64_t nodes = spec.node_count();
    const Coin c0_adj = spec.coin0.adjoint();
    for (int step = 0; step < plan.tau; ++step) {
        // (S C)^dagger = C^dagger S;  (S C0 S C)^dagger = C^dagger S C0^dagger S
        if (spec.variant == WalkVariant::oskw) {
            shift_in_place(amps, dirs);
            c0_adj.apply_everywhere(amps.data(), dirs, nodes);
        }
        shift_in_place(amps, dirs);
        perturbed_coin_in_place(amps, spec, true);
    }
    check_norm(state.squared_norm(), out.squared_norm());
    return out;
}

EvenParityProjection project_even_parity(const NodeState& state) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    double kept = 0.0;
    double leaked = 0.0;
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        if (hamming_weight(x) % 2 != 0) {
            leaked += std::norm(amps[x]);
            amps[x] = 0.0;
        } else {
            kept += std::norm(amps[x]);
        }
    }
    if (!(kept > 0.0)) throw std::invalid_argument("even-parity projection has zero norm");
    return {NodeState::normalized(state.qubits(), std::move(amps)), leaked};
}

std::string success_metric_name(SuccessMetric metric) {
    return metric == SuccessMetric::vertex_marginal ? "vertex_marginal" : "coin_projected";
}

double success_probability(const WalkerState& state, std::uint64_t target, SuccessMetric metric) {
    if (target >= state.node_count()) throw std::out_of_range("target vertex out of range");
    const int dirs = state.directions();
    if (metric == SuccessMetric::vertex_marginal) {
        double p = 0.0;
        for (int d = 0; d < dirs; ++d) p += std::norm(state.amplitude(d, target));
        return p;
    }
    Complex amp{};
    for (int d = 0; d < dirs; ++d) amp += state.amplitude(d, target);
    return std::norm(amp) / dirs;
}

}  // namespace hcwalk
