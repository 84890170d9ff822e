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

#include "hcwalk/node_state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hcwalk/kernels.hpp"

namespace hcwalk {
namespace {

void require_min_qubits(int n) {
    if (n < 2) throw std::invalid_argument("hypercube walk needs n >= 2, got " + std::to_string(n));
}

}  // namespace

NodeState::NodeState(int n, std::vector<Complex> amplitudes, double tolerance)
    : n_(n), amplitudes_(std::move(amplitudes)) {
    if (n < 2 || n > 40) throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
    if (amplitudes_.size() != vertex_count(n)) {
        throw std::invalid_argument("expected " + std::to_string(vertex_count(n)) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
    }
    const double norm2 = kernels::active().squared_norm(amplitudes_.data(), amplitudes_.size());
    if (!(std::abs(norm2 - 1.0) <= tolerance)) {
        throw std::invalid_argument("node state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
}

NodeState NodeState::normalized(int n, std::vector<Complex> amplitudes) {
    const double norm2 = kernels::active().squared_norm(amplitudes.data(), amplitudes.size());
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::invalid_argument("cannot normalize a zero vector");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes) a *= scale;
    return NodeState(n, std::move(amplitudes));
}

MixedEnsemble::MixedEnsemble(std::vector<Member> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("mixed ensemble needs at least one member");
    double total = 0.0;
    for (const auto& m : members_) {
        if (!(m.weight >= 0.0)) throw std::invalid_argument("ensemble weights must be non-negative");
        if (m.state.qubits() != members_.front().state.qubits()) {
            throw std::invalid_argument("ensemble members must share the qubit count");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > default_settings().tolerances.ensemble_weights) {
        throw std::invalid_argument("ensemble weights sum to " + std::to_string(total) + ", not 1");
    }
}

NodeState make_uniform_node_state(int n) {
    require_min_qubits(n);
    const std::uint64_t size = vertex_count(n);
    return NodeState(n, std::vector<Complex>(size, Complex{1.0 / std::sqrt(static_cast<double>(size)), 0.0}));
}

NodeState make_basis_node_state(int n, std::uint64_t index) {
    require_min_qubits(n);
    if (index >= vertex_count(n)) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for n=" + std::to_string(n));
    }
    std::vector<Complex> amps(vertex_count(n));
    amps[index] = 1.0;
    return NodeState(n, std::move(amps));
}

NodeState make_random_node_state(int n, std::uint64_t seed) {
    require_min_qubits(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(vertex_count(n));
    for (auto& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex{re, im};
    }
    return NodeState::normalized(n, std::move(amps));
}

NodeState make_even_uniform_node_state(int n) {
    require_min_qubits(n);
    const std::uint64_t size = vertex_count(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(size / 2));
    std::vector<Complex> amps(size);
    for (std::uint64_t x = 0; x < size; ++x) {
        if (hamming_weight(x) % 2 == 0) amps[x] = amp;
    }
    return NodeState(n, std::move(amps));
}

Complex overlap(const NodeState& a, const NodeState& b) {
    if (a.qubits() != b.qubits()) throw std::invalid_argument("overlap: qubit count mismatch");
    Complex total{};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) total += std::conj(x[i]) * y[i];
    return total;
}

NodeState apply_local_layer(const NodeState& state, const LocalLayer& layer) {
    if (layer.qubits() != state.qubits()) {
        throw std::invalid_argument("local layer has " + std::to_string(layer.qubits()) + " factors for " +
                                    std::to_string(state.qubits()) + " qubits");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    const std::uint64_t size = amps.size();
    for (int j = 0; j < layer.qubits(); ++j) {
        const Mat2& u = layer.factor(j);
        const std::uint64_t bit = std::uint64_t{1} << j;
        for (std::uint64_t x = 0; x < size; ++x) {
            if (x & bit) continue;
            const Complex a0 = amps[x];
            const Complex a1 = amps[x | bit];
            amps[x] = u[0] * a0 + u[1] * a1;
            amps[x | bit] = u[2] * a0 + u[3] * a1;
        }
    }
    return NodeState(state.qubits(), std::move(amps));
}

}  // namespace hcwalk
