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

#include "hcwalk/walker_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hcwalk/kernels.hpp"

namespace hcwalk {

WalkerState::WalkerState(int dirs, std::vector<Complex> amplitudes) : dirs_(dirs), amplitudes_(std::move(amplitudes)) {
    if (dirs < 2 || dirs > 40) throw std::invalid_argument("walker needs 2..40 directions, got " + std::to_string(dirs));
    const std::uint64_t expected = static_cast<std::uint64_t>(dirs) * vertex_count(dirs);
    if (amplitudes_.size() != expected) {
        throw std::invalid_argument("walker expects " + std::to_string(expected) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
    }
}

WalkerState WalkerState::basis(int dirs, int direction, std::uint64_t vertex) {
    if (dirs < 2) throw std::invalid_argument("walker needs at least 2 directions");
    if (direction < 0 || direction >= dirs || vertex >= vertex_count(dirs)) {
        throw std::out_of_range("walker basis label out of range");
    }
    std::vector<Complex> amps(static_cast<std::uint64_t>(dirs) * vertex_count(dirs));
    amps[static_cast<std::uint64_t>(direction) * vertex_count(dirs) + vertex] = 1.0;
    return WalkerState(dirs, std::move(amps));
}

double WalkerState::squared_norm() const {
    return kernels::active().squared_norm(amplitudes_.data(), amplitudes_.size());
}

WalkerState compose_walker(int coin_dim, const NodeState& node) {
    if (coin_dim != node.qubits()) {
        throw std::invalid_argument("coin dimension " + std::to_string(coin_dim) + " does not match node qubits " +
                                    std::to_string(node.qubits()));
    }
    const std::uint64_t nodes = node.size();
    const double coin_amp = 1.0 / std::sqrt(static_cast<double>(coin_dim));
    std::vector<Complex> amps(static_cast<std::uint64_t>(coin_dim) * nodes);
    const auto psi = node.amplitudes();
    for (int d = 0; d < coin_dim; ++d) {
        Complex* row = amps.data() + static_cast<std::uint64_t>(d) * nodes;
        for (std::uint64_t x = 0; x < nodes; ++x) row[x] = coin_amp * psi[x];
    }
    return WalkerState(coin_dim, std::move(amps));
}

}  // namespace hcwalk
