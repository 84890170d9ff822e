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

#include <cstdint>
#include <span>
#include <vector>

#include "hcwalk/node_state.hpp"

namespace hcwalk {

/// Amplitudes over coin (x) node space. Direction d owns the contiguous row
/// [d * node_count, (d + 1) * node_count); flat index d * node_count + x.
class WalkerState {
public:
    /// Throws std::invalid_argument when dirs < 2, node_count != 2^dirs or the
    /// amplitude count is not dirs * node_count. Normalization is not checked
    /// here; evolution checks it.
    WalkerState(int dirs, std::vector<Complex> amplitudes);

    /// Single basis vector |d, x>.
    static WalkerState basis(int dirs, int direction, std::uint64_t vertex);

    int directions() const { return dirs_; }
    std::uint64_t node_count() const { return vertex_count(dirs_); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(int direction, std::uint64_t vertex) const {
        return amplitudes_[static_cast<std::uint64_t>(direction) * node_count() + vertex];
    }

    double squared_norm() const;

    /// Mutable access for evolution routines working on their own copy.
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }

private:
    int dirs_;
    std::vector<Complex> amplitudes_;
};

/// |S^c> (x) |psi> with |S^c> the uniform state over `coin_dim` directions.
/// The coin dimension must equal the node register's qubit count.
WalkerState compose_walker(int coin_dim, const NodeState& node);

}  // namespace hcwalk
