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

#include "hcwalk/local_layer.hpp"
#include "hcwalk/settings.hpp"

namespace hcwalk {

/// Pure state of the n-qubit node register: 2^n amplitudes indexed by vertex,
/// bit j of the index is qubit j. Immutable once built; always normalized.
class NodeState {
public:
    /// Takes ownership of `amplitudes`. Throws std::invalid_argument when
    /// n < 2, the length is not 2^n, or the norm differs from 1 by more than
    /// `tolerance`.
    NodeState(int n, std::vector<Complex> amplitudes,
              double tolerance = default_settings().tolerances.normalization);

    /// Rescales `amplitudes` to unit norm first. Throws on a zero vector.
    static NodeState normalized(int n, std::vector<Complex> amplitudes);

    int qubits() const { return n_; }
    std::uint64_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::uint64_t x) const { return amplitudes_[x]; }

private:
    int n_;
    std::vector<Complex> amplitudes_;
};

/// Statistical mixture rho = sum_mu p_mu |psi_mu><psi_mu|.
class MixedEnsemble {
public:
    struct Member {
        double weight;
        NodeState state;
    };

    /// Throws std::invalid_argument on an empty list, negative weights,
    /// weights not summing to 1 within 1e-12, or members of different n.
    explicit MixedEnsemble(std::vector<Member> members);

    int qubits() const { return members_.front().state.qubits(); }
    std::span<const Member> members() const { return members_; }

private:
    std::vector<Member> members_;
};

/// Maximal coherent state eta: every amplitude 1/sqrt(2^n). Requires n >= 2.
NodeState make_uniform_node_state(int n);

/// Computational basis state |i>. Requires 0 <= i < 2^n.
NodeState make_basis_node_state(int n, std::uint64_t index);

/// Haar-random pure state: 2^n independent standard complex Gaussians,
/// normalized. A pure function of (n, seed).
NodeState make_random_node_state(int n, std::uint64_t seed);

/// Uniform superposition over even-Hamming-weight vertices of an n-cube.
NodeState make_even_uniform_node_state(int n);

/// <a|b> = sum_x conj(a_x) b_x.
Complex overlap(const NodeState& a, const NodeState& b);

/// (U_0 (x) ... (x) U_{n-1}) |psi>, one qubit sweep per factor.
NodeState apply_local_layer(const NodeState& state, const LocalLayer& layer);

/// Number of set bits.
inline int hamming_weight(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace hcwalk
