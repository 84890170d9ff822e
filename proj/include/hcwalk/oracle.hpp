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

// Brute-force verifiers for small systems. Nothing here calls into the
// matrix-free walk code: operators are assembled entry by entry from their
// definitions and multiplied densely.

#include <cstdint>
#include <vector>

#include "hcwalk/node_state.hpp"
#include "hcwalk/walk.hpp"

namespace hcwalk::oracle {

/// Dense column-major operator on coin (x) node space (flat index d * N + x).
struct DenseOperator {
    std::size_t dim = 0;
    std::vector<Complex> entries;  // column-major, dim * dim

    Complex operator()(std::size_t row, std::size_t col) const { return entries[col * dim + row]; }
};

DenseOperator dense_shift(int dimension);
DenseOperator dense_perturbed_coin(const WalkSpec& spec);

/// V = S C, or V_opt = S (C0 (x) I) S C for the OSKW variant. Throws
/// std::invalid_argument when the base n exceeds `max_n` (OSKW base n is
/// dimension - 1).
DenseOperator build_dense_evolution(const WalkSpec& spec, int max_n = default_settings().limits.max_dense_n);

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);
DenseOperator power(const DenseOperator& op, int exponent);
std::vector<Complex> apply(const DenseOperator& op, std::span<const Complex> vec);

/// max_ij |(M^dagger M - I)_ij|
double unitarity_defect(const DenseOperator& op);

/// Target-averaged success probability computed with dense powers of V.
double dense_average_success(const NodeState& node, int dimension, WalkVariant variant, int tau,
                             int max_n = default_settings().limits.max_dense_n);

/// Maximum of |<product|psi>|^2 over a grid of per-qubit Bloch angles:
/// theta_k = k pi / r (k = 0..r), phi_k = 2 pi k / r (k = 0..r-1), first
/// component real. The last qubit is not gridded: for each grid point of the
/// others its optimal factor is taken in closed form. Every value is attained
/// by a concrete product state, so the result is a lower bound on the true
/// maximum; grids are nested under r -> m r.
double grid_product_overlap(const NodeState& state, int angular_resolution,
                            const Limits& limits = default_settings().limits);

struct IdentityReport {
    int n = 0;
    int trials = 0;
    int layer_passes = 0;
    int pauli_passes = 0;
    double worst_layer_deviation = 0.0;  // |layer overlap - (1 - E_g^2)|
    double worst_pauli_deviation = 0.0;  // |Pauli enumeration - max_i |a_i|^2|

    bool all_passed() const { return layer_passes == trials && pauli_passes == trials; }
};

/// For `trials` seeded Haar states: (a) the local-layer optimizer's eta
/// overlap against 1 - E_g^2 (tolerance 1e-8); (b) the exhaustive Pauli
/// enumeration against max_i |a_i|^2 (tolerance 1e-12).
IdentityReport verify_measure_identities(int n, int trials, std::uint64_t seed,
                                         const Limits& limits = default_settings().limits);

}  // namespace hcwalk::oracle
