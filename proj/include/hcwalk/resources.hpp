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

// Resource measures of the initial node state.
//
//   coherence fraction    f_c  = <eta| rho |eta>
//   fidelity coherence    C_f  = sqrt(1 - max_i |a_i|^2)
//   Groverian entanglement E_g = sqrt(1 - max_{product u} |<u|psi>|^2)
//
// E_g needs a maximization over product states. It is computed by alternating
// single-qubit updates: with every factor but j fixed, the best j-th factor is
// the normalized partial contraction of psi against the others, and the
// overlap never decreases. Restart 0 starts from the basis state with the
// largest amplitude (a product state), later restarts from Haar-random product
// states. The result is a lower bound on the true maximum overlap, hence an
// upper bound on E_g.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcwalk/local_layer.hpp"
#include "hcwalk/node_state.hpp"

namespace hcwalk {

struct ResourceReport {
    std::optional<double> f_c;
    std::optional<double> f_c_even;  // against the even-parity uniform state
    std::optional<double> C_f;
    std::optional<double> E_g;
    std::optional<double> E_g_overlap;  // best product overlap found
    int restarts_used = 0;
    bool converged = false;
};

double coherence_fraction(const NodeState& state);
double coherence_fraction(const MixedEnsemble& ensemble);

/// |<eta^e|psi>|^2 with eta^e uniform over even-Hamming-weight vertices.
double even_coherence_fraction(const NodeState& state);

double fidelity_coherence(const NodeState& state);

struct ProductOverlap {
    /// Factor j is the single-qubit state |u_j> = (u_j[0], u_j[1]).
    std::vector<std::array<Complex, 2>> factors;
    double overlap = 0.0;  // |<u_0 ... u_{n-1}|psi>|^2
    bool converged = false;
    int restarts_used = 0;
    int best_restart = 0;
    int sweeps = 0;  // sweeps used by the best restart
};

/// Best product-state overlap found by the alternating optimizer. Restarts are
/// independent; restart r draws from a generator seeded with (seed, r), so the
/// result does not depend on `threads`.
ProductOverlap maximize_product_overlap(const NodeState& state, const OptimizerSettings& settings,
                                        std::uint64_t seed, int threads = 1);

ResourceReport groverian_entanglement(const NodeState& state, int restarts, std::uint64_t seed);
ResourceReport groverian_entanglement(const NodeState& state, const OptimizerSettings& settings,
                                      std::uint64_t seed, int threads = 1);

struct BasisChoice {
    std::uint64_t index;
    double probability;
};

/// argmax_i |a_i|^2 (smallest index on ties) and its value.
BasisChoice best_pauli_basis(const NodeState& state);

struct PauliLayerChoice {
    std::vector<Pauli> paulis;
    LocalLayer layer;
    double probability;  // |<0^n| (V_0 (x) ... (x) V_{n-1}) |psi>|^2
};

/// Exhaustive search over all 3^n Pauli layers. Throws std::invalid_argument
/// when n exceeds `max_n`.
PauliLayerChoice enumerate_pauli_layers(const NodeState& state,
                                        int max_n = default_settings().limits.max_pauli_enumeration_n);

/// Pauli layer mapping the largest-amplitude basis vertex to |0^n> without
/// enumeration: X on set bits, Z elsewhere.
PauliLayerChoice analytic_pauli_layer(const NodeState& state);

struct LayerOptimum {
    LocalLayer layer;
    double overlap;  // |<eta| (U_0 (x) ... ) |psi>|^2, evaluated on the transformed state
    ProductOverlap product;
};

/// Local layer maximizing the overlap of the transformed state with eta. Each
/// factor maps the optimal product factor |u_j> to |+>.
LayerOptimum optimize_local_layer_for_eta_overlap(const NodeState& state, int restarts, std::uint64_t seed);
LayerOptimum optimize_local_layer_for_eta_overlap(const NodeState& state, const OptimizerSettings& settings,
                                                  std::uint64_t seed, int threads = 1);

/// Unitary with U|u> = |+> and U|u_perp> = |->.
Mat2 rotation_to_plus(const std::array<Complex, 2>& u);

}  // namespace hcwalk
