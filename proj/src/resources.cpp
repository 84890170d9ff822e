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

#include "hcwalk/resources.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hcwalk/parallel.hpp"

namespace hcwalk {

using Qubit = std::array<Complex, 2>;

double coherence_fraction(const NodeState& state) {
    Complex sum{};
    for (const Complex& a : state.amplitudes()) sum += a;
    return std::norm(sum) / static_cast<double>(state.size());
}

double coherence_fraction(const MixedEnsemble& ensemble) {
    double total = 0.0;
    for (const auto& m : ensemble.members()) total += m.weight * coherence_fraction(m.state);
    return total;
}

double even_coherence_fraction(const NodeState& state) {
    Complex sum{};
    const auto amps = state.amplitudes();
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
        if (hamming_weight(x) % 2 == 0) sum += amps[x];
    }
    return std::norm(sum) / static_cast<double>(state.size() / 2);
}

BasisChoice best_pauli_basis(const NodeState& state) {
    BasisChoice best{0, std::norm(state[0])};
    const auto amps = state.amplitudes();
    for (std::uint64_t x = 1; x < amps.size(); ++x) {
        const double p = std::norm(amps[x]);
        if (p > best.probability) best = {x, p};
    }
    return best;
}

double fidelity_coherence(const NodeState& state) {
    return std::sqrt(std::max(0.0, 1.0 - best_pauli_basis(state).probability));
}

// ---------------------------------------------------------------------------
// Alternating product-overlap maximization

namespace {

/// w[b] = sum_{x: x_j = b} prod_{k != j} conj(u_k[x_k]) psi(x)
Qubit partial_contraction(std::span<const Complex> psi, std::span<const Qubit> factors, int site,
                          std::vector<Complex>& scratch) {
    const int n = static_cast<int>(factors.size());
    scratch.assign(psi.begin(), psi.end());
    std::uint64_t len = scratch.size();
    // Top qubits n-1 .. site+1: the contracted qubit is always the highest bit.
    for (int k = n - 1; k > site; --k) {
        const Complex c0 = std::conj(factors[k][0]);
        const Complex c1 = std::conj(factors[k][1]);
        const std::uint64_t half = len / 2;
        for (std::uint64_t y = 0; y < half; ++y) scratch[y] = c0 * scratch[y] + c1 * scratch[y + half];
        len = half;
    }
    // Bottom qubits 0 .. site-1: the contracted qubit is always the lowest bit.
    for (int k = 0; k < site; ++k) {
        const Complex c0 = std::conj(factors[k][0]);
        const Complex c1 = std::conj(factors[k][1]);
        const std::uint64_t half = len / 2;
        for (std::uint64_t y = 0; y < half; ++y) scratch[y] = c0 * scratch[2 * y] + c1 * scratch[2 * y + 1];
        len = half;
    }
    return {scratch[0], scratch[1]};
}

double product_overlap(std::span<const Complex> psi, std::span<const Qubit> factors, std::vector<Complex>& scratch) {
    const Qubit w = partial_contraction(psi, factors, 0, scratch);
    const Complex amp = std::conj(factors[0][0]) * w[0] + std::conj(factors[0][1]) * w[1];
    return std::norm(amp);
}

Qubit random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Qubit q;
    for (auto& c : q) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex{re, im};
    }
    const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    q[0] /= norm;
    q[1] /= norm;
    return q;
}

struct RestartOutcome {
    std::vector<Qubit> factors;
    double overlap = 0.0;
    bool converged = false;
    int sweeps = 0;
};

RestartOutcome alternate_from(std::span<const Complex> psi, std::vector<Qubit> factors,
                              const OptimizerSettings& settings) {
    std::vector<Complex> scratch;
    RestartOutcome out;
    double previous = product_overlap(psi, factors, scratch);
    for (int sweep = 1; sweep <= settings.max_sweeps; ++sweep) {
        double value = previous;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const Qubit w = partial_contraction(psi, factors, static_cast<int>(j), scratch);
            const double norm2 = std::norm(w[0]) + std::norm(w[1]);
            if (norm2 > 0.0) {
                const double norm = std::sqrt(norm2);
                factors[j] = {w[0] / norm, w[1] / norm};
                value = norm2;
            }
        }
        out.sweeps = sweep;
        if (std::abs(value - previous) < settings.convergence) {
            out.converged = true;
            previous = value;
            break;
        }
        previous = value;
    }
    out.overlap = product_overlap(psi, factors, scratch);
    out.factors = std::move(factors);
    return out;
}

}  // namespace

ProductOverlap maximize_product_overlap(const NodeState& state, const OptimizerSettings& settings, std::uint64_t seed,
                                        int threads) {
    if (settings.restarts < 1) throw std::invalid_argument("optimizer needs at least one restart");
    const int n = state.qubits();
    const auto psi = state.amplitudes();
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(settings.restarts));

    parallel_for(outcomes.size(), threads, [&](std::size_t r) {
        std::vector<Qubit> start(static_cast<std::size_t>(n));
        if (r == 0) {
            const std::uint64_t i = best_pauli_basis(state).index;
            for (int j = 0; j < n; ++j) start[j] = ((i >> j) & 1U) ? Qubit{0.0, 1.0} : Qubit{1.0, 0.0};
        } else {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            for (auto& q : start) q = random_qubit(rng);
        }
        outcomes[r] = alternate_from(psi, std::move(start), settings);
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].overlap > outcomes[best].overlap) best = r;
    }
    ProductOverlap result;
    result.factors = std::move(outcomes[best].factors);
    result.overlap = std::min(1.0, outcomes[best].overlap);
    result.converged = outcomes[best].converged;
    result.restarts_used = settings.restarts;
    result.best_restart = static_cast<int>(best);
    result.sweeps = outcomes[best].sweeps;
    return result;
}

ResourceReport groverian_entanglement(const NodeState& state, int restarts, std::uint64_t seed) {
    OptimizerSettings settings = default_settings().optimizer;
    settings.restarts = restarts;
    return groverian_entanglement(state, settings, seed);
}

ResourceReport groverian_entanglement(const NodeState& state, const OptimizerSettings& settings, std::uint64_t seed,
                                      int threads) {
    const ProductOverlap best = maximize_product_overlap(state, settings, seed, threads);
    ResourceReport report;
    report.f_c = coherence_fraction(state);
    report.C_f = fidelity_coherence(state);
    report.E_g_overlap = best.overlap;
    report.E_g = std::sqrt(std::max(0.0, 1.0 - best.overlap));
    report.restarts_used = best.restarts_used;
    report.converged = best.converged;
    return report;
}

// ---------------------------------------------------------------------------
// Pauli layers

PauliLayerChoice enumerate_pauli_layers(const NodeState& state, int max_n) {
    const int n = state.qubits();
    if (n > max_n) {
        throw std::invalid_argument("Pauli enumeration of 3^" + std::to_string(n) + " layers exceeds guard n <= " +
                                    std::to_string(max_n));
    }
    // <0| P for each Pauli, as a row over the qubit's two basis states.
    const Mat2 mats[3] = {pauli_matrix(Pauli::x), pauli_matrix(Pauli::y), pauli_matrix(Pauli::z)};
    const auto psi = state.amplitudes();

    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::vector<int> best_digits = digits;
    double best_value = -1.0;
    std::vector<Complex> row(psi.size());
    std::uint64_t total = 1;
    for (int j = 0; j < n; ++j) total *= 3;

    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int j = 0; j < n; ++j) {
            digits[j] = static_cast<int>(c % 3);
            c /= 3;
        }
        // Row vector <0^n| (V_0 (x) ... (x) V_{n-1}) built by Kronecker doubling.
        row[0] = 1.0;
        std::uint64_t len = 1;
        for (int j = 0; j < n; ++j) {
            const Mat2& v = mats[digits[j]];
            for (std::uint64_t y = 0; y < len; ++y) {
                const Complex base = row[y];
                row[y] = base * v[0];
                row[y + len] = base * v[1];
            }
            len *= 2;
        }
        Complex amp{};
        for (std::uint64_t x = 0; x < psi.size(); ++x) amp += row[x] * psi[x];
        const double value = std::norm(amp);
        if (value > best_value) {
            best_value = value;
            best_digits = digits;
        }
    }

    std::vector<Pauli> paulis;
    paulis.reserve(best_digits.size());
    for (int d : best_digits) paulis.push_back(static_cast<Pauli>(d));
    LocalLayer layer = LocalLayer::from_paulis(paulis);
    return {std::move(paulis), std::move(layer), best_value};
}

PauliLayerChoice analytic_pauli_layer(const NodeState& state) {
    const BasisChoice best = best_pauli_basis(state);
    std::vector<Pauli> paulis;
    for (int j = 0; j < state.qubits(); ++j) paulis.push_back(((best.index >> j) & 1U) ? Pauli::x : Pauli::z);
    LocalLayer layer = LocalLayer::from_paulis(paulis);
    const double value = std::norm(apply_local_layer(state, layer)[0]);
    return {std::move(paulis), std::move(layer), value};
}

// ---------------------------------------------------------------------------
// Local layer toward eta

Mat2 rotation_to_plus(const std::array<Complex, 2>& u) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex c0 = std::conj(u[0]);
    const Complex c1 = std::conj(u[1]);
    // |+><u| + |-><u_perp| with u_perp = (-conj(u1), conj(u0)).
    return {s * (c0 - u[1]), s * (c1 + u[0]), s * (c0 + u[1]), s * (c1 - u[0])};
}

LayerOptimum optimize_local_layer_for_eta_overlap(const NodeState& state, int restarts, std::uint64_t seed) {
    OptimizerSettings settings = default_settings().optimizer;
    settings.restarts = restarts;
    return optimize_local_layer_for_eta_overlap(state, settings, seed);
}

LayerOptimum optimize_local_layer_for_eta_overlap(const NodeState& state, const OptimizerSettings& settings,
                                                  std::uint64_t seed, int threads) {
    ProductOverlap product = maximize_product_overlap(state, settings, seed, threads);
    std::vector<Mat2> factors;
    factors.reserve(product.factors.size());
    for (const auto& u : product.factors) factors.push_back(rotation_to_plus(u));
    LocalLayer layer(std::move(factors), 1e-10);
    const NodeState transformed = apply_local_layer(state, layer);
    const double value = coherence_fraction(transformed);
    return {std::move(layer), value, std::move(product)};
}

}  // namespace hcwalk
