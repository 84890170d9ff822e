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

#include "hcwalk/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hcwalk/resources.hpp"

namespace hcwalk::oracle {
namespace {

using Matrix = Eigen::MatrixXcd;

Matrix to_eigen(const DenseOperator& op) {
    return Eigen::Map<const Matrix>(op.entries.data(), static_cast<Eigen::Index>(op.dim),
                                    static_cast<Eigen::Index>(op.dim));
}

DenseOperator from_eigen(const Matrix& m) {
    DenseOperator op;
    op.dim = static_cast<std::size_t>(m.rows());
    op.entries.assign(m.data(), m.data() + m.size());
    return op;
}

/// Coin matrix over directions, written out from the coin's definition.
Matrix coin_matrix(const Coin& coin, int dirs) {
    Matrix c = Matrix::Zero(dirs, dirs);
    switch (coin.kind()) {
        case Coin::Kind::grover:
            c.setConstant(Complex{2.0 / dirs, 0.0});
            c -= Matrix::Identity(dirs, dirs);
            break;
        case Coin::Kind::negative_identity:
            c = -Matrix::Identity(dirs, dirs);
            break;
        case Coin::Kind::identity:
            c = Matrix::Identity(dirs, dirs);
            break;
        case Coin::Kind::matrix:
            for (int i = 0; i < dirs; ++i) {
                for (int j = 0; j < dirs; ++j) c(i, j) = coin.entries()[static_cast<std::size_t>(i * dirs + j)];
            }
            break;
    }
    return c;
}

/// C0 (x) I + (C1 - C0) (x) |t><t|, or C0 (x) I when `perturbed` is false.
Matrix coin_operator(const WalkSpec& spec, bool perturbed) {
    const int dirs = spec.dimension;
    const auto nodes = static_cast<Eigen::Index>(spec.node_count());
    const Matrix c0 = coin_matrix(spec.coin0, dirs);
    const Matrix c1 = coin_matrix(spec.coin1, dirs);
    Matrix out = Matrix::Zero(dirs * nodes, dirs * nodes);
    for (int d = 0; d < dirs; ++d) {
        for (int e = 0; e < dirs; ++e) {
            for (Eigen::Index x = 0; x < nodes; ++x) {
                const bool marked = perturbed && static_cast<std::uint64_t>(x) == spec.target;
                out(d * nodes + x, e * nodes + x) = marked ? c1(d, e) : c0(d, e);
            }
        }
    }
    return out;
}

Matrix shift_operator(int dimension) {
    const auto nodes = static_cast<Eigen::Index>(vertex_count(dimension));
    Matrix s = Matrix::Zero(dimension * nodes, dimension * nodes);
    for (int d = 0; d < dimension; ++d) {
        for (Eigen::Index x = 0; x < nodes; ++x) s(d * nodes + (x ^ (Eigen::Index{1} << d)), d * nodes + x) = 1.0;
    }
    return s;
}

void check_dense_guard(const WalkSpec& spec, int max_n) {
    const int base_n = spec.variant == WalkVariant::oskw ? spec.dimension - 1 : spec.dimension;
    if (base_n > max_n) {
        throw std::invalid_argument("dense operator for n=" + std::to_string(base_n) + " exceeds guard n <= " +
                                    std::to_string(max_n));
    }
}

}  // namespace

DenseOperator dense_shift(int dimension) { return from_eigen(shift_operator(dimension)); }

DenseOperator dense_perturbed_coin(const WalkSpec& spec) { return from_eigen(coin_operator(spec, true)); }

DenseOperator build_dense_evolution(const WalkSpec& spec, int max_n) {
    spec.validate();
    check_dense_guard(spec, max_n);
    const Matrix s = shift_operator(spec.dimension);
    const Matrix c = coin_operator(spec, true);
    Matrix v = s * c;
    if (spec.variant == WalkVariant::oskw) v = s * coin_operator(spec, false) * v;
    return from_eigen(v);
}

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dense operator dimension mismatch");
    return from_eigen(to_eigen(a) * to_eigen(b));
}

DenseOperator power(const DenseOperator& op, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative operator power");
    Matrix result = Matrix::Identity(static_cast<Eigen::Index>(op.dim), static_cast<Eigen::Index>(op.dim));
    const Matrix base = to_eigen(op);
    for (int i = 0; i < exponent; ++i) result = base * result;
    return from_eigen(result);
}

std::vector<Complex> apply(const DenseOperator& op, std::span<const Complex> vec) {
    if (vec.size() != op.dim) throw std::invalid_argument("vector length does not match operator");
    const Eigen::VectorXcd in = Eigen::Map<const Eigen::VectorXcd>(vec.data(), static_cast<Eigen::Index>(vec.size()));
    const Eigen::VectorXcd out = to_eigen(op) * in;
    return {out.data(), out.data() + out.size()};
}

double unitarity_defect(const DenseOperator& op) {
    const Matrix m = to_eigen(op);
    const Matrix g = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return g.cwiseAbs().maxCoeff();
}

double dense_average_success(const NodeState& node, int dimension, WalkVariant variant, int tau, int max_n) {
    if (node.qubits() != dimension) throw std::invalid_argument("node state does not match walk dimension");
    const auto nodes = static_cast<Eigen::Index>(vertex_count(dimension));
    Eigen::VectorXcd start(dimension * nodes);
    const double coin_amp = 1.0 / std::sqrt(static_cast<double>(dimension));
    for (int d = 0; d < dimension; ++d) {
        for (Eigen::Index x = 0; x < nodes; ++x) start(d * nodes + x) = coin_amp * node[static_cast<std::uint64_t>(x)];
    }
    double total = 0.0;
    int count = 0;
    for (Eigen::Index t = 0; t < nodes; ++t) {
        if (variant == WalkVariant::oskw && hamming_weight(static_cast<std::uint64_t>(t)) % 2 != 0) continue;
        WalkSpec spec{dimension, static_cast<std::uint64_t>(t), variant};
        const Matrix v = to_eigen(build_dense_evolution(spec, max_n));
        Eigen::VectorXcd state = start;
        for (int i = 0; i < tau; ++i) state = v * state;
        for (int d = 0; d < dimension; ++d) total += std::norm(state(d * nodes + t));
        ++count;
    }
    return total / count;
}

double grid_product_overlap(const NodeState& state, int angular_resolution, const Limits& limits) {
    const int n = state.qubits();
    if (n > limits.max_grid_n) {
        throw std::invalid_argument("grid oracle limited to n <= " + std::to_string(limits.max_grid_n));
    }
    if (angular_resolution < 1 || angular_resolution > limits.max_grid_resolution) {
        throw std::invalid_argument("grid resolution must be in [1, " + std::to_string(limits.max_grid_resolution) +
                                    "]");
    }
    const int r = angular_resolution;
    // Conjugated grid factors (conj(u0), conj(u1)).
    std::vector<std::array<Complex, 2>> points;
    for (int i = 0; i <= r; ++i) {
        const double theta = std::numbers::pi * i / r;
        for (int k = 0; k < r; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / r;
            points.push_back({Complex{std::cos(theta / 2.0), 0.0}, std::conj(std::polar(std::sin(theta / 2.0), phi))});
        }
    }

    const int gridded = n - 1;
    const std::uint64_t low = vertex_count(gridded);
    const auto psi = state.amplitudes();
    std::vector<std::size_t> index(static_cast<std::size_t>(gridded), 0);
    std::vector<Complex> coeff(low);
    double best = 0.0;
    while (true) {
        coeff[0] = 1.0;
        std::uint64_t len = 1;
        for (int j = 0; j < gridded; ++j) {
            const auto& u = points[index[j]];
            for (std::uint64_t y = 0; y < len; ++y) {
                const Complex base = coeff[y];
                coeff[y] = base * u[0];
                coeff[y + len] = base * u[1];
            }
            len *= 2;
        }
        Complex w0{}, w1{};
        for (std::uint64_t y = 0; y < low; ++y) {
            w0 += coeff[y] * psi[y];
            w1 += coeff[y] * psi[y + low];
        }
        best = std::max(best, std::norm(w0) + std::norm(w1));

        int j = 0;
        while (j < gridded && ++index[j] == points.size()) index[j++] = 0;
        if (j == gridded) break;
    }
    return best;
}

IdentityReport verify_measure_identities(int n, int trials, std::uint64_t seed, const Limits& limits) {
    if (n < 2 || n > limits.max_identity_check_n) {
        throw std::invalid_argument("identity checks limited to 2 <= n <= " +
                                    std::to_string(limits.max_identity_check_n));
    }
    IdentityReport report;
    report.n = n;
    report.trials = trials;
    const OptimizerSettings settings = default_settings().optimizer;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
        const NodeState psi = make_random_node_state(n, trial_seed);

        const LayerOptimum layer = optimize_local_layer_for_eta_overlap(psi, settings, trial_seed);
        const ResourceReport eg = groverian_entanglement(psi, settings, trial_seed);
        const double layer_dev = std::abs(layer.overlap - (1.0 - *eg.E_g * *eg.E_g));
        report.worst_layer_deviation = std::max(report.worst_layer_deviation, layer_dev);
        if (layer_dev <= 1e-8) ++report.layer_passes;

        const double pauli_dev =
            std::abs(enumerate_pauli_layers(psi, limits.max_pauli_enumeration_n).probability -
                     best_pauli_basis(psi).probability);
        report.worst_pauli_deviation = std::max(report.worst_pauli_deviation, pauli_dev);
        if (pauli_dev <= 1e-12) ++report.pauli_passes;
    }
    return report;
}

}  // namespace hcwalk::oracle
