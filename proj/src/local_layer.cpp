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

#include "hcwalk/local_layer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hcwalk {

namespace gates {
Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
}  // namespace gates

Mat2 multiply(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double unitarity_defect(const Mat2& u) {
    // U^dagger U
    const Complex g00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
    const Complex g01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const Complex g11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
    return std::max({std::abs(g00 - 1.0), std::abs(g01), std::abs(g11 - 1.0)});
}

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::x:
            return gates::pauli_x();
        case Pauli::y:
            return gates::pauli_y();
        case Pauli::z:
            return gates::pauli_z();
    }
    throw std::invalid_argument("unknown Pauli");
}

std::string_view pauli_name(Pauli p) {
    switch (p) {
        case Pauli::x:
            return "X";
        case Pauli::y:
            return "Y";
        case Pauli::z:
            return "Z";
    }
    return "?";
}

LocalLayer::LocalLayer(std::vector<Mat2> factors, double tolerance) : factors_(std::move(factors)) {
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const double defect = unitarity_defect(factors_[j]);
        if (!(defect <= tolerance)) {
            throw std::invalid_argument("local layer factor " + std::to_string(j) +
                                        " is not unitary (defect " + std::to_string(defect) + ")");
        }
    }
}

LocalLayer LocalLayer::identity(int n) { return uniform(n, gates::identity()); }

LocalLayer LocalLayer::uniform(int n, const Mat2& factor) {
    return LocalLayer(std::vector<Mat2>(static_cast<std::size_t>(n), factor));
}

LocalLayer LocalLayer::from_paulis(std::span<const Pauli> paulis) {
    std::vector<Mat2> factors;
    factors.reserve(paulis.size());
    for (Pauli p : paulis) factors.push_back(pauli_matrix(p));
    return LocalLayer(std::move(factors));
}

LocalLayer LocalLayer::after(const LocalLayer& other) const {
    if (other.qubits() != qubits()) throw std::invalid_argument("local layer arity mismatch");
    std::vector<Mat2> out(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) out[j] = multiply(factors_[j], other.factors_[j]);
    // Products of unitaries drift by a few ulps; validate loosely.
    return LocalLayer(std::move(out), 1e-10);
}

}  // namespace hcwalk
