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

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "hcwalk/settings.hpp"

namespace hcwalk {

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

namespace gates {
Mat2 identity();
Mat2 hadamard();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
}  // namespace gates

Mat2 multiply(const Mat2& a, const Mat2& b);

/// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const Mat2& u);

enum class Pauli { x, y, z };

Mat2 pauli_matrix(Pauli p);
std::string_view pauli_name(Pauli p);

/// Tensor product U_0 (x) U_1 (x) ... of single-qubit unitaries; factor j acts
/// on qubit j (bit j of the vertex index).
class LocalLayer {
public:
    /// Throws std::invalid_argument when a factor is not unitary within `tolerance`.
    explicit LocalLayer(std::vector<Mat2> factors,
                        double tolerance = default_settings().tolerances.unitarity);

    static LocalLayer identity(int n);
    static LocalLayer uniform(int n, const Mat2& factor);
    static LocalLayer from_paulis(std::span<const Pauli> paulis);

    int qubits() const { return static_cast<int>(factors_.size()); }
    const Mat2& factor(int j) const { return factors_.at(static_cast<std::size_t>(j)); }
    std::span<const Mat2> factors() const { return factors_; }

    /// Factor-wise product: (this * other)_j = this_j * other_j, i.e. `other`
    /// is applied first.
    LocalLayer after(const LocalLayer& other) const;

private:
    std::vector<Mat2> factors_;
};

}  // namespace hcwalk
