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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcwalk {

using Complex = std::complex<double>;

/// Numerical tolerances used for validation throughout the library.
struct Tolerances {
    double normalization = 1e-10;     // NodeState / WalkerState norm
    double ensemble_weights = 1e-12;  // sum of mixture weights
    double unitarity = 1e-12;         // coins and local-layer factors
    double probability_range = 1e-12; // slack on [0, 1] checks
};

/// Size guards for the exhaustive routines. These are configuration values
/// so a larger machine can raise them.
struct Limits {
    int max_pauli_enumeration_n = 12;
    int max_dense_n = 5;
    int max_grid_n = 3;
    int max_grid_resolution = 64;
    int max_identity_check_n = 6;
    int max_exact_target_dimension = 10;
    int sampled_targets = 256;
};

/// Alternating product-overlap optimizer settings.
struct OptimizerSettings {
    int restarts = 32;
    int max_sweeps = 500;
    double convergence = 1e-12;
};

struct Settings {
    Tolerances tolerances;
    Limits limits;
    OptimizerSettings optimizer;
    /// Constant c in the |p_avg - p_pred| <= c / sqrt(N) acceptance bound.
    double deviation_constant = 3.0;
};

/// Process-wide defaults. Values are plain data; callers copy and override.
const Settings& default_settings();

/// Raised when a computed quantity violates a documented invariant (norm
/// drift, probability outside [0, 1], inconsistent averages). `name()` is a
/// short identifier of the violated invariant.
class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Number of vertices of the hypercube of the given dimension.
inline std::uint64_t vertex_count(int dimension) { return std::uint64_t{1} << dimension; }

}  // namespace hcwalk
