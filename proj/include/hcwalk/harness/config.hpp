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

// Experiment configuration: flat key-value text, one dotted key per line.
//
//   # comment
//   experiment.id    = fig4_skw1
//   run.variant      = skw1
//   run.n            = 8
//   run.tau_rule     = optimal          # or explicit, with run.tau = 18
//   state.family     = interpolated
//   state.params     = 0, 0.1, 0.2
//   state.seeds      = 1, 2, 3
//   optimizer.restarts = 32
//   output.csv       = results.csv
//
// The full key list is in README.md. Unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcwalk/harness/state_spec.hpp"
#include "hcwalk/runners.hpp"

namespace hcwalk::harness {

/// Parsed `key = value` lines in file order. Throws InputError on a line
/// without '=', an empty or malformed key, or a repeated key.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

struct ExperimentConfig {
    std::string experiment_id;
    Algorithm variant = Algorithm::skw1;
    int n = 0;  // base qubit count; OSKW states live on n + 1 qubits
    TauRule tau_rule = TauRule::skw_optimal;
    int tau = 0;  // explicit rule only

    std::string state_family = "uniform";
    std::vector<std::string> state_params;  // one run group per entry
    std::string state_amplitudes;           // explicit_amplitudes
    std::string state_ensemble;             // mixed_ensemble
    std::vector<std::uint64_t> seeds{0};

    RunOptions options;
    double deviation_constant = default_settings().deviation_constant;
    int threads = 1;

    std::filesystem::path csv_path;
    std::filesystem::path summary_path;

    /// Keys as written, for the summary echo.
    std::vector<std::pair<std::string, std::string>> echo;

    IterationPlan plan() const;
    /// State spec for run group `group`, e.g. "interpolated:0.5".
    std::string state_spec(std::size_t group) const;
    std::size_t group_count() const { return state_params.empty() ? 1 : state_params.size(); }
    /// Qubits of the initial state (n, or n + 1 for the OSKW family).
    int state_qubits() const;
};

/// Output directory for default file names: $HCWALK_OUTPUT_DIR, else ".".
std::filesystem::path default_output_dir();

/// Parses and validates a configuration. Default output files are
/// <output dir>/<experiment id>.csv and .json. Throws InputError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace hcwalk::harness
