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

#include <vector>

#include <json.hpp>

#include "hcwalk/harness/config.hpp"
#include "hcwalk/harness/results.hpp"

namespace hcwalk::harness {

struct ExperimentOutcome {
    std::vector<ResultRow> rows;  // config order: state group major, seed minor
    nlohmann::ordered_json summary;
};

/// Executes every (state group, seed) run of `config` on up to `threads`
/// workers. Rows come back in config order whatever the completion order.
/// Throws InvariantViolation when a run or row breaks an invariant.
ExperimentOutcome run_experiment(const ExperimentConfig& config, int threads);

/// run_experiment plus file output: rows appended to the CSV, summary JSON
/// rewritten.
ExperimentOutcome run_and_write(const ExperimentConfig& config, int threads);

}  // namespace hcwalk::harness
