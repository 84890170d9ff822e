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

// Result rows and their serialization. CSV numbers use 17 significant digits
// and '.' as the decimal point regardless of locale; absent values are empty
// fields.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcwalk/runners.hpp"

namespace hcwalk::harness {

inline constexpr int kSchemaVersion = 1;

inline constexpr std::string_view kResultHeader =
    "experiment_id,variant,n,tau,seed,state,f_c,E_g,C_f,p_avg,p_pred,abs_dev,leaked_weight,wall_ms";

struct ResultRow {
    std::string experiment_id;
    std::string variant;
    int n = 0;
    int tau = 0;
    std::uint64_t seed = 0;
    std::string state;
    std::optional<double> f_c;
    std::optional<double> E_g;
    std::optional<double> C_f;
    double p_avg = 0.0;
    double p_pred = 0.0;
    double abs_dev = 0.0;
    std::optional<double> leaked_weight;
    double wall_ms = 0.0;
};

ResultRow make_row(const std::string& experiment_id, const std::string& state, const RunResult& result);

/// 17 significant digits, C locale.
std::string format_number(double value);
/// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(std::string_view text);

std::string csv_line(const ResultRow& row);

/// Writes the header when the file is new or empty, then appends `rows`.
/// Throws std::runtime_error when an existing file has a different header.
void append_csv(const std::filesystem::path& path, std::string_view header, const std::vector<std::string>& lines);

/// Throws std::runtime_error unless the parent directory exists (created if
/// needed) and the file can be opened for appending.
void ensure_writable(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

/// Invariants every emitted row must satisfy: finite numeric fields and
/// probabilities in [0, 1]. Throws InvariantViolation.
void check_row(const ResultRow& row);

}  // namespace hcwalk::harness
