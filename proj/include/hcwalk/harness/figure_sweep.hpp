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

// Plot data relating each resource measure to the success probability of its
// modified walk:
//
//   f_c   SKW-1 over interpolated:<t>,  t in [0, 1]
//   E_g   SKW-2 over ghz_angle:<a>,     a in [0, pi/4]
//   C_f   SKW-3 over tilted:<s>,        s in [0, 1]
//
// Each series has `samples` evenly spaced parameter values.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hcwalk::harness {

inline constexpr std::string_view kFigureHeader =
    "variant,n,tau,seed,family,parameter,measure,measure_value,p_avg,p_pred,abs_dev";

struct FigureRow {
    std::string variant;
    int n = 0;
    int tau = 0;
    std::uint64_t seed = 0;
    std::string family;
    double parameter = 0.0;
    std::string measure;  // f_c, E_g or C_f
    double measure_value = 0.0;
    double p_avg = 0.0;
    double p_pred = 0.0;
    double abs_dev = 0.0;
};

/// Rows ordered by series (f_c, E_g, C_f), then parameter. Throws
/// std::invalid_argument when samples < 2 or n is out of range.
std::vector<FigureRow> sweep_figure4(int n, int samples, std::uint64_t seed, int threads);

std::string figure_csv_line(const FigureRow& row);

/// Overwrites `path` with the header and rows.
void write_figure_csv(const std::filesystem::path& path, const std::vector<FigureRow>& rows);

}  // namespace hcwalk::harness
