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

#include "hcwalk/harness/figure_sweep.hpp"

#include <fstream>
#include <numbers>
#include <stdexcept>

#include "hcwalk/harness/results.hpp"
#include "hcwalk/harness/state_spec.hpp"
#include "hcwalk/parallel.hpp"
#include "hcwalk/runners.hpp"

namespace hcwalk::harness {
namespace {

struct Series {
    Algorithm variant;
    const char* family;
    const char* measure;
    double upper;
};

const Series kSeries[] = {
    {Algorithm::skw1, "interpolated", "f_c", 1.0},
    {Algorithm::skw2, "ghz_angle", "E_g", std::numbers::pi / 4.0},
    {Algorithm::skw3, "tilted", "C_f", 1.0},
};

NodeState series_state(const Series& s, int n, double parameter) {
    const std::string_view family = s.family;
    if (family == "interpolated") return make_interpolated_state(n, parameter);
    if (family == "ghz_angle") return make_ghz_angle_state(n, parameter);
    return make_tilted_state(n, parameter);
}

}  // namespace

std::vector<FigureRow> sweep_figure4(int n, int samples, std::uint64_t seed, int threads) {
    if (samples < 2) throw std::invalid_argument("sweep needs at least 2 samples per series");
    if (n < 2 || n > 16) throw std::invalid_argument("sweep n must lie in [2, 16]");

    struct Job {
        const Series* series;
        double parameter;
    };
    std::vector<Job> jobs;
    for (const Series& s : kSeries) {
        for (int i = 0; i < samples; ++i) {
            // Exact endpoints: the last sample is the upper bound itself.
            const double p = i + 1 == samples ? s.upper : s.upper * i / (samples - 1);
            jobs.push_back({&s, p});
        }
    }

    const IterationPlan plan = IterationPlan::skw_optimal(n);
    std::vector<FigureRow> rows(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const Job& job = jobs[i];
        RunOptions options;
        options.seed = seed;
        options.resources = ResourceDepth::coherence_only;
        const NodeState state = series_state(*job.series, n, job.parameter);
        RunResult result;
        double measure = 0.0;
        switch (job.series->variant) {
            case Algorithm::skw1:
                result = run_skw1(state, plan, options);
                measure = *result.resource.f_c;
                break;
            case Algorithm::skw2:
                result = run_skw2(state, plan, options);
                measure = *result.resource.E_g;
                break;
            default:
                result = run_skw3(state, plan, options);
                measure = *result.resource.C_f;
                break;
        }
        FigureRow& row = rows[i];
        row.variant = algorithm_name(result.variant);
        row.n = n;
        row.tau = result.tau;
        row.seed = seed;
        row.family = job.series->family;
        row.parameter = job.parameter;
        row.measure = job.series->measure;
        row.measure_value = measure;
        row.p_avg = result.p_avg;
        row.p_pred = result.p_pred;
        row.abs_dev = result.abs_dev;
    });
    return rows;
}

std::string figure_csv_line(const FigureRow& row) {
    std::string line;
    line += row.variant + ',';
    line += std::to_string(row.n) + ',';
    line += std::to_string(row.tau) + ',';
    line += std::to_string(row.seed) + ',';
    line += row.family + ',';
    line += format_number(row.parameter) + ',';
    line += row.measure + ',';
    line += format_number(row.measure_value) + ',';
    line += format_number(row.p_avg) + ',';
    line += format_number(row.p_pred) + ',';
    line += format_number(row.abs_dev);
    return line;
}

void write_figure_csv(const std::filesystem::path& path, const std::vector<FigureRow>& rows) {
    ensure_writable(path);
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << kFigureHeader << '\n';
    for (const FigureRow& r : rows) out << figure_csv_line(r) << '\n';
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace hcwalk::harness
