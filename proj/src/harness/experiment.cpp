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

#include "hcwalk/harness/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "hcwalk/parallel.hpp"

namespace hcwalk::harness {
namespace {

struct Job {
    std::size_t group;
    std::uint64_t seed;
};

RunResult execute(const ExperimentConfig& cfg, const Job& job) {
    RunOptions options = cfg.options;
    options.seed = job.seed;
    options.threads = 1;
    const IterationPlan plan = cfg.plan();
    switch (cfg.variant) {
        case Algorithm::skw:
            return run_skw(cfg.n, plan, options);
        case Algorithm::oskw:
            return run_oskw(cfg.n, plan, options);
        default:
            break;
    }
    StateInput input = parse_state(cfg.state_spec(job.group), cfg.state_qubits(), job.seed);
    if (const auto* mixed = std::get_if<MixedEnsemble>(&input)) return run_skw1(*mixed, plan, options);
    const NodeState& state = std::get<NodeState>(input);
    switch (cfg.variant) {
        case Algorithm::skw1:
            return run_skw1(state, plan, options);
        case Algorithm::skw2:
            return run_skw2(state, plan, options);
        case Algorithm::skw3:
            return run_skw3(state, plan, options);
        case Algorithm::oskw1:
            return run_oskw1(state, plan, options);
        default:
            throw std::logic_error("unhandled variant");
    }
}

nlohmann::ordered_json summarize(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    using nlohmann::ordered_json;
    const IterationPlan plan = cfg.plan();
    const double vertices = static_cast<double>(vertex_count(cfg.state_qubits()));
    const double bound = cfg.deviation_constant / std::sqrt(vertices);

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["experiment_id"] = cfg.experiment_id;
    ordered_json echo = ordered_json::object();
    for (const auto& [k, v] : cfg.echo) echo[k] = v;
    doc["config"] = echo;
    doc["resolved"] = {
        {"variant", algorithm_name(cfg.variant)},
        {"n", cfg.n},
        {"tau", plan.tau},
        {"tau_rule", tau_rule_name(plan.rule)},
        {"tau_formula", plan.formula_value},
        {"sweep", sweep_method_name(cfg.options.sweep)},
        {"metric", success_metric_name(cfg.options.metric)},
        {"oskw_normalization",
         cfg.options.oskw_normalization == OskwNormalization::even_targets ? "even_targets" : "all_vertices"},
        {"restarts", cfg.options.optimizer.restarts},
        {"state_groups", cfg.group_count()},
        {"seeds", cfg.seeds},
    };

    double max_dev = 0.0, sum_dev = 0.0, sum_p = 0.0, sum_pred = 0.0, wall = 0.0;
    std::size_t within = 0;
    for (const ResultRow& r : rows) {
        max_dev = std::max(max_dev, r.abs_dev);
        sum_dev += r.abs_dev;
        sum_p += r.p_avg;
        sum_pred += r.p_pred;
        wall += r.wall_ms;
        if (r.abs_dev <= bound) ++within;
    }
    const double count = static_cast<double>(std::max<std::size_t>(rows.size(), 1));
    doc["csv"] = {{"path", cfg.csv_path.string()}, {"header", kResultHeader}, {"rows", rows.size()}};
    doc["aggregate"] = {
        {"max_abs_dev", max_dev},   {"mean_abs_dev", sum_dev / count}, {"mean_p_avg", sum_p / count},
        {"mean_p_pred", sum_pred / count}, {"total_wall_ms", wall},
    };
    doc["deviation_check"] = {
        {"constant", cfg.deviation_constant},
        {"vertices", vertex_count(cfg.state_qubits())},
        {"bound", bound},
        {"rows_within_bound", within},
        {"passed", within == rows.size()},
    };
    return doc;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& config, int threads) {
    std::vector<Job> jobs;
    for (std::size_t g = 0; g < config.group_count(); ++g) {
        for (std::uint64_t seed : config.seeds) jobs.push_back({g, seed});
    }
    std::vector<ResultRow> rows(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const RunResult result = execute(config, jobs[i]);
        const std::string label =
            config.variant == Algorithm::skw || config.variant == Algorithm::oskw ? config.state_spec(0)
                                                                                  : config.state_spec(jobs[i].group);
        rows[i] = make_row(config.experiment_id, label, result);
        check_row(rows[i]);
    });
    ExperimentOutcome outcome;
    outcome.summary = summarize(config, rows);
    outcome.rows = std::move(rows);
    return outcome;
}

ExperimentOutcome run_and_write(const ExperimentConfig& config, int threads) {
    try {
        ensure_writable(config.csv_path);
        ensure_writable(config.summary_path);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    ExperimentOutcome outcome = run_experiment(config, threads);
    std::vector<std::string> lines;
    lines.reserve(outcome.rows.size());
    for (const ResultRow& r : outcome.rows) lines.push_back(csv_line(r));
    append_csv(config.csv_path, kResultHeader, lines);
    write_json(config.summary_path, outcome.summary);
    return outcome;
}

}  // namespace hcwalk::harness
