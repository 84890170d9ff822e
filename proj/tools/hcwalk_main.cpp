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

// hcwalk: command-line driver for hypercube walk search experiments.
//
//   hcwalk run <config>
//   hcwalk sweep-fig4 --n 8 --samples 11 --seed 1 --out fig4.csv
//   hcwalk measures <state-spec> --n 4
//   hcwalk verify --max-n 5
//
// Exit status: 0 success, 1 other failure, 2 bad config / state spec /
// arguments, 3 invariant violation (named on stderr).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcwalk/harness/config.hpp"
#include "hcwalk/harness/exit_status.hpp"
#include "hcwalk/harness/experiment.hpp"
#include "hcwalk/harness/figure_sweep.hpp"
#include "hcwalk/harness/results.hpp"
#include "hcwalk/harness/state_spec.hpp"
#include "hcwalk/harness/verify.hpp"
#include "hcwalk/kernels.hpp"
#include "hcwalk/resources.hpp"

namespace {

using namespace hcwalk;
using namespace hcwalk::harness;

int cmd_run(const std::string& config_path, int threads) {
    const ExperimentConfig config = load_config(config_path);
    const int workers = threads > 0 ? std::min(threads, config.threads) : config.threads;
    const ExperimentOutcome outcome = run_and_write(config, workers);
    std::cout << config.experiment_id << ": " << outcome.rows.size() << " rows -> " << config.csv_path.string()
              << ", summary -> " << config.summary_path.string() << '\n';
    const auto& check = outcome.summary["deviation_check"];
    std::cout << "max |p_avg - p_pred| = " << format_number(outcome.summary["aggregate"]["max_abs_dev"].get<double>())
              << " (bound " << format_number(check["bound"].get<double>()) << ", "
              << check["rows_within_bound"].get<std::size_t>() << "/" << outcome.rows.size() << " within)\n";
    return 0;
}

int cmd_sweep(int n, int samples, std::uint64_t seed, const std::string& out, int threads) {
    const std::filesystem::path path = out.empty() ? default_output_dir() / "fig4.csv" : std::filesystem::path(out);
    const std::vector<FigureRow> rows = sweep_figure4(n, samples, seed, threads);
    write_figure_csv(path, rows);
    std::cout << rows.size() << " rows -> " << path.string() << '\n';
    return 0;
}

int cmd_measures(const std::string& spec, std::optional<int> n, int restarts, std::uint64_t seed, int threads) {
    const NodeState state = parse_pure_state(spec, n, seed);
    OptimizerSettings settings = default_settings().optimizer;
    settings.restarts = restarts;
    const ResourceReport r = groverian_entanglement(state, settings, seed, threads);
    const double f_even = even_coherence_fraction(state);

    std::cout << "state      " << spec << " (n=" << state.qubits() << ")\n"
              << "f_c        " << format_number(*r.f_c) << '\n'
              << "f_c_even   " << format_number(f_even) << '\n'
              << "E_g        " << format_number(*r.E_g) << (r.converged ? " (converged)" : " (not converged)") << '\n'
              << "C_f        " << format_number(*r.C_f) << '\n';

    nlohmann::ordered_json line = {
        {"schema_version", kSchemaVersion},
        {"state", spec},
        {"n", state.qubits()},
        {"f_c", *r.f_c},
        {"f_c_even", f_even},
        {"E_g", *r.E_g},
        {"E_g_overlap", *r.E_g_overlap},
        {"E_g_converged", r.converged},
        {"C_f", *r.C_f},
        {"restarts", r.restarts_used},
        {"seed", seed},
    };
    std::cout << line.dump() << '\n';
    return 0;
}

int cmd_verify(int max_n, std::uint64_t seed, int threads) {
    const std::vector<CheckResult> checks = run_verify_suite(max_n, seed, threads);
    std::size_t failed = 0;
    for (const CheckResult& c : checks) {
        std::printf("%-4s %-28s n=%d  %.3e <= %.1e\n", c.passed ? "ok" : "FAIL", c.name.c_str(), c.n, c.value,
                    c.tolerance);
        if (!c.passed) ++failed;
    }
    std::printf("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
    if (failed == 0) return 0;
    for (const CheckResult& c : checks) {
        if (!c.passed) std::cerr << "invariant violated: " << c.name << " (n=" << c.n << ")\n";
    }
    return kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum walk search on the hypercube"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Maximum worker threads (run: caps run.threads; default 1 elsewhere)")
        ->check(CLI::PositiveNumber);
    std::string isa;
    app.add_option("--isa", isa, "Kernel table: scalar or avx2 (default: best available)");

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
    run->add_option("config", config_path, "Key-value config file")->required();

    int sweep_n = 8, samples = 11;
    std::uint64_t sweep_seed = 0;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep-fig4", "Emit measure vs success-probability series as CSV");
    sweep->add_option("--n", sweep_n, "Qubits")->capture_default_str();
    sweep->add_option("--samples", samples, "Points per series")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "Optimizer seed")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output CSV (default: $HCWALK_OUTPUT_DIR/fig4.csv)");

    std::string spec;
    std::optional<int> measures_n;
    int restarts = default_settings().optimizer.restarts;
    std::uint64_t measures_seed = 0;
    auto* measures = app.add_subcommand("measures", "Print f_c, E_g and C_f of a state");
    measures->add_option("state", spec, "State spec, e.g. ghz, basis:3, haar:7")->required();
    measures->add_option("--n", measures_n, "Qubits (not needed for amps:...)");
    measures->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str()->check(CLI::PositiveNumber);
    measures->add_option("--seed", measures_seed, "Optimizer seed")->capture_default_str();

    int max_n = 5;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "Run the oracle suite");
    verify->add_option("--max-n", max_n, "Largest qubit count")->capture_default_str();
    verify->add_option("--seed", verify_seed, "Seed for random states")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    return guarded(
        [&] {
            if (!isa.empty()) {
                const kernels::Isa choice = isa == "scalar" ? kernels::Isa::scalar
                                            : isa == "avx2" ? kernels::Isa::avx2
                                                            : throw InputError("unknown --isa '" + isa + "'");
                kernels::select(choice);
            }
            if (*run) return cmd_run(config_path, threads);
            threads = std::max(threads, 1);
            if (*sweep) return cmd_sweep(sweep_n, samples, sweep_seed, sweep_out, threads);
            if (*measures) return cmd_measures(spec, measures_n, restarts, measures_seed, threads);
            return cmd_verify(max_n, verify_seed, threads);
        },
        std::cerr);
}
