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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hcwalk/harness/config.hpp"
#include "hcwalk/harness/experiment.hpp"
#include "hcwalk/harness/figure_sweep.hpp"
#include "hcwalk/harness/state_spec.hpp"
#include "hcwalk/oracle.hpp"
#include "hcwalk/resources.hpp"
#include "hcwalk/runners.hpp"
#include "hcwalk/target_sweep.hpp"

namespace {

using namespace hcwalk;
namespace fs = std::filesystem;

constexpr double kC = 3.0;  // calibrated deviation constant

struct Verdict {
    bool passed;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double bound(int vertices_log2) { return kC / std::sqrt(static_cast<double>(vertex_count(vertices_log2))); }

RunOptions coherence_only() {
    RunOptions o;
    o.resources = ResourceDepth::coherence_only;
    return o;
}

// 1. Original SKW at n = 8, tau = 18.
Verdict original_skw() {
    const IterationPlan plan = IterationPlan::explicit_steps(18);
    const RunResult a = run_skw(8, plan, coherence_only());
    const RunResult b = run_skw(8, plan, coherence_only());
    RunOptions direct = coherence_only();
    direct.sweep = SweepMethod::direct;
    const RunResult c = run_skw(8, plan, direct);
    const double dev = std::abs(a.p_avg - 0.5);
    const double drift = std::max(std::abs(a.p_avg - b.p_avg), std::abs(a.p_avg - c.p_avg));
    const bool ok = dev <= bound(8) && drift <= 1e-12 && a.p_avg >= 0.4 && a.p_avg <= 0.55;
    return {ok, fmt("P=%.17g |P-1/2|=%.4f<=%.4f, rerun/direct drift %.1e<=1e-12", a.p_avg, dev, bound(8), drift)};
}

double worst_coherence_deviation(int n, int states) {
    double worst = 0.0;
    for (int s = 1; s <= states; ++s) {
        const RunResult r = run_skw1(make_random_node_state(n, static_cast<std::uint64_t>(s)),
                                     IterationPlan::skw_optimal(n), coherence_only());
        worst = std::max(worst, r.abs_dev);
    }
    return worst;
}

// 2. Coherence prediction over Haar states, n = 8 and n = 10.
Verdict coherence_haar() {
    const double d8 = worst_coherence_deviation(8, 100);
    const double d10 = worst_coherence_deviation(10, 100);
    const bool ok = d8 <= bound(8) && d10 <= 0.6 * d8;
    return {ok, fmt("max dev n=8 %.5f<=%.4f, n=10 %.5f<=0.6x (ratio %.3f)", d8, bound(8), d10, d10 / d8)};
}

// 3. Coherence prediction for a mixed ensemble.
Verdict coherence_mixed() {
    const IterationPlan plan = IterationPlan::skw_optimal(8);
    const NodeState a = make_uniform_node_state(8), b = make_basis_node_state(8, 0), c = make_random_node_state(8, 3);
    const double w[3] = {0.45, 0.35, 0.2};
    const MixedEnsemble rho({{w[0], a}, {w[1], b}, {w[2], c}});
    const RunResult mixed = run_skw1(rho, plan, coherence_only());
    const double members = w[0] * run_skw1(a, plan, coherence_only()).p_avg +
                           w[1] * run_skw1(b, plan, coherence_only()).p_avg +
                           w[2] * run_skw1(c, plan, coherence_only()).p_avg;
    const double linearity = std::abs(mixed.p_avg - members);
    const double dev = std::abs(mixed.p_avg - 0.5 * coherence_fraction(rho));
    return {linearity <= 1e-12 && dev <= bound(8),
            fmt("|ensemble - weighted members| %.1e<=1e-12, |p_avg - f_c/2| %.4f<=%.4f", linearity, dev, bound(8))};
}

// 4. Layer optimizer overlap against 1 - E_g^2, plus the grid at n = 3.
Verdict entanglement_identity() {
    const OptimizerSettings settings = default_settings().optimizer;
    double worst = 0.0, worst_grid = 0.0;
    for (int n = 3; n <= 5; ++n) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const NodeState psi = make_random_node_state(n, 1000 * n + s);
            const LayerOptimum layer = optimize_local_layer_for_eta_overlap(psi, settings, s);
            const ResourceReport eg = groverian_entanglement(psi, settings, s);
            worst = std::max(worst, std::abs(layer.overlap - (1.0 - *eg.E_g * *eg.E_g)));
            if (n == 3) worst_grid = std::max(worst_grid, std::abs(layer.overlap - oracle::grid_product_overlap(psi, 48)));
        }
    }
    return {worst <= 1e-8 && worst_grid <= 2e-3,
            fmt("150 states: worst |overlap - (1-E_g^2)| %.1e<=1e-8, n=3 grid gap %.1e<=2e-3", worst, worst_grid)};
}

// 5. SKW-2 end to end at n = 8.
Verdict entanglement_end_to_end() {
    std::vector<std::pair<std::string, NodeState>> states;
    states.emplace_back("product", harness::make_tilted_state(8, 1.0));
    {
        std::vector<Complex> amps{1.0};
        for (int j = 0; j < 8; ++j) {
            std::vector<Complex> next(amps.size() * 2);
            for (std::size_t y = 0; y < amps.size(); ++y) {
                next[y] = amps[y] * std::cos(0.2 + 0.15 * j);
                next[y + amps.size()] = amps[y] * std::polar(std::sin(0.2 + 0.15 * j), 0.4 * j);
            }
            amps = std::move(next);
        }
        states.emplace_back("product", NodeState::normalized(8, amps));
    }
    states.emplace_back("ghz", harness::make_ghz_state(8));
    for (std::uint64_t s = 0; s < 20; ++s) states.emplace_back("haar", make_random_node_state(8, 2000 + s));
    double worst = 0.0, ghz = 0.0;
    for (const auto& [label, psi] : states) {
        const RunResult r = run_skw2(psi, IterationPlan::skw_optimal(8));
        worst = std::max(worst, r.abs_dev);
        if (label == "ghz") ghz = r.abs_dev;
    }
    return {worst <= bound(8), fmt("%zu states: max |p_avg - (1-E_g^2)/2| %.4f<=%.4f (GHZ %.4f)", states.size(), worst,
                                   bound(8), ghz)};
}

// 6. Pauli enumeration against max_i |a_i|^2, n = 2..6.
Verdict pauli_identity() {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const NodeState psi = make_random_node_state(n, 3000 * n + s);
            worst = std::max(worst, std::abs(enumerate_pauli_layers(psi).probability - best_pauli_basis(psi).probability));
        }
    }
    return {worst <= 1e-12, fmt("250 states: worst deviation %.1e<=1e-12", worst)};
}

// 7. SKW-3 end to end at n = 8.
Verdict coherence_layer_end_to_end() {
    const IterationPlan plan = IterationPlan::skw_optimal(8);
    const RunResult incoherent = run_skw3(make_basis_node_state(8, 93), plan, coherence_only());
    const RunResult eta = run_skw3(make_uniform_node_state(8), plan, coherence_only());
    double worst = std::max(incoherent.abs_dev, eta.abs_dev);
    for (std::uint64_t s = 0; s < 20; ++s) {
        worst = std::max(worst, run_skw3(make_random_node_state(8, 4000 + s), plan, coherence_only()).abs_dev);
    }
    for (double t : {0.25, 0.5, 0.75}) {
        worst = std::max(worst, run_skw3(harness::make_tilted_state(8, t), plan, coherence_only()).abs_dev);
    }
    const bool endpoints = std::abs(incoherent.p_pred - 0.5) <= 1e-15 && std::abs(eta.p_pred - 1.0 / 512.0) <= 1e-15;
    return {worst <= bound(8) && endpoints,
            fmt("max dev %.4f<=%.4f; p_pred incoherent %.3g, eta %.3g", worst, bound(8), incoherent.p_pred, eta.p_pred)};
}

// 8. E_g <= C_f and SKW-3 <= SKW-2.
Verdict ordering() {
    double worst_measure = -1.0, worst_pred = -1.0;
    int unconverged = 0, total = 0;
    for (int n = 3; n <= 5; ++n) {
        const IterationPlan plan = IterationPlan::skw_optimal(n);
        for (std::uint64_t s = 0; s < 200; ++s) {
            const NodeState psi = make_random_node_state(n, 5000 * n + s);
            const RunResult two = run_skw2(psi, plan);
            const RunResult three = run_skw3(psi, plan, coherence_only());
            worst_measure = std::max(worst_measure, *two.resource.E_g - *two.resource.C_f);
            worst_pred = std::max(worst_pred, three.p_pred - two.p_pred);
            if (!two.resource.converged) ++unconverged;
            ++total;
        }
    }
    return {worst_measure <= 1e-9 && worst_pred <= 1e-9 && unconverged == 0,
            fmt("%d states: max(E_g - C_f) %.3g, max(p3 - p2) %.3g, unconverged %d", total, worst_measure, worst_pred,
                unconverged)};
}

// 9. OSKW near-certain success and OSKW-1 prediction.
Verdict oskw() {
    const IterationPlan plan = default_plan(Algorithm::oskw, 8);
    const RunResult base = run_oskw(8, plan, coherence_only());
    const double limit = 6.0 / std::sqrt(512.0);
    double worst = 0.0;
    std::vector<NodeState> states;
    for (std::uint64_t s = 0; s < 20; ++s) states.push_back(make_random_node_state(9, 6000 + s));
    states.push_back(make_basis_node_state(9, 6));
    states.push_back(harness::make_interpolated_state(9, 0.5));
    states.push_back(harness::make_tilted_state(9, 0.3));
    for (const NodeState& psi : states) worst = std::max(worst, run_oskw1(psi, plan, coherence_only()).abs_dev);
    return {base.p_avg >= 0.8 && worst <= limit,
            fmt("eta^e: p_avg %.4f>=0.8 (tau %d V_opt, formula %.2f steps); %zu projected states max dev %.4f<=%.4f",
                base.p_avg, base.tau, base.tau_formula, states.size(), worst, limit)};
}

// 10. Dense oracle equivalence and XOR covariance.
Verdict oracle_equivalence() {
    double unitarity = 0.0, gap = 0.0;
    for (int n = 2; n <= 5; ++n) {
        for (WalkVariant v : {WalkVariant::skw, WalkVariant::oskw}) {
            const int dim = v == WalkVariant::skw ? n : n + 1;
            for (std::uint64_t t : {std::uint64_t{0}, std::uint64_t{3}, vertex_count(dim) - 2}) {
                if (v == WalkVariant::oskw && hamming_weight(t) % 2) continue;
                const WalkSpec spec{dim, t, v};
                const oracle::DenseOperator dense = oracle::build_dense_evolution(spec);
                unitarity = std::max(unitarity, oracle::unitarity_defect(dense));
                NodeState node = make_random_node_state(dim, 7000 + n + t);
                if (v == WalkVariant::oskw) node = project_even_parity(node).state;
                WalkerState free = compose_walker(dim, node);
                std::vector<Complex> ref(free.amplitudes().begin(), free.amplitudes().end());
                for (int step = 1; step <= 50; ++step) {
                    free = evolve(free, spec, IterationPlan::explicit_steps(1));
                    ref = oracle::apply(dense, ref);
                    for (std::size_t i = 0; i < ref.size(); ++i) gap = std::max(gap, std::abs(ref[i] - free.amplitudes()[i]));
                }
            }
        }
    }
    double covariance = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const NodeState psi = make_random_node_state(n, 8000 + n);
        const IterationPlan plan = IterationPlan::explicit_steps(IterationPlan::skw_optimal(n).tau + 3);
        for (std::uint64_t t = 0; t < vertex_count(n); ++t) {
            std::vector<Complex> shifted(psi.size());
            for (std::uint64_t x = 0; x < psi.size(); ++x) shifted[x] = psi[x ^ t];
            const double pt = success_probability(evolve(compose_walker(n, psi), WalkSpec::skw(n, t), plan), t);
            const double p0 =
                success_probability(evolve(compose_walker(n, NodeState(n, shifted)), WalkSpec::skw(n, 0), plan), 0);
            covariance = std::max(covariance, std::abs(pt - p0));
        }
    }
    return {unitarity <= 1e-12 && gap <= 1e-12 && covariance <= 1e-12,
            fmt("unitarity %.1e, dense vs matrix-free (tau<=50) %.1e, XOR covariance (n<=6) %.1e; all <=1e-12", unitarity,
                gap, covariance)};
}

std::string strip_wall_ms(const fs::path& csv) {
    std::ifstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
    return out;
}

// 11. Harness reproducibility and figure-sweep identities.
Verdict harness_reproducibility() {
    const fs::path dir = fs::temp_directory_path() / "hcwalk_acceptance";
    fs::remove_all(dir);
    harness::ExperimentConfig cfg = harness::parse_config(
        "experiment.id = repro\nrun.variant = skw2\nrun.n = 6\nstate.family = haar_random\n"
        "state.seeds = 11, 12, 13, 14\nrun.threads = 2\n");
    std::vector<std::string> runs;
    for (const char* name : {"a", "b"}) {
        cfg.csv_path = dir / name / "repro.csv";
        cfg.summary_path = dir / name / "repro.json";
        harness::run_and_write(cfg, cfg.threads);
        runs.push_back(strip_wall_ms(cfg.csv_path));
    }
    const bool identical = runs[0] == runs[1] && std::count(runs[0].begin(), runs[0].end(), '\n') == 5;

    double worst = 0.0;
    const std::vector<harness::FigureRow> rows = harness::sweep_figure4(8, 11, 1, 1);
    for (const harness::FigureRow& r : rows) {
        ResourceReport rep;
        if (r.measure == "f_c") rep.f_c = r.measure_value;
        if (r.measure == "E_g") rep.E_g = r.measure_value;
        if (r.measure == "C_f") rep.C_f = r.measure_value;
        worst = std::max(worst, std::abs(predicted_probability(parse_algorithm(r.variant), rep) - r.p_pred));
    }
    fs::remove_all(dir);
    return {identical && worst <= 1e-12,
            fmt("two runs byte-identical modulo wall_ms: %s; %zu fig4 rows recompute p_pred within %.1e<=1e-12",
                identical ? "yes" : "no", rows.size(), worst)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "original SKW reproduction", original_skw},
        {2, "coherence prediction, Haar", coherence_haar},
        {3, "coherence prediction, mixture", coherence_mixed},
        {4, "layer overlap identity", entanglement_identity},
        {5, "SKW-2 end to end", entanglement_end_to_end},
        {6, "Pauli layer identity", pauli_identity},
        {7, "SKW-3 end to end", coherence_layer_end_to_end},
        {8, "ordering of measures and optima", ordering},
        {9, "optimized walk", oskw},
        {10, "oracle equivalence", oracle_equivalence},
        {11, "harness reproducibility", harness_reproducibility},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d  %-32s %s [%.2f s]\n", v.passed ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (!v.passed) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
