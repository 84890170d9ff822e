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

#include "hcwalk/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace hcwalk::harness {
namespace {

constexpr int kMaxBaseQubits = 20;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool valid_key(const std::string& key) {
    if (key.empty() || key.front() == '.' || key.back() == '.') return false;
    for (char c : key) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
        if (!ok) return false;
    }
    return key.find("..") == std::string::npos;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) throw InputError("empty entry in list '" + value + "'");
        items.push_back(item);
    }
    return items;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
        throw InputError("key '" + key + "': bad number '" + value + "'");
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(out)) throw InputError("key '" + key + "': value must be finite");
    }
    return out;
}

int parse_positive(const std::string& key, const std::string& value) {
    const int v = parse_number<int>(key, value);
    if (v < 1) throw InputError("key '" + key + "' must be >= 1");
    return v;
}

template <typename Enum>
Enum parse_choice(const std::string& key, const std::string& value,
                  std::initializer_list<std::pair<const char*, Enum>> choices) {
    std::string allowed;
    for (const auto& [name, e] : choices) {
        if (value == name) return e;
        allowed += allowed.empty() ? name : std::string(", ") + name;
    }
    throw InputError("key '" + key + "': '" + value + "' is not one of " + allowed);
}

// Config family name -> state-spec family, and whether it takes a parameter.
struct Family {
    const char* config_name;
    const char* spec_name;
    bool parameterized;
};

constexpr Family kFamilies[] = {
    {"uniform", "uniform", false},          {"even_uniform", "even_uniform", false},
    {"basis", "basis", true},               {"haar_random", "haar", false},
    {"interpolated", "interpolated", true}, {"ghz", "ghz", false},
    {"ghz_angle", "ghz_angle", true},       {"w", "w", false},
    {"tilted", "tilted", true},             {"explicit_amplitudes", "amps", false},
    {"mixed_ensemble", "", false},
};

const Family& find_family(const std::string& name) {
    for (const Family& f : kFamilies) {
        if (name == f.config_name) return f;
    }
    throw InputError("unknown state.family '" + name + "'");
}

bool fixed_state(Algorithm variant) { return variant == Algorithm::skw || variant == Algorithm::oskw; }

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::set<std::string> seen;
    std::stringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("line " + std::to_string(number) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key)) throw InputError("line " + std::to_string(number) + ": malformed key '" + key + "'");
        if (!seen.insert(key).second) throw InputError("line " + std::to_string(number) + ": repeated key '" + key + "'");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

IterationPlan ExperimentConfig::plan() const {
    if (tau_rule == TauRule::explicit_steps) return IterationPlan::explicit_steps(tau);
    return default_plan(variant, n);
}

std::string ExperimentConfig::state_spec(std::size_t group) const {
    if (variant == Algorithm::skw) return "uniform";
    if (variant == Algorithm::oskw) return "even_uniform";
    const Family& family = find_family(state_family);
    if (state_family == "mixed_ensemble") return state_ensemble;
    if (state_family == "explicit_amplitudes") return std::string("amps:") + state_amplitudes;
    if (family.parameterized) return std::string(family.spec_name) + ":" + state_params.at(group);
    return family.spec_name;
}

int ExperimentConfig::state_qubits() const {
    return variant == Algorithm::oskw || variant == Algorithm::oskw1 ? n + 1 : n;
}

std::filesystem::path default_output_dir() {
    const char* env = std::getenv("HCWALK_OUTPUT_DIR");
    return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(".");
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.echo = parse_key_values(text);
    bool have_id = false, have_variant = false, have_n = false, have_tau = false;
    std::string csv, summary;

    for (const auto& [key, value] : cfg.echo) {
        if (key == "experiment.id") {
            if (value.empty() || value.find_first_of("/\\, \t") != std::string::npos) {
                throw InputError("experiment.id must be non-empty without spaces, commas or slashes");
            }
            cfg.experiment_id = value;
            have_id = true;
        } else if (key == "run.variant") {
            try {
                cfg.variant = parse_algorithm(value);
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("run.variant: ") + e.what());
            }
            have_variant = true;
        } else if (key == "run.n") {
            cfg.n = parse_number<int>(key, value);
            have_n = true;
        } else if (key == "run.tau_rule") {
            cfg.tau_rule = parse_choice<TauRule>(key, value, {{"optimal", TauRule::skw_optimal},
                                                              {"explicit", TauRule::explicit_steps}});
        } else if (key == "run.tau") {
            cfg.tau = parse_number<int>(key, value);
            if (cfg.tau < 0) throw InputError("run.tau must be >= 0");
            have_tau = true;
        } else if (key == "run.sweep") {
            cfg.options.sweep = parse_choice<SweepMethod>(
                key, value, {{"translated", SweepMethod::translated}, {"direct", SweepMethod::direct}});
        } else if (key == "run.metric") {
            cfg.options.metric = parse_choice<SuccessMetric>(
                key, value,
                {{"vertex_marginal", SuccessMetric::vertex_marginal}, {"coin_projected", SuccessMetric::coin_projected}});
        } else if (key == "run.oskw_normalization") {
            cfg.options.oskw_normalization = parse_choice<OskwNormalization>(
                key, value,
                {{"even_targets", OskwNormalization::even_targets}, {"all_vertices", OskwNormalization::all_vertices}});
        } else if (key == "run.pauli") {
            cfg.options.pauli = parse_choice<PauliSelection>(key, value,
                                                             {{"automatic", PauliSelection::automatic},
                                                              {"exhaustive", PauliSelection::exhaustive},
                                                              {"analytic", PauliSelection::analytic}});
        } else if (key == "run.resources") {
            cfg.options.resources = parse_choice<ResourceDepth>(
                key, value, {{"full", ResourceDepth::full}, {"coherence_only", ResourceDepth::coherence_only}});
        } else if (key == "run.threads") {
            cfg.threads = parse_positive(key, value);
        } else if (key == "state.family") {
            find_family(value);
            cfg.state_family = value;
        } else if (key == "state.params") {
            cfg.state_params = split_list(value);
        } else if (key == "state.amplitudes") {
            cfg.state_amplitudes = value;
        } else if (key == "state.ensemble") {
            cfg.state_ensemble = value;
        } else if (key == "state.seeds") {
            cfg.seeds.clear();
            for (const std::string& s : split_list(value)) cfg.seeds.push_back(parse_number<std::uint64_t>(key, s));
        } else if (key == "optimizer.restarts") {
            cfg.options.optimizer.restarts = parse_positive(key, value);
        } else if (key == "optimizer.max_sweeps") {
            cfg.options.optimizer.max_sweeps = parse_positive(key, value);
        } else if (key == "optimizer.convergence") {
            cfg.options.optimizer.convergence = parse_number<double>(key, value);
            if (cfg.options.optimizer.convergence <= 0.0) throw InputError("optimizer.convergence must be > 0");
        } else if (key == "tolerance.deviation_constant") {
            cfg.deviation_constant = parse_number<double>(key, value);
            if (cfg.deviation_constant <= 0.0) throw InputError("tolerance.deviation_constant must be > 0");
        } else if (key == "limits.max_exact_target_dimension") {
            cfg.options.limits.max_exact_target_dimension = parse_positive(key, value);
        } else if (key == "limits.sampled_targets") {
            cfg.options.limits.sampled_targets = parse_positive(key, value);
        } else if (key == "limits.max_pauli_enumeration_n") {
            cfg.options.limits.max_pauli_enumeration_n = parse_positive(key, value);
        } else if (key == "output.csv") {
            csv = value;
        } else if (key == "output.summary") {
            summary = value;
        } else {
            throw InputError("unknown key '" + key + "'");
        }
    }

    if (!have_id) throw InputError("missing key 'experiment.id'");
    if (!have_variant) throw InputError("missing key 'run.variant'");
    if (!have_n) throw InputError("missing key 'run.n'");
    if (cfg.n < 2 || cfg.n > kMaxBaseQubits) {
        throw InputError("run.n must lie in [2, " + std::to_string(kMaxBaseQubits) + "]");
    }
    if (cfg.tau_rule == TauRule::explicit_steps && !have_tau) throw InputError("run.tau_rule = explicit needs run.tau");
    if (cfg.tau_rule != TauRule::explicit_steps && have_tau) throw InputError("run.tau requires run.tau_rule = explicit");
    if (cfg.seeds.empty()) throw InputError("state.seeds must not be empty");

    const bool state_keys = cfg.state_family != "uniform" || !cfg.state_params.empty() ||
                            !cfg.state_amplitudes.empty() || !cfg.state_ensemble.empty();
    if (fixed_state(cfg.variant) && state_keys) {
        throw InputError("run.variant " + algorithm_name(cfg.variant) + " has a fixed initial state; drop the state.* keys");
    }
    if (!fixed_state(cfg.variant)) {
        const Family& family = find_family(cfg.state_family);
        if (family.parameterized && cfg.state_params.empty()) {
            throw InputError("state.family " + cfg.state_family + " needs state.params");
        }
        if (!family.parameterized && !cfg.state_params.empty()) {
            throw InputError("state.family " + cfg.state_family + " takes no state.params");
        }
        if ((cfg.state_family == "explicit_amplitudes") != !cfg.state_amplitudes.empty()) {
            throw InputError("state.amplitudes goes with state.family = explicit_amplitudes");
        }
        if ((cfg.state_family == "mixed_ensemble") != !cfg.state_ensemble.empty()) {
            throw InputError("state.ensemble goes with state.family = mixed_ensemble");
        }
        if (cfg.state_family == "mixed_ensemble" && cfg.variant != Algorithm::skw1) {
            throw InputError("mixed ensembles are only supported by skw1");
        }
        // Build every state once so spec errors surface before any run starts.
        for (std::size_t g = 0; g < cfg.group_count(); ++g) {
            for (std::uint64_t seed : cfg.seeds) {
                const StateInput state = parse_state(cfg.state_spec(g), cfg.state_qubits(), seed);
                (void)state;
            }
        }
    }

    const std::filesystem::path dir = default_output_dir();
    cfg.csv_path = csv.empty() ? dir / (cfg.experiment_id + ".csv") : std::filesystem::path(csv);
    cfg.summary_path = summary.empty() ? dir / (cfg.experiment_id + ".json") : std::filesystem::path(summary);
    if (cfg.csv_path == cfg.summary_path) throw InputError("output.csv and output.summary must differ");
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace hcwalk::harness
