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

#include "hcwalk/harness/state_spec.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace hcwalk::harness {
namespace {

constexpr int kMaxQubits = 24;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view text, const std::string& context) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw InputError("bad number '" + t + "' in " + context);
    }
    return value;
}

std::uint64_t parse_index(std::string_view text, const std::string& context) {
    const std::string t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw InputError("bad integer '" + t + "' in " + context);
    }
    return value;
}

int require_n(std::optional<int> n, const std::string& spec) {
    if (!n) throw InputError("state '" + spec + "' needs a qubit count");
    if (*n < 2 || *n > kMaxQubits) {
        throw InputError("qubit count " + std::to_string(*n) + " outside [2, " + std::to_string(kMaxQubits) + "]");
    }
    return *n;
}

NodeState explicit_amplitudes(std::string_view body, std::optional<int> n, const std::string& spec) {
    std::vector<Complex> amps;
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        const std::size_t colon = item.find(':');
        const double re = parse_double(item.substr(0, colon), spec);
        const double im = colon == std::string_view::npos ? 0.0 : parse_double(item.substr(colon + 1), spec);
        amps.emplace_back(re, im);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    const std::size_t len = amps.size();
    if (len < 4 || (len & (len - 1)) != 0) {
        throw InputError("explicit amplitudes need a power-of-two length >= 4, got " + std::to_string(len));
    }
    const int qubits = std::countr_zero(len);
    if (n && *n != qubits) {
        throw InputError("explicit amplitudes describe " + std::to_string(qubits) + " qubits, expected " +
                         std::to_string(*n));
    }
    try {
        return NodeState::normalized(qubits, std::move(amps));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("explicit amplitudes: ") + e.what());
    }
}

NodeState pure_member(const std::string& spec, std::optional<int> n, std::uint64_t seed) {
    const std::size_t colon = spec.find(':');
    const std::string family = trim(spec.substr(0, colon));
    const bool has_arg = colon != std::string::npos;
    const std::string arg = has_arg ? spec.substr(colon + 1) : std::string{};
    auto no_arg = [&] {
        if (has_arg) throw InputError("state family '" + family + "' takes no parameter");
    };
    auto need_arg = [&] {
        if (!has_arg) throw InputError("state family '" + family + "' needs a parameter");
    };

    static const std::set<std::string> known{"amps", "uniform", "eta", "even_uniform", "ghz", "w", "haar",
                                             "basis", "interpolated", "ghz_angle", "tilted"};
    if (!known.contains(family)) throw InputError("unknown state family '" + family + "'");
    if (family == "amps") {
        need_arg();
        return explicit_amplitudes(arg, n, spec);
    }
    const int qubits = require_n(n, spec);
    if (family == "uniform" || family == "eta") {
        no_arg();
        return make_uniform_node_state(qubits);
    }
    if (family == "even_uniform") {
        no_arg();
        return make_even_uniform_node_state(qubits);
    }
    if (family == "ghz") {
        no_arg();
        return make_ghz_state(qubits);
    }
    if (family == "w") {
        no_arg();
        return make_w_state(qubits);
    }
    if (family == "haar") {
        return make_random_node_state(qubits, has_arg ? parse_index(arg, spec) : seed);
    }
    need_arg();
    if (family == "basis") {
        const std::uint64_t index = parse_index(arg, spec);
        if (index >= vertex_count(qubits)) throw InputError("basis index out of range in '" + spec + "'");
        return make_basis_node_state(qubits, index);
    }
    if (family == "interpolated") {
        const double t = parse_double(arg, spec);
        if (t < 0.0 || t > 1.0) throw InputError("interpolation parameter must lie in [0, 1]");
        return make_interpolated_state(qubits, t);
    }
    if (family == "ghz_angle") return make_ghz_angle_state(qubits, parse_double(arg, spec));
    const double s = parse_double(arg, spec);
    if (s < 0.0 || s > 1.0) throw InputError("tilt parameter must lie in [0, 1]");
    return make_tilted_state(qubits, s);
}

}  // namespace

NodeState make_ghz_state(int n) { return make_ghz_angle_state(n, std::numbers::pi / 4.0); }

NodeState make_ghz_angle_state(int n, double angle) {
    std::vector<Complex> amps(vertex_count(n));
    amps.front() = std::cos(angle);
    amps.back() = std::sin(angle);
    return NodeState::normalized(n, std::move(amps));
}

NodeState make_w_state(int n) {
    std::vector<Complex> amps(vertex_count(n));
    for (int j = 0; j < n; ++j) amps[std::uint64_t{1} << j] = 1.0;
    return NodeState::normalized(n, std::move(amps));
}

NodeState make_interpolated_state(int n, double t) {
    const std::uint64_t size = vertex_count(n);
    std::vector<Complex> amps(size, Complex{t / std::sqrt(static_cast<double>(size)), 0.0});
    amps[0] += 1.0 - t;
    return NodeState::normalized(n, std::move(amps));
}

NodeState make_tilted_state(int n, double s) {
    const double size = static_cast<double>(vertex_count(n));
    const double p = 1.0 / size + s * (1.0 - 1.0 / size);
    std::vector<Complex> amps(vertex_count(n), Complex{std::sqrt((1.0 - p) / (size - 1.0)), 0.0});
    amps[0] = std::sqrt(p);
    return NodeState::normalized(n, std::move(amps));
}

StateInput parse_state(const std::string& spec, std::optional<int> n, std::uint64_t seed) {
    const std::string text = trim(spec);
    if (text.empty()) throw InputError("empty state spec");
    if (text.find('*') == std::string::npos) return pure_member(text, n, seed);

    std::vector<MixedEnsemble::Member> members;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = text.find(';', start);
        const std::string item = trim(text.substr(start, semi == std::string::npos ? text.npos : semi - start));
        const std::size_t star = item.find('*');
        if (star == std::string::npos) throw InputError("mixture member '" + item + "' lacks a weight");
        const double weight = parse_double(item.substr(0, star), spec);
        NodeState state = pure_member(trim(item.substr(star + 1)), n, seed + members.size());
        if (!n) n = state.qubits();
        members.push_back({weight, std::move(state)});
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    try {
        return MixedEnsemble(std::move(members));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("mixture: ") + e.what());
    }
}

NodeState parse_pure_state(const std::string& spec, std::optional<int> n, std::uint64_t seed) {
    StateInput input = parse_state(spec, n, seed);
    if (auto* pure = std::get_if<NodeState>(&input)) return std::move(*pure);
    throw InputError("a pure state is required, got mixture '" + spec + "'");
}

int qubits_of(const StateInput& state) {
    return std::visit([](const auto& s) { return s.qubits(); }, state);
}

}  // namespace hcwalk::harness
