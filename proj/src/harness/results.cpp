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

#include "hcwalk/harness/results.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace hcwalk::harness {
namespace {

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

}  // namespace

ResultRow make_row(const std::string& experiment_id, const std::string& state, const RunResult& result) {
    ResultRow row;
    row.experiment_id = experiment_id;
    row.variant = algorithm_name(result.variant);
    row.n = result.n;
    row.tau = result.tau;
    row.seed = result.seed;
    row.state = state;
    row.f_c = result.resource.f_c_even ? result.resource.f_c_even : result.resource.f_c;
    row.E_g = result.resource.E_g;
    row.C_f = result.resource.C_f;
    row.p_avg = result.p_avg;
    row.p_pred = result.p_pred;
    row.abs_dev = result.abs_dev;
    row.leaked_weight = result.leaked_weight;
    row.wall_ms = result.wall_ms;
    return row;
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const ResultRow& row) {
    std::string line;
    line += csv_field(row.experiment_id) + ',';
    line += row.variant + ',';
    line += std::to_string(row.n) + ',';
    line += std::to_string(row.tau) + ',';
    line += std::to_string(row.seed) + ',';
    line += csv_field(row.state) + ',';
    line += optional_number(row.f_c) + ',';
    line += optional_number(row.E_g) + ',';
    line += optional_number(row.C_f) + ',';
    line += format_number(row.p_avg) + ',';
    line += format_number(row.p_pred) + ',';
    line += format_number(row.abs_dev) + ',';
    line += optional_number(row.leaked_weight) + ',';
    line += format_number(row.wall_ms);
    return line;
}

void ensure_writable(const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw std::runtime_error("cannot write '" + path.string() + "'");
}

void append_csv(const std::filesystem::path& path, std::string_view header, const std::vector<std::string>& lines) {
    bool need_header = true;
    {
        std::ifstream existing(path);
        std::string first;
        if (existing && std::getline(existing, first)) {
            if (first != header) {
                throw std::runtime_error("'" + path.string() + "' already holds a different CSV header");
            }
            need_header = false;
        }
    }
    ensure_writable(path);
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (need_header) out << header << '\n';
    for (const auto& line : lines) out << line << '\n';
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
    ensure_writable(path);
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void check_row(const ResultRow& row) {
    auto finite = [&](const char* name, double v) {
        if (!std::isfinite(v)) throw InvariantViolation("finite_fields", std::string(name) + " is not finite");
    };
    auto probability = [&](const char* name, double v) {
        finite(name, v);
        const double slack = default_settings().tolerances.probability_range;
        if (v < -slack || v > 1.0 + slack) {
            throw InvariantViolation("probability_range", std::string(name) + " = " + format_number(v));
        }
    };
    for (const auto& [name, v] : {std::pair{"f_c", row.f_c}, std::pair{"E_g", row.E_g}, std::pair{"C_f", row.C_f},
                                  std::pair{"leaked_weight", row.leaked_weight}}) {
        if (v) probability(name, *v);
    }
    probability("p_avg", row.p_avg);
    probability("p_pred", row.p_pred);
    finite("abs_dev", row.abs_dev);
    finite("wall_ms", row.wall_ms);
}

}  // namespace hcwalk::harness
