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

#include "hcwalk/target_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcwalk/kernels.hpp"

namespace hcwalk {

std::string sweep_method_name(SweepMethod method) {
    return method == SweepMethod::direct ? "direct" : "translated";
}

TargetSweep::TargetSweep(WalkSpec base, IterationPlan plan, SweepMethod method, SuccessMetric metric, int threads)
    : base_(std::move(base)), plan_(plan), method_(method), metric_(metric), threads_(threads) {
    base_.target = 0;
    base_.validate();
    if (method_ != SweepMethod::translated) return;

    const int dirs = base_.dimension;
    const std::uint64_t nodes = base_.node_count();
    const double coin_amp = 1.0 / std::sqrt(static_cast<double>(dirs));
    const auto& k = kernels::active();

    std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(dirs));
    parallel_for(rows.size(), threads_, [&](std::size_t d) {
        const WalkerState row = evolve_adjoint(WalkerState::basis(dirs, static_cast<int>(d), 0), base_, plan_);
        std::vector<Complex> kernel(nodes);
        for (int c = 0; c < dirs; ++c) {
            for (std::uint64_t x = 0; x < nodes; ++x) kernel[x] += std::conj(row.amplitude(c, x));
        }
        for (auto& v : kernel) v *= coin_amp;
        rows[d] = std::move(kernel);
    });

    if (metric_ == SuccessMetric::coin_projected) {
        std::vector<Complex> combined(nodes);
        for (const auto& r : rows) {
            for (std::uint64_t x = 0; x < nodes; ++x) combined[x] += r[x];
        }
        for (auto& v : combined) v *= coin_amp;
        rows.assign(1, std::move(combined));
    }
    for (auto& r : rows) k.walsh_hadamard(r.data(), r.size());
    kernel_spectra_ = std::move(rows);
}

std::vector<double> TargetSweep::probabilities(const NodeState& node, std::span<const std::uint64_t> targets) const {
    for (std::uint64_t t : targets) {
        if (t >= base_.node_count()) throw std::out_of_range("target vertex out of range");
        if (base_.variant == WalkVariant::oskw && hamming_weight(t) % 2 != 0) {
            throw std::invalid_argument("OSKW target must have even Hamming weight");
        }
    }
    if (method_ == SweepMethod::direct) return direct(node, targets);
    const std::vector<double> all = translated(node);
    std::vector<double> out;
    out.reserve(targets.size());
    for (std::uint64_t t : targets) out.push_back(all[t]);
    return out;
}

std::vector<double> TargetSweep::all_probabilities(const NodeState& node) const {
    const bool optimized = base_.variant == WalkVariant::oskw;
    if (method_ == SweepMethod::translated) {
        std::vector<double> out = translated(node);
        if (optimized) {
            for (std::uint64_t t = 0; t < out.size(); ++t) {
                if (hamming_weight(t) % 2 != 0) out[t] = 0.0;
            }
        }
        return out;
    }
    std::vector<std::uint64_t> targets;
    for (std::uint64_t t = 0; t < base_.node_count(); ++t) {
        if (!optimized || hamming_weight(t) % 2 == 0) targets.push_back(t);
    }
    const std::vector<double> values = direct(node, targets);
    std::vector<double> out(base_.node_count(), 0.0);
    for (std::size_t i = 0; i < targets.size(); ++i) out[targets[i]] = values[i];
    return out;
}

std::vector<double> TargetSweep::direct(const NodeState& node, std::span<const std::uint64_t> targets) const {
    const WalkerState start = compose_walker(base_.dimension, node);
    std::vector<double> out(targets.size());
    parallel_for(targets.size(), threads_, [&](std::size_t i) {
        const WalkSpec spec = base_.with_target(targets[i]);
        out[i] = success_probability(evolve(start, spec, plan_), spec.target, metric_);
    });
    return out;
}

std::vector<double> TargetSweep::translated(const NodeState& node) const {
    if (node.qubits() != base_.dimension) {
        throw std::invalid_argument("node state has " + std::to_string(node.qubits()) +
                                    " qubits, walk dimension is " + std::to_string(base_.dimension));
    }
    const std::uint64_t nodes = base_.node_count();
    const auto& k = kernels::active();
    std::vector<Complex> spectrum(node.amplitudes().begin(), node.amplitudes().end());
    k.walsh_hadamard(spectrum.data(), nodes);

    const double inv_n = 1.0 / static_cast<double>(nodes);
    std::vector<double> out(nodes, 0.0);
    std::vector<Complex> work(nodes);
    for (const auto& kernel : kernel_spectra_) {
        k.multiply(kernel.data(), spectrum.data(), work.data(), nodes);
        k.walsh_hadamard(work.data(), nodes);
        for (std::uint64_t t = 0; t < nodes; ++t) out[t] += std::norm(work[t] * inv_n);
    }
    return out;
}

}  // namespace hcwalk
