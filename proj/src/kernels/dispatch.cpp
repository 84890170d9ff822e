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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hcwalk/kernels.hpp"
#include "kernel_tables.hpp"

namespace hcwalk {

const Settings& default_settings() {
    static const Settings settings{};
    return settings;
}

namespace kernels {
namespace {

bool cpu_has(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(HCWALK_HAS_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* compiled_table(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &scalar_table();
        case Isa::avx2:
#if defined(HCWALK_HAS_AVX2)
            return &avx2_table();
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable* initial_table() {
    if (const char* forced = std::getenv("HCWALK_ISA")) {
        const std::string name(forced);
        for (Isa isa : {Isa::scalar, Isa::avx2}) {
            if (name == isa_name(isa)) {
                if (const KernelTable* t = table_for(isa)) return t;
            }
        }
    }
    if (const KernelTable* t = table_for(Isa::avx2)) return t;
    return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

const KernelTable* table_for(Isa isa) {
    if (!cpu_has(isa)) return nullptr;
    return compiled_table(isa);
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
    const KernelTable* t = table_for(isa);
    if (t == nullptr) throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
    current().store(t, std::memory_order_release);
}

}  // namespace kernels
}  // namespace hcwalk
