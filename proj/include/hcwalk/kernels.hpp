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

// Data-parallel inner loops of the walk. Every kernel has a scalar reference
// implementation; SIMD tables are selected at runtime when the CPU supports
// them. Element-wise kernels are bit-identical across tables; reductions
// (squared_norm) may differ in the last bits because of lane ordering.

#include <cstddef>
#include <span>
#include <string_view>

#include "hcwalk/settings.hpp"

namespace hcwalk::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;

    /// Grover diffusion over `dirs` contiguous rows of `node_count` amplitudes:
    /// for every vertex x, a[d][x] <- (2/dirs) * sum_d' a[d'][x] - a[d][x].
    void (*grover_coin)(Complex* rows, std::size_t dirs, std::size_t node_count);

    /// Swap row[x] with row[x ^ (1 << bit)] for every x.
    void (*flip_bit)(Complex* row, std::size_t node_count, unsigned bit);

    /// Unnormalized in-place Walsh-Hadamard transform; len is a power of two.
    void (*walsh_hadamard)(Complex* data, std::size_t len);

    /// out[i] = a[i] * b[i]. `out` may alias `a` or `b`.
    void (*multiply)(const Complex* a, const Complex* b, Complex* out, std::size_t len);

    /// sum_i |data[i]|^2.
    double (*squared_norm)(const Complex* data, std::size_t len);
};

const KernelTable& scalar_table();

/// Table for `isa`, or nullptr when it was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// The table used by the library. Chosen on first use: the widest supported
/// ISA, unless the HCWALK_ISA environment variable names another one.
const KernelTable& active();

/// Override the active table. Throws std::invalid_argument when unsupported.
void select(Isa isa);

}  // namespace hcwalk::kernels
