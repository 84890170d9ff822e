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

#include <algorithm>
#include <utility>

#include "hcwalk/kernels.hpp"
#include "kernel_tables.hpp"

namespace hcwalk::kernels {
namespace {

// Complex values are handled through their real/imaginary doubles so that
// the arithmetic is spelled out the same way as in the SIMD tables.
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }

void grover_coin(Complex* rows, std::size_t dirs, std::size_t node_count) {
    constexpr std::size_t kBlock = 64;  // doubles per block
    const double factor = 2.0 / static_cast<double>(dirs);
    const std::size_t width = 2 * node_count;
    double* base = as_doubles(rows);
    double sums[kBlock];
    for (std::size_t start = 0; start < width; start += kBlock) {
        const std::size_t count = std::min(kBlock, width - start);
        std::copy_n(base + start, count, sums);
        for (std::size_t d = 1; d < dirs; ++d) {
            const double* row = base + d * width + start;
            for (std::size_t i = 0; i < count; ++i) sums[i] = sums[i] + row[i];
        }
        for (std::size_t i = 0; i < count; ++i) sums[i] = factor * sums[i];
        for (std::size_t d = 0; d < dirs; ++d) {
            double* row = base + d * width + start;
            for (std::size_t i = 0; i < count; ++i) row[i] = sums[i] - row[i];
        }
    }
}

void flip_bit(Complex* row, std::size_t node_count, unsigned bit) {
    const std::size_t block = std::size_t{1} << bit;
    for (std::size_t base = 0; base < node_count; base += 2 * block) {
        for (std::size_t i = 0; i < block; ++i) std::swap(row[base + i], row[base + block + i]);
    }
}

void walsh_hadamard(Complex* data, std::size_t len) {
    double* v = as_doubles(data);
    for (std::size_t h = 1; h < len; h *= 2) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 2 * base; j < 2 * (base + h); ++j) {
                const double a = v[j];
                const double b = v[j + 2 * h];
                v[j] = a + b;
                v[j + 2 * h] = a - b;
            }
        }
    }
}

void multiply(const Complex* a, const Complex* b, Complex* out, std::size_t len) {
    const double* x = as_doubles(a);
    const double* y = as_doubles(b);
    double* z = as_doubles(out);
    for (std::size_t i = 0; i < len; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        z[2 * i] = xr * yr - xi * yi;
        z[2 * i + 1] = xi * yr + xr * yi;
    }
}

double squared_norm(const Complex* data, std::size_t len) {
    const double* v = as_doubles(data);
    double total = 0.0;
    for (std::size_t i = 0; i < 2 * len; ++i) total += v[i] * v[i];
    return total;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{Isa::scalar, grover_coin, flip_bit, walsh_hadamard, multiply,
                                   squared_norm};
    return table;
}

}  // namespace hcwalk::kernels
