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

#include <immintrin.h>

#include <algorithm>

#include "hcwalk/kernels.hpp"
#include "kernel_tables.hpp"

// Compiled with -mavx2 only; the dispatcher never hands this table out unless
// the CPU reports AVX2. No FMA: results must match the scalar table bit for bit.

namespace hcwalk::kernels {
namespace {

inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }

void grover_coin(Complex* rows, std::size_t dirs, std::size_t node_count) {
    const std::size_t width = 2 * node_count;
    double* base = as_doubles(rows);
    const double factor = 2.0 / static_cast<double>(dirs);
    const __m256d vfactor = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= width; i += 4) {
        __m256d sum = _mm256_loadu_pd(base + i);
        for (std::size_t d = 1; d < dirs; ++d) sum = _mm256_add_pd(sum, _mm256_loadu_pd(base + d * width + i));
        sum = _mm256_mul_pd(vfactor, sum);
        for (std::size_t d = 0; d < dirs; ++d) {
            double* p = base + d * width + i;
            _mm256_storeu_pd(p, _mm256_sub_pd(sum, _mm256_loadu_pd(p)));
        }
    }
    for (; i < width; ++i) {
        double sum = base[i];
        for (std::size_t d = 1; d < dirs; ++d) sum = sum + base[d * width + i];
        sum = factor * sum;
        for (std::size_t d = 0; d < dirs; ++d) base[d * width + i] = sum - base[d * width + i];
    }
}

void flip_bit(Complex* row, std::size_t node_count, unsigned bit) {
    double* v = as_doubles(row);
    if (bit == 0) {
        std::size_t x = 0;
        for (; x + 2 <= node_count; x += 2) {
            const __m256d pair = _mm256_loadu_pd(v + 2 * x);
            _mm256_storeu_pd(v + 2 * x, _mm256_permute4x64_pd(pair, 0x4E));
        }
        return;
    }
    const std::size_t block = std::size_t{1} << bit;  // >= 2 complex = 4 doubles
    for (std::size_t base = 0; base < node_count; base += 2 * block) {
        double* lo = v + 2 * base;
        double* hi = v + 2 * (base + block);
        for (std::size_t j = 0; j < 2 * block; j += 4) {
            const __m256d a = _mm256_loadu_pd(lo + j);
            const __m256d b = _mm256_loadu_pd(hi + j);
            _mm256_storeu_pd(lo + j, b);
            _mm256_storeu_pd(hi + j, a);
        }
    }
}

void walsh_hadamard(Complex* data, std::size_t len) {
    double* v = as_doubles(data);
    if (len >= 2) {
        for (std::size_t x = 0; x < len; x += 2) {
            const __m256d ab = _mm256_loadu_pd(v + 2 * x);
            const __m256d ba = _mm256_permute4x64_pd(ab, 0x4E);
            const __m256d sum = _mm256_add_pd(ab, ba);
            const __m256d diff = _mm256_sub_pd(ba, ab);
            _mm256_storeu_pd(v + 2 * x, _mm256_blend_pd(sum, diff, 0b1100));
        }
    }
    for (std::size_t h = 2; h < len; h *= 2) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            double* lo = v + 2 * base;
            double* hi = v + 2 * (base + h);
            for (std::size_t j = 0; j < 2 * h; j += 4) {
                const __m256d a = _mm256_loadu_pd(lo + j);
                const __m256d b = _mm256_loadu_pd(hi + j);
                _mm256_storeu_pd(lo + j, _mm256_add_pd(a, b));
                _mm256_storeu_pd(hi + j, _mm256_sub_pd(a, b));
            }
        }
    }
}

void multiply(const Complex* a, const Complex* b, Complex* out, std::size_t len) {
    const double* x = as_doubles(a);
    const double* y = as_doubles(b);
    double* z = as_doubles(out);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * i);
        const __m256d yv = _mm256_loadu_pd(y + 2 * i);
        const __m256d yre = _mm256_movedup_pd(yv);
        const __m256d yim = _mm256_permute_pd(yv, 0xF);
        const __m256d xswap = _mm256_permute_pd(xv, 0x5);
        const __m256d t1 = _mm256_mul_pd(xv, yre);
        const __m256d t2 = _mm256_mul_pd(xswap, yim);
        _mm256_storeu_pd(z + 2 * i, _mm256_addsub_pd(t1, t2));
    }
    for (; i < len; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        z[2 * i] = xr * yr - xi * yi;
        z[2 * i + 1] = xi * yr + xr * yi;
    }
}

double squared_norm(const Complex* data, std::size_t len) {
    const double* v = as_doubles(data);
    const std::size_t width = 2 * len;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= width; i += 8) {
        const __m256d a = _mm256_loadu_pd(v + i);
        const __m256d b = _mm256_loadu_pd(v + i + 4);
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, b));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < width; ++i) total += v[i] * v[i];
    return total;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{Isa::avx2, grover_coin, flip_bit, walsh_hadamard, multiply,
                                   squared_norm};
    return table;
}

}  // namespace hcwalk::kernels
