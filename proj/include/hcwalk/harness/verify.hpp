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

// The oracle suite behind `hcwalk verify`: dense operators against the
// matrix-free walk, the two target-sweep routes against each other, the
// exact inner identities and the product-state grid.

#include <cstdint>
#include <string>
#include <vector>

namespace hcwalk::harness {

struct CheckResult {
    std::string name;
    int n = 0;
    double value = 0.0;      // measured deviation (or estimate)
    double tolerance = 0.0;  // pass when value <= tolerance
    bool passed = false;
};

/// Runs every check for n = 2..max_n. Throws std::invalid_argument when max_n
/// exceeds the dense-operator guard.
std::vector<CheckResult> run_verify_suite(int max_n, std::uint64_t seed, int threads);

}  // namespace hcwalk::harness
