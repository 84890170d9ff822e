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

#include <functional>
#include <ostream>

namespace hcwalk::harness {

enum ExitStatus : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInput = 2,      // config parse failure, bad state spec, bad arguments
    kExitInvariant = 3,  // invariant violation; its name goes to `err`
};

/// Runs `body` and maps escaping exceptions to an exit status, writing a
/// one-line diagnostic to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace hcwalk::harness
