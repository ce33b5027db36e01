// SPDX-License-Identifier: Apache-2.0
//
// nula: non-uniform linear antenna array design and analysis for mmWave LoS MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>

namespace nula {

// An iterative solver ran out of iterations (CLI exit code 4).
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested target (EMG, tau_min) is not attainable in the configured
// search range (CLI exit code 3).
struct NotAchievableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nula
