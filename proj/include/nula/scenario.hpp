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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nula/geometry.hpp"
#include "nula/pat.hpp"

namespace nula {

// Raised for unreadable, malformed, or semantically invalid scenario files.
// Parse errors are line-anchored; semantic errors name the offending key.
class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AnalysisSpec {
    double gamma_db = -10.0;
    int K = 2;
    std::optional<double> tau;       // overrides the geometry-derived value
    std::vector<double> snr_grid_db = {0, 5, 10, 15, 20, 25, 30, 35, 40};
};

// One side of the link: the resolved layout plus, when the array was given as
// a groupwise deployment, the deployment that produced it.
struct SideSpec {
    ArrayLayout layout{std::vector<double>{0.0}};
    std::optional<GroupwiseDeployment> groups;
};

struct Scenario {
    LinkGeometry geometry;
    SideSpec transmit;
    SideSpec receive;
    AnalysisSpec analysis;
    std::string hash_hex; // FNV-1a 64 of the input bytes, 16 hex digits

    double tau() const; // analysis.tau if set, else derived from geometry
};

// Parses a scenario JSON document. source_name is used in error messages
// (typically the file path, or "<inline>" for in-memory documents).
Scenario parse_scenario(const std::string &text, const std::string &source_name);

Scenario load_scenario(const std::string &path);

std::string fnv1a_hex(const std::string &bytes);

} // namespace nula
