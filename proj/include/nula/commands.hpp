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
#include <string>

#include "nula/eig.hpp"
#include "nula/scenario.hpp"
#include "nula/table.hpp"

namespace nula {

enum class OutputFormat { csv, json };

std::string format_table(const ResultTable &table, OutputFormat format);

// Fekete points for one K: columns (K, k, point, objective, certificate_max)
// with the log-domain objective and the interpolation certificate repeated on
// every row. 2 <= K <= 24.
ResultTable cmd_fekete(int K);

// Arch-parameter fits for K in [k_lo, k_hi]:
// columns (K, theta, residual, degenerate).
ResultTable cmd_pat_fit(int k_lo, int k_hi);

// Smallest tau reaching multiplexing gain K at threshold gamma. K and
// gamma_db default to the scenario's analysis block. One row:
// (K, gamma_db, tau_min, ratio_at_tau, bracket_lo, bracket_hi, distance_m);
// distance_m is empty when the geometry cannot place the link (tilts at
// broadside-normal or non-positive distances). Throws NotAchievableError
// when the gain is never reached on the search grid.
ResultTable cmd_taumin(const Scenario &scenario, std::optional<int> K,
                       std::optional<double> gamma_db,
                       const TauSearchConfig &cfg = {});

enum class SweepKind { ratio, capacity, theta };

struct SweepOptions {
    SweepKind kind = SweepKind::ratio;
    // Grid for ratio sweeps.
    double tau_lo = 0.01;
    double tau_hi = 4.0;
    double tau_step = 0.01;
    // Bounds for the tau_min searches inside theta sweeps.
    TauSearchConfig search;
    int threads = 1;
};

// ratio:    (tau, ratio) over the grid, ratio = mu_K / mu_1.
// capacity: (snr_db, scheme, bits_per_s_per_hz) over analysis.snr_grid_db,
//           waterfilling plus equal-power with analysis.K streams.
// theta:    (theta, tau_min, label) over the arch-parameter grid; the
//           minimizer is appended as label "theta_star" and the Fekete fit
//           as "theta_K"; tau_min cells are empty where the gain is not
//           achievable.
ResultTable cmd_sweep(const Scenario &scenario, const SweepOptions &options);

// One-shot link report: tau, distances, EMG, the eigenvalue profile and
// capacities, as rows of (quantity, k, value). k holds the eigenvalue index
// or the SNR grid point where one applies.
ResultTable cmd_analyze(const Scenario &scenario);

} // namespace nula
