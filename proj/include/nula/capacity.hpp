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

#include <string>
#include <vector>

#include "nula/eig.hpp"
#include "nula/geometry.hpp"

namespace nula {

// Scales the eigenvalues to unit sum so that snr means total received SNR.
Spectrum normalize_spectrum(const Spectrum &spectrum);

// Shannon capacity with the power budget split evenly over the K strongest
// eigenmodes: sum_(k<=K) log2(1 + snr/K mu_k). snr is linear.
double capacity_equal_power(const Spectrum &spectrum, double snr, int K);

struct WaterfillAllocation {
    std::vector<double> powers; // per eigenvalue, zero for inactive modes
    double waterlevel = 0.0;
};

// Waterfilling over the positive eigenvalues: p_k = max(0, w - 1/mu_k) with
// sum p_k = snr. Starts from the all-active level and drops the weakest mode
// until every power is non-negative.
WaterfillAllocation waterfill_powers(const Spectrum &spectrum, double snr);

double capacity_waterfilling(const Spectrum &spectrum, double snr);

struct SchemeSpec {
    bool waterfilling = false;
    int K = 1; // only read for equal-power schemes
};

struct CapacityPoint {
    double snr = 0.0; // linear
    double bits_per_s_per_hz = 0.0;
    bool waterfilling = false;
    int K = 0;

    std::string scheme_name() const;
};

// Capacity of the normalized channel between two layouts over an SNR grid,
// one row per (snr, scheme) pair with snr as the outer loop.
std::vector<CapacityPoint> capacity_sweep(const ArrayLayout &layout_t,
                                          const ArrayLayout &layout_r, double tau,
                                          const std::vector<double> &snr_grid_linear,
                                          const std::vector<SchemeSpec> &schemes,
                                          int threads = 1);

} // namespace nula
