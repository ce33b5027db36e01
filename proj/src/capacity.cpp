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

#include "nula/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace nula {

Spectrum normalize_spectrum(const Spectrum &spectrum) {
    const double total =
        std::accumulate(spectrum.values.begin(), spectrum.values.end(), 0.0);
    if (!(total > 0.0))
        throw std::invalid_argument("normalize_spectrum: spectrum sums to zero");
    Spectrum out = spectrum;
    for (double &v : out.values)
        v /= total;
    return out;
}

double capacity_equal_power(const Spectrum &spectrum, double snr, int K) {
    if (!(snr >= 0.0))
        throw std::invalid_argument("capacity_equal_power: snr must be >= 0");
    const int positive = static_cast<int>(
        std::count_if(spectrum.values.begin(), spectrum.values.end(),
                      [](double v) { return v > 0.0; }));
    if (K < 1 || K > positive)
        throw std::invalid_argument(
            "capacity_equal_power: K exceeds the positive eigenvalue count");
    double c = 0.0;
    for (int k = 0; k < K; ++k)
        c += std::log2(1.0 + snr / K * spectrum.values[static_cast<std::size_t>(k)]);
    return c;
}

WaterfillAllocation waterfill_powers(const Spectrum &spectrum, double snr) {
    if (!(snr >= 0.0))
        throw std::invalid_argument("waterfill_powers: snr must be >= 0");
    const std::size_t n = spectrum.values.size();
    WaterfillAllocation alloc;
    alloc.powers.assign(n, 0.0);

    std::size_t active = 0;
    while (active < n && spectrum.values[active] > 0.0)
        ++active;
    if (active == 0)
        throw std::invalid_argument("waterfill_powers: no positive eigenvalue");

    // Values are sorted descending, so the weakest active mode is the last
    // one. Drop it while its power would be negative. The inverse sum is
    // recomputed per round: updating it incrementally would cancel against
    // the huge 1/mu of dropped noise-floor modes and corrupt the level.
    double w = 0.0;
    while (active > 0) {
        double inv_sum = 0.0;
        for (std::size_t k = 0; k < active; ++k)
            inv_sum += 1.0 / spectrum.values[k];
        w = (snr + inv_sum) / static_cast<double>(active);
        if (w - 1.0 / spectrum.values[active - 1] >= 0.0)
            break;
        --active;
    }
    for (std::size_t k = 0; k < active; ++k)
        alloc.powers[k] = w - 1.0 / spectrum.values[k];
    alloc.waterlevel = w;
    return alloc;
}

double capacity_waterfilling(const Spectrum &spectrum, double snr) {
    const WaterfillAllocation alloc = waterfill_powers(spectrum, snr);
    double c = 0.0;
    for (std::size_t k = 0; k < alloc.powers.size(); ++k)
        if (alloc.powers[k] > 0.0)
            c += std::log2(1.0 + alloc.powers[k] * spectrum.values[k]);
    return c;
}

std::string CapacityPoint::scheme_name() const {
    return waterfilling ? "waterfilling" : "equal_power_" + std::to_string(K);
}

std::vector<CapacityPoint> capacity_sweep(const ArrayLayout &layout_t,
                                          const ArrayLayout &layout_r, double tau,
                                          const std::vector<double> &snr_grid_linear,
                                          const std::vector<SchemeSpec> &schemes,
                                          int threads) {
    const Spectrum spec =
        normalize_spectrum(layout_spectrum(layout_r, layout_t, tau));
    std::vector<CapacityPoint> rows(snr_grid_linear.size() * schemes.size());
    const auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < snr_grid_linear.size(); i += stride) {
            for (std::size_t s = 0; s < schemes.size(); ++s) {
                CapacityPoint &pt = rows[i * schemes.size() + s];
                pt.snr = snr_grid_linear[i];
                pt.waterfilling = schemes[s].waterfilling;
                pt.K = schemes[s].waterfilling ? 0 : schemes[s].K;
                pt.bits_per_s_per_hz =
                    schemes[s].waterfilling
                        ? capacity_waterfilling(spec, pt.snr)
                        : capacity_equal_power(spec, pt.snr, schemes[s].K);
            }
        }
    };
    const int T = std::max(1, threads);
    if (T == 1 || snr_grid_linear.size() < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(T));
        for (int t = 0; t < T; ++t)
            pool.emplace_back(work, static_cast<std::size_t>(t),
                              static_cast<std::size_t>(T));
        for (auto &th : pool)
            th.join();
    }
    return rows;
}

} // namespace nula
