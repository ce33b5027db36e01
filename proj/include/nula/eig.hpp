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
#include <vector>

#include "nula/channel.hpp"
#include "nula/matrix.hpp"

namespace nula {

// Eigenvalues in descending order. reliable_count is the number of leading
// values at or above 1e-13 of the largest one; anything smaller sits in the
// numerical noise floor of the solver and should not be trusted beyond its
// order of magnitude.
struct Spectrum {
    std::vector<double> values;
    std::optional<CMat> vectors; // columns match values when requested
    std::size_t reliable_count = 0;
};

// G = H H^H.
CMat gram(const ChannelMatrix &channel);
CMat gram(const CMat &h);

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Rejects non-Hermitian input (relative asymmetry above 1e-12);
// negative values within -1e-10 of the largest eigenvalue are rounded up to
// zero. Throws ConvergenceError after 100 sweeps without convergence.
Spectrum eigenvalues_desc(const CMat &g, bool with_vectors = false);

// Effective multiplexing gain: the number of eigenvalues within a factor
// gamma of the largest. gamma must lie in [1e-12, 1].
int emg(const Spectrum &spectrum, double gamma);

// Spectrum of the Gram matrix of the normalized channel between two layouts.
// Layouts with repeated positions are collapsed onto their distinct values
// (the zero eigenvalues contributed by duplicated rows are appended
// explicitly), which keeps dense groupwise deployments cheap.
Spectrum layout_spectrum(const ArrayLayout &layout_r, const ArrayLayout &layout_t,
                         double tau);

struct TauSearchConfig {
    double tau_max = 4.0;
    double step = 1e-3;  // coarse grid resolution
    int bisect_iters = 40;
    double tol = 1e-12;  // bracket width early exit
};

struct TauMinResult {
    double tau_min = 0.0;
    int K = 0;
    double gamma = 0.0;
    double bracket_lo = 0.0; // EMG < K here
    double bracket_hi = 0.0; // EMG >= K here; equals tau_min
    double ratio_at_tau = 0.0;
};

// Smallest tau in (0, tau_max] with EMG(tau) >= K: the first grid crossing is
// refined by bisection, which keeps the invariant EMG(lo) < K <= EMG(hi).
// Returns nullopt when the grid never reaches K.
std::optional<TauMinResult> tau_min_search(const ArrayLayout &layout_t,
                                           const ArrayLayout &layout_r, int K,
                                           double gamma,
                                           const TauSearchConfig &cfg = {});

struct RatioRow {
    double tau = 0.0;
    double ratio = 0.0; // mu_K / mu_1
};

std::vector<RatioRow> ratio_sweep(const ArrayLayout &layout_t,
                                  const ArrayLayout &layout_r, int K,
                                  const std::vector<double> &tau_grid,
                                  int threads = 1);

// Largest EMG reached anywhere on the search grid.
int max_achievable_emg(const ArrayLayout &layout_t, const ArrayLayout &layout_r,
                       double gamma, const TauSearchConfig &cfg = {});

} // namespace nula
