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

#include "nula/eig.hpp"
#include "nula/fekete.hpp"
#include "nula/geometry.hpp"

namespace nula {

// Projected arch type (PAT) family: K points spread uniformly over a
// circular arch of opening theta and projected onto its chord,
// sin((2k - 1 - K) theta / (2 (K-1))) / sin(theta / 2). theta -> 0 recovers
// the uniform grid; larger theta pushes the points towards the ends. The
// first and last points are -1 and 1 for every theta.
std::vector<double> pat_points(int K, double theta);

struct ThetaFit {
    double theta = 0.0;
    double residual = 0.0; // Euclidean distance to the Fekete points
    bool degenerate = false; // K = 2, 3: uniform already is the optimum
};

// Best single-parameter approximation of the K Fekete points within the
// family above (golden-section search over theta in [0.1, pi]).
ThetaFit fit_theta(int K, const FeketeSolution &fekete);

struct GroupwiseDeployment {
    int M = 0;
    int K = 0;
    std::vector<double> centers; // effective centers after the edge shift
    double intra_spacing = 0.0;
    ArrayLayout alphas;
    std::vector<int> group_sizes;
};

// Distributes M elements over K groups (group of element m is ceil(m K / M)),
// each group spread around its center with spacing delta. The outer groups
// are shifted inwards so the extreme elements sit exactly on -1 and 1.
// Overlapping groups or elements pushed outside [-1, 1] throw
// std::invalid_argument.
GroupwiseDeployment groupwise_deploy(int M, int K, const std::vector<double> &centers,
                                     double delta);

GroupwiseDeployment groupwise_fekete_deploy(int M, int K, double delta,
                                            const FeketeConfig &cfg = {});

struct ThetaOptimum {
    double theta_star = 0.0;
    double tau_min_at_star = 0.0;
};

// Minimizes tau_min(theta) for an M x N link whose two arrays follow the
// groupwise deployment (delta = 0) around pat_points(K, theta). Grid scan
// with ties broken towards smaller theta, then golden-section refinement.
// Returns nullopt when no theta on the grid reaches EMG K.
std::optional<ThetaOptimum> optimize_theta_for_taumin(
    int M, int N, int K, double gamma, const std::vector<double> &theta_grid,
    const TauSearchConfig &cfg = {}, int threads = 1);

// 157 values, 0.0 to 3.12 in steps of 0.02.
std::vector<double> default_theta_grid();

} // namespace nula
