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

#include <vector>

namespace nula {

struct FeketeConfig {
    double tol = 1e-10;   // gradient infinity-norm target
    int max_iter = 100000;
};

struct FeketeSolution {
    int K = 0;
    std::vector<double> points;
    double objective = 0.0;     // log f_(K,K) at the solution
    double gradient_norm = 0.0; // interior gradient at exit
    int iterations = 0;
};

// log f_(K,K) = 2 sum_(i<j) ln(x_j - x_i) and its gradient. Coincident
// points are rejected with std::invalid_argument.
double objective_log_fKK(const std::vector<double> &points);
std::vector<double> gradient_log_fKK(const std::vector<double> &points);

// Maximizes log f_(K,K) over [-1, 1]^K with the endpoints pinned at -1 and 1
// (the maximizer provably contains them). Projected gradient ascent with
// Armijo backtracking from the Chebyshev-Gauss-Lobatto start; the result is
// symmetrized, matching the Gauss-Lobatto nodes. 2 <= K <= 24.
FeketeSolution fekete_points(int K, const FeketeConfig &cfg = {});

// Lagrange basis polynomials evaluated at x.
std::vector<double> lagrange_basis(const std::vector<double> &points, double x);

// max over a dense grid of sum_k l_k(x)^2. Equals 1 exactly at a Fekete
// configuration and exceeds 1 otherwise, so it certifies optimality without
// reference values.
double fekete_certificate(const std::vector<double> &points);

} // namespace nula
