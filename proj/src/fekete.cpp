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

#include "nula/fekete.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nula/errors.hpp"

namespace nula {

namespace {

bool strictly_increasing(const std::vector<double> &x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            return false;
    return true;
}

} // namespace

double objective_log_fKK(const std::vector<double> &points) {
    const std::size_t K = points.size();
    double s = 0.0;
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j) {
            const double d = points[j] - points[i];
            if (!(d > 0.0))
                throw std::invalid_argument(
                    "objective_log_fKK: points must be strictly increasing");
            s += 2.0 * std::log(d);
        }
    return s;
}

std::vector<double> gradient_log_fKK(const std::vector<double> &points) {
    const std::size_t K = points.size();
    std::vector<double> g(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i) {
            if (i == k)
                continue;
            const double d = points[k] - points[i];
            if (d == 0.0)
                throw std::invalid_argument(
                    "gradient_log_fKK: points must be distinct");
            g[k] += 2.0 / d;
        }
    return g;
}

FeketeSolution fekete_points(int K, const FeketeConfig &cfg) {
    if (K < 2 || K > 24)
        throw std::invalid_argument("fekete_points: K must lie in [2, 24]");

    std::vector<double> x(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
        x[static_cast<std::size_t>(k)] =
            -std::cos(static_cast<double>(k) * std::numbers::pi /
                      static_cast<double>(K - 1));
    x.front() = -1.0;
    x.back() = 1.0;

    FeketeSolution sol;
    sol.K = K;
    if (K == 2) { // nothing to optimize: both points are pinned
        sol.points = x;
        sol.objective = objective_log_fKK(x);
        return sol;
    }

    double step = 1e-3;
    double fx = objective_log_fKK(x);
    double gnorm = 0.0;
    int it = 0;
    for (; it < cfg.max_iter; ++it) {
        std::vector<double> g = gradient_log_fKK(x);
        g.front() = 0.0; // endpoints stay pinned
        g.back() = 0.0;
        double g2 = 0.0;
        gnorm = 0.0;
        for (double v : g) {
            g2 += v * v;
            gnorm = std::max(gnorm, std::abs(v));
        }
        if (gnorm < cfg.tol)
            break;

        // Armijo backtracking along the (projected) gradient.
        bool accepted = false;
        while (step > 1e-18) {
            std::vector<double> cand = x;
            for (std::size_t k = 1; k + 1 < cand.size(); ++k)
                cand[k] = std::clamp(cand[k] + step * g[k], -1.0, 1.0);
            if (strictly_increasing(cand)) {
                const double fc = objective_log_fKK(cand);
                // Strict: near the optimum the sufficient-increase term rounds
                // to zero and fc == fx must count as a failed step, not an
                // accepted one, so that the underflow break below can fire.
                if (fc > fx + 1e-4 * step * g2) {
                    x = std::move(cand);
                    fx = fc;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted)
            break;     // step underflow: gradient noise floor reached
        step *= 2.0;   // be optimistic again next round
    }
    if (it >= cfg.max_iter)
        throw ConvergenceError("fekete_points: ascent exceeded max_iter");

    // The optimum is symmetric; averaging with the mirrored solution removes
    // the asymmetric part of the remaining error.
    for (int k = 0; k < K / 2; ++k) {
        const std::size_t a = static_cast<std::size_t>(k);
        const std::size_t b = static_cast<std::size_t>(K - 1 - k);
        const double v = 0.5 * (x[b] - x[a]);
        x[a] = -v;
        x[b] = v;
    }
    if (K % 2 == 1)
        x[static_cast<std::size_t>(K / 2)] = 0.0;

    sol.points = std::move(x);
    sol.objective = objective_log_fKK(sol.points);
    sol.gradient_norm = gnorm;
    sol.iterations = it;
    return sol;
}

std::vector<double> lagrange_basis(const std::vector<double> &points, double x) {
    const std::size_t K = points.size();
    std::vector<double> l(K, 1.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i) {
            if (i == k)
                continue;
            const double den = points[k] - points[i];
            if (den == 0.0)
                throw std::invalid_argument("lagrange_basis: points must be distinct");
            l[k] *= (x - points[i]) / den;
        }
    return l;
}

double fekete_certificate(const std::vector<double> &points) {
    constexpr int kGrid = 100000;
    double best = 0.0;
    for (int i = 0; i <= kGrid; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / kGrid;
        const std::vector<double> l = lagrange_basis(points, x);
        double s = 0.0;
        for (double v : l)
            s += v * v;
        best = std::max(best, s);
    }
    return best;
}

} // namespace nula
