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

#include "nula/pat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace nula {

namespace {

constexpr double kThetaZero = 1e-14;
constexpr double kGolden = 0.6180339887498949; // 1/phi

std::vector<double> uniform_points(int K) {
    std::vector<double> p(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        p[static_cast<std::size_t>(k - 1)] =
            static_cast<double>(2 * k - K - 1) / static_cast<double>(K - 1);
    return p;
}

double pat_residual(int K, double theta, const std::vector<double> &target) {
    const std::vector<double> p = pat_points(K, theta);
    double r = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        r += (p[i] - target[i]) * (p[i] - target[i]);
    return std::sqrt(r);
}

} // namespace

std::vector<double> pat_points(int K, double theta) {
    if (K < 2)
        throw std::invalid_argument("pat_points: K must be >= 2");
    if (!(theta >= 0.0) || theta >= 2.0 * std::numbers::pi)
        throw std::invalid_argument("pat_points: theta must lie in [0, 2 pi)");
    if (theta < kThetaZero)
        return uniform_points(K);
    const double den = std::sin(theta / 2.0);
    std::vector<double> p(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        if (k == 1) {
            p[0] = -1.0;
        } else if (k == K) {
            p[static_cast<std::size_t>(K - 1)] = 1.0;
        } else {
            const double num = std::sin(static_cast<double>(2 * k - 1 - K) * theta /
                                        (2.0 * static_cast<double>(K - 1)));
            p[static_cast<std::size_t>(k - 1)] = num / den;
        }
    }
    return p;
}

ThetaFit fit_theta(int K, const FeketeSolution &fekete) {
    if (fekete.K != K || static_cast<int>(fekete.points.size()) != K)
        throw std::invalid_argument("fit_theta: solution does not match K");
    if (K <= 3)
        return {0.0, 0.0, true}; // uniform points already are the optimum

    const auto res = [&](double th) { return pat_residual(K, th, fekete.points); };

    // Coarse scan guards against picking a non-global valley, then
    // golden-section tightens the winner.
    const double lo_bound = 0.1, hi_bound = std::numbers::pi;
    const int coarse = 400;
    double best_th = lo_bound, best_r = res(lo_bound);
    for (int i = 1; i <= coarse; ++i) {
        const double th = lo_bound + (hi_bound - lo_bound) * i / coarse;
        const double r = res(th);
        if (r < best_r) {
            best_r = r;
            best_th = th;
        }
    }
    const double span = (hi_bound - lo_bound) / coarse;
    double a = std::max(lo_bound, best_th - span);
    double b = std::min(hi_bound, best_th + span);
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = res(c), fd = res(d);
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = res(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = res(d);
        }
    }
    const double th = 0.5 * (a + b);
    return {th, res(th), false};
}

GroupwiseDeployment groupwise_deploy(int M, int K, const std::vector<double> &centers,
                                     double delta) {
    if (M < 1 || K < 1 || K > M)
        throw std::invalid_argument("groupwise_deploy: need 1 <= K <= M");
    if (static_cast<int>(centers.size()) != K)
        throw std::invalid_argument("groupwise_deploy: centers must have K entries");
    if (!(delta >= 0.0))
        throw std::invalid_argument("groupwise_deploy: delta must be >= 0");
    for (int k = 1; k < K; ++k)
        if (!(centers[static_cast<std::size_t>(k)] >
              centers[static_cast<std::size_t>(k - 1)]))
            throw std::invalid_argument(
                "groupwise_deploy: centers must be strictly increasing");

    std::vector<int> sizes(static_cast<std::size_t>(K), 0);
    for (int m = 1; m <= M; ++m) {
        const int k = (m * K + M - 1) / M; // ceil(m K / M)
        ++sizes[static_cast<std::size_t>(k - 1)];
    }

    std::vector<double> eff(centers);
    if (K >= 2) {
        eff.front() = -1.0 + delta * (sizes.front() - 1) / 2.0;
        eff.back() = 1.0 - delta * (sizes.back() - 1) / 2.0;
    }

    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(M));
    double prev_max = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < K; ++k) {
        const int s = sizes[static_cast<std::size_t>(k)];
        const double c = eff[static_cast<std::size_t>(k)];
        const double lo = c - delta * (s - 1) / 2.0;
        if (lo < prev_max - 1e-12)
            throw std::invalid_argument(
                "groupwise_deploy: groups overlap, reduce delta");
        for (int i = 0; i < s; ++i)
            vals.push_back(lo + delta * i);
        prev_max = vals.back();
    }
    if (vals.front() < -1.0 - 1e-12 || vals.back() > 1.0 + 1e-12)
        throw std::invalid_argument(
            "groupwise_deploy: deployment exceeds the aperture, reduce delta");

    return GroupwiseDeployment{M,     K,   std::move(eff), delta,
                               ArrayLayout(std::move(vals)), std::move(sizes)};
}

GroupwiseDeployment groupwise_fekete_deploy(int M, int K, double delta,
                                            const FeketeConfig &cfg) {
    return groupwise_deploy(M, K, fekete_points(K, cfg).points, delta);
}

std::vector<double> default_theta_grid() {
    std::vector<double> g;
    g.reserve(157);
    for (int i = 0; i < 157; ++i)
        g.push_back(0.02 * i);
    return g;
}

std::optional<ThetaOptimum> optimize_theta_for_taumin(
    int M, int N, int K, double gamma, const std::vector<double> &theta_grid,
    const TauSearchConfig &cfg, int threads) {
    if (theta_grid.empty())
        throw std::invalid_argument("optimize_theta_for_taumin: empty grid");

    const auto eval = [&](double theta) -> double {
        const ArrayLayout rx =
            groupwise_deploy(M, K, pat_points(K, theta), 0.0).alphas;
        const ArrayLayout tx =
            groupwise_deploy(N, K, pat_points(K, theta), 0.0).alphas;
        const auto r = tau_min_search(tx, rx, K, gamma, cfg);
        return r ? r->tau_min : std::numeric_limits<double>::infinity();
    };

    std::vector<double> tmins(theta_grid.size(),
                              std::numeric_limits<double>::infinity());
    const auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < theta_grid.size(); i += stride)
            tmins[i] = eval(theta_grid[i]);
    };
    const int T = std::max(1, threads);
    if (T == 1 || theta_grid.size() < 2) {
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

    std::size_t best = 0;
    for (std::size_t i = 1; i < tmins.size(); ++i)
        if (tmins[i] < tmins[best]) // strict: ties keep the smaller theta
            best = i;
    if (!std::isfinite(tmins[best]))
        return std::nullopt;

    // Golden-section refinement between the neighbours of the grid winner.
    double a = theta_grid[best > 0 ? best - 1 : best];
    double b = theta_grid[best + 1 < theta_grid.size() ? best + 1 : best];
    double th_star = theta_grid[best];
    double tm_star = tmins[best];
    if (b > a) {
        double c = b - kGolden * (b - a);
        double d = a + kGolden * (b - a);
        double fc = eval(c), fd = eval(d);
        for (int it = 0; it < 40 && b - a > 1e-4; ++it) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - kGolden * (b - a);
                fc = eval(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + kGolden * (b - a);
                fd = eval(d);
            }
        }
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        if (fm < tm_star) {
            th_star = mid;
            tm_star = fm;
        }
    }
    return ThetaOptimum{th_star, tm_star};
}

} // namespace nula
