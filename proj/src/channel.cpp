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

#include "nula/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nula {

namespace {
constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
const cd kJ{0.0, 1.0};
} // namespace

ChannelMatrix build_hhat(const ArrayLayout &layout_r, const ArrayLayout &layout_t,
                         double tau) {
    const int M = layout_r.size(), N = layout_t.size();
    CMat H(static_cast<size_t>(M), static_cast<size_t>(N));
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n)
            H(static_cast<size_t>(m), static_cast<size_t>(n)) =
                std::exp(kJ * (tau * layout_r[m] * layout_t[n]));
    return {std::move(H), ChannelKind::hhat, tau};
}

std::complex<double> default_rho(const LinkGeometry &geom, int M, int N) {
    return cd{4.0 * kPi * geom.distance /
                  (geom.wavelength * static_cast<double>(M) * static_cast<double>(N)),
              0.0};
}

std::vector<std::complex<double>> phi_r_diagonal(const ArrayLayout &layout_r,
                                                 const LinkGeometry &geom) {
    geom.validate();
    const auto pts = antenna_coordinates(layout_r, geom, Side::receive, false);
    const double k = 2.0 * kPi / geom.wavelength;
    std::vector<cd> d(pts.size());
    for (size_t m = 0; m < pts.size(); ++m) {
        const Point3 &p = pts[m];
        d[m] = std::exp(-kJ *
                        (k * (p.z + (p.x * p.x + p.y * p.y) / (2.0 * geom.distance))));
    }
    return d;
}

std::vector<std::complex<double>> phi_t_diagonal(const ArrayLayout &layout_t,
                                                 const LinkGeometry &geom) {
    geom.validate();
    const auto pts = antenna_coordinates(layout_t, geom, Side::transmit, false);
    const double k = 2.0 * kPi / geom.wavelength;
    std::vector<cd> d(pts.size());
    for (size_t n = 0; n < pts.size(); ++n) {
        const Point3 &q = pts[n];
        d[n] = std::exp(-kJ *
                        (k * (-q.z + (q.x * q.x + q.y * q.y) / (2.0 * geom.distance))));
    }
    return d;
}

ChannelMatrix build_full_channel(const LinkGeometry &geom,
                                 const ArrayLayout &layout_t,
                                 const ArrayLayout &layout_r, ChannelMode mode,
                                 std::optional<std::complex<double>> rho) {
    geom.validate();
    const int M = layout_r.size(), N = layout_t.size();
    const cd r = rho.value_or(default_rho(geom, M, N));
    const double lambda = geom.wavelength;
    CMat H(static_cast<size_t>(M), static_cast<size_t>(N));

    if (mode == ChannelMode::exact) {
        for (int m = 0; m < M; ++m)
            for (int n = 0; n < N; ++n) {
                const double d = exact_distance(m, n, layout_r, layout_t, geom);
                H(static_cast<size_t>(m), static_cast<size_t>(n)) =
                    r * lambda / (4.0 * kPi * d) * std::exp(-kJ * (2.0 * kPi * d / lambda));
            }
        return {std::move(H), ChannelKind::full_exact, compute_tau(geom)};
    }

    const double tau = compute_tau(geom);
    const cd scale = r * lambda / (4.0 * kPi * geom.distance) *
                     std::exp(-kJ * (2.0 * kPi * geom.distance / lambda));
    const auto dr = phi_r_diagonal(layout_r, geom);
    const auto dt = phi_t_diagonal(layout_t, geom);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n)
            H(static_cast<size_t>(m), static_cast<size_t>(n)) =
                scale * dr[static_cast<size_t>(m)] *
                std::exp(kJ * (tau * layout_r[m] * layout_t[n])) *
                dt[static_cast<size_t>(n)];
    return {std::move(H), ChannelKind::full_farfield, tau};
}

RMat ula_gram(int M, int N, double tau) {
    if (M < 2 || N < 2)
        throw std::invalid_argument("ula_gram: M and N must be >= 2");
    if (M > N)
        throw std::invalid_argument("ula_gram: requires M <= N");
    RMat G(static_cast<size_t>(M), static_cast<size_t>(M));
    const double beta = 2.0 * tau / (static_cast<double>(M - 1) * static_cast<double>(N - 1));
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n <= m; ++n) {
            double v;
            if (m == n) {
                v = static_cast<double>(N);
            } else {
                const double arg = beta * static_cast<double>(m - n);
                // Near multiples of pi the Dirichlet ratio approaches the
                // signed limit N * (-1)^(l (N-1)) with l = round(arg / pi).
                const double l = std::round(arg / kPi);
                if (std::abs(arg - l * kPi) < 1e-9) {
                    const long long li = static_cast<long long>(l);
                    const bool flip = (li % 2 != 0) && (N % 2 == 0);
                    v = flip ? -static_cast<double>(N) : static_cast<double>(N);
                } else {
                    v = std::sin(static_cast<double>(N) * arg) / std::sin(arg);
                }
            }
            G(static_cast<size_t>(m), static_cast<size_t>(n)) = v;
            G(static_cast<size_t>(n), static_cast<size_t>(m)) = v;
        }
    }
    return G;
}

} // namespace nula
