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

#include "nula/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nula {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kClampTol = 1e-12;
} // namespace

void LinkGeometry::validate() const {
    if (!std::isfinite(wavelength) || !(wavelength > 0.0))
        throw std::invalid_argument("geometry: wavelength must be positive");
    if (!std::isfinite(distance) || !(distance > 0.0))
        throw std::invalid_argument("geometry: distance must be positive");
    if (!std::isfinite(aperture_t) || aperture_t < 0.0 || !std::isfinite(aperture_r) ||
        aperture_r < 0.0)
        throw std::invalid_argument("geometry: apertures must be >= 0");
    if (!std::isfinite(theta_t) || !std::isfinite(theta_r) || !std::isfinite(phi_r))
        throw std::invalid_argument("geometry: angles must be finite");
}

bool LinkGeometry::is_far_field(double ratio) const {
    return distance / std::max(aperture_t, aperture_r) >= ratio;
}

ArrayLayout::ArrayLayout(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty())
        throw std::invalid_argument("layout: needs at least one element");
    for (size_t i = 0; i < alphas_.size(); ++i) {
        double &a = alphas_[i];
        if (!std::isfinite(a))
            throw std::invalid_argument("layout: positions must be finite");
        if (a < -1.0 - kClampTol || a > 1.0 + kClampTol)
            throw std::invalid_argument(
                "layout: position " + std::to_string(a) + " outside [-1, 1]");
        a = std::clamp(a, -1.0, 1.0);
        if (i > 0 && a < alphas_[i - 1])
            throw std::invalid_argument("layout: positions must be non-decreasing");
    }
}

ArrayLayout ula_layout(int M) {
    if (M < 2)
        throw std::invalid_argument("ula_layout: M must be >= 2");
    std::vector<double> a(static_cast<size_t>(M));
    for (int m = 1; m <= M; ++m)
        a[static_cast<size_t>(m - 1)] =
            static_cast<double>(2 * m - M - 1) / static_cast<double>(M - 1);
    return ArrayLayout(std::move(a));
}

double compute_tau(const LinkGeometry &geom) {
    geom.validate();
    return kPi * geom.aperture_r * geom.aperture_t * std::cos(geom.theta_r) *
           std::cos(geom.theta_t) / (2.0 * geom.wavelength * geom.distance);
}

double rayleigh_distance(int M, int N, const LinkGeometry &geom) {
    geom.validate();
    if (M < 2 || N < 2)
        throw std::invalid_argument("rayleigh_distance: M and N must be >= 2");
    return static_cast<double>(std::max(M, N)) * geom.aperture_r * geom.aperture_t /
           (geom.wavelength * static_cast<double>(M - 1) * static_cast<double>(N - 1));
}

double tau_to_distance(double tau, const LinkGeometry &geom) {
    if (!(tau > 0.0))
        throw std::domain_error("tau_to_distance: tau must be positive");
    return kPi * geom.aperture_r * geom.aperture_t / (2.0 * geom.wavelength * tau);
}

double distance_to_tau(double distance, const LinkGeometry &geom) {
    if (!(distance > 0.0))
        throw std::domain_error("distance_to_tau: distance must be positive");
    return kPi * geom.aperture_r * geom.aperture_t / (2.0 * geom.wavelength * distance);
}

double tau_to_distance_oriented(double tau, const LinkGeometry &geom) {
    if (!(tau > 0.0))
        throw std::domain_error("tau_to_distance_oriented: tau must be positive");
    const double c = std::cos(geom.theta_r) * std::cos(geom.theta_t);
    if (std::abs(c) < 1e-15)
        throw std::domain_error(
            "tau_to_distance_oriented: array is parallel to boresight");
    return kPi * geom.aperture_r * geom.aperture_t * c / (2.0 * geom.wavelength * tau);
}

std::vector<Point3> antenna_coordinates(const ArrayLayout &layout,
                                        const LinkGeometry &geom, Side side,
                                        bool absolute) {
    geom.validate();
    std::vector<Point3> pts(static_cast<size_t>(layout.size()));
    if (side == Side::transmit) {
        const double h = geom.aperture_t / 2.0;
        const double ct = std::cos(geom.theta_t), st = std::sin(geom.theta_t);
        for (int n = 0; n < layout.size(); ++n) {
            const double a = layout[n];
            pts[static_cast<size_t>(n)] = {h * a * ct, 0.0, h * a * st};
        }
    } else {
        const double h = geom.aperture_r / 2.0;
        const double cr = std::cos(geom.theta_r), sr = std::sin(geom.theta_r);
        const double cp = std::cos(geom.phi_r), sp = std::sin(geom.phi_r);
        const double z0 = absolute ? geom.distance : 0.0;
        for (int m = 0; m < layout.size(); ++m) {
            const double a = layout[m];
            pts[static_cast<size_t>(m)] = {h * a * cr, h * a * sr * sp,
                                           z0 + h * a * sr * cp};
        }
    }
    return pts;
}

double exact_distance(int m, int n, const ArrayLayout &layout_r,
                      const ArrayLayout &layout_t, const LinkGeometry &geom) {
    if (m < 0 || m >= layout_r.size() || n < 0 || n >= layout_t.size())
        throw std::out_of_range("exact_distance: element index out of range");
    const auto rx = antenna_coordinates(layout_r, geom, Side::receive, true);
    const auto tx = antenna_coordinates(layout_t, geom, Side::transmit, false);
    const Point3 &p = rx[static_cast<size_t>(m)];
    const Point3 &q = tx[static_cast<size_t>(n)];
    return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

double far_field_distance(int m, int n, const ArrayLayout &layout_r,
                          const ArrayLayout &layout_t, const LinkGeometry &geom) {
    if (m < 0 || m >= layout_r.size() || n < 0 || n >= layout_t.size())
        throw std::out_of_range("far_field_distance: element index out of range");
    geom.validate();
    const double D = geom.distance;
    const auto rx = antenna_coordinates(layout_r, geom, Side::receive, false);
    const auto tx = antenna_coordinates(layout_t, geom, Side::transmit, false);
    const Point3 &p = rx[static_cast<size_t>(m)];
    const Point3 &q = tx[static_cast<size_t>(n)];
    const double coupling = geom.aperture_r * geom.aperture_t * std::cos(geom.theta_r) *
                            std::cos(geom.theta_t) / (4.0 * D) * layout_r[m] *
                            layout_t[n];
    return D + p.z + (p.x * p.x + p.y * p.y) / (2.0 * D) - q.z +
           (q.x * q.x + q.y * q.y) / (2.0 * D) - coupling;
}

} // namespace nula
