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

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Physical parameters of a point-to-point link. Apertures are the full
// lengths of the two linear arrays; angles are in radians. theta_* are the
// tilts of the array axes against the boresight normal plane, phi_r rotates
// the receive array around boresight (the transmit array fixes the x-axis).
struct LinkGeometry {
    double wavelength = 0.005; // carrier wavelength [m]
    double distance = 100.0;   // link range D [m]
    double aperture_t = 1.0;   // transmit aperture L_t [m]
    double aperture_r = 1.0;   // receive aperture L_r [m]
    double theta_t = 0.0;
    double theta_r = 0.0;
    double phi_r = 0.0;

    // Throws std::invalid_argument on non-finite fields, non-positive
    // wavelength/distance, or negative apertures. Angles are unrestricted.
    void validate() const;

    // True when the range dominates both apertures:
    // distance / max(L_t, L_r) >= ratio.
    bool is_far_field(double ratio) const;
};

// Normalized antenna positions alpha_1 <= ... <= alpha_M on [-1, 1].
// Values within 1e-12 outside the interval are clamped; anything further out
// or out of order throws std::invalid_argument.
class ArrayLayout {
  public:
    explicit ArrayLayout(std::vector<double> alphas);

    const std::vector<double> &alphas() const { return alphas_; }
    int size() const { return static_cast<int>(alphas_.size()); }
    double operator[](int i) const { return alphas_[static_cast<size_t>(i)]; }

  private:
    std::vector<double> alphas_;
};

// Uniform layout alpha_m = (2m - M - 1)/(M - 1). Requires M >= 2.
ArrayLayout ula_layout(int M);

// tau = pi * L_r * L_t * cos(theta_r) * cos(theta_t) / (2 * lambda * D).
// Signed: tilts past pi/2 flip the sign, and the spectrum of hhat depends on
// |tau| only (hhat(-tau) is the entrywise conjugate of hhat(tau)).
double compute_tau(const LinkGeometry &geom);

// Rayleigh distance for an M x N link with uniform arrays:
// D_ray = max(M, N) * L_r * L_t / (lambda * (M-1) * (N-1)). Requires M, N >= 2.
double rayleigh_distance(int M, int N, const LinkGeometry &geom);

// Invert tau <-> D for a broadside link (theta_t = theta_r = 0), keeping all
// other fields of geom fixed. Non-positive tau or D throws std::domain_error.
double tau_to_distance(double tau, const LinkGeometry &geom);
double distance_to_tau(double distance, const LinkGeometry &geom);

// As tau_to_distance but honouring geom's tilt angles. Throws
// std::domain_error when either cos(theta) vanishes.
double tau_to_distance_oriented(double tau, const LinkGeometry &geom);

enum class Side { transmit, receive };

// Cartesian coordinates of each element. The transmit array passes through
// the origin; the receive array passes through (0, 0, D). With
// absolute = false the receive coordinates are relative to the array centre.
std::vector<Point3> antenna_coordinates(const ArrayLayout &layout,
                                        const LinkGeometry &geom, Side side,
                                        bool absolute = false);

// Exact Euclidean distance between receive element m and transmit element n
// (0-based).
double exact_distance(int m, int n, const ArrayLayout &layout_r,
                      const ArrayLayout &layout_t, const LinkGeometry &geom);

// Second-order far-field expansion of the same distance: D plus the axial
// offsets, the quadratic broadening terms and the bilinear coupling term.
double far_field_distance(int m, int n, const ArrayLayout &layout_r,
                          const ArrayLayout &layout_t,
                          const LinkGeometry &geom);

} // namespace nula
