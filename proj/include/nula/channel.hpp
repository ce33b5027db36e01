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

#include <complex>
#include <optional>
#include <vector>

#include "nula/geometry.hpp"
#include "nula/matrix.hpp"

namespace nula {

enum class ChannelKind { hhat, full_farfield, full_exact };

struct ChannelMatrix {
    CMat entries;
    ChannelKind kind = ChannelKind::hhat;
    double tau = 0.0; // coupling parameter the matrix was built with
};

// Normalized LoS channel: hhat(m, n) = exp(j tau alpha_r[m] alpha_t[n]).
ChannelMatrix build_hhat(const ArrayLayout &layout_r, const ArrayLayout &layout_t,
                         double tau);

enum class ChannelMode { farfield, exact };

// Full M x N channel including path loss and the spherical-wave phases.
// farfield uses the second-order distance expansion and factors into
// Phi_r * Hhat * Phi_t; exact evaluates every element distance. rho defaults
// to 4 pi D / (lambda M N) which normalizes the squared Frobenius norm to MN
// in the far field.
ChannelMatrix build_full_channel(const LinkGeometry &geom,
                                 const ArrayLayout &layout_t,
                                 const ArrayLayout &layout_r, ChannelMode mode,
                                 std::optional<std::complex<double>> rho = {});

std::complex<double> default_rho(const LinkGeometry &geom, int M, int N);

// Diagonals of the receive/transmit phase matrices in the far-field
// factorization.
std::vector<std::complex<double>> phi_r_diagonal(const ArrayLayout &layout_r,
                                                 const LinkGeometry &geom);
std::vector<std::complex<double>> phi_t_diagonal(const ArrayLayout &layout_t,
                                                 const LinkGeometry &geom);

// Closed-form Gram matrix of an M x N uniform-by-uniform link (Dirichlet
// kernel): G(m, n) = sin(2 tau N (m-n) / ((M-1)(N-1))) /
// sin(2 tau (m-n) / ((M-1)(N-1))), with N on the diagonal and the signed
// limit value where the denominator argument hits a multiple of pi.
// Requires 2 <= M <= N.
RMat ula_gram(int M, int N, double tau);

} // namespace nula
