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

#include "nula/geometry.hpp"
#include "nula/matrix.hpp"

namespace nula {

// M x K matrix with columns 1, alpha, ..., alpha^(K-1). The raw overload
// accepts arbitrary real nodes (no [-1, 1] restriction, no ordering).
RMat vandermonde_matrix(const std::vector<double> &alphas, int K);
RMat vandermonde_matrix(const ArrayLayout &layout, int K);

struct QrFactors {
    RMat q; // M x K, orthonormal columns
    RMat r; // K x K, upper triangular, non-negative diagonal
};

// Householder QR of the Vandermonde matrix. Throws std::domain_error when a
// diagonal of R falls below 1e-12 * sqrt(M) (repeated positions make the
// matrix rank-deficient).
QrFactors qr_full(const ArrayLayout &layout, int K);

struct QrDiagonals {
    std::vector<double> r;              // r_1 .. r_K
    std::vector<double> source_alphas;  // layout the values came from
};

// The diagonal of R without forming the factorization: r_1 = sqrt(M) and
// r_k^2 = S_k / S_(k-1), where S_j sums the squared Vandermonde minors over
// all j-subsets. Enumerates subsets for M <= 20 and falls back to Householder
// QR (with sub-threshold diagonals clamped to zero) for larger layouts.
QrDiagonals r_diagonals_closed_form(const ArrayLayout &layout, int K);

enum class FmkMethod { enumerate, determinant };

// f_(M,K) = sum over K-subsets of the squared Vandermonde determinant,
// equivalently det(V^T V). The enumeration path refuses more than 1e7
// subsets; the determinant path runs LU with partial pivoting. The raw
// overload places no order or range constraint on the nodes.
double f_MK(const std::vector<double> &alphas, int K, FmkMethod method);
double f_MK(const ArrayLayout &layout, int K, FmkMethod method);

struct AsymptoticEigenvalue {
    double value = 0.0;
    bool rank_limited = false; // m exceeds the layout rank, value forced to 0
};

// Small-tau approximation mu^(m) ~ (r_m^(r) r_m^(t) / (m-1)!)^2 tau^(2(m-1)).
AsymptoticEigenvalue asymptotic_eigenvalue(int m, double tau,
                                           const ArrayLayout &layout_r,
                                           const ArrayLayout &layout_t);

// Least-squares slope of ln mu^(m) against ln tau for each m, using only
// grid points where mu^(m) is positive and reliable; NaN when fewer than two
// such points exist. The m-th slope approaches 2(m-1) as tau -> 0.
std::vector<double> verify_asymptotic_slopes(const ArrayLayout &layout_r,
                                           const ArrayLayout &layout_t,
                                           const std::vector<double> &tau_grid);

struct AlignmentReport {
    std::vector<double> overlap;  // per m: norm of the projection of q_m
                                  // onto the eigenvector cluster of mu^(m)
    std::vector<int> cluster_id;  // degenerate eigenvalues share an id
};

// Checks the small-tau convergence of the Gram eigenvectors towards the
// receive-side QR basis. Eigenvalues are grouped into clusters (relative gap
// below 1e-3, or jointly under the reliability floor) and each overlap is
// measured against the cluster subspace, which keeps the check meaningful for
// degenerate spectra (symmetric layouts pair up eigenvalues).
AlignmentReport verify_eigenvector_alignment(const ArrayLayout &layout_r,
                                          const ArrayLayout &layout_t, double tau);

} // namespace nula
