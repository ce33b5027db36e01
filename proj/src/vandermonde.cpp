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

#include "nula/vandermonde.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nula/channel.hpp"
#include "nula/eig.hpp"

namespace nula {

namespace {

constexpr double kRankRel = 1e-12;

RMat householder_qr(const RMat &v, RMat &r_out) {
    const std::size_t M = v.rows(), K = v.cols();
    RMat r = v;
    std::vector<std::vector<double>> reflectors;
    reflectors.reserve(K);

    for (std::size_t k = 0; k < K && k < M; ++k) {
        double nx = 0.0;
        for (std::size_t i = k; i < M; ++i)
            nx += r(i, k) * r(i, k);
        nx = std::sqrt(nx);
        std::vector<double> w(M - k, 0.0);
        if (nx > 0.0) {
            const double alpha = r(k, k) >= 0.0 ? -nx : nx;
            for (std::size_t i = k; i < M; ++i)
                w[i - k] = r(i, k);
            w[0] -= alpha;
            double nw = 0.0;
            for (double x : w)
                nw += x * x;
            nw = std::sqrt(nw);
            if (nw > 0.0) {
                for (double &x : w)
                    x /= nw;
                for (std::size_t j = k; j < K; ++j) {
                    double dot = 0.0;
                    for (std::size_t i = k; i < M; ++i)
                        dot += w[i - k] * r(i, j);
                    for (std::size_t i = k; i < M; ++i)
                        r(i, j) -= 2.0 * dot * w[i - k];
                }
            }
        }
        reflectors.push_back(std::move(w));
    }

    // Economy Q: apply the reflectors in reverse to the first K identity
    // columns.
    RMat q(M, K);
    for (std::size_t j = 0; j < K; ++j) {
        std::vector<double> e(M, 0.0);
        if (j < M)
            e[j] = 1.0;
        for (std::size_t kk = reflectors.size(); kk-- > 0;) {
            const auto &w = reflectors[kk];
            double dot = 0.0;
            for (std::size_t i = kk; i < M; ++i)
                dot += w[i - kk] * e[i];
            for (std::size_t i = kk; i < M; ++i)
                e[i] -= 2.0 * dot * w[i - kk];
        }
        for (std::size_t i = 0; i < M; ++i)
            q(i, j) = e[i];
    }

    // Fix signs so the diagonal of R is non-negative.
    for (std::size_t k = 0; k < K && k < M; ++k) {
        if (r(k, k) < 0.0) {
            for (std::size_t j = 0; j < K; ++j)
                r(k, j) = -r(k, j);
            for (std::size_t i = 0; i < M; ++i)
                q(i, k) = -q(i, k);
        }
    }
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < (i < M ? i : M); ++j)
            r(i, j) = 0.0;

    r_out = RMat(K, K);
    for (std::size_t i = 0; i < K && i < M; ++i)
        for (std::size_t j = 0; j < K; ++j)
            r_out(i, j) = r(i, j);
    return q;
}

double binomial_count(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

// Kahan-compensated sum over all K-subsets of the squared Vandermonde
// determinant. Subsets walk in lexicographic order.
double sum_squared_minors(const std::vector<double> &a, int K) {
    const int M = static_cast<int>(a.size());
    if (K > M)
        return 0.0;
    if (K == 0)
        return 1.0;
    std::vector<int> idx(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    double sum = 0.0, comp = 0.0;
    while (true) {
        double prod = 1.0;
        for (int i = 0; i < K && prod != 0.0; ++i)
            for (int j = i + 1; j < K; ++j) {
                const double d = a[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] -
                                 a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                prod *= d * d;
            }
        const double y = prod - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        int pos = K - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == M - K + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < K; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return sum;
}

double lu_determinant(RMat a) {
    const std::size_t n = a.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k)))
                piv = i;
        if (a(piv, k) == 0.0)
            return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

} // namespace

RMat vandermonde_matrix(const std::vector<double> &alphas, int K) {
    if (K < 1)
        throw std::invalid_argument("vandermonde_matrix: K must be >= 1");
    const std::size_t M = alphas.size();
    RMat v(M, static_cast<std::size_t>(K));
    for (std::size_t i = 0; i < M; ++i) {
        double p = 1.0;
        for (int j = 0; j < K; ++j) {
            v(i, static_cast<std::size_t>(j)) = p;
            p *= alphas[i];
        }
    }
    return v;
}

RMat vandermonde_matrix(const ArrayLayout &layout, int K) {
    return vandermonde_matrix(layout.alphas(), K);
}

QrFactors qr_full(const ArrayLayout &layout, int K) {
    if (K < 1 || K > layout.size())
        throw std::invalid_argument("qr_full: K must lie in [1, M]");
    const RMat v = vandermonde_matrix(layout, K);
    QrFactors f;
    f.q = householder_qr(v, f.r);
    const double thresh = kRankRel * std::sqrt(static_cast<double>(layout.size()));
    for (int k = 0; k < K; ++k)
        if (f.r(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) < thresh)
            throw std::domain_error(
                "qr_full: vandermonde matrix is rank-deficient (repeated positions?)");
    return f;
}

QrDiagonals r_diagonals_closed_form(const ArrayLayout &layout, int K) {
    const int M = layout.size();
    if (K < 1 || K > M)
        throw std::invalid_argument("r_diagonals_closed_form: K must lie in [1, M]");
    QrDiagonals out;
    out.source_alphas = layout.alphas();
    out.r.assign(static_cast<std::size_t>(K), 0.0);

    if (M <= 20) {
        double prev = 1.0; // S_0
        bool dead = false;
        for (int k = 1; k <= K; ++k) {
            if (dead)
                break;
            const double sk = sum_squared_minors(layout.alphas(), k);
            if (sk <= 0.0 || prev <= 0.0) {
                dead = true;
                break;
            }
            out.r[static_cast<std::size_t>(k - 1)] = std::sqrt(sk / prev);
            prev = sk;
        }
        return out;
    }

    const RMat v = vandermonde_matrix(layout, K);
    RMat r;
    householder_qr(v, r);
    const double thresh = kRankRel * std::sqrt(static_cast<double>(M));
    for (int k = 0; k < K; ++k) {
        const double d = r(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        out.r[static_cast<std::size_t>(k)] = d < thresh ? 0.0 : d;
    }
    return out;
}

double f_MK(const std::vector<double> &alphas, int K, FmkMethod method) {
    if (K < 1)
        throw std::invalid_argument("f_MK: K must be >= 1");
    const int M = static_cast<int>(alphas.size());
    if (method == FmkMethod::enumerate) {
        if (K > M)
            return 0.0;
        if (binomial_count(M, K) > 1e7)
            throw std::invalid_argument(
                "f_MK: subset count exceeds the 1e7 enumeration budget");
        return sum_squared_minors(alphas, K);
    }
    const RMat v = vandermonde_matrix(alphas, K);
    const RMat g = transpose(v) * v;
    return lu_determinant(g);
}

double f_MK(const ArrayLayout &layout, int K, FmkMethod method) {
    return f_MK(layout.alphas(), K, method);
}

AsymptoticEigenvalue asymptotic_eigenvalue(int m, double tau,
                                           const ArrayLayout &layout_r,
                                           const ArrayLayout &layout_t) {
    const int nmax = std::min(layout_r.size(), layout_t.size());
    if (m < 1 || m > nmax)
        throw std::invalid_argument("asymptotic_eigenvalue: m must lie in [1, min(M, N)]");
    if (!(tau > 0.0))
        throw std::domain_error("asymptotic_eigenvalue: tau must be positive");

    const double rr = r_diagonals_closed_form(layout_r, m).r[static_cast<std::size_t>(m - 1)];
    const double rt = r_diagonals_closed_form(layout_t, m).r[static_cast<std::size_t>(m - 1)];
    if (rr == 0.0 || rt == 0.0)
        return {0.0, true};

    if (m <= 15) {
        const double fact = std::tgamma(static_cast<double>(m)); // (m-1)!
        const double base = rr * rt / fact;
        return {base * base * std::pow(tau, 2.0 * (m - 1)), false};
    }
    const double lg = 2.0 * (std::log(rr) + std::log(rt) -
                             std::lgamma(static_cast<double>(m))) +
                      2.0 * static_cast<double>(m - 1) * std::log(tau);
    return {std::exp(lg), false};
}

std::vector<double> verify_asymptotic_slopes(const ArrayLayout &layout_r,
                                           const ArrayLayout &layout_t,
                                           const std::vector<double> &tau_grid) {
    const int nmax = std::min(layout_r.size(), layout_t.size());
    std::vector<std::vector<double>> lx(static_cast<std::size_t>(nmax)),
        ly(static_cast<std::size_t>(nmax));
    for (double tau : tau_grid) {
        if (!(tau > 0.0) || tau > 0.2)
            throw std::invalid_argument(
                "verify_asymptotic_slopes: grid must lie in (0, 0.2] (small-tau regime)");
        const Spectrum spec = layout_spectrum(layout_r, layout_t, tau);
        const double mu1 = spec.values[0];
        for (int m = 0; m < nmax; ++m) {
            const double mu = spec.values[static_cast<std::size_t>(m)];
            if (mu > 0.0 && mu1 > 0.0 && mu >= 1e-13 * mu1) {
                lx[static_cast<std::size_t>(m)].push_back(std::log(tau));
                ly[static_cast<std::size_t>(m)].push_back(std::log(mu));
            }
        }
    }
    std::vector<double> slopes(static_cast<std::size_t>(nmax),
                               std::numeric_limits<double>::quiet_NaN());
    for (int m = 0; m < nmax; ++m) {
        const auto &xs = lx[static_cast<std::size_t>(m)];
        const auto &ys = ly[static_cast<std::size_t>(m)];
        const std::size_t n = xs.size();
        if (n < 2)
            continue;
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        if (sxx > 0.0)
            slopes[static_cast<std::size_t>(m)] = sxy / sxx;
    }
    return slopes;
}

AlignmentReport verify_eigenvector_alignment(const ArrayLayout &layout_r,
                                          const ArrayLayout &layout_t, double tau) {
    const int M = layout_r.size();
    const int nmax = std::min(M, layout_t.size());
    const Spectrum spec =
        eigenvalues_desc(gram(build_hhat(layout_r, layout_t, tau)), true);
    const QrFactors qr = qr_full(layout_r, nmax);

    // Cluster consecutive eigenvalues whose relative gap is small or that sit
    // jointly below the reliability floor.
    const double mu1 = spec.values[0];
    std::vector<int> cluster(static_cast<std::size_t>(M), 0);
    int cid = 0;
    for (int i = 1; i < M; ++i) {
        const double prev = spec.values[static_cast<std::size_t>(i - 1)];
        const double cur = spec.values[static_cast<std::size_t>(i)];
        const bool both_floor = prev < 1e-13 * mu1 && cur < 1e-13 * mu1;
        const bool close = prev - cur <= 1e-3 * prev;
        if (!(both_floor || close))
            ++cid;
        cluster[static_cast<std::size_t>(i)] = cid;
    }

    AlignmentReport rep;
    rep.overlap.assign(static_cast<std::size_t>(nmax), 0.0);
    rep.cluster_id.assign(cluster.begin(),
                          cluster.begin() + static_cast<std::ptrdiff_t>(nmax));
    const CMat &U = *spec.vectors;
    for (int m = 0; m < nmax; ++m) {
        double acc = 0.0;
        for (int c = 0; c < M; ++c) {
            if (cluster[static_cast<std::size_t>(c)] != cluster[static_cast<std::size_t>(m)])
                continue;
            std::complex<double> dot{0.0, 0.0};
            for (int i = 0; i < M; ++i)
                dot += std::conj(U(static_cast<std::size_t>(i), static_cast<std::size_t>(c))) *
                       qr.q(static_cast<std::size_t>(i), static_cast<std::size_t>(m));
            acc += std::norm(dot);
        }
        rep.overlap[static_cast<std::size_t>(m)] = std::sqrt(acc);
    }
    return rep;
}

} // namespace nula
