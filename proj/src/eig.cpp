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

#include "nula/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nula/errors.hpp"

namespace nula {

namespace {

using cd = std::complex<double>;

constexpr double kReliableRel = 1e-13;
constexpr double kGammaFloor = 1e-12;

double offdiag_norm(const CMat &a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi sweep over the strict upper triangle of a, accumulating
// the rotations into v when it is non-null.
void jacobi_sweep(CMat &a, CMat *v) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cd g = a(p, q);
            const double m = std::abs(g);
            if (m == 0.0)
                continue;
            const double phi = std::arg(g);
            const double av = a(p, p).real();
            const double bv = a(q, q).real();
            const double that = (bv - av) / (2.0 * m);
            if (!std::isfinite(that))
                continue;
            const double sg = that >= 0.0 ? 1.0 : -1.0;
            const double t = sg / (std::abs(that) + std::sqrt(1.0 + that * that));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cd eip = std::polar(1.0, phi);
            const cd ein = std::conj(eip);

            for (std::size_t j = 0; j < n; ++j) {
                const cd rp = a(p, j), rq = a(q, j);
                a(p, j) = c * rp - s * eip * rq;
                a(q, j) = s * rp + c * eip * rq;
            }
            for (std::size_t i = 0; i < n; ++i) {
                const cd cp = a(i, p), cq = a(i, q);
                a(i, p) = c * cp - s * ein * cq;
                a(i, q) = s * cp + c * ein * cq;
            }
            if (v) {
                for (std::size_t i = 0; i < n; ++i) {
                    const cd vp = (*v)(i, p), vq = (*v)(i, q);
                    (*v)(i, p) = c * vp - s * ein * vq;
                    (*v)(i, q) = s * vp + c * ein * vq;
                }
            }
        }
    }
}

struct DistinctLayout {
    std::vector<double> values;
    std::vector<double> weights;
};

DistinctLayout collapse(const ArrayLayout &layout) {
    DistinctLayout d;
    const auto &a = layout.alphas();
    for (double x : a) {
        if (!d.values.empty() && x == d.values.back()) {
            d.weights.back() += 1.0;
        } else {
            d.values.push_back(x);
            d.weights.push_back(1.0);
        }
    }
    return d;
}

} // namespace

CMat gram(const ChannelMatrix &channel) { return gram(channel.entries); }

CMat gram(const CMat &h) {
    const std::size_t M = h.rows(), N = h.cols();
    CMat g(M, M);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t k = i; k < M; ++k) {
            cd s{0.0, 0.0};
            for (std::size_t n = 0; n < N; ++n)
                s += h(i, n) * std::conj(h(k, n));
            g(i, k) = s;
            g(k, i) = std::conj(s);
        }
    }
    return g;
}

Spectrum eigenvalues_desc(const CMat &g, bool with_vectors) {
    if (g.rows() != g.cols())
        throw std::invalid_argument("eigenvalues_desc: matrix must be square");
    const std::size_t n = g.rows();
    const double scale = g.frobenius_norm();
    const double herm_tol = 1e-12 * scale;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(g(i, j) - std::conj(g(j, i))) > herm_tol)
                throw std::invalid_argument("eigenvalues_desc: matrix is not Hermitian");

    CMat a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = {g(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cd v = 0.5 * (g(i, j) + std::conj(g(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    CMat vecs;
    CMat *vp = nullptr;
    if (with_vectors) {
        vecs = CMat::identity(n);
        vp = &vecs;
    }

    if (scale > 0.0) {
        const double target = 1e-14 * scale;
        bool converged = false;
        for (int sweep = 0; sweep < 100; ++sweep) {
            if (offdiag_norm(a) < target) {
                converged = true;
                break;
            }
            jacobi_sweep(a, vp);
        }
        if (!converged && offdiag_norm(a) >= target)
            throw ConvergenceError("eigenvalues_desc: jacobi iteration stalled");
    }

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = a(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return vals[x] > vals[y]; });

    Spectrum out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = vals[order[i]];
    if (with_vectors) {
        CMat sorted(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                sorted(i, j) = vecs(i, order[j]);
        out.vectors = std::move(sorted);
    }

    if (!out.values.empty() && out.values[0] > 0.0) {
        const double mu1 = out.values[0];
        for (double &v : out.values)
            if (v < 0.0 && v >= -1e-10 * mu1)
                v = 0.0;
        out.reliable_count = static_cast<std::size_t>(std::count_if(
            out.values.begin(), out.values.end(),
            [&](double v) { return v >= kReliableRel * mu1; }));
    }
    return out;
}

int emg(const Spectrum &spectrum, double gamma) {
    if (!(gamma >= kGammaFloor) || !(gamma <= 1.0))
        throw std::invalid_argument("emg: gamma must lie in [1e-12, 1]");
    if (spectrum.values.empty() || !(spectrum.values[0] > 0.0))
        throw std::invalid_argument("emg: leading eigenvalue must be positive");
    const double mu1 = spectrum.values[0];
    int k = 0;
    for (double v : spectrum.values)
        if (v / mu1 >= gamma)
            ++k;
    return k;
}

Spectrum layout_spectrum(const ArrayLayout &layout_r, const ArrayLayout &layout_t,
                         double tau) {
    const DistinctLayout dr = collapse(layout_r);
    const DistinctLayout dt = collapse(layout_t);
    const std::size_t P = dr.values.size(), Q = dt.values.size();

    // Nonzero spectrum of Hhat Hhat^H equals the spectrum of the weighted
    // channel between distinct positions: B(i,k) =
    // sqrt(w_i w_k) sum_n wt_n exp(j tau (u_i - u_k) v_n), i.e. B = C C^H
    // with C(i,n) = sqrt(w_i wt_n) exp(j tau u_i v_n).
    CMat c(P, Q);
    for (std::size_t i = 0; i < P; ++i) {
        const double swi = std::sqrt(dr.weights[i]);
        for (std::size_t nn = 0; nn < Q; ++nn)
            c(i, nn) = swi * std::sqrt(dt.weights[nn]) *
                       std::polar(1.0, tau * dr.values[i] * dt.values[nn]);
    }

    Spectrum spec = eigenvalues_desc(gram(c), false);
    spec.values.resize(static_cast<std::size_t>(layout_r.size()), 0.0);
    return spec;
}

std::optional<TauMinResult> tau_min_search(const ArrayLayout &layout_t,
                                           const ArrayLayout &layout_r, int K,
                                           double gamma, const TauSearchConfig &cfg) {
    if (K < 1 || K > std::min(layout_r.size(), layout_t.size()))
        throw std::invalid_argument("tau_min_search: K must lie in [1, min(M, N)]");
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw std::invalid_argument("tau_min_search: gamma must lie in (0, 1)");
    if (!(cfg.tau_max > 0.0) || !(cfg.step > 0.0))
        throw std::invalid_argument("tau_min_search: grid must be positive");

    const auto emg_at = [&](double tau) {
        return emg(layout_spectrum(layout_r, layout_t, tau), gamma);
    };

    const long long steps =
        static_cast<long long>(std::ceil(cfg.tau_max / cfg.step - 1e-9));
    double lo = 0.0, hi = 0.0;
    bool found = false;
    for (long long g = 1; g <= steps; ++g) {
        const double tau = std::min(static_cast<double>(g) * cfg.step, cfg.tau_max);
        if (emg_at(tau) >= K) {
            hi = tau;
            lo = static_cast<double>(g - 1) * cfg.step;
            found = true;
            break;
        }
    }
    if (!found)
        return std::nullopt;

    for (int it = 0; it < cfg.bisect_iters && hi - lo > cfg.tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (emg_at(mid) >= K)
            hi = mid;
        else
            lo = mid;
    }

    TauMinResult res;
    res.tau_min = hi;
    res.K = K;
    res.gamma = gamma;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    const Spectrum spec = layout_spectrum(layout_r, layout_t, hi);
    res.ratio_at_tau =
        (K <= static_cast<int>(spec.values.size()) && spec.values[0] > 0.0)
            ? spec.values[static_cast<std::size_t>(K - 1)] / spec.values[0]
            : 0.0;
    return res;
}

std::vector<RatioRow> ratio_sweep(const ArrayLayout &layout_t,
                                  const ArrayLayout &layout_r, int K,
                                  const std::vector<double> &tau_grid, int threads) {
    if (K < 1 || K > layout_r.size())
        throw std::invalid_argument("ratio_sweep: K must lie in [1, M]");
    std::vector<RatioRow> rows(tau_grid.size());
    const auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < tau_grid.size(); i += stride) {
            const Spectrum spec = layout_spectrum(layout_r, layout_t, tau_grid[i]);
            const double mu1 = spec.values.empty() ? 0.0 : spec.values[0];
            rows[i].tau = tau_grid[i];
            rows[i].ratio =
                mu1 > 0.0 ? spec.values[static_cast<std::size_t>(K - 1)] / mu1 : 0.0;
        }
    };
    const int T = std::max(1, threads);
    if (T == 1 || tau_grid.size() < 2) {
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
    return rows;
}

int max_achievable_emg(const ArrayLayout &layout_t, const ArrayLayout &layout_r,
                       double gamma, const TauSearchConfig &cfg) {
    const long long steps =
        static_cast<long long>(std::ceil(cfg.tau_max / cfg.step - 1e-9));
    int best = 0;
    for (long long g = 1; g <= steps; ++g) {
        const double tau = std::min(static_cast<double>(g) * cfg.step, cfg.tau_max);
        best = std::max(best, emg(layout_spectrum(layout_r, layout_t, tau), gamma));
    }
    return best;
}

} // namespace nula
