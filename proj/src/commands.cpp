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

#include "nula/commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "nula/capacity.hpp"
#include "nula/errors.hpp"
#include "nula/fekete.hpp"
#include "nula/pat.hpp"
#include "nula/version.hpp"

namespace nula {

namespace {

class WallClock {
  public:
    explicit WallClock(ResultTable &table) : table_(table) {}
    ~WallClock() {
        auto dt = std::chrono::steady_clock::now() - start_;
        table_.wall_clock_ms =
            std::chrono::duration<double, std::milli>(dt).count();
    }

  private:
    ResultTable &table_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ResultTable make_table(std::vector<std::string> columns, const std::string &hash = {}) {
    ResultTable t;
    t.columns = std::move(columns);
    t.tool_version = kVersion;
    t.scenario_hash = hash;
    return t;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

Cell distance_cell(double tau, const LinkGeometry &geom) {
    try {
        double d = tau_to_distance_oriented(tau, geom);
        if (std::isfinite(d) && d > 0.0)
            return d;
    } catch (const std::domain_error &) {
    }
    return std::monostate{};
}

} // namespace

std::string format_table(const ResultTable &table, OutputFormat format) {
    return format == OutputFormat::csv ? table.to_csv() : table.to_json();
}

ResultTable cmd_fekete(int K) {
    auto table = make_table({"K", "k", "point", "objective", "certificate_max"});
    WallClock clock(table);
    FeketeSolution sol = fekete_points(K);
    double cert = fekete_certificate(sol.points);
    for (int k = 1; k <= K; ++k)
        table.add_row({static_cast<std::int64_t>(K), static_cast<std::int64_t>(k),
                       sol.points[static_cast<std::size_t>(k - 1)], sol.objective, cert});
    return table;
}

ResultTable cmd_pat_fit(int k_lo, int k_hi) {
    if (k_lo > k_hi)
        throw std::invalid_argument("cmd_pat_fit: empty K range");
    auto table = make_table({"K", "theta", "residual", "degenerate"});
    WallClock clock(table);
    for (int K = k_lo; K <= k_hi; ++K) {
        FeketeSolution sol = fekete_points(K);
        ThetaFit fit = fit_theta(K, sol);
        table.add_row({static_cast<std::int64_t>(K), fit.theta, fit.residual,
                       static_cast<std::int64_t>(fit.degenerate ? 1 : 0)});
    }
    return table;
}

ResultTable cmd_taumin(const Scenario &scenario, std::optional<int> K,
                       std::optional<double> gamma_db, const TauSearchConfig &cfg) {
    auto table = make_table({"K", "gamma_db", "tau_min", "ratio_at_tau", "bracket_lo",
                             "bracket_hi", "distance_m"},
                            scenario.hash_hex);
    WallClock clock(table);
    int k = K.value_or(scenario.analysis.K);
    double gdb = gamma_db.value_or(scenario.analysis.gamma_db);
    auto hit = tau_min_search(scenario.transmit.layout, scenario.receive.layout, k,
                              db_to_linear(gdb), cfg);
    if (!hit) {
        std::ostringstream msg;
        msg << "multiplexing gain " << k << " at " << gdb
            << " dB is not reached for tau in (0, " << cfg.tau_max << "]";
        throw NotAchievableError(msg.str());
    }
    table.add_row({static_cast<std::int64_t>(hit->K), gdb, hit->tau_min,
                   hit->ratio_at_tau, hit->bracket_lo, hit->bracket_hi,
                   distance_cell(hit->tau_min, scenario.geometry)});
    return table;
}

namespace {

ResultTable sweep_ratio(const Scenario &sc, const SweepOptions &opt) {
    auto table = make_table({"tau", "ratio"}, sc.hash_hex);
    WallClock clock(table);
    if (!(opt.tau_step > 0.0) || !(opt.tau_lo > 0.0) || opt.tau_hi < opt.tau_lo)
        throw std::invalid_argument("sweep: tau grid must satisfy 0 < lo <= hi, step > 0");
    std::vector<double> grid;
    auto n = static_cast<long>(std::floor((opt.tau_hi - opt.tau_lo) / opt.tau_step + 1e-9));
    for (long i = 0; i <= n; ++i)
        grid.push_back(opt.tau_lo + static_cast<double>(i) * opt.tau_step);
    auto rows = ratio_sweep(sc.transmit.layout, sc.receive.layout, sc.analysis.K, grid,
                            opt.threads);
    for (const auto &r : rows)
        table.add_row({r.tau, r.ratio});
    return table;
}

ResultTable sweep_capacity(const Scenario &sc, const SweepOptions &opt) {
    auto table = make_table({"snr_db", "scheme", "bits_per_s_per_hz"}, sc.hash_hex);
    WallClock clock(table);
    double tau = sc.tau();
    std::vector<double> snr_linear;
    snr_linear.reserve(sc.analysis.snr_grid_db.size());
    for (double db : sc.analysis.snr_grid_db)
        snr_linear.push_back(db_to_linear(db));
    std::vector<SchemeSpec> schemes = {{true, 0}, {false, sc.analysis.K}};
    auto points = capacity_sweep(sc.transmit.layout, sc.receive.layout, tau, snr_linear,
                                 schemes, opt.threads);
    std::size_t i = 0;
    for (const auto &p : points) {
        double snr_db = sc.analysis.snr_grid_db[i / schemes.size()];
        table.add_row({snr_db, p.scheme_name(), p.bits_per_s_per_hz});
        ++i;
    }
    return table;
}

ResultTable sweep_theta(const Scenario &sc, const SweepOptions &opt) {
    auto table = make_table({"theta", "tau_min", "label"}, sc.hash_hex);
    WallClock clock(table);
    int M = sc.receive.layout.size();
    int N = sc.transmit.layout.size();
    int K = sc.analysis.K;
    double gamma = db_to_linear(sc.analysis.gamma_db);
    const TauSearchConfig &cfg = opt.search;

    auto tau_min_at = [&](double theta) -> std::optional<double> {
        auto dep_r = groupwise_deploy(M, K, pat_points(K, theta), 0.0);
        auto dep_t = groupwise_deploy(N, K, pat_points(K, theta), 0.0);
        auto hit = tau_min_search(dep_t.alphas, dep_r.alphas, K, gamma, cfg);
        if (!hit)
            return std::nullopt;
        return hit->tau_min;
    };

    auto grid = default_theta_grid();
    for (double theta : grid) {
        auto t = tau_min_at(theta);
        table.add_row({theta, t ? Cell(*t) : Cell(std::monostate{}), std::string()});
    }

    auto best = optimize_theta_for_taumin(M, N, K, gamma, grid, cfg, opt.threads);
    if (best)
        table.add_row({best->theta_star, best->tau_min_at_star, std::string("theta_star")});
    else
        table.add_row({std::monostate{}, std::monostate{}, std::string("theta_star")});

    ThetaFit fit = fit_theta(K, fekete_points(K));
    auto at_fit = tau_min_at(fit.theta);
    table.add_row({fit.theta, at_fit ? Cell(*at_fit) : Cell(std::monostate{}),
                   std::string("theta_K")});
    return table;
}

} // namespace

ResultTable cmd_sweep(const Scenario &scenario, const SweepOptions &options) {
    switch (options.kind) {
    case SweepKind::ratio:
        return sweep_ratio(scenario, options);
    case SweepKind::capacity:
        return sweep_capacity(scenario, options);
    case SweepKind::theta:
        return sweep_theta(scenario, options);
    }
    throw std::invalid_argument("cmd_sweep: unknown sweep kind");
}

ResultTable cmd_analyze(const Scenario &scenario) {
    auto table = make_table({"quantity", "k", "value"}, scenario.hash_hex);
    WallClock clock(table);
    const auto &geom = scenario.geometry;
    const ArrayLayout &rx = scenario.receive.layout;
    const ArrayLayout &tx = scenario.transmit.layout;
    double tau = scenario.tau();

    table.add_row({std::string("tau"), std::monostate{}, tau});
    table.add_row({std::string("distance_m"), std::monostate{}, geom.distance});
    if (rx.size() >= 2 && tx.size() >= 2)
        table.add_row({std::string("rayleigh_distance_m"), std::monostate{},
                       rayleigh_distance(rx.size(), tx.size(), geom)});

    Spectrum spec = layout_spectrum(rx, tx, tau);
    double gamma = db_to_linear(scenario.analysis.gamma_db);
    table.add_row({std::string("emg"), std::monostate{},
                   static_cast<std::int64_t>(emg(spec, gamma))});

    double total = 0.0;
    for (double v : spec.values)
        total += v;
    for (std::size_t m = 0; m < spec.values.size(); ++m)
        table.add_row({std::string("eigenvalue"), static_cast<std::int64_t>(m + 1),
                       spec.values[m]});
    for (std::size_t m = 0; m < spec.values.size(); ++m)
        table.add_row({std::string("eigenvalue_normalized"),
                       static_cast<std::int64_t>(m + 1), spec.values[m] / total});

    Spectrum unit = normalize_spectrum(spec);
    int positive = 0;
    for (double v : unit.values)
        positive += v > 0.0 ? 1 : 0;
    int streams = std::min(scenario.analysis.K, std::max(positive, 1));
    for (double snr_db : scenario.analysis.snr_grid_db) {
        double snr = db_to_linear(snr_db);
        table.add_row({std::string("capacity_equal_power"), snr_db,
                       capacity_equal_power(unit, snr, streams)});
        table.add_row({std::string("capacity_waterfilling"), snr_db,
                       capacity_waterfilling(unit, snr)});
    }
    return table;
}

} // namespace nula
