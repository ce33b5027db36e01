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
//
// Command-line front end. Exit codes: 0 success, 2 bad arguments or scenario,
// 3 requested gain not achievable, 4 numerical non-convergence, 1 anything
// unexpected.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nula/commands.hpp"
#include "nula/errors.hpp"
#include "nula/version.hpp"

namespace {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

GridSpec parse_grid(const std::string &text) {
    GridSpec g;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step, &trailing) != 3)
        throw CLI::ValidationError("--tau-grid", "expected lo:hi:step, got '" + text + "'");
    if (!(g.lo > 0.0) || !(g.hi >= g.lo) || !(g.step > 0.0))
        throw CLI::ValidationError("--tau-grid",
                                   "grid must satisfy 0 < lo <= hi with step > 0");
    return g;
}

int emit(const nula::ResultTable &table, const std::string &format,
         const std::string &out_path) {
    std::string text = nula::format_table(
        table, format == "json" ? nula::OutputFormat::json : nula::OutputFormat::csv);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << text;
    return out.good() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"non-uniform linear array design and analysis for LoS MIMO links"};
    app.set_version_flag("--version", nula::kVersion);
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::string scenario_path;
    std::string tau_grid_text;
    int threads = 1;
    int emg_k = 0;
    int emg_k_max = 0;
    std::optional<double> gamma_db;
    std::string sweep_kind;

    auto add_output_flags = [&](CLI::App *sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the table to this file instead of stdout");
    };
    auto add_scenario_flag = [&](CLI::App *sub) {
        sub->add_option("--scenario", scenario_path, "scenario JSON file")
            ->required()
            ->check(CLI::ExistingFile);
    };

    CLI::App *fekete = app.add_subcommand("fekete", "interval Fekete points for one K");
    fekete->add_option("--emg", emg_k, "number of points K")->required();
    add_output_flags(fekete);

    CLI::App *pat_fit =
        app.add_subcommand("pat-fit", "arch-parameter fits to the Fekete points");
    pat_fit->add_option("--emg", emg_k, "first K of the range")->capture_default_str();
    pat_fit->add_option("--emg-max", emg_k_max, "last K of the range (default: --emg)");
    add_output_flags(pat_fit);

    CLI::App *taumin =
        app.add_subcommand("taumin", "smallest tau reaching multiplexing gain K");
    add_scenario_flag(taumin);
    taumin->add_option("--emg", emg_k, "override the scenario's analysis.K");
    taumin->add_option("--gamma-db", gamma_db, "override the scenario's analysis.gamma_db");
    taumin->add_option("--tau-grid", tau_grid_text,
                       "search bounds lo:hi:step (lo is ignored; the search always "
                       "starts at the first step)");
    add_output_flags(taumin);

    CLI::App *sweep = app.add_subcommand("sweep", "curve tables: ratio, capacity, theta");
    add_scenario_flag(sweep);
    sweep->add_option("--kind", sweep_kind, "what to sweep")
        ->required()
        ->check(CLI::IsMember({"ratio", "capacity", "theta"}));
    sweep->add_option("--tau-grid", tau_grid_text, "tau grid lo:hi:step");
    sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    add_output_flags(sweep);

    CLI::App *analyze = app.add_subcommand("analyze", "one-shot link report");
    add_scenario_flag(analyze);
    add_output_flags(analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(fekete)) {
            return emit(nula::cmd_fekete(emg_k), format, out_path);
        }
        if (app.got_subcommand(pat_fit)) {
            int lo = pat_fit->count("--emg") ? emg_k : 4;
            int hi = pat_fit->count("--emg-max") ? emg_k_max
                                                 : (pat_fit->count("--emg") ? lo : 10);
            return emit(nula::cmd_pat_fit(lo, hi), format, out_path);
        }

        nula::Scenario sc = nula::load_scenario(scenario_path);
        nula::TauSearchConfig cfg;
        nula::SweepOptions opt;
        if (!tau_grid_text.empty()) {
            GridSpec g = parse_grid(tau_grid_text);
            cfg.tau_max = g.hi;
            cfg.step = g.step;
            opt.tau_lo = g.lo;
            opt.tau_hi = g.hi;
            opt.tau_step = g.step;
            opt.search = cfg;
        }
        if (app.got_subcommand(taumin)) {
            std::optional<int> k_override;
            if (taumin->count("--emg"))
                k_override = emg_k;
            return emit(nula::cmd_taumin(sc, k_override, gamma_db, cfg), format, out_path);
        }
        if (app.got_subcommand(sweep)) {
            opt.kind = sweep_kind == "ratio"      ? nula::SweepKind::ratio
                       : sweep_kind == "capacity" ? nula::SweepKind::capacity
                                                  : nula::SweepKind::theta;
            opt.threads = threads;
            return emit(nula::cmd_sweep(sc, opt), format, out_path);
        }
        return emit(nula::cmd_analyze(sc), format, out_path);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nula::NotAchievableError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nula::ConvergenceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const nula::ScenarioError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
