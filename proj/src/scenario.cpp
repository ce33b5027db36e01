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

#include "nula/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nula {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &source, const std::string &msg) {
    throw ScenarioError(source + ": " + msg);
}

void reject_unknown_keys(const json &obj, std::initializer_list<const char *> allowed,
                         const std::string &source, const std::string &where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char *k : allowed)
            known = known || it.key() == k;
        if (!known)
            fail(source, where + ": unknown key '" + it.key() + "'");
    }
}

const json &require_object(const json &parent, const char *key, const std::string &source,
                           const std::string &where) {
    auto it = parent.find(key);
    if (it == parent.end())
        fail(source, where + "." + key + ": missing required object");
    if (!it->is_object())
        fail(source, where + "." + key + ": must be an object");
    return *it;
}

double require_number(const json &obj, const char *key, const std::string &source,
                      const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(source, where + "." + key + ": missing required number");
    if (!it->is_number())
        fail(source, where + "." + key + ": must be a number");
    double v = it->get<double>();
    if (!std::isfinite(v))
        fail(source, where + "." + key + ": must be finite");
    return v;
}

double optional_number(const json &obj, const char *key, double fallback,
                       const std::string &source, const std::string &where) {
    if (obj.find(key) == obj.end())
        return fallback;
    return require_number(obj, key, source, where);
}

int require_int(const json &obj, const char *key, const std::string &source,
                const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(source, where + "." + key + ": missing required integer");
    if (!it->is_number_integer())
        fail(source, where + "." + key + ": must be an integer");
    return it->get<int>();
}

std::vector<double> number_array(const json &arr, const std::string &source,
                                 const std::string &where) {
    if (!arr.is_array())
        fail(source, where + ": must be an array of numbers");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto &v : arr) {
        if (!v.is_number() || !std::isfinite(v.get<double>()))
            fail(source, where + ": must contain only finite numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

LinkGeometry parse_geometry(const json &g, const std::string &source) {
    reject_unknown_keys(g,
                        {"wavelength", "distance", "aperture_t", "aperture_r", "theta_t",
                         "theta_r", "phi_r"},
                        source, "geometry");
    LinkGeometry geom;
    geom.wavelength = require_number(g, "wavelength", source, "geometry");
    geom.distance = require_number(g, "distance", source, "geometry");
    geom.aperture_t = require_number(g, "aperture_t", source, "geometry");
    geom.aperture_r = require_number(g, "aperture_r", source, "geometry");
    geom.theta_t = optional_number(g, "theta_t", 0.0, source, "geometry");
    geom.theta_r = optional_number(g, "theta_r", 0.0, source, "geometry");
    geom.phi_r = optional_number(g, "phi_r", 0.0, source, "geometry");
    try {
        geom.validate(); // messages are already "geometry: ..."-prefixed
    } catch (const std::invalid_argument &e) {
        fail(source, e.what());
    }
    return geom;
}

SideSpec parse_side(const json &s, const std::string &source, const std::string &where) {
    if (!s.is_object())
        fail(source, where + ": must be an object");
    reject_unknown_keys(s, {"ula", "groupwise", "explicit"}, source, where);
    if (s.size() != 1)
        fail(source, where + ": expected exactly one of 'ula', 'groupwise', 'explicit'");

    SideSpec side;
    try {
        if (s.contains("ula")) {
            const json &u = s["ula"];
            if (!u.is_object())
                fail(source, where + ".ula: must be an object");
            reject_unknown_keys(u, {"M"}, source, where + ".ula");
            int M = require_int(u, "M", source, where + ".ula");
            if (M < 2)
                fail(source, where + ".ula.M: must be >= 2");
            side.layout = ula_layout(M);
        } else if (s.contains("groupwise")) {
            const json &g = s["groupwise"];
            if (!g.is_object())
                fail(source, where + ".groupwise: must be an object");
            reject_unknown_keys(g, {"M", "K", "centers", "delta"}, source, where + ".groupwise");
            int M = require_int(g, "M", source, where + ".groupwise");
            int K = require_int(g, "K", source, where + ".groupwise");
            double delta = optional_number(g, "delta", 0.0, source, where + ".groupwise");
            auto cit = g.find("centers");
            if (cit == g.end())
                fail(source, where + ".groupwise.centers: missing (\"fekete\", {\"pat\": theta}, "
                             "or an explicit array)");
            std::optional<GroupwiseDeployment> dep;
            if (cit->is_string() && cit->get<std::string>() == "fekete") {
                dep = groupwise_fekete_deploy(M, K, delta);
            } else if (cit->is_object() && cit->size() == 1 && cit->contains("pat")) {
                double theta =
                    require_number(*cit, "pat", source, where + ".groupwise.centers");
                dep = groupwise_deploy(M, K, pat_points(K, theta), delta);
            } else if (cit->is_array()) {
                auto centers = number_array(*cit, source, where + ".groupwise.centers");
                dep = groupwise_deploy(M, K, centers, delta);
            } else {
                fail(source, where + ".groupwise.centers: expected \"fekete\", {\"pat\": theta}, "
                             "or an array of numbers");
            }
            side.layout = dep->alphas;
            side.groups = std::move(dep);
        } else {
            auto alphas = number_array(s["explicit"], source, where + ".explicit");
            side.layout = ArrayLayout(std::move(alphas));
        }
    } catch (const ScenarioError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        fail(source, where + ": " + e.what());
    }
    return side;
}

AnalysisSpec parse_analysis(const json &a, const std::string &source) {
    reject_unknown_keys(a, {"gamma_db", "K", "tau", "snr_grid_db"}, source, "analysis");
    AnalysisSpec spec;
    spec.gamma_db = optional_number(a, "gamma_db", spec.gamma_db, source, "analysis");
    if (spec.gamma_db > 0.0)
        fail(source, "analysis.gamma_db: must be <= 0 (a ratio in (0, 1])");
    if (a.contains("K")) {
        spec.K = require_int(a, "K", source, "analysis");
        if (spec.K < 1)
            fail(source, "analysis.K: must be >= 1");
    }
    if (a.contains("tau"))
        spec.tau = require_number(a, "tau", source, "analysis");
    if (a.contains("snr_grid_db")) {
        spec.snr_grid_db = number_array(a["snr_grid_db"], source, "analysis.snr_grid_db");
        if (spec.snr_grid_db.empty())
            fail(source, "analysis.snr_grid_db: must not be empty");
    }
    return spec;
}

} // namespace

std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double Scenario::tau() const {
    if (analysis.tau)
        return *analysis.tau;
    return compute_tau(geometry);
}

Scenario parse_scenario(const std::string &text, const std::string &source_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(source_name, e.what());
    }
    if (!doc.is_object())
        fail(source_name, "top level must be a JSON object");
    reject_unknown_keys(doc, {"geometry", "arrays", "analysis"}, source_name, "scenario");

    Scenario sc;
    sc.hash_hex = fnv1a_hex(text);
    sc.geometry = parse_geometry(require_object(doc, "geometry", source_name, "scenario"),
                                 source_name);
    const json &arrays = require_object(doc, "arrays", source_name, "scenario");
    reject_unknown_keys(arrays, {"transmit", "receive"}, source_name, "arrays");
    sc.transmit = parse_side(require_object(arrays, "transmit", source_name, "arrays"),
                             source_name, "arrays.transmit");
    sc.receive = parse_side(require_object(arrays, "receive", source_name, "arrays"),
                            source_name, "arrays.receive");
    if (doc.contains("analysis")) {
        if (!doc["analysis"].is_object())
            fail(source_name, "analysis: must be an object");
        sc.analysis = parse_analysis(doc["analysis"], source_name);
    }
    return sc;
}

Scenario load_scenario(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError(path + ": cannot open scenario file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path);
}

} // namespace nula
