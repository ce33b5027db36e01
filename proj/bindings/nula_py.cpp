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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "nula/capacity.hpp"
#include "nula/eig.hpp"
#include "nula/errors.hpp"
#include "nula/fekete.hpp"
#include "nula/geometry.hpp"
#include "nula/pat.hpp"
#include "nula/vandermonde.hpp"
#include "nula/version.hpp"

namespace py = pybind11;
using namespace nula;

namespace {

FmkMethod parse_method(const std::string &name) {
    if (name == "enumerate")
        return FmkMethod::enumerate;
    if (name == "determinant")
        return FmkMethod::determinant;
    throw std::invalid_argument("method must be 'enumerate' or 'determinant'");
}

Spectrum spectrum_from_values(std::vector<double> values) {
    if (values.empty())
        throw std::invalid_argument("Spectrum: values must be non-empty");
    if (!std::is_sorted(values.rbegin(), values.rend()))
        throw std::invalid_argument("Spectrum: values must be non-increasing");
    Spectrum s;
    s.values = std::move(values);
    const double mu1 = s.values.front();
    s.reliable_count = static_cast<std::size_t>(
        std::count_if(s.values.begin(), s.values.end(),
                      [&](double v) { return v >= 1e-13 * mu1; }));
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Non-uniform linear antenna array design for mmWave LoS MIMO";
    m.attr("__version__") = kVersion;

    py::register_exception<ConvergenceError>(m, "ConvergenceError");
    py::register_exception<NotAchievableError>(m, "NotAchievableError");

    // ---- geometry ------------------------------------------------------
    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def(py::init([](double wavelength, double distance, double aperture_t,
                         double aperture_r, double theta_t, double theta_r,
                         double phi_r) {
                 LinkGeometry g;
                 g.wavelength = wavelength;
                 g.distance = distance;
                 g.aperture_t = aperture_t;
                 g.aperture_r = aperture_r;
                 g.theta_t = theta_t;
                 g.theta_r = theta_r;
                 g.phi_r = phi_r;
                 g.validate();
                 return g;
             }),
             py::arg("wavelength") = 0.005, py::arg("distance") = 100.0,
             py::arg("aperture_t") = 1.0, py::arg("aperture_r") = 1.0,
             py::arg("theta_t") = 0.0, py::arg("theta_r") = 0.0,
             py::arg("phi_r") = 0.0)
        .def_readwrite("wavelength", &LinkGeometry::wavelength)
        .def_readwrite("distance", &LinkGeometry::distance)
        .def_readwrite("aperture_t", &LinkGeometry::aperture_t)
        .def_readwrite("aperture_r", &LinkGeometry::aperture_r)
        .def_readwrite("theta_t", &LinkGeometry::theta_t)
        .def_readwrite("theta_r", &LinkGeometry::theta_r)
        .def_readwrite("phi_r", &LinkGeometry::phi_r)
        .def("validate", &LinkGeometry::validate)
        .def("is_far_field", &LinkGeometry::is_far_field, py::arg("ratio"));

    py::class_<ArrayLayout>(m, "ArrayLayout")
        .def(py::init<std::vector<double>>(), py::arg("alphas"))
        .def_property_readonly("alphas", &ArrayLayout::alphas)
        .def("__len__", &ArrayLayout::size)
        .def("__getitem__", [](const ArrayLayout &a, int i) {
            if (i < 0 || i >= a.size())
                throw py::index_error();
            return a[i];
        });

    m.def("ula_layout", &ula_layout, py::arg("M"));
    m.def("compute_tau", &compute_tau, py::arg("geometry"));
    m.def("rayleigh_distance", &rayleigh_distance, py::arg("M"), py::arg("N"),
          py::arg("geometry"));
    m.def("tau_to_distance", &tau_to_distance, py::arg("tau"), py::arg("geometry"));
    m.def("distance_to_tau", &distance_to_tau, py::arg("distance"),
          py::arg("geometry"));
    m.def("tau_to_distance_oriented", &tau_to_distance_oriented, py::arg("tau"),
          py::arg("geometry"));

    // ---- interval Fekete points ----------------------------------------
    py::class_<FeketeConfig>(m, "FeketeConfig")
        .def(py::init<>())
        .def_readwrite("tol", &FeketeConfig::tol)
        .def_readwrite("max_iter", &FeketeConfig::max_iter);

    py::class_<FeketeSolution>(m, "FeketeSolution")
        .def_readonly("K", &FeketeSolution::K)
        .def_readonly("points", &FeketeSolution::points)
        .def_readonly("objective", &FeketeSolution::objective)
        .def_readonly("gradient_norm", &FeketeSolution::gradient_norm)
        .def_readonly("iterations", &FeketeSolution::iterations);

    m.def("fekete_points", &fekete_points, py::arg("K"),
          py::arg("config") = FeketeConfig{});
    m.def("fekete_certificate", &fekete_certificate, py::arg("points"));
    m.def("lagrange_basis", &lagrange_basis, py::arg("points"), py::arg("x"));
    m.def(
        "f_MK",
        [](const std::vector<double> &alphas, int K, const std::string &method) {
            return f_MK(alphas, K, parse_method(method));
        },
        py::arg("alphas"), py::arg("K"), py::arg("method") = "determinant");

    // ---- arch deployments ----------------------------------------------
    py::class_<ThetaFit>(m, "ThetaFit")
        .def_readonly("theta", &ThetaFit::theta)
        .def_readonly("residual", &ThetaFit::residual)
        .def_readonly("degenerate", &ThetaFit::degenerate);

    py::class_<GroupwiseDeployment>(m, "GroupwiseDeployment")
        .def_readonly("M", &GroupwiseDeployment::M)
        .def_readonly("K", &GroupwiseDeployment::K)
        .def_readonly("centers", &GroupwiseDeployment::centers)
        .def_readonly("intra_spacing", &GroupwiseDeployment::intra_spacing)
        .def_readonly("alphas", &GroupwiseDeployment::alphas)
        .def_readonly("group_sizes", &GroupwiseDeployment::group_sizes);

    m.def("pat_points", &pat_points, py::arg("K"), py::arg("theta"));
    m.def("fit_theta", &fit_theta, py::arg("K"), py::arg("fekete"));
    m.def("groupwise_deploy", &groupwise_deploy, py::arg("M"), py::arg("K"),
          py::arg("centers"), py::arg("delta"));
    m.def("groupwise_fekete_deploy", &groupwise_fekete_deploy, py::arg("M"),
          py::arg("K"), py::arg("delta"), py::arg("config") = FeketeConfig{});
    m.def("default_theta_grid", &default_theta_grid);

    // ---- spectra and thresholds ----------------------------------------
    py::class_<Spectrum>(m, "Spectrum")
        .def(py::init(&spectrum_from_values), py::arg("values"))
        .def_readonly("values", &Spectrum::values)
        .def_readonly("reliable_count", &Spectrum::reliable_count);

    py::class_<TauSearchConfig>(m, "TauSearchConfig")
        .def(py::init<>())
        .def_readwrite("tau_max", &TauSearchConfig::tau_max)
        .def_readwrite("step", &TauSearchConfig::step)
        .def_readwrite("bisect_iters", &TauSearchConfig::bisect_iters)
        .def_readwrite("tol", &TauSearchConfig::tol);

    py::class_<TauMinResult>(m, "TauMinResult")
        .def_readonly("tau_min", &TauMinResult::tau_min)
        .def_readonly("K", &TauMinResult::K)
        .def_readonly("gamma", &TauMinResult::gamma)
        .def_readonly("bracket_lo", &TauMinResult::bracket_lo)
        .def_readonly("bracket_hi", &TauMinResult::bracket_hi)
        .def_readonly("ratio_at_tau", &TauMinResult::ratio_at_tau);

    py::class_<ThetaOptimum>(m, "ThetaOptimum")
        .def_readonly("theta_star", &ThetaOptimum::theta_star)
        .def_readonly("tau_min_at_star", &ThetaOptimum::tau_min_at_star);

    m.def("layout_spectrum", &layout_spectrum, py::arg("layout_r"),
          py::arg("layout_t"), py::arg("tau"));
    m.def("emg", &emg, py::arg("spectrum"), py::arg("gamma"));
    m.def(
        "tau_min_search",
        [](const ArrayLayout &layout_t, const ArrayLayout &layout_r, int K,
           double gamma, const TauSearchConfig &cfg)
            -> std::optional<TauMinResult> {
            return tau_min_search(layout_t, layout_r, K, gamma, cfg);
        },
        py::arg("layout_t"), py::arg("layout_r"), py::arg("K"), py::arg("gamma"),
        py::arg("config") = TauSearchConfig{});
    m.def("max_achievable_emg", &max_achievable_emg, py::arg("layout_t"),
          py::arg("layout_r"), py::arg("gamma"),
          py::arg("config") = TauSearchConfig{});
    m.def(
        "optimize_theta_for_taumin",
        [](int M, int N, int K, double gamma, const std::vector<double> &grid,
           const TauSearchConfig &cfg, int threads)
            -> std::optional<ThetaOptimum> {
            return optimize_theta_for_taumin(M, N, K, gamma, grid, cfg, threads);
        },
        py::arg("M"), py::arg("N"), py::arg("K"), py::arg("gamma"),
        py::arg("theta_grid"), py::arg("config") = TauSearchConfig{},
        py::arg("threads") = 1);

    // ---- capacity --------------------------------------------------------
    py::class_<WaterfillAllocation>(m, "WaterfillAllocation")
        .def_readonly("powers", &WaterfillAllocation::powers)
        .def_readonly("waterlevel", &WaterfillAllocation::waterlevel);

    m.def("normalize_spectrum", &normalize_spectrum, py::arg("spectrum"));
    m.def("capacity_equal_power", &capacity_equal_power, py::arg("spectrum"),
          py::arg("snr"), py::arg("K"));
    m.def("capacity_waterfilling", &capacity_waterfilling, py::arg("spectrum"),
          py::arg("snr"));
    m.def("waterfill_powers", &waterfill_powers, py::arg("spectrum"),
          py::arg("snr"));
}
