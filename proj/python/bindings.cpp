// SPDX-License-Identifier: Apache-2.0
//
// cbandcoex - interference and coordination-distance engine for 5G / C-band FSS
// Copyright (C) 2026 The cbandcoex Authors
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

#include <sstream>

#include "cbandcoex/figures.hpp"
#include "cbandcoex/link_budget.hpp"
#include "cbandcoex/propagation.hpp"
#include "cbandcoex/scenario_io.hpp"
#include "cbandcoex/solver.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace cbandcoex;

namespace {

py::dict assessment_dict(const Assessment &a) {
    py::dict d;
    d["distance_km"] = a.distance.km();
    d["off_axis_deg"] = a.off_axis.degrees();
    d["main_lobe"] = a.main_lobe_adjacent;
    d["i5g_dbm"] = a.interference.value();
    d["c_sat_dbm"] = a.satellite.value();
    d["i_tot_dbm"] = a.total.value();
    d["lnb_state"] = std::string(to_string(a.state));
    d["margin_to_linear_db"] = a.margin_to_linear.value();
    return d;
}

py::dict solution_dict(const SeparationSolution &s) {
    py::dict d;
    d["distance_km"] = s.distance.km();
    d["binding_limit_dbm"] = s.binding_limit.value();
    d["limit_kind"] = std::string(to_string(s.limit_kind));
    d["off_axis_deg"] = s.off_axis.degrees();
    d["main_lobe_flag"] = s.main_lobe_flag;
    return d;
}

ClutterCategory clutter_from_name(const std::string &name) {
    const auto kind = parse_clutter_kind(name);
    if (!kind || *kind == ClutterKind::Custom)
        throw ValidationError("unknown clutter category '" + name + "'");
    return ClutterCategory::builtin(*kind);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "5G / C-band FSS interference and coordination-distance engine";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());

    m.def("to_dbw", [](double dbm) { return to_dbw(Dbm{dbm}).value(); }, py::arg("dbm"));
    m.def("to_dbm", [](double dbw) { return to_dbm(Dbw{dbw}).value(); }, py::arg("dbw"));
    m.def(
        "power_sum",
        [](const std::vector<double> &terms) {
            std::vector<Dbm> p(terms.begin(), terms.end());
            return power_sum(std::span<const Dbm>(p)).value();
        },
        py::arg("terms_dbm"), "Sum of powers given in dB with a common reference.");

    m.def(
        "free_space_path_loss",
        [](double f_ghz, double d_km) { return free_space_path_loss(FrequencyGHz{f_ghz}, DistanceKm{d_km}).value(); },
        py::arg("frequency_ghz"), py::arg("distance_km"));
    m.def(
        "clutter_frequency_factor", [](double f_ghz) { return clutter_frequency_factor(FrequencyGHz{f_ghz}); },
        py::arg("frequency_ghz"));
    m.def(
        "clutter_loss",
        [](const std::string &category, double antenna_height_m, double f_ghz) {
            return clutter_loss(PropagationEnvironment{FrequencyGHz{f_ghz}, clutter_from_name(category),
                                                       AttenuationDb{0.0}, LengthM{antenna_height_m}})
                .value();
        },
        py::arg("category"), py::arg("antenna_height_m") = 10.0, py::arg("frequency_ghz") = 3.535);

    m.def(
        "off_axis_angle",
        [](double elevation, double azimuth, double es_h, double bs_h, double d_km, double radius) {
            return off_axis_angle(GeometryInput{AngleDeg{elevation}, AngleDeg::normalized(azimuth), LengthM{es_h},
                                                LengthM{bs_h}, DistanceKm{d_km}, LengthM{radius}})
                .degrees();
        },
        py::arg("elevation_deg"), py::arg("azimuth_offset_deg") = 0.0, py::arg("es_height_m") = 10.0,
        py::arg("bs_height_m") = 10.0, py::arg("distance_km") = 1.0, py::arg("earth_radius_m") = 8.5e6);
    m.def(
        "phi_min",
        [](double diameter_m, double f_ghz) {
            return phi_min(DishAntenna::at_frequency(LengthM{diameter_m}, FrequencyGHz{f_ghz})).degrees();
        },
        py::arg("diameter_m") = 1.8, py::arg("frequency_ghz") = 3.535);
    m.def(
        "fss_off_axis_gain",
        [](double phi, double diameter_m, double f_ghz) {
            const auto g = fss_off_axis_gain(AngleDeg{phi},
                                             DishAntenna::at_frequency(LengthM{diameter_m}, FrequencyGHz{f_ghz}));
            return py::make_tuple(g.gain.value(), g.main_lobe_adjacent);
        },
        py::arg("off_axis_deg"), py::arg("diameter_m") = 1.8, py::arg("frequency_ghz") = 3.535,
        "Returns (gain_dbi, main_lobe_adjacent).");

    m.def(
        "noise_floor_dbw",
        [](double b, double t) {
            ProtectionCriteria pc;
            pc.bandwidth_hz = b;
            pc.noise_temperature_k = t;
            return noise_floor(pc).value();
        },
        py::arg("bandwidth_hz") = 800e6, py::arg("noise_temperature_k") = 100.0);
    m.def(
        "max_permissible_interference_dbm",
        [](double i_over_n, double b, double t) {
            ProtectionCriteria pc;
            pc.i_over_n_max = Decibels{i_over_n};
            pc.bandwidth_hz = b;
            pc.noise_temperature_k = t;
            return max_permissible_interference(pc).value();
        },
        py::arg("i_over_n_db") = -10.0, py::arg("bandwidth_hz") = 800e6, py::arg("noise_temperature_k") = 100.0);
    m.def(
        "aggregate_bs_eirp",
        [](double eirp, double carrier_mhz, int carriers, double overlap_mhz) {
            BaseStationConfig bs;
            bs.preset = DeploymentPreset::Custom;
            bs.eirp_per_carrier = Dbm{eirp};
            bs.carrier_bandwidth_mhz = carrier_mhz;
            bs.num_carriers = carriers;
            return aggregate_bs_eirp(bs, overlap_mhz).value();
        },
        py::arg("eirp_dbm"), py::arg("carrier_bandwidth_mhz"), py::arg("num_carriers"),
        py::arg("overlap_bandwidth_mhz"));
    m.def(
        "satellite_signal_power_dbm",
        [](double eirp_dbw, int carriers, double range_km, double f_ghz, double gain) {
            return satellite_signal_power(SatelliteLinkConfig{Dbw{eirp_dbw}, carriers, DistanceKm{range_km},
                                                              FrequencyGHz{f_ghz}, GainDbi{gain}})
                .value();
        },
        py::arg("eirp_dbw") = 40.0, py::arg("num_carriers") = 13, py::arg("slant_range_km") = 42000.0,
        py::arg("frequency_ghz") = 3.95, py::arg("receive_gain_dbi") = 43.0);
    m.def(
        "classify_lnb_state",
        [](double total, double linear, double saturation) {
            LnbModel lnb;
            lnb.linear_limit = Dbm{linear};
            lnb.saturation_limit = Dbm{saturation};
            lnb.validate();
            return std::string(to_string(classify_lnb_state(Dbm{total}, lnb)));
        },
        py::arg("total_dbm"), py::arg("linear_limit_dbm") = -68.0, py::arg("saturation_limit_dbm") = -60.0);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init(&default_scenario))
        .def_static("from_json", [](const std::string &text) { return parse_scenario(text); }, py::arg("text"))
        .def_static("load", [](const std::string &path) { return load_scenario(path); }, py::arg("path"))
        .def_property_readonly("bs_eirp_dbm", [](const Scenario &s) { return s.bs_eirp().value(); })
        .def_property_readonly("limit_dbm", [](const Scenario &s) { return s.limit().level.value(); })
        .def("assess", [](const Scenario &s, double d) { return assessment_dict(assess(s, DistanceKm{d})); },
             py::arg("distance_km"))
        .def("min_separation_distance", [](const Scenario &s) { return solution_dict(min_separation_distance(s)); })
        .def("required_attenuation",
             [](const Scenario &s, double target) { return required_attenuation(s, DistanceKm{target}).value(); },
             py::arg("target_km"))
        .def("figure_csv", [](const Scenario &s, int id) { return figure_csv(id, s); }, py::arg("figure_id"))
        .def(
            "sweep",
            [](const Scenario &s, const std::string &param, const std::vector<py::object> &values) {
                const auto p = parse_sweep_parameter(param);
                if (!p)
                    throw ValidationError("unknown sweep parameter '" + param + "'");
                SweepSpec spec;
                spec.parameter = *p;
                spec.fixed_scenario = s;
                for (const auto &v : values) {
                    if (*p == SweepParameter::ClutterCategory)
                        spec.values.emplace_back(clutter_from_name(v.cast<std::string>()));
                    else
                        spec.values.emplace_back(v.cast<double>());
                }
                py::list out;
                for (const auto &r : run_sweep(spec)) {
                    py::dict row = assessment_dict(r.at);
                    row["min_distance_km"] = r.separation.distance.km();
                    if (const auto *d = std::get_if<double>(&r.value))
                        row["value"] = *d;
                    else
                        row["value"] = std::string(to_string(std::get<ClutterCategory>(r.value).kind()));
                    out.append(row);
                }
                return out;
            },
            py::arg("parameter"), py::arg("values"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
