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

#include "cbandcoex/figures.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cbandcoex {

namespace {

constexpr std::array<double, 7> fig3_off_axis = {10, 20, 30, 40, 48, 60, 90};
constexpr std::array<double, 5> fig4_off_axis = {10, 20, 30, 48, 60};
constexpr std::array<double, 4> filter_off_axis = {10, 20, 30, 48};
constexpr std::array<ClutterKind, 3> fig9_clutter = {ClutterKind::Suburban, ClutterKind::Urban,
                                                     ClutterKind::DenseUrban};
// Filled-band worst case: six 45 MHz carriers over the 270 MHz overlap.
constexpr int worst_case_carriers = 6;

std::vector<SweepValue> linear_values(double from, double to, double step) {
    std::vector<SweepValue> out;
    const int n = static_cast<int>(std::lround((to - from) / step));
    for (int i = 0; i <= n; ++i)
        out.emplace_back(from + step * i);
    return out;
}

std::string angle_series(double deg) { return "off_axis_deg=" + format_number(deg); }

void append_rows(std::vector<ReportRow> &out, const std::string &series, const SweepSpec &spec) {
    for (const auto &r : run_sweep(spec)) {
        ReportRow row = make_report_row(format_sweep_value(r.value), r.at, r.separation);
        row.series = series;
        out.push_back(std::move(row));
    }
}

// Interference vs distance on 1-1000 km (ten points per decade) plus the exact
// distances where the LNB linear and saturation limits are crossed.
void append_distance_series(std::vector<ReportRow> &out, const std::string &series, const Scenario &s) {
    const double linear_km = crossing_distance(s, s.earth_station.lnb.linear_limit).km();
    const double saturation_km = crossing_distance(s, s.earth_station.lnb.saturation_limit).km();

    std::vector<double> km;
    for (int k = 0; k <= 30; ++k)
        km.push_back(std::pow(10.0, k / 10.0));
    km.push_back(linear_km);
    km.push_back(saturation_km);
    std::sort(km.begin(), km.end());
    km.erase(std::unique(km.begin(), km.end()), km.end());

    SweepSpec spec;
    spec.parameter = SweepParameter::Distance;
    spec.fixed_scenario = s;
    spec.values.assign(km.begin(), km.end());

    const auto rows = run_sweep(spec);
    for (const auto &r : rows) {
        ReportRow row = make_report_row(format_sweep_value(r.value), r.at, r.separation);
        row.series = series;
        const double d = std::get<double>(r.value);
        if (d == linear_km)
            row.flags.emplace_back("linear_crossing");
        if (d == saturation_km)
            row.flags.emplace_back("saturation_crossing");
        out.push_back(std::move(row));
    }
}

Scenario with_off_axis(Scenario s, double deg) {
    s.off_axis = AngleDeg{deg};
    return s;
}

} // namespace

bool is_figure_id(int id) { return std::find(figure_ids.begin(), figure_ids.end(), id) != figure_ids.end(); }

std::string_view figure_title(int id) {
    switch (id) {
    case 3:
        return "Interference power versus distance";
    case 4:
        return "Coordination distance versus base-station EIRP";
    case 5:
        return "Single carrier versus filled-band interference";
    case 6:
        return "Coordination distance versus filter attenuation";
    case 7:
        return "Coordination distance versus filter attenuation (enlarged)";
    case 8:
        return "Earth-station off-axis gain envelope";
    case 9:
        return "Coordination distance versus off-axis angle by clutter category";
    default:
        throw ValidationError("unknown figure id " + std::to_string(id) + " (expected 3-9)");
    }
}

std::vector<ReportRow> figure_rows(int id, const Scenario &base) {
    figure_title(id);
    std::vector<ReportRow> out;
    switch (id) {
    case 3:
        for (double phi : fig3_off_axis)
            append_distance_series(out, angle_series(phi), with_off_axis(base, phi));
        break;
    case 4:
        for (double phi : fig4_off_axis) {
            SweepSpec spec{SweepParameter::Eirp, linear_values(40.0, 82.0, 2.0), with_off_axis(base, phi), {}};
            append_rows(out, angle_series(phi), spec);
        }
        break;
    case 5: {
        Scenario single = base;
        single.base_station.num_carriers = 1;
        Scenario worst = base;
        worst.base_station.num_carriers = worst_case_carriers;
        append_distance_series(out, "single_carrier", single);
        append_distance_series(out, "worst_case", worst);
        break;
    }
    case 6:
    case 7: {
        const auto values = id == 6 ? linear_values(0.0, 60.0, 2.0) : linear_values(40.0, 60.0, 1.0);
        for (double phi : filter_off_axis) {
            SweepSpec spec{SweepParameter::FilterAttenuation, values, with_off_axis(base, phi), {}};
            append_rows(out, angle_series(phi), spec);
        }
        break;
    }
    case 8:
        throw ValidationError("figure 8 is a gain table; use gain_pattern_table");
    case 9:
        for (ClutterKind kind : fig9_clutter) {
            Scenario s = base;
            s.clutter = ClutterCategory::builtin(kind);
            SweepSpec spec{SweepParameter::OffAxisAngle, linear_values(10.0, 90.0, 1.0), s, {}};
            append_rows(out, "clutter=" + std::string(to_string(kind)), spec);
        }
        break;
    }
    return out;
}

std::vector<GainPoint> gain_pattern_table(const DishAntenna &dish) {
    const double lower = phi_min(dish).degrees();
    std::vector<GainPoint> out;
    out.push_back({lower, fss_off_axis_gain(AngleDeg{lower}, dish).gain.value()});
    for (int deg = static_cast<int>(std::floor(lower)) + 1; deg <= 180; ++deg)
        out.push_back({double(deg), fss_off_axis_gain(AngleDeg{double(deg)}, dish).gain.value()});
    return out;
}

void write_figure_csv(std::ostream &os, int id, const Scenario &base) {
    if (id == 8) {
        os << "off_axis_deg,gain_dbi\n";
        for (const auto &p : gain_pattern_table(base.earth_station.dish))
            os << format_number(p.off_axis_deg) << ',' << format_number(p.gain_dbi) << '\n';
        return;
    }
    const auto rows = figure_rows(id, base);
    write_report_csv(os, rows, true);
}

void write_figure_json(std::ostream &os, int id, const Scenario &base) {
    if (id == 8) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto &p : gain_pattern_table(base.earth_station.dish))
            out.push_back({{"off_axis_deg", p.off_axis_deg}, {"gain_dbi", p.gain_dbi}});
        os << out.dump(2) << '\n';
        return;
    }
    const auto rows = figure_rows(id, base);
    write_report_json(os, rows);
}

std::string figure_csv(int id, const Scenario &base) {
    std::ostringstream os;
    write_figure_csv(os, id, base);
    return os.str();
}

} // namespace cbandcoex
