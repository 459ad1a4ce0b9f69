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

#include "cbandcoex/report.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace cbandcoex {

ReportRow make_report_row(std::string swept_value, const Assessment &a, const SeparationSolution &sol) {
    ReportRow row;
    row.swept_value = std::move(swept_value);
    row.i5g = a.interference;
    row.c_sat = a.satellite;
    row.i_tot = a.total;
    row.lnb_state = a.state;
    row.margin_to_linear = a.margin_to_linear;
    row.min_distance = sol.distance;
    if (a.main_lobe_adjacent || sol.main_lobe_flag)
        row.flags.emplace_back("main_lobe");
    return row;
}

std::string format_number(double v) {
    if (v == 0.0)
        v = 0.0; // folds -0 into 0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

std::string format_sweep_value(const SweepValue &v) {
    if (const auto *d = std::get_if<double>(&v))
        return format_number(*d);
    return std::string(to_string(std::get<ClutterCategory>(v).kind()));
}

namespace {

std::string join_flags(const std::vector<std::string> &flags) {
    std::string out;
    for (const auto &f : flags) {
        if (!out.empty())
            out += ';';
        out += f;
    }
    return out;
}

} // namespace

void write_report_csv(std::ostream &os, std::span<const ReportRow> rows, bool with_series) {
    if (with_series)
        os << "series,";
    os << "swept_value,i5g_dbm,c_sat_dbm,i_tot_dbm,lnb_state,margin_to_linear_db,min_distance_km,flags\n";
    for (const auto &r : rows) {
        if (with_series)
            os << r.series << ',';
        os << r.swept_value << ',' << format_number(r.i5g.value()) << ',' << format_number(r.c_sat.value()) << ','
           << format_number(r.i_tot.value()) << ',' << to_string(r.lnb_state) << ','
           << format_number(r.margin_to_linear.value()) << ',' << format_number(r.min_distance.km()) << ','
           << join_flags(r.flags) << '\n';
    }
}

void write_report_json(std::ostream &os, std::span<const ReportRow> rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        if (!r.series.empty())
            j["series"] = r.series;
        j["swept_value"] = r.swept_value;
        j["i5g_dbm"] = r.i5g.value();
        j["c_sat_dbm"] = r.c_sat.value();
        j["i_tot_dbm"] = r.i_tot.value();
        j["lnb_state"] = std::string(to_string(r.lnb_state));
        j["margin_to_linear_db"] = r.margin_to_linear.value();
        j["min_distance_km"] = r.min_distance.km();
        j["flags"] = r.flags;
        out.push_back(std::move(j));
    }
    os << out.dump(2) << '\n';
}

} // namespace cbandcoex
