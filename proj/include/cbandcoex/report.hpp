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

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cbandcoex/solver.hpp"

namespace cbandcoex {

// One line of every tabular report. Column order is fixed:
// [series,] swept_value, i5g_dbm, c_sat_dbm, i_tot_dbm, lnb_state,
// margin_to_linear_db, min_distance_km, flags
struct ReportRow {
    std::string series;
    std::string swept_value;
    Dbm i5g;
    Dbm c_sat;
    Dbm i_tot;
    LnbState lnb_state = LnbState::Linear;
    Decibels margin_to_linear;
    DistanceKm min_distance;
    std::vector<std::string> flags;
};

ReportRow make_report_row(std::string swept_value, const Assessment &a, const SeparationSolution &sol);

// Six significant digits, '.' as decimal point regardless of locale.
std::string format_number(double v);

std::string format_sweep_value(const SweepValue &v);

void write_report_csv(std::ostream &os, std::span<const ReportRow> rows, bool with_series = false);
void write_report_json(std::ostream &os, std::span<const ReportRow> rows);

} // namespace cbandcoex
