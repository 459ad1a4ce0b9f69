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

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cbandcoex/report.hpp"
#include "cbandcoex/solver.hpp"

namespace cbandcoex {

// Tables behind the published coexistence figures. Each figure applies its
// series parameters (off-axis angles, carrier plan, clutter) on top of a base
// scenario, which is the default scenario unless the caller supplies one.
//
//   3  interference vs distance, several off-axis angles, with LNB crossings
//   4  coordination distance vs EIRP, several off-axis angles
//   5  interference vs distance, single carrier vs filled 270 MHz band
//   6  coordination distance vs filter attenuation 0-60 dB
//   7  same as 6, enlarged to 40-60 dB
//   8  sidelobe gain envelope vs off-axis angle (two columns)
//   9  coordination distance vs off-axis angle for three clutter categories
inline constexpr std::array<int, 7> figure_ids = {3, 4, 5, 6, 7, 8, 9};

bool is_figure_id(int id);
std::string_view figure_title(int id);

// Rows for every figure except 8.
std::vector<ReportRow> figure_rows(int id, const Scenario &base);

struct GainPoint {
    double off_axis_deg;
    double gain_dbi;
};

// Envelope sampled at phi_min and every whole degree above it up to 180.
std::vector<GainPoint> gain_pattern_table(const DishAntenna &dish);

void write_figure_csv(std::ostream &os, int id, const Scenario &base);
void write_figure_json(std::ostream &os, int id, const Scenario &base);
std::string figure_csv(int id, const Scenario &base);

} // namespace cbandcoex
