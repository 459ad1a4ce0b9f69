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

#include <filesystem>
#include <string>
#include <string_view>

#include "cbandcoex/solver.hpp"

namespace cbandcoex {

// Scenario files are JSON objects with one section per record:
//
//   {
//     "scenario_kind": "adjacent_band",
//     "base_station":  { "preset": "macro", "eirp_dbm": 72.28, ... },
//     "earth_station": { "height_m": 10, "lnb": { "linear_limit_dbm": -68 }, ... },
//     "propagation":   { "frequency_ghz": 3.535, "clutter": "suburban" },
//     "satellite":     { ... }, "protection": { ... }, "geometry": { ... }
//   }
//
// Every key carries its unit. Omitted keys take the default scenario values;
// an empty file is the default scenario. Unknown keys are rejected with the
// closest valid key as a suggestion.
Scenario parse_scenario(std::string_view text, std::string_view source_name = "<string>");

Scenario load_scenario(const std::filesystem::path &path);

// Edit distance used for "did you mean" suggestions; adjacent transpositions
// count as one edit.
std::size_t key_distance(std::string_view a, std::string_view b);

} // namespace cbandcoex
