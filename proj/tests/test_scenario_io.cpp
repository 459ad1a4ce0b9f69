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

#include <catch_amalgamated.hpp>

#include "cbandcoex/scenario_io.hpp"

using namespace cbandcoex;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("empty input is the default scenario", "[io]") {
    for (const char *text : {"", "  \n", "{}"}) {
        const Scenario s = parse_scenario(text);
        CHECK(s.bs_eirp().value() == 72.28);
        CHECK(s.base_station.preset == DeploymentPreset::RuralSuburbanUrbanMacro);
        CHECK(s.base_station.carrier_bandwidth_mhz == 45.0);
        CHECK(s.base_station.height.meters() == 10.0);
        CHECK(s.earth_station.height.meters() == 10.0);
        CHECK(s.earth_station.elevation.degrees() == 10.0);
        CHECK(s.off_axis->degrees() == 10.0);
        CHECK(s.clutter.kind() == ClutterKind::Suburban);
        CHECK(s.frequency.ghz() == 3.535);
        CHECK(s.earth_station.lnb.band_low_ghz == 3.4);
        CHECK(s.earth_station.lnb.band_high_ghz == 4.2);
        CHECK(s.protection.time_percentage == 20.0);
        CHECK(s.kind == ScenarioKind::AdjacentBand);
    }
}

TEST_CASE("scenario fields are read with their units", "[io]") {
    const Scenario s = parse_scenario(R"({
        "scenario_kind": "co_channel",
        "base_station": { "eirp_dbm": 62, "num_carriers": 6, "height_m": 25 },
        "earth_station": { "height_m": 6, "elevation_deg": 30, "dish_diameter_m": 2.4,
                           "filter_attenuation_db": 40, "shielding_attenuation_db": 13,
                           "lnb": { "linear_limit_dbm": -70, "saturation_limit_dbm": -62 } },
        "propagation": { "frequency_ghz": 3.6, "clutter": "dense_urban", "gaseous_absorption_db": 0.5 },
        "satellite": { "eirp_dbw": 38, "num_carriers": 10 },
        "protection": { "noise_temperature_k": 150 },
        "geometry": { "azimuth_offset_deg": -30 }
    })");
    CHECK(s.kind == ScenarioKind::CoChannel);
    CHECK(s.base_station.preset == DeploymentPreset::Custom);
    CHECK(s.base_station.eirp_per_carrier.value() == 62.0);
    CHECK(s.base_station.num_carriers == 6);
    CHECK(s.earth_station.isolation().value() == 53.0);
    CHECK(s.earth_station.lnb.linear_limit.value() == -70.0);
    CHECK(s.earth_station.dish.diameter.meters() == 2.4);
    CHECK(s.earth_station.dish.wavelength.meters() == Approx(speed_of_light_m_per_s / 3.6e9));
    CHECK(s.clutter.kind() == ClutterKind::DenseUrban);
    CHECK(s.gaseous_absorption.value() == 0.5);
    CHECK(s.satellite.num_carriers == 10);
    CHECK(s.satellite.receive_gain.value() == 43.0);
    CHECK(s.protection.noise_temperature_k == 150.0);
    CHECK(s.azimuth_offset.degrees() == 330.0);
    CHECK(s.off_axis->degrees() == 30.0);
}

TEST_CASE("presets, custom clutter and geometric off-axis", "[io]") {
    const Scenario micro = parse_scenario(R"({"base_station": {"preset": "micro"}})");
    CHECK(micro.bs_eirp().value() == 61.53);

    const Scenario custom = parse_scenario(
        R"({"propagation": {"clutter_height_m": 15, "clutter_distance_km": 0.03},
            "geometry": {"off_axis_deg": "geometric"}})");
    CHECK(custom.clutter.kind() == ClutterKind::Custom);
    CHECK(custom.clutter.nominal_height().meters() == 15.0);
    CHECK_FALSE(custom.off_axis.has_value());

    const Scenario explicit_angle = parse_scenario(R"({"geometry": {"off_axis_deg": 48}})");
    CHECK(explicit_angle.off_axis->degrees() == 48.0);
}

TEST_CASE("validation errors name the field", "[io]") {
    CHECK_THROWS_WITH(parse_scenario(R"({"earth_station": {"filter_attenuation_db": -3}})"),
                      ContainsSubstring("earth_station.filter_attenuation_db"));
    CHECK_THROWS_AS(parse_scenario(R"({"earth_station": {"shielding_attenuation_db": -0.5}})"), ValidationError);
    CHECK_THROWS_WITH(parse_scenario(R"({"base_station": {"preset": "macro", "eirp_dbm": 70}})"),
                      ContainsSubstring("preset"));
    CHECK_THROWS_WITH(parse_scenario(R"({"base_station": {"num_carriers": 0}})"), ContainsSubstring("num_carriers"));
    CHECK_THROWS_AS(parse_scenario(R"({"propagation": {"frequency_ghz": 0}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"propagation": {"clutter": "jungle"}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"propagation": {"clutter": "custom", "clutter_height_m": 0,
                                                       "clutter_distance_km": 0.02}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"earth_station": {"lnb": {"linear_limit_dbm": -55}}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"earth_station": {"elevation_deg": 120}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"geometry": {"off_axis_deg": "sideways"}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"scenario_kind": "both"})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"base_station": {"height_m": "tall"}})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"([1, 2])"), ValidationError);
}

TEST_CASE("unknown keys suggest the closest valid key", "[io]") {
    const std::string text = "{\n  \"base_station\": {\n    \"eipr\": 70\n  }\n}\n";
    CHECK_THROWS_WITH(parse_scenario(text, "typo.json"),
                      ContainsSubstring("typo.json:3:5") && ContainsSubstring("unknown key 'base_station.eipr'") &&
                          ContainsSubstring("did you mean 'eirp_dbm'"));
    CHECK_THROWS_WITH(parse_scenario(R"({"earth_staton": {}})"), ContainsSubstring("did you mean 'earth_station'"));
    CHECK_THROWS_WITH(parse_scenario(R"({"propagation": {"frequency": 3.5}})"),
                      ContainsSubstring("did you mean 'frequency_ghz'"));
}

TEST_CASE("parse errors carry line and column", "[io]") {
    CHECK_THROWS_WITH(parse_scenario("{\n  \"base_station\": {\n    \"eirp_dbm\": ,\n  }\n}", "bad.json"),
                      ContainsSubstring("bad.json:3:") && ContainsSubstring("parse error"));
}

TEST_CASE("key distance", "[io]") {
    CHECK(key_distance("eipr", "eirp") == 1);
    CHECK(key_distance("", "abc") == 3);
    CHECK(key_distance("height", "height") == 0);
    CHECK(key_distance("kitten", "sitting") == 3);
}

TEST_CASE("missing scenario file", "[io]") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ValidationError);
}
