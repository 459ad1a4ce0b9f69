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

#include <optional>
#include <variant>
#include <vector>

#include "cbandcoex/antenna.hpp"
#include "cbandcoex/link_budget.hpp"
#include "cbandcoex/propagation.hpp"
#include "cbandcoex/units.hpp"

namespace cbandcoex {

// One complete interference scenario: a single (possibly multi-carrier) base
// station, one earth station, and the wanted satellite link.
//
// The interference path runs at `frequency`; the satellite downlink has its
// own frequency in `satellite`. The receive dish wavelength must match the
// interference frequency, since that is the signal the sidelobe envelope is
// evaluated for.
struct Scenario {
    ScenarioKind kind = ScenarioKind::AdjacentBand;
    BaseStationConfig base_station{};
    EarthStationConfig earth_station{};

    FrequencyGHz frequency{3.535};
    ClutterCategory clutter = ClutterCategory::builtin(ClutterKind::Suburban);
    AttenuationDb gaseous_absorption{0.0};

    SatelliteLinkConfig satellite{};
    ProtectionCriteria protection{};

    AngleDeg azimuth_offset{0.0};
    LengthM earth_radius{8.5e6};
    // Fixed off-axis angle. When empty, the angle is derived from the path
    // geometry at each evaluated distance.
    std::optional<AngleDeg> off_axis = AngleDeg{10.0};

    void validate() const;

    PropagationEnvironment environment() const;
    GeometryInput geometry_at(DistanceKm d) const;
    Dbm bs_eirp() const { return aggregate_bs_eirp(base_station); }
    BindingLimit limit() const { return binding_limit(kind, protection, earth_station.lnb); }
};

// Defaults: macro BS at 72.28 dBm, 45 MHz, 10 m masts, 10 degree elevation
// pointed at the BS (off-axis = elevation), suburban clutter, 3.535 GHz,
// 1.8 m dish, adjacent-band operation.
Scenario default_scenario();

struct Assessment {
    DistanceKm distance;
    AngleDeg off_axis;
    bool main_lobe_adjacent = false;
    Dbm interference;
    Dbm satellite;
    Dbm total;
    LnbState state = LnbState::Linear;
    Decibels margin_to_linear; // linear limit minus total; negative when past it
};

Assessment assess(const Scenario &s, DistanceKm d);

// Interference power at the LNB input at distance d.
Dbm scenario_interference(const Scenario &s, DistanceKm d);

struct SeparationSolution {
    DistanceKm distance;
    Dbm binding_limit;
    LimitKind limit_kind = LimitKind::LnbLinear;
    AngleDeg off_axis;
    bool main_lobe_flag = false;
};

// Distance at which the interference falls to `level`. With a fixed off-axis
// angle the clutter term does not depend on distance, so this inverts in
// closed form. With geometric off-axis angles the outermost crossing is
// bracketed on a log grid and bisected. Throws InfeasibleError when no finite
// distance exists.
DistanceKm crossing_distance(const Scenario &s, Dbm level);

SeparationSolution min_separation_distance(const Scenario &s);

// Extra isolation (filter plus shielding, on top of what the scenario already
// has) needed for the coordination distance to shrink to `target`.
AttenuationDb required_attenuation(const Scenario &s, DistanceKm target);

enum class SweepParameter { Distance, Eirp, OffAxisAngle, FilterAttenuation, ClutterCategory };

std::string_view to_string(SweepParameter p);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

using SweepValue = std::variant<double, ClutterCategory>;

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Distance;
    std::vector<SweepValue> values;
    Scenario fixed_scenario = default_scenario();
    // Where to evaluate powers for non-distance sweeps. When empty, each row is
    // evaluated at its own coordination distance.
    std::optional<DistanceKm> evaluation_distance;
};

struct SweepRow {
    SweepValue value;
    Assessment at;
    SeparationSolution separation;
};

// One row per value, in input order. The spec and its fixed scenario are
// validated before any row is computed.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

// The fixed scenario with the swept parameter set to `value`.
Scenario apply_sweep_value(const Scenario &base, SweepParameter p, const SweepValue &value);

} // namespace cbandcoex
