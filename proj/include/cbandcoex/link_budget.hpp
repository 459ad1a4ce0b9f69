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

#include <string_view>

#include "cbandcoex/antenna.hpp"
#include "cbandcoex/propagation.hpp"
#include "cbandcoex/units.hpp"

namespace cbandcoex {

inline constexpr double boltzmann_j_per_k = 1.380649e-23;

enum class DeploymentPreset {
    RuralSuburbanUrbanMacro, // 72.28 dBm per sector
    UrbanSmallCellMicro,     // 61.53 dBm per sector
    Custom,
};

Dbm preset_eirp(DeploymentPreset preset);

struct BaseStationConfig {
    Dbm eirp_per_carrier{72.28};
    double carrier_bandwidth_mhz = 45.0;
    int num_carriers = 1;
    LengthM height{10.0};
    DeploymentPreset preset = DeploymentPreset::RuralSuburbanUrbanMacro;

    static BaseStationConfig from_preset(DeploymentPreset preset);
    void validate() const;
};

struct LnbModel {
    Dbm linear_limit{-68.0};
    Dbm saturation_limit{-60.0};
    double band_low_ghz = 3.4;
    double band_high_ghz = 4.2;

    void validate() const;
};

struct EarthStationConfig {
    LengthM height{10.0};
    AngleDeg elevation{10.0};
    DishAntenna dish{};
    GainDbi boresight_gain{43.0};
    LnbModel lnb{};
    AttenuationDb filter_attenuation{0.0};
    AttenuationDb shielding_attenuation{0.0};
    AttenuationDb frequency_offset{0.0};

    // Site isolation: filter and shielding summed in dB.
    AttenuationDb isolation() const { return filter_attenuation + shielding_attenuation; }
    void validate() const;
};

struct ProtectionCriteria {
    Decibels i_over_n_max{-10.0};
    double bandwidth_hz = 800e6;
    double noise_temperature_k = 100.0;
    double time_percentage = 20.0; // metadata only

    void validate() const;
};

struct SatelliteLinkConfig {
    Dbw eirp_per_transponder{40.0};
    int num_carriers = 13;
    DistanceKm slant_range{42000.0};
    FrequencyGHz downlink_frequency{3.95};
    GainDbi receive_gain{43.0};

    void validate() const;
};

enum class LnbState { Linear, Compression, Saturation };
enum class ScenarioKind { CoChannel, AdjacentBand };
enum class LimitKind { ProtectionCriterion, LnbLinear };

std::string_view to_string(LnbState s);
std::string_view to_string(ScenarioKind k);
std::string_view to_string(LimitKind k);

// kTB in dBW.
Dbw noise_floor(const ProtectionCriteria &pc);

Dbm max_permissible_interference(const ProtectionCriteria &pc);

// Filled-band worst case: per-carrier EIRP scaled by the number of carriers
// that fit in the overlap. A single-carrier station is returned unchanged.
Dbm aggregate_bs_eirp(const BaseStationConfig &bs, double overlap_bandwidth_mhz);

// Same, with the overlap taken as num_carriers * carrier_bandwidth.
Dbm aggregate_bs_eirp(const BaseStationConfig &bs);

// Received 5G power at the LNB input for an explicit off-axis angle.
Dbm interference_power(Dbm bs_eirp, const PropagationEnvironment &env, const EarthStationConfig &es,
                       AngleDeg off_axis, DistanceKm d);

// Same, deriving the off-axis angle from the path geometry at distance d.
Dbm interference_power(Dbm bs_eirp, const PropagationEnvironment &env, const EarthStationConfig &es,
                       GeometryInput geometry, DistanceKm d);

// Wanted carrier power from all transponder carriers.
Dbm satellite_signal_power(const SatelliteLinkConfig &sat);

inline Dbm total_received_power(Dbm i5g, Dbm csat) { return power_sum({i5g, csat}); }

LnbState classify_lnb_state(Dbm total, const LnbModel &lnb);

struct BindingLimit {
    Dbm level;
    LimitKind kind;
};

// Co-channel takes the lesser of the I/N limit and the LNB linear limit;
// adjacent-band only the LNB linear limit.
BindingLimit binding_limit(ScenarioKind scenario, const ProtectionCriteria &pc, const LnbModel &lnb);

inline Dbm applicable_limit(ScenarioKind scenario, const ProtectionCriteria &pc, const LnbModel &lnb) {
    return binding_limit(scenario, pc, lnb).level;
}

} // namespace cbandcoex
