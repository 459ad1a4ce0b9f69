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

#include "cbandcoex/link_budget.hpp"

#include <cmath>
#include <string>

namespace cbandcoex {

Dbm preset_eirp(DeploymentPreset preset) {
    switch (preset) {
    case DeploymentPreset::RuralSuburbanUrbanMacro:
        return Dbm{72.28};
    case DeploymentPreset::UrbanSmallCellMicro:
        return Dbm{61.53};
    case DeploymentPreset::Custom:
        break;
    }
    throw ValidationError("custom deployment preset has no nominal EIRP");
}

BaseStationConfig BaseStationConfig::from_preset(DeploymentPreset preset) {
    BaseStationConfig bs;
    bs.preset = preset;
    bs.eirp_per_carrier = preset_eirp(preset);
    return bs;
}

void BaseStationConfig::validate() const {
    if (num_carriers < 1)
        throw ValidationError("base_station.num_carriers must be >= 1");
    if (!(carrier_bandwidth_mhz > 0.0) || !std::isfinite(carrier_bandwidth_mhz))
        throw ValidationError("base_station.carrier_bandwidth_mhz must be > 0");
    if (preset != DeploymentPreset::Custom && eirp_per_carrier != preset_eirp(preset))
        throw ValidationError("base_station EIRP does not match its deployment preset");
}

void LnbModel::validate() const {
    if (!(linear_limit < saturation_limit))
        throw ValidationError("lnb.linear_limit_dbm must be below lnb.saturation_limit_dbm");
    if (!(band_low_ghz > 0.0) || !(band_low_ghz < band_high_ghz))
        throw ValidationError("lnb operating band must satisfy 0 < low < high");
}

void EarthStationConfig::validate() const {
    if (elevation.degrees() > 90.0)
        throw ValidationError("earth_station.elevation_deg must lie in [0, 90]");
    if (dish.diameter.meters() <= 0.0)
        throw ValidationError("earth_station.dish_diameter_m must be > 0");
    if (dish.wavelength.meters() <= 0.0)
        throw ValidationError("earth_station dish wavelength must be > 0");
    lnb.validate();
}

void ProtectionCriteria::validate() const {
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw ValidationError("protection.bandwidth_hz must be > 0");
    if (!(noise_temperature_k > 0.0) || !std::isfinite(noise_temperature_k))
        throw ValidationError("protection.noise_temperature_k must be > 0");
    if (!(time_percentage > 0.0) || time_percentage > 100.0)
        throw ValidationError("protection.time_percentage must lie in (0, 100]");
}

void SatelliteLinkConfig::validate() const {
    if (num_carriers < 1)
        throw ValidationError("satellite.num_carriers must be >= 1");
    if (slant_range.km() <= 0.0)
        throw ValidationError("satellite.slant_range_km must be > 0");
    if (eirp_per_transponder.value() <= 0.0)
        throw ValidationError("satellite.eirp_dbw must be > 0");
    if (receive_gain.value() <= 0.0)
        throw ValidationError("satellite.receive_gain_dbi must be > 0");
}

std::string_view to_string(LnbState s) {
    switch (s) {
    case LnbState::Linear:
        return "linear";
    case LnbState::Compression:
        return "compression";
    case LnbState::Saturation:
        return "saturation";
    }
    return "?";
}

std::string_view to_string(ScenarioKind k) {
    return k == ScenarioKind::CoChannel ? "co_channel" : "adjacent_band";
}

std::string_view to_string(LimitKind k) {
    return k == LimitKind::ProtectionCriterion ? "protection_criterion" : "lnb_linear";
}

Dbw noise_floor(const ProtectionCriteria &pc) {
    pc.validate();
    return Dbw{10.0 * std::log10(boltzmann_j_per_k * pc.bandwidth_hz * pc.noise_temperature_k)};
}

Dbm max_permissible_interference(const ProtectionCriteria &pc) {
    return to_dbm(noise_floor(pc) + pc.i_over_n_max);
}

Dbm aggregate_bs_eirp(const BaseStationConfig &bs, double overlap_bandwidth_mhz) {
    bs.validate();
    if (!(overlap_bandwidth_mhz >= bs.carrier_bandwidth_mhz))
        throw ValidationError("overlap bandwidth " + std::to_string(overlap_bandwidth_mhz) +
                              " MHz is narrower than one carrier");
    if (bs.num_carriers == 1)
        return bs.eirp_per_carrier;
    return bs.eirp_per_carrier + Decibels{10.0 * std::log10(overlap_bandwidth_mhz / bs.carrier_bandwidth_mhz)};
}

Dbm aggregate_bs_eirp(const BaseStationConfig &bs) {
    return aggregate_bs_eirp(bs, bs.num_carriers * bs.carrier_bandwidth_mhz);
}

Dbm interference_power(Dbm bs_eirp, const PropagationEnvironment &env, const EarthStationConfig &es,
                       AngleDeg off_axis, DistanceKm d) {
    const GainDbi g = fss_off_axis_gain(off_axis, es.dish).gain;
    return bs_eirp - total_path_attenuation(env, d) + g - es.isolation() - es.frequency_offset;
}

Dbm interference_power(Dbm bs_eirp, const PropagationEnvironment &env, const EarthStationConfig &es,
                       GeometryInput geometry, DistanceKm d) {
    geometry.distance = d;
    return interference_power(bs_eirp, env, es, off_axis_angle(geometry), d);
}

Dbm satellite_signal_power(const SatelliteLinkConfig &sat) {
    sat.validate();
    const Dbw carriers = sat.eirp_per_transponder + Decibels{10.0 * std::log10(sat.num_carriers)};
    const Dbw received = carriers - free_space_path_loss(sat.downlink_frequency, sat.slant_range) + sat.receive_gain;
    return to_dbm(received);
}

LnbState classify_lnb_state(Dbm total, const LnbModel &lnb) {
    if (total < lnb.linear_limit)
        return LnbState::Linear;
    if (total < lnb.saturation_limit)
        return LnbState::Compression;
    return LnbState::Saturation;
}

BindingLimit binding_limit(ScenarioKind scenario, const ProtectionCriteria &pc, const LnbModel &lnb) {
    if (scenario == ScenarioKind::AdjacentBand)
        return {lnb.linear_limit, LimitKind::LnbLinear};
    const Dbm criterion = max_permissible_interference(pc);
    if (criterion <= lnb.linear_limit)
        return {criterion, LimitKind::ProtectionCriterion};
    return {lnb.linear_limit, LimitKind::LnbLinear};
}

} // namespace cbandcoex
