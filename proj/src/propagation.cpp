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

#include "cbandcoex/propagation.hpp"

#include <cmath>

namespace cbandcoex {

namespace {

struct NominalClutter {
    ClutterKind kind;
    std::string_view name;
    double height_m;
    double distance_km;
};

constexpr std::array<NominalClutter, 7> nominal_clutter = {{
    {ClutterKind::VillageCentre, "village_centre", 5.0, 0.07},
    {ClutterKind::Suburban, "suburban", 9.0, 0.025},
    {ClutterKind::DenseSuburban, "dense_suburban", 12.0, 0.02},
    {ClutterKind::Urban, "urban", 20.0, 0.02},
    {ClutterKind::DenseUrban, "dense_urban", 25.0, 0.02},
    {ClutterKind::HighRiseUrban, "high_rise_urban", 35.0, 0.02},
    {ClutterKind::IndustrialZone, "industrial_zone", 20.0, 0.05},
}};

// 20 log10(4 pi / c) with f in GHz and d in km, c = 3e8 m/s.
constexpr double fspl_constant_db = 92.44;

} // namespace

ClutterCategory ClutterCategory::builtin(ClutterKind kind) {
    for (const auto &n : nominal_clutter) {
        if (n.kind == kind)
            return ClutterCategory{kind, LengthM{n.height_m}, DistanceKm{n.distance_km}};
    }
    throw ValidationError("custom clutter needs explicit nominal height and distance");
}

ClutterCategory ClutterCategory::custom(LengthM nominal_height, DistanceKm nominal_distance) {
    if (nominal_height.meters() <= 0.0)
        throw ValidationError("custom clutter nominal height must be > 0 m");
    if (nominal_distance.km() <= 0.0)
        throw ValidationError("custom clutter nominal distance must be > 0 km");
    return ClutterCategory{ClutterKind::Custom, nominal_height, nominal_distance};
}

std::string_view to_string(ClutterKind kind) {
    for (const auto &n : nominal_clutter) {
        if (n.kind == kind)
            return n.name;
    }
    return "custom";
}

std::optional<ClutterKind> parse_clutter_kind(std::string_view name) {
    for (const auto &n : nominal_clutter) {
        if (n.name == name)
            return n.kind;
    }
    if (name == "custom")
        return ClutterKind::Custom;
    return std::nullopt;
}

AttenuationDb free_space_path_loss(FrequencyGHz f, DistanceKm d) {
    if (d.km() <= 0.0)
        throw DomainError("free-space path loss undefined at zero distance");
    const double loss = fspl_constant_db + 20.0 * std::log10(f.ghz()) + 20.0 * std::log10(d.km());
    if (loss < 0.0)
        throw DomainError("distance is inside the near field; free-space formula does not apply");
    return AttenuationDb{loss};
}

double clutter_frequency_factor(FrequencyGHz f) {
    return 0.25 + 0.375 * (1.0 + std::tanh(7.5 * (f.ghz() - 0.5)));
}

double clutter_loss_raw(const PropagationEnvironment &env) {
    const double ha = env.clutter.nominal_height().meters();
    if (ha <= 0.0)
        throw DomainError("clutter category has zero nominal height");
    const double dk = env.clutter.nominal_distance().km();
    const double h = env.antenna_height.meters();
    return 10.25 * clutter_frequency_factor(env.frequency) * std::exp(-dk) *
               (1.0 - std::tanh(6.0 * (h / ha - 0.625))) -
           0.33;
}

AttenuationDb clutter_loss(const PropagationEnvironment &env) {
    return AttenuationDb{std::max(0.0, clutter_loss_raw(env))};
}

AttenuationDb total_path_attenuation(const PropagationEnvironment &env, DistanceKm d) {
    return free_space_path_loss(env.frequency, d) + env.gaseous_absorption + clutter_loss(env);
}

} // namespace cbandcoex
