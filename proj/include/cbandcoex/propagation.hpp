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
#include <optional>
#include <string_view>

#include "cbandcoex/units.hpp"

namespace cbandcoex {

enum class ClutterKind {
    VillageCentre,
    Suburban,
    DenseSuburban,
    Urban,
    DenseUrban,
    HighRiseUrban,
    IndustrialZone,
    Custom,
};

// Nominal clutter height and distance for a local clutter category.
class ClutterCategory {
public:
    // Built-in categories; throws ValidationError for ClutterKind::Custom.
    static ClutterCategory builtin(ClutterKind kind);
    // User-defined category; both values must be strictly positive.
    static ClutterCategory custom(LengthM nominal_height, DistanceKm nominal_distance);

    ClutterKind kind() const { return kind_; }
    LengthM nominal_height() const { return height_; }
    DistanceKm nominal_distance() const { return distance_; }

    bool operator==(const ClutterCategory &) const = default;

private:
    ClutterCategory(ClutterKind kind, LengthM h, DistanceKm d) : kind_(kind), height_(h), distance_(d) {}

    ClutterKind kind_;
    LengthM height_;
    DistanceKm distance_;
};

inline constexpr std::array<ClutterKind, 7> builtin_clutter_kinds = {
    ClutterKind::VillageCentre, ClutterKind::Suburban,      ClutterKind::DenseSuburban,
    ClutterKind::Urban,         ClutterKind::DenseUrban,    ClutterKind::HighRiseUrban,
    ClutterKind::IndustrialZone,
};

// snake_case names used in config files and reports ("dense_urban").
std::string_view to_string(ClutterKind kind);
std::optional<ClutterKind> parse_clutter_kind(std::string_view name);

struct PropagationEnvironment {
    FrequencyGHz frequency{3.535};
    ClutterCategory clutter = ClutterCategory::builtin(ClutterKind::Suburban);
    AttenuationDb gaseous_absorption{0.0};
    // Receive antenna height above local ground, used by the clutter term.
    LengthM antenna_height{10.0};
};

// 92.44 + 20 log10(f/GHz) + 20 log10(d/km). Throws DomainError for d == 0 or
// when d is so short the far-field formula would turn negative.
AttenuationDb free_space_path_loss(FrequencyGHz f, DistanceKm d);

double clutter_frequency_factor(FrequencyGHz f);

// Receiver-end clutter loss, clamped at 0 dB.
AttenuationDb clutter_loss(const PropagationEnvironment &env);

// Unclamped clutter expression; may be slightly negative for antennas above
// the clutter.
double clutter_loss_raw(const PropagationEnvironment &env);

AttenuationDb total_path_attenuation(const PropagationEnvironment &env, DistanceKm d);

} // namespace cbandcoex
