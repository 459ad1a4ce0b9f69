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

#include "cbandcoex/units.hpp"

namespace cbandcoex {

inline constexpr double speed_of_light_m_per_s = 299'792'458.0;

// Geometry of the interference path as seen from the earth station.
struct GeometryInput {
    AngleDeg elevation{10.0};      // earth-station elevation, [0, 90]
    AngleDeg azimuth_offset{0.0};  // base-station azimuth relative to the main lobe
    LengthM es_height{10.0};
    LengthM bs_height{10.0};
    DistanceKm distance{1.0};      // must be > 0
    LengthM earth_radius{8.5e6};   // effective earth radius
};

// Elevation of the interference path above the local horizontal, in radians.
// Negative when the base station sits below the horizon of the earth station.
double interference_path_elevation(const GeometryInput &g);

// Angle between the interference arrival direction and the dish boresight,
// in [0, 180] degrees.
AngleDeg off_axis_angle(const GeometryInput &g);

// Receive dish; wavelength is carried so the pattern can tell small dishes
// (D/lambda < 50) from large ones.
struct DishAntenna {
    LengthM diameter{1.8};
    LengthM wavelength{speed_of_light_m_per_s / 3.535e9};

    static DishAntenna at_frequency(LengthM diameter, FrequencyGHz f);

    double diameter_over_wavelength() const;
};

// Lower edge of the sidelobe envelope.
AngleDeg phi_min(const DishAntenna &a);

struct OffAxisGain {
    GainDbi gain;
    // Set when the arrival angle is inside phi_min, where the envelope is not
    // defined and the gain was clamped to its value at phi_min.
    bool main_lobe_adjacent = false;
};

// Sidelobe reference envelope: 32 - 25 log10(phi) dBi for phi_min <= phi < 48,
// -10 dBi for 48 <= phi <= 180.
OffAxisGain fss_off_axis_gain(AngleDeg phi, const DishAntenna &a);

} // namespace cbandcoex
