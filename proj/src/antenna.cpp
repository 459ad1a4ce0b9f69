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

#include "cbandcoex/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cbandcoex {

namespace {

constexpr double flat_sidelobe_start_deg = 48.0;
constexpr double flat_sidelobe_gain_dbi = -10.0;

double sidelobe_envelope(double phi_deg) {
    if (phi_deg < flat_sidelobe_start_deg)
        return 32.0 - 25.0 * std::log10(phi_deg);
    return flat_sidelobe_gain_dbi;
}

void validate(const GeometryInput &g) {
    if (g.elevation.degrees() > 90.0)
        throw ValidationError("earth-station elevation must lie in [0, 90] degrees");
    if (g.distance.km() <= 0.0)
        throw ValidationError("interference path distance must be > 0 km");
    if (g.earth_radius.meters() <= 0.0)
        throw ValidationError("effective earth radius must be > 0 m");
}

} // namespace

double interference_path_elevation(const GeometryInput &g) {
    validate(g);
    const double d = g.distance.meters();
    return (g.es_height.meters() - g.bs_height.meters()) / d - d / (2.0 * g.earth_radius.meters());
}

AngleDeg off_axis_angle(const GeometryInput &g) {
    const double eps = interference_path_elevation(g);
    const double alpha = g.elevation.radians();
    const double theta = g.azimuth_offset.radians();
    const double c = std::cos(alpha) * std::cos(eps) * std::cos(theta) + std::sin(alpha) * std::sin(eps);
    const double phi = std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / std::numbers::pi;
    return AngleDeg{std::min(phi, 180.0)};
}

DishAntenna DishAntenna::at_frequency(LengthM diameter, FrequencyGHz f) {
    return DishAntenna{diameter, LengthM{speed_of_light_m_per_s / f.hz()}};
}

double DishAntenna::diameter_over_wavelength() const {
    if (diameter.meters() <= 0.0 || wavelength.meters() <= 0.0)
        throw ValidationError("dish diameter and wavelength must be > 0 m");
    return diameter.meters() / wavelength.meters();
}

AngleDeg phi_min(const DishAntenna &a) {
    const double ratio = a.diameter_over_wavelength();
    if (ratio >= 50.0)
        return AngleDeg{std::max(1.0, 100.0 / ratio)};
    return AngleDeg{std::max(2.0, 114.0 * std::pow(ratio, -1.09))};
}

OffAxisGain fss_off_axis_gain(AngleDeg phi, const DishAntenna &a) {
    if (phi.degrees() > 180.0)
        throw ValidationError("off-axis angle must lie in [0, 180] degrees");
    const double lower = phi_min(a).degrees();
    if (phi.degrees() < lower)
        return {GainDbi{sidelobe_envelope(lower)}, true};
    return {GainDbi{sidelobe_envelope(phi.degrees())}, false};
}

} // namespace cbandcoex
