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

#include "cbandcoex/solver.hpp"

#include <cmath>
#include <string>

namespace cbandcoex {

namespace {

// Search window for geometric off-axis mode, in km.
constexpr double geometric_search_min_km = 1e-3;
constexpr double geometric_search_max_km = 1e5;
constexpr int geometric_grid_per_decade = 100;

AngleDeg off_axis_at(const Scenario &s, DistanceKm d) {
    if (s.off_axis)
        return *s.off_axis;
    return off_axis_angle(s.geometry_at(d));
}

DistanceKm closed_form_crossing(const Scenario &s, Dbm level) {
    // FSPL at 1 km carries every distance-independent term, so the remaining
    // 20 log10(d) is all that is left to solve for.
    const Decibels excess = scenario_interference(s, DistanceKm{1.0}) - level;
    const double d = std::pow(10.0, excess.value() / 20.0);
    if (!std::isfinite(d) || d <= 0.0)
        throw InfeasibleError("no finite separation distance reaches " + std::to_string(level.value()) + " dBm");
    return DistanceKm{d};
}

DistanceKm bracketed_crossing(const Scenario &s, Dbm level) {
    const double lo_exp = std::log10(geometric_search_min_km);
    const double hi_exp = std::log10(geometric_search_max_km);
    const int steps = static_cast<int>(std::lround((hi_exp - lo_exp) * geometric_grid_per_decade));
    auto at = [&](int i) { return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / steps); };
    auto above = [&](double km) { return scenario_interference(s, DistanceKm{km}) > level; };

    int last_above = -1;
    for (int i = 0; i <= steps; ++i) {
        if (above(at(i)))
            last_above = i;
    }
    if (last_above < 0)
        return DistanceKm{geometric_search_min_km};
    if (last_above == steps)
        throw InfeasibleError("interference exceeds the limit beyond " +
                              std::to_string(geometric_search_max_km) + " km");

    double lo = std::log10(at(last_above));
    double hi = std::log10(at(last_above + 1));
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (above(std::pow(10.0, mid)))
            lo = mid;
        else
            hi = mid;
    }
    return DistanceKm{std::pow(10.0, hi)};
}

bool is_strictly_monotone(const std::vector<SweepValue> &values) {
    if (values.size() < 2)
        return true;
    const double first = std::get<double>(values[0]);
    const double second = std::get<double>(values[1]);
    if (first == second)
        return false;
    const bool increasing = second > first;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double a = std::get<double>(values[i - 1]);
        const double b = std::get<double>(values[i]);
        if (increasing ? !(b > a) : !(b < a))
            return false;
    }
    return true;
}

void validate_spec(const SweepSpec &spec) {
    spec.fixed_scenario.validate();
    if (spec.values.empty())
        throw ValidationError("sweep has no values");
    const bool wants_clutter = spec.parameter == SweepParameter::ClutterCategory;
    for (const auto &v : spec.values) {
        if (std::holds_alternative<ClutterCategory>(v) != wants_clutter)
            throw ValidationError(std::string("sweep value type does not match parameter ") +
                                  std::string(to_string(spec.parameter)));
    }
    if (!wants_clutter && !is_strictly_monotone(spec.values))
        throw ValidationError("sweep values must be strictly monotone");
    // Applying every value up front surfaces range errors before any row exists.
    for (const auto &v : spec.values)
        apply_sweep_value(spec.fixed_scenario, spec.parameter, v).validate();
    if (spec.evaluation_distance && spec.evaluation_distance->km() <= 0.0)
        throw ValidationError("sweep evaluation distance must be > 0 km");
}

} // namespace

void Scenario::validate() const {
    base_station.validate();
    earth_station.validate();
    satellite.validate();
    protection.validate();
    if (earth_radius.meters() <= 0.0)
        throw ValidationError("geometry.earth_radius_m must be > 0");
    if (off_axis && off_axis->degrees() > 180.0)
        throw ValidationError("geometry.off_axis_deg must lie in [0, 180]");
    const double expected = speed_of_light_m_per_s / frequency.hz();
    if (std::abs(earth_station.dish.wavelength.meters() - expected) > 1e-9 * expected)
        throw ValidationError("dish wavelength does not match the interference frequency");
    clutter_loss(environment());
}

PropagationEnvironment Scenario::environment() const {
    return PropagationEnvironment{frequency, clutter, gaseous_absorption, earth_station.height};
}

GeometryInput Scenario::geometry_at(DistanceKm d) const {
    return GeometryInput{earth_station.elevation, azimuth_offset, earth_station.height,
                         base_station.height,     d,              earth_radius};
}

Scenario default_scenario() {
    Scenario s;
    s.earth_station.dish = DishAntenna::at_frequency(LengthM{1.8}, s.frequency);
    s.off_axis = s.earth_station.elevation;
    return s;
}

Dbm scenario_interference(const Scenario &s, DistanceKm d) {
    return interference_power(s.bs_eirp(), s.environment(), s.earth_station, off_axis_at(s, d), d);
}

Assessment assess(const Scenario &s, DistanceKm d) {
    s.validate();
    Assessment a;
    a.distance = d;
    a.off_axis = off_axis_at(s, d);
    a.main_lobe_adjacent = fss_off_axis_gain(a.off_axis, s.earth_station.dish).main_lobe_adjacent;
    a.interference = interference_power(s.bs_eirp(), s.environment(), s.earth_station, a.off_axis, d);
    a.satellite = satellite_signal_power(s.satellite);
    a.total = total_received_power(a.interference, a.satellite);
    a.state = classify_lnb_state(a.total, s.earth_station.lnb);
    a.margin_to_linear = s.earth_station.lnb.linear_limit - a.total;
    return a;
}

DistanceKm crossing_distance(const Scenario &s, Dbm level) {
    s.validate();
    return s.off_axis ? closed_form_crossing(s, level) : bracketed_crossing(s, level);
}

SeparationSolution min_separation_distance(const Scenario &s) {
    const BindingLimit limit = s.limit();
    SeparationSolution sol;
    sol.distance = crossing_distance(s, limit.level);
    sol.binding_limit = limit.level;
    sol.limit_kind = limit.kind;
    sol.off_axis = off_axis_at(s, sol.distance);
    sol.main_lobe_flag = fss_off_axis_gain(sol.off_axis, s.earth_station.dish).main_lobe_adjacent;
    return sol;
}

AttenuationDb required_attenuation(const Scenario &s, DistanceKm target) {
    s.validate();
    if (target.km() <= 0.0)
        throw ValidationError("target distance must be > 0 km");
    const Decibels excess = scenario_interference(s, target) - s.limit().level;
    return AttenuationDb{std::max(0.0, excess.value())};
}

std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::Distance:
        return "distance";
    case SweepParameter::Eirp:
        return "eirp";
    case SweepParameter::OffAxisAngle:
        return "off_axis";
    case SweepParameter::FilterAttenuation:
        return "filter";
    case SweepParameter::ClutterCategory:
        return "clutter";
    }
    return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    for (auto p : {SweepParameter::Distance, SweepParameter::Eirp, SweepParameter::OffAxisAngle,
                   SweepParameter::FilterAttenuation, SweepParameter::ClutterCategory}) {
        if (to_string(p) == name)
            return p;
    }
    return std::nullopt;
}

Scenario apply_sweep_value(const Scenario &base, SweepParameter p, const SweepValue &value) {
    Scenario s = base;
    switch (p) {
    case SweepParameter::Distance:
        if (std::get<double>(value) <= 0.0)
            throw ValidationError("swept distance must be > 0 km");
        break;
    case SweepParameter::Eirp:
        s.base_station.eirp_per_carrier = Dbm{std::get<double>(value)};
        s.base_station.preset = DeploymentPreset::Custom;
        break;
    case SweepParameter::OffAxisAngle:
        s.off_axis = AngleDeg{std::get<double>(value)};
        break;
    case SweepParameter::FilterAttenuation:
        s.earth_station.filter_attenuation = AttenuationDb{std::get<double>(value)};
        break;
    case SweepParameter::ClutterCategory:
        s.clutter = std::get<ClutterCategory>(value);
        break;
    }
    return s;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate_spec(spec);
    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (const auto &v : spec.values) {
        const Scenario s = apply_sweep_value(spec.fixed_scenario, spec.parameter, v);
        SweepRow row{v, {}, min_separation_distance(s)};
        DistanceKm where = row.separation.distance;
        if (spec.parameter == SweepParameter::Distance)
            where = DistanceKm{std::get<double>(v)};
        else if (spec.evaluation_distance)
            where = *spec.evaluation_distance;
        row.at = assess(s, where);
        rows.push_back(row);
    }
    return rows;
}

} // namespace cbandcoex
