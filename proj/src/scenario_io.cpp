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

#include "cbandcoex/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cbandcoex {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string strip_unit_suffix(std::string_view key) {
    static constexpr std::string_view suffixes[] = {"_dbm", "_dbw", "_dbi", "_db", "_mhz", "_ghz",
                                                    "_hz",  "_km",  "_m",   "_deg", "_k"};
    for (auto s : suffixes) {
        if (key.size() > s.size() && key.ends_with(s))
            return std::string(key.substr(0, key.size() - s.size()));
    }
    return std::string(key);
}

// A JSON object being consumed, with its dotted path for messages.
class Section {
public:
    Section(const json &node, std::string path, std::string_view text, std::string_view source,
            std::initializer_list<std::string_view> allowed)
        : node_(node), path_(std::move(path)), text_(text), source_(source), allowed_(allowed) {
        if (!node_.is_object())
            fail(path_.empty() ? "scenario root must be a JSON object" : path_ + " must be a JSON object");
        for (const auto &item : node_.items())
            check_known(item.key());
    }

    bool has(std::string_view key) const { return node_.contains(std::string(key)); }

    std::string qualified(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const json &raw(std::string_view key) const { return node_.at(std::string(key)); }

    double number(std::string_view key, double fallback) const {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_number())
            fail(qualified(key) + " must be a number");
        return v.get<double>();
    }

    int integer(std::string_view key, int fallback) const {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_number_integer())
            fail(qualified(key) + " must be an integer");
        return v.get<int>();
    }

    std::string string(std::string_view key, std::string fallback) const {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_string())
            fail(qualified(key) + " must be a string");
        return v.get<std::string>();
    }

    // Runs `assign`, prefixing any validation failure with the key's path.
    template <typename F>
    void field(std::string_view key, F &&assign) const {
        if (!has(key))
            return;
        try {
            assign();
        } catch (const ValidationError &e) {
            fail(qualified(key) + ": " + e.what());
        }
    }

    Section child(std::string_view key, std::initializer_list<std::string_view> allowed) const {
        static const json empty = json::object();
        return Section(has(key) ? raw(key) : empty, qualified(key), text_, source_, allowed);
    }

    [[noreturn]] void fail(const std::string &msg) const { throw ValidationError(std::string(source_) + ": " + msg); }

private:
    void check_known(const std::string &key) const {
        if (std::find(allowed_.begin(), allowed_.end(), key) != allowed_.end())
            return;
        std::string_view best;
        std::size_t best_score = static_cast<std::size_t>(-1);
        for (auto candidate : allowed_) {
            const std::size_t score =
                std::min(key_distance(key, candidate), key_distance(key, strip_unit_suffix(candidate)));
            if (score < best_score) {
                best_score = score;
                best = candidate;
            }
        }
        std::string msg = std::string(source_);
        const std::size_t pos = text_.find("\"" + key + "\"");
        if (pos != std::string_view::npos) {
            const auto [line, col] = line_col(text_, pos);
            msg += ":" + std::to_string(line) + ":" + std::to_string(col);
        }
        msg += ": unknown key '" + qualified(key) + "'";
        if (!best.empty() && best_score <= std::max<std::size_t>(3, key.size() / 2))
            msg += " (did you mean '" + std::string(best) + "'?)";
        throw ValidationError(msg);
    }

    const json &node_;
    std::string path_;
    std::string_view text_;
    std::string_view source_;
    std::vector<std::string_view> allowed_;
};

ScenarioKind parse_kind(const Section &root) {
    const std::string kind = root.string("scenario_kind", "adjacent_band");
    if (kind == "adjacent_band")
        return ScenarioKind::AdjacentBand;
    if (kind == "co_channel")
        return ScenarioKind::CoChannel;
    root.fail("scenario_kind must be 'adjacent_band' or 'co_channel', got '" + kind + "'");
}

void read_base_station(const Section &root, Scenario &s) {
    const Section bs = root.child("base_station", {"preset", "eirp_dbm", "carrier_bandwidth_mhz", "num_carriers", "height_m"});
    auto &cfg = s.base_station;
    const std::string preset = bs.string("preset", bs.has("eirp_dbm") ? "custom" : "macro");
    if (preset == "macro")
        cfg.preset = DeploymentPreset::RuralSuburbanUrbanMacro;
    else if (preset == "micro")
        cfg.preset = DeploymentPreset::UrbanSmallCellMicro;
    else if (preset == "custom")
        cfg.preset = DeploymentPreset::Custom;
    else
        bs.fail("base_station.preset must be 'macro', 'micro' or 'custom', got '" + preset + "'");

    if (cfg.preset != DeploymentPreset::Custom)
        cfg.eirp_per_carrier = preset_eirp(cfg.preset);
    else if (!bs.has("eirp_dbm"))
        bs.fail("base_station.eirp_dbm is required for the custom preset");

    bs.field("eirp_dbm", [&] { cfg.eirp_per_carrier = Dbm{bs.number("eirp_dbm", 0.0)}; });
    cfg.carrier_bandwidth_mhz = bs.number("carrier_bandwidth_mhz", cfg.carrier_bandwidth_mhz);
    cfg.num_carriers = bs.integer("num_carriers", cfg.num_carriers);
    bs.field("height_m", [&] { cfg.height = LengthM{bs.number("height_m", 0.0)}; });
    try {
        cfg.validate();
    } catch (const ValidationError &e) {
        bs.fail(e.what());
    }
}

void read_earth_station(const Section &root, Scenario &s, double &dish_diameter) {
    const Section es = root.child("earth_station",
                                  {"height_m", "elevation_deg", "dish_diameter_m", "boresight_gain_dbi",
                                   "filter_attenuation_db", "shielding_attenuation_db", "frequency_offset_db", "lnb"});
    auto &cfg = s.earth_station;
    es.field("height_m", [&] { cfg.height = LengthM{es.number("height_m", 0.0)}; });
    es.field("elevation_deg", [&] {
        const double e = es.number("elevation_deg", 0.0);
        if (e < 0.0 || e > 90.0)
            throw ValidationError("must lie in [0, 90] degrees");
        cfg.elevation = AngleDeg{e};
    });
    dish_diameter = es.number("dish_diameter_m", dish_diameter);
    if (!(dish_diameter > 0.0))
        es.fail("earth_station.dish_diameter_m must be > 0");
    es.field("boresight_gain_dbi", [&] { cfg.boresight_gain = GainDbi{es.number("boresight_gain_dbi", 0.0)}; });
    es.field("filter_attenuation_db",
             [&] { cfg.filter_attenuation = AttenuationDb{es.number("filter_attenuation_db", 0.0)}; });
    es.field("shielding_attenuation_db",
             [&] { cfg.shielding_attenuation = AttenuationDb{es.number("shielding_attenuation_db", 0.0)}; });
    es.field("frequency_offset_db",
             [&] { cfg.frequency_offset = AttenuationDb{es.number("frequency_offset_db", 0.0)}; });

    const Section lnb = es.child("lnb", {"linear_limit_dbm", "saturation_limit_dbm", "band_low_ghz", "band_high_ghz"});
    lnb.field("linear_limit_dbm", [&] { cfg.lnb.linear_limit = Dbm{lnb.number("linear_limit_dbm", 0.0)}; });
    lnb.field("saturation_limit_dbm",
              [&] { cfg.lnb.saturation_limit = Dbm{lnb.number("saturation_limit_dbm", 0.0)}; });
    cfg.lnb.band_low_ghz = lnb.number("band_low_ghz", cfg.lnb.band_low_ghz);
    cfg.lnb.band_high_ghz = lnb.number("band_high_ghz", cfg.lnb.band_high_ghz);
    try {
        cfg.lnb.validate();
    } catch (const ValidationError &e) {
        lnb.fail(e.what());
    }
}

void read_propagation(const Section &root, Scenario &s) {
    const Section p = root.child("propagation", {"frequency_ghz", "clutter", "clutter_height_m", "clutter_distance_km",
                                                 "gaseous_absorption_db"});
    p.field("frequency_ghz", [&] { s.frequency = FrequencyGHz{p.number("frequency_ghz", 0.0)}; });
    p.field("gaseous_absorption_db",
            [&] { s.gaseous_absorption = AttenuationDb{p.number("gaseous_absorption_db", 0.0)}; });

    const bool has_custom = p.has("clutter_height_m") || p.has("clutter_distance_km");
    const std::string name = p.string("clutter", has_custom ? "custom" : "suburban");
    const auto kind = parse_clutter_kind(name);
    if (!kind)
        p.fail("propagation.clutter: unknown clutter category '" + name + "'");
    if (*kind == ClutterKind::Custom) {
        if (!p.has("clutter_height_m") || !p.has("clutter_distance_km"))
            p.fail("custom clutter needs propagation.clutter_height_m and propagation.clutter_distance_km");
        try {
            s.clutter = ClutterCategory::custom(LengthM{p.number("clutter_height_m", 0.0)},
                                                DistanceKm{p.number("clutter_distance_km", 0.0)});
        } catch (const ValidationError &e) {
            p.fail(std::string("propagation.clutter: ") + e.what());
        }
    } else {
        if (has_custom)
            p.fail("clutter_height_m / clutter_distance_km are only valid with clutter 'custom'");
        s.clutter = ClutterCategory::builtin(*kind);
    }
}

void read_satellite(const Section &root, Scenario &s) {
    const Section sat =
        root.child("satellite", {"eirp_dbw", "num_carriers", "slant_range_km", "frequency_ghz", "receive_gain_dbi"});
    auto &cfg = s.satellite;
    sat.field("eirp_dbw", [&] { cfg.eirp_per_transponder = Dbw{sat.number("eirp_dbw", 0.0)}; });
    cfg.num_carriers = sat.integer("num_carriers", cfg.num_carriers);
    sat.field("slant_range_km", [&] { cfg.slant_range = DistanceKm{sat.number("slant_range_km", 0.0)}; });
    sat.field("frequency_ghz", [&] { cfg.downlink_frequency = FrequencyGHz{sat.number("frequency_ghz", 0.0)}; });
    cfg.receive_gain = s.earth_station.boresight_gain;
    sat.field("receive_gain_dbi", [&] { cfg.receive_gain = GainDbi{sat.number("receive_gain_dbi", 0.0)}; });
    try {
        cfg.validate();
    } catch (const ValidationError &e) {
        sat.fail(e.what());
    }
}

void read_protection(const Section &root, Scenario &s) {
    const Section pc = root.child("protection", {"i_over_n_db", "bandwidth_hz", "noise_temperature_k", "time_percentage"});
    auto &cfg = s.protection;
    pc.field("i_over_n_db", [&] { cfg.i_over_n_max = Decibels{pc.number("i_over_n_db", 0.0)}; });
    cfg.bandwidth_hz = pc.number("bandwidth_hz", cfg.bandwidth_hz);
    cfg.noise_temperature_k = pc.number("noise_temperature_k", cfg.noise_temperature_k);
    cfg.time_percentage = pc.number("time_percentage", cfg.time_percentage);
    try {
        cfg.validate();
    } catch (const ValidationError &e) {
        pc.fail(e.what());
    }
}

void read_geometry(const Section &root, Scenario &s) {
    const Section g = root.child("geometry", {"azimuth_offset_deg", "earth_radius_m", "off_axis_deg"});
    g.field("azimuth_offset_deg", [&] { s.azimuth_offset = AngleDeg::normalized(g.number("azimuth_offset_deg", 0.0)); });
    g.field("earth_radius_m", [&] {
        s.earth_radius = LengthM{g.number("earth_radius_m", 0.0)};
        if (s.earth_radius.meters() <= 0.0)
            throw ValidationError("must be > 0");
    });
    // Default: boresight aimed along the path azimuth, so off-axis = elevation.
    s.off_axis = s.earth_station.elevation;
    if (g.has("off_axis_deg")) {
        const json &v = g.raw("off_axis_deg");
        if (v.is_string() && v.get<std::string>() == "geometric") {
            s.off_axis.reset();
        } else if (v.is_number()) {
            g.field("off_axis_deg", [&] {
                const double phi = v.get<double>();
                if (phi < 0.0 || phi > 180.0)
                    throw ValidationError("must lie in [0, 180] degrees");
                s.off_axis = AngleDeg{phi};
            });
        } else {
            g.fail("geometry.off_axis_deg must be a number or \"geometric\"");
        }
    }
}

} // namespace

std::size_t key_distance(std::string_view a, std::string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i)
        d[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j)
        d[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
        }
    }
    return d[n][m];
}

Scenario parse_scenario(std::string_view text, std::string_view source_name) {
    json doc;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        doc = json::object();
    } else {
        try {
            doc = json::parse(text.begin(), text.end());
        } catch (const json::parse_error &e) {
            const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
            throw ValidationError(std::string(source_name) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                  ": parse error: " + e.what());
        }
    }

    const Section root(doc, "", text, source_name,
                       {"name", "scenario_kind", "base_station", "earth_station", "propagation", "satellite",
                        "protection", "geometry"});
    root.string("name", "");

    Scenario s = default_scenario();
    s.kind = parse_kind(root);
    double dish_diameter = s.earth_station.dish.diameter.meters();
    read_base_station(root, s);
    read_earth_station(root, s, dish_diameter);
    read_propagation(root, s);
    s.earth_station.dish = DishAntenna::at_frequency(LengthM{dish_diameter}, s.frequency);
    read_satellite(root, s);
    read_protection(root, s);
    read_geometry(root, s);

    try {
        s.validate();
    } catch (const Error &e) {
        throw ValidationError(std::string(source_name) + ": " + e.what());
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError(path.string() + ": cannot open scenario file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

} // namespace cbandcoex
