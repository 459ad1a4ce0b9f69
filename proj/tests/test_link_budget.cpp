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

#include <random>

#include "cbandcoex/link_budget.hpp"

using namespace cbandcoex;
using Catch::Approx;

namespace {

PropagationEnvironment suburban() {
    return PropagationEnvironment{FrequencyGHz{3.535}, ClutterCategory::builtin(ClutterKind::Suburban),
                                  AttenuationDb{0.0}, LengthM{10.0}};
}

EarthStationConfig earth_station(double isolation_db = 0.0, double offset_db = 0.0) {
    EarthStationConfig es;
    es.dish = DishAntenna::at_frequency(LengthM{1.8}, FrequencyGHz{3.535});
    es.filter_attenuation = AttenuationDb{isolation_db};
    es.frequency_offset = AttenuationDb{offset_db};
    return es;
}

} // namespace

TEST_CASE("noise floor", "[link]") {
    ProtectionCriteria pc;
    CHECK(noise_floor(pc).value() == Approx(-119.568267303298).margin(1e-9));
    pc.bandwidth_hz = 1.0;
    pc.noise_temperature_k = 1.0;
    CHECK(noise_floor(pc).value() == Approx(-228.599167173218).margin(1e-9));

    ProtectionCriteria wide;
    wide.bandwidth_hz *= 2.0;
    CHECK(noise_floor(wide).value() - noise_floor(ProtectionCriteria{}).value() == Approx(3.0102999566).margin(1e-9));

    ProtectionCriteria bad;
    bad.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(noise_floor(bad), ValidationError);
}

TEST_CASE("maximum permissible interference", "[link]") {
    ProtectionCriteria pc;
    CHECK(max_permissible_interference(pc).value() == Approx(-99.5682673032982).margin(1e-9));
    pc.i_over_n_max = Decibels{0.0};
    CHECK(max_permissible_interference(pc).value() == Approx(to_dbm(noise_floor(pc)).value()).margin(1e-12));
    ProtectionCriteria hot;
    hot.noise_temperature_k = 200.0;
    CHECK(max_permissible_interference(hot).value() == Approx(-96.5579673466584).margin(1e-9));
}

TEST_CASE("aggregate base-station EIRP", "[link]") {
    BaseStationConfig bs = BaseStationConfig::from_preset(DeploymentPreset::RuralSuburbanUrbanMacro);
    CHECK(bs.eirp_per_carrier.value() == 72.28);
    CHECK(aggregate_bs_eirp(bs, 270.0).value() == 72.28);
    bs.num_carriers = 6;
    CHECK(aggregate_bs_eirp(bs, 270.0).value() == Approx(80.0615125038364).margin(1e-9));
    CHECK(aggregate_bs_eirp(bs).value() == Approx(80.0615125038364).margin(1e-9));
    bs.num_carriers = 2;
    CHECK(aggregate_bs_eirp(bs, 90.0).value() == Approx(75.2902999566398).margin(1e-9));
    CHECK_THROWS_AS(aggregate_bs_eirp(bs, 30.0), ValidationError);

    CHECK(BaseStationConfig::from_preset(DeploymentPreset::UrbanSmallCellMicro).eirp_per_carrier.value() == 61.53);
    BaseStationConfig none;
    none.num_carriers = 0;
    CHECK_THROWS_AS(aggregate_bs_eirp(none), ValidationError);
}

TEST_CASE("interference power at the LNB input", "[link]") {
    const Dbm eirp{72.28};
    const double base = interference_power(eirp, suburban(), earth_station(), AngleDeg{10.0}, DistanceKm{156.2}).value();
    CHECK(base == Approx(-68.0014089534840).margin(1e-9));
    const double filtered =
        interference_power(eirp, suburban(), earth_station(60.0), AngleDeg{10.0}, DistanceKm{0.1562}).value();
    CHECK(filtered == Approx(-68.0014089534840).margin(1e-9));
    const double doubled =
        interference_power(eirp, suburban(), earth_station(), AngleDeg{10.0}, DistanceKm{312.4}).value();
    CHECK(doubled - base == Approx(-6.0205999133).margin(1e-9));
}

TEST_CASE("interference power from path geometry", "[link]") {
    GeometryInput g;
    const Dbm eirp{72.28};
    const DistanceKm d{10.0};
    g.distance = DistanceKm{999.0}; // replaced by the explicit distance
    const double via_geometry = interference_power(eirp, suburban(), earth_station(), g, d).value();
    g.distance = d;
    const double via_angle = interference_power(eirp, suburban(), earth_station(), off_axis_angle(g), d).value();
    CHECK(via_geometry == via_angle);
}

TEST_CASE("interference power responds dB-for-dB to each term", "[link][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> eirp(30.0, 90.0);
    std::uniform_real_distribution<double> logd(-1.0, 3.0);
    std::uniform_real_distribution<double> atten(0.0, 80.0);
    std::uniform_real_distribution<double> delta(0.01, 20.0);
    for (int i = 0; i < 300; ++i) {
        const Dbm p{eirp(rng)};
        const double d = std::pow(10.0, logd(rng));
        const double r = atten(rng);
        const double f = atten(rng);
        const double x = delta(rng);
        const double base = interference_power(p, suburban(), earth_station(r, f), AngleDeg{20.0}, DistanceKm{d}).value();
        CHECK(interference_power(p + Decibels{x}, suburban(), earth_station(r, f), AngleDeg{20.0}, DistanceKm{d}).value() -
                  base ==
              Approx(x).margin(1e-9));
        CHECK(base - interference_power(p, suburban(), earth_station(r + x, f), AngleDeg{20.0}, DistanceKm{d}).value() ==
              Approx(x).margin(1e-9));
        CHECK(base - interference_power(p, suburban(), earth_station(r, f + x), AngleDeg{20.0}, DistanceKm{d}).value() ==
              Approx(x).margin(1e-9));
        CHECK(interference_power(p, suburban(), earth_station(r, f), AngleDeg{20.0}, DistanceKm{d * 1.001}).value() < base);
    }
}

TEST_CASE("satellite carrier power", "[link]") {
    SatelliteLinkConfig sat;
    CHECK(satellite_signal_power(sat).value() == Approx(-72.6974941974188).margin(1e-9));
    SatelliteLinkConfig one = sat;
    one.num_carriers = 1;
    CHECK(satellite_signal_power(one).value() == Approx(-83.8369277204872).margin(1e-9));
    SatelliteLinkConfig more_gain = sat;
    more_gain.receive_gain = GainDbi{46.0};
    CHECK(satellite_signal_power(more_gain).value() - satellite_signal_power(sat).value() ==
          Approx(3.0).margin(1e-12));
    // The wanted signal alone leaves the LNB linear.
    CHECK(classify_lnb_state(satellite_signal_power(sat), LnbModel{}) == LnbState::Linear);
}

TEST_CASE("total received power", "[link]") {
    CHECK(total_received_power(Dbm{-72.76}, Dbm{-72.76}).value() == Approx(-69.7497000434).margin(1e-9));
    CHECK(total_received_power(Dbm{-72.76}, Dbm{-99.57}).value() == Approx(-72.7509565932972).margin(1e-9));
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> db(-140.0, -20.0);
    for (int i = 0; i < 200; ++i) {
        const Dbm a{db(rng)};
        const Dbm b{db(rng)};
        CHECK(total_received_power(a, b) >= std::max(a, b));
    }
}

TEST_CASE("LNB region classification", "[link]") {
    const LnbModel lnb;
    CHECK(classify_lnb_state(Dbm{-70.0}, lnb) == LnbState::Linear);
    CHECK(classify_lnb_state(Dbm{-65.0}, lnb) == LnbState::Compression);
    CHECK(classify_lnb_state(Dbm{-55.0}, lnb) == LnbState::Saturation);
    CHECK(classify_lnb_state(Dbm{-68.0}, lnb) == LnbState::Compression);
    CHECK(classify_lnb_state(Dbm{-60.0}, lnb) == LnbState::Saturation);

    // Raising power never moves the state back toward linear.
    auto rank = [](LnbState s) { return static_cast<int>(s); };
    int prev = rank(LnbState::Linear);
    for (double p = -120.0; p <= 0.0; p += 0.01) {
        const int now = rank(classify_lnb_state(Dbm{p}, lnb));
        CHECK(now >= prev);
        prev = now;
    }

    LnbModel inverted;
    inverted.linear_limit = Dbm{-50.0};
    CHECK_THROWS_AS(inverted.validate(), ValidationError);
}

TEST_CASE("applicable limit", "[link]") {
    const ProtectionCriteria pc;
    LnbModel lnb;
    CHECK(applicable_limit(ScenarioKind::CoChannel, pc, lnb).value() == Approx(-99.5682673032982).margin(1e-9));
    CHECK(binding_limit(ScenarioKind::CoChannel, pc, lnb).kind == LimitKind::ProtectionCriterion);
    CHECK(applicable_limit(ScenarioKind::AdjacentBand, pc, lnb).value() == -68.0);
    CHECK(binding_limit(ScenarioKind::AdjacentBand, pc, lnb).kind == LimitKind::LnbLinear);
    CHECK(applicable_limit(ScenarioKind::CoChannel, pc, lnb) <= applicable_limit(ScenarioKind::AdjacentBand, pc, lnb));

    lnb.linear_limit = Dbm{-110.0};
    CHECK(applicable_limit(ScenarioKind::CoChannel, pc, lnb).value() == -110.0);
    CHECK(binding_limit(ScenarioKind::CoChannel, pc, lnb).kind == LimitKind::LnbLinear);
}
