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

#include "cbandcoex/propagation.hpp"

using namespace cbandcoex;
using Catch::Approx;

namespace {

PropagationEnvironment env_for(ClutterKind kind, double h = 10.0, double f = 3.535) {
    return PropagationEnvironment{FrequencyGHz{f}, ClutterCategory::builtin(kind), AttenuationDb{0.0}, LengthM{h}};
}

} // namespace

TEST_CASE("free-space path loss", "[propagation]") {
    CHECK(free_space_path_loss(FrequencyGHz{1.0}, DistanceKm{1.0}).value() == Approx(92.44).margin(1e-12));
    CHECK(free_space_path_loss(FrequencyGHz{3.95}, DistanceKm{42000.0}).value() ==
          Approx(196.836927720487).margin(1e-9));
    CHECK(free_space_path_loss(FrequencyGHz{3.535}, DistanceKm{1.0}).value() ==
          Approx(103.407788362658).margin(1e-9));
}

TEST_CASE("free-space path loss rejects degenerate distances", "[propagation]") {
    CHECK_THROWS_AS(free_space_path_loss(FrequencyGHz{3.5}, DistanceKm{0.0}), DomainError);
    CHECK_THROWS_AS(free_space_path_loss(FrequencyGHz{3.5}, DistanceKm{1e-9}), DomainError);
}

TEST_CASE("free-space path loss is monotone with a 6.02 dB distance-doubling law", "[propagation][property]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> logd(-2.0, 5.0);
    std::uniform_real_distribution<double> f(0.1, 40.0);
    for (int i = 0; i < 500; ++i) {
        const FrequencyGHz freq{f(rng)};
        const double d = std::pow(10.0, logd(rng));
        const double l1 = free_space_path_loss(freq, DistanceKm{d}).value();
        const double l2 = free_space_path_loss(freq, DistanceKm{2 * d}).value();
        CHECK(l2 - l1 == Approx(6.0205999).margin(1e-6));
        CHECK(free_space_path_loss(FrequencyGHz{freq.ghz() * 1.01}, DistanceKm{d}).value() > l1);
    }
}

TEST_CASE("clutter frequency factor", "[propagation]") {
    CHECK(clutter_frequency_factor(FrequencyGHz{3.535}) == Approx(1.0).margin(1e-9));
    CHECK(clutter_frequency_factor(FrequencyGHz{0.5}) == Approx(0.625).margin(1e-15));
    CHECK(clutter_frequency_factor(FrequencyGHz{0.1}) == Approx(0.251854467367476).margin(1e-12));
}

TEST_CASE("built-in clutter categories carry the nominal table", "[propagation]") {
    struct Row { ClutterKind kind; double h; double d; };
    const Row table[] = {{ClutterKind::VillageCentre, 5, 0.07}, {ClutterKind::Suburban, 9, 0.025},
                         {ClutterKind::DenseSuburban, 12, 0.02}, {ClutterKind::Urban, 20, 0.02},
                         {ClutterKind::DenseUrban, 25, 0.02},    {ClutterKind::HighRiseUrban, 35, 0.02},
                         {ClutterKind::IndustrialZone, 20, 0.05}};
    for (const auto &r : table) {
        const auto c = ClutterCategory::builtin(r.kind);
        CHECK(c.nominal_height().meters() == r.h);
        CHECK(c.nominal_distance().km() == r.d);
        CHECK(parse_clutter_kind(to_string(r.kind)) == r.kind);
    }
    CHECK_THROWS_AS(ClutterCategory::builtin(ClutterKind::Custom), ValidationError);
    CHECK_THROWS_AS(ClutterCategory::custom(LengthM{0.0}, DistanceKm{0.02}), ValidationError);
    CHECK_THROWS_AS(ClutterCategory::custom(LengthM{10.0}, DistanceKm{0.0}), ValidationError);
}

TEST_CASE("clutter loss at 10 m, 3.535 GHz", "[propagation]") {
    // Raw suburban value is about -0.27 dB and must clamp to zero.
    CHECK(clutter_loss_raw(env_for(ClutterKind::Suburban)) == Approx(-0.271622951280163).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::Suburban)).value() == 0.0);
    CHECK(clutter_loss(env_for(ClutterKind::Urban)).value() == Approx(16.0984010463367).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::DenseUrban)).value() == Approx(18.4986816015433).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::HighRiseUrban)).value() == Approx(19.4271538671213).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::IndustrialZone)).value() == Approx(15.6128684187611).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::DenseSuburban)).value() == Approx(1.19429979203390).margin(1e-9));
    CHECK(clutter_loss(env_for(ClutterKind::VillageCentre)).value() == 0.0);
}

TEST_CASE("clutter loss is non-increasing in antenna height and vanishes far above clutter",
          "[propagation][property]") {
    for (auto kind : builtin_clutter_kinds) {
        double prev = clutter_loss(env_for(kind, 0.0)).value();
        for (double h = 0.5; h <= 200.0; h += 0.5) {
            const double now = clutter_loss(env_for(kind, h)).value();
            CHECK(now <= prev);
            CHECK(now >= 0.0);
            prev = now;
        }
        CHECK(clutter_loss(env_for(kind, 1000.0)).value() == 0.0);
    }
}

TEST_CASE("total path attenuation", "[propagation]") {
    CHECK(total_path_attenuation(env_for(ClutterKind::Suburban), DistanceKm{1.0}).value() ==
          Approx(103.407788362658).margin(1e-9));
    CHECK(total_path_attenuation(env_for(ClutterKind::Urban), DistanceKm{1.0}).value() ==
          Approx(103.407788362658 + 16.0984010463367).margin(1e-9));

    auto env = env_for(ClutterKind::DenseUrban);
    const double base = total_path_attenuation(env, DistanceKm{5.0}).value();
    env.gaseous_absorption = AttenuationDb{2.0};
    CHECK(total_path_attenuation(env, DistanceKm{5.0}).value() - base == Approx(2.0).margin(1e-12));
}

TEST_CASE("excess over free space does not depend on distance", "[propagation][property]") {
    const auto env = env_for(ClutterKind::Urban);
    const double excess = total_path_attenuation(env, DistanceKm{1.0}).value() -
                          free_space_path_loss(env.frequency, DistanceKm{1.0}).value();
    for (double d : {0.01, 0.3, 7.0, 150.0, 4000.0}) {
        CHECK(total_path_attenuation(env, DistanceKm{d}).value() -
                  free_space_path_loss(env.frequency, DistanceKm{d}).value() ==
              Approx(excess).margin(1e-9));
    }
}
