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

// Strongly typed logarithmic and physical quantities. Every value is checked on
// construction and immutable afterwards; dB arithmetic is only defined between
// types where the result has an unambiguous meaning.

#include <algorithm>
#include <cmath>
#include <compare>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>

#include "cbandcoex/error.hpp"

namespace cbandcoex {

namespace detail {
[[noreturn]] void fail_validation(const std::string &what);
[[noreturn]] void fail_domain(const std::string &what);

inline double require_finite(double v, const char *what) {
    if (!std::isfinite(v))
        fail_validation(std::string(what) + " must be finite");
    return v;
}
} // namespace detail

// Signed power ratio in dB (I/N, margins, deltas).
class Decibels {
public:
    constexpr Decibels() = default;
    explicit Decibels(double db) : db_(detail::require_finite(db, "decibel ratio")) {}

    double value() const { return db_; }
    double linear() const { return std::pow(10.0, db_ / 10.0); }

    Decibels operator-() const { return Decibels{-db_}; }
    friend Decibels operator+(Decibels a, Decibels b) { return Decibels{a.db_ + b.db_}; }
    friend Decibels operator-(Decibels a, Decibels b) { return Decibels{a.db_ - b.db_}; }
    auto operator<=>(const Decibels &) const = default;

private:
    double db_ = 0.0;
};

// Non-negative loss in dB. Negative inputs are rejected, never clamped.
class AttenuationDb {
public:
    constexpr AttenuationDb() = default;
    explicit AttenuationDb(double db) : db_(detail::require_finite(db, "attenuation")) {
        if (db_ < 0.0)
            detail::fail_validation("attenuation must be >= 0 dB, got " + std::to_string(db));
    }

    double value() const { return db_; }
    Decibels as_ratio() const { return Decibels{db_}; }

    friend AttenuationDb operator+(AttenuationDb a, AttenuationDb b) {
        return AttenuationDb{a.db_ + b.db_};
    }
    auto operator<=>(const AttenuationDb &) const = default;

private:
    double db_ = 0.0;
};

// Antenna gain relative to isotropic; may be negative.
class GainDbi {
public:
    constexpr GainDbi() = default;
    explicit GainDbi(double dbi) : dbi_(detail::require_finite(dbi, "antenna gain")) {}

    double value() const { return dbi_; }

    friend GainDbi operator+(GainDbi g, Decibels d) { return GainDbi{g.dbi_ + d.value()}; }
    auto operator<=>(const GainDbi &) const = default;

private:
    double dbi_ = 0.0;
};

enum class PowerReference { Milliwatt, Watt };

// Absolute power in dB relative to the reference carried in the type.
template <PowerReference Ref>
class PowerLevel {
public:
    static constexpr PowerReference reference = Ref;

    constexpr PowerLevel() = default;
    explicit PowerLevel(double db) : db_(detail::require_finite(db, "power level")) {}

    static PowerLevel from_watts(double watts) {
        if (!(watts > 0.0) || !std::isfinite(watts))
            detail::fail_domain("linear power must be positive and finite");
        const double db = 10.0 * std::log10(watts);
        return PowerLevel{Ref == PowerReference::Watt ? db : db + 30.0};
    }

    double value() const { return db_; }

    double watts() const {
        const double dbw = Ref == PowerReference::Watt ? db_ : db_ - 30.0;
        return std::pow(10.0, dbw / 10.0);
    }

    friend PowerLevel operator+(PowerLevel p, Decibels d) { return PowerLevel{p.db_ + d.value()}; }
    friend PowerLevel operator-(PowerLevel p, Decibels d) { return PowerLevel{p.db_ - d.value()}; }
    friend PowerLevel operator+(PowerLevel p, GainDbi g) { return PowerLevel{p.db_ + g.value()}; }
    friend PowerLevel operator-(PowerLevel p, AttenuationDb a) { return PowerLevel{p.db_ - a.value()}; }
    friend Decibels operator-(PowerLevel a, PowerLevel b) { return Decibels{a.db_ - b.db_}; }

    auto operator<=>(const PowerLevel &) const = default;

private:
    double db_ = 0.0;
};

using Dbm = PowerLevel<PowerReference::Milliwatt>;
using Dbw = PowerLevel<PowerReference::Watt>;

inline Dbw to_dbw(Dbm p) { return Dbw{p.value() - 30.0}; }
inline Dbw to_dbw(Dbw p) { return p; }
inline Dbm to_dbm(Dbw p) { return Dbm{p.value() + 30.0}; }
inline Dbm to_dbm(Dbm p) { return p; }

// 10*log10 of the summed linear powers. Throws DomainError on an empty list.
template <PowerReference Ref>
PowerLevel<Ref> power_sum(std::span<const PowerLevel<Ref>> terms) {
    if (terms.empty())
        detail::fail_domain("power_sum of an empty list is undefined");
    // Factor out the largest term so the exponentials stay in range.
    const double peak = std::max_element(terms.begin(), terms.end())->value();
    double acc = 0.0;
    for (const auto &t : terms)
        acc += std::pow(10.0, (t.value() - peak) / 10.0);
    return PowerLevel<Ref>{peak + 10.0 * std::log10(acc)};
}

inline Dbm power_sum(std::initializer_list<Dbm> terms) {
    return power_sum(std::span<const Dbm>(terms.begin(), terms.size()));
}
inline Dbw power_sum(std::initializer_list<Dbw> terms) {
    return power_sum(std::span<const Dbw>(terms.begin(), terms.size()));
}

class FrequencyGHz {
public:
    explicit FrequencyGHz(double ghz) : ghz_(detail::require_finite(ghz, "frequency")) {
        if (ghz_ <= 0.0)
            detail::fail_validation("frequency must be > 0 GHz");
    }

    double ghz() const { return ghz_; }
    double hz() const { return ghz_ * 1e9; }
    auto operator<=>(const FrequencyGHz &) const = default;

private:
    double ghz_;
};

class DistanceKm {
public:
    constexpr DistanceKm() = default;
    explicit DistanceKm(double km) : km_(detail::require_finite(km, "distance")) {
        if (km_ < 0.0)
            detail::fail_validation("distance must be >= 0 km");
    }

    double km() const { return km_; }
    double meters() const { return km_ * 1000.0; }
    auto operator<=>(const DistanceKm &) const = default;

private:
    double km_ = 0.0;
};

class LengthM {
public:
    constexpr LengthM() = default;
    explicit LengthM(double m) : m_(detail::require_finite(m, "length")) {
        if (m_ < 0.0)
            detail::fail_validation("length must be >= 0 m");
    }

    double meters() const { return m_; }
    auto operator<=>(const LengthM &) const = default;

private:
    double m_ = 0.0;
};

// Angle in [0, 360) degrees.
class AngleDeg {
public:
    constexpr AngleDeg() = default;
    explicit AngleDeg(double deg) : deg_(detail::require_finite(deg, "angle")) {
        if (deg_ < 0.0 || deg_ >= 360.0)
            detail::fail_validation("angle must lie in [0, 360) degrees");
    }

    // Wraps any finite angle into [0, 360).
    static AngleDeg normalized(double deg) {
        double w = std::fmod(detail::require_finite(deg, "angle"), 360.0);
        if (w < 0.0)
            w += 360.0;
        if (w >= 360.0)
            w = 0.0;
        return AngleDeg{w};
    }

    double degrees() const { return deg_; }
    double radians() const { return deg_ * std::numbers::pi / 180.0; }
    auto operator<=>(const AngleDeg &) const = default;

private:
    double deg_ = 0.0;
};

} // namespace cbandcoex
