// irs-planner: SINR coverage and IRS placement toolkit
// Copyright (C) 2026 The irs-planner Authors
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
//
// Closed-form link budget: unit conversions, the distance-power path loss of a
// direct link, and the cascaded BS -> surface -> user power of an IRS link.
// All power arithmetic is linear (watts); dB and dBm only appear in the
// conversion helpers.

#pragma once

#include "irsplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

namespace irsplan {

inline constexpr double speed_of_light = 299'792'458.0; // m/s, exact SI value
inline constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Geometry

struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position3D&) const = default;

    [[nodiscard]] bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Position3D operator+(const Position3D& a, const Position3D& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Position3D operator-(const Position3D& a, const Position3D& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline double dot(const Position3D& a, const Position3D& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Position3D& v) { return std::hypot(v.x, v.y, v.z); }

/// Euclidean distance in meters; symmetric, zero only for coincident points.
inline double distance(const Position3D& a, const Position3D& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

// ---------------------------------------------------------------------------
// Unit conversions

inline double wavelength(double carrier_frequency_hz) {
    detail::require_positive(carrier_frequency_hz, "carrier frequency");
    return speed_of_light / carrier_frequency_hz;
}

inline double watts_to_dbm(double p_watts) {
    detail::require_positive(p_watts, "power");
    return 10.0 * std::log10(p_watts / 1e-3);
}

inline double dbm_to_watts(double p_dbm) { return 1e-3 * std::pow(10.0, p_dbm / 10.0); }

inline double db_to_linear(double g_db) { return std::pow(10.0, g_db / 10.0); }

/// Linear ratio to dB. Zero maps to -infinity; negative ratios are rejected.
inline double linear_to_db(double ratio) {
    detail::require_non_negative(ratio, "ratio");
    if (ratio == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

inline double degrees_to_radians(double deg) { return deg * (pi / 180.0); }
inline double radians_to_degrees(double rad) { return rad * (180.0 / pi); }

// ---------------------------------------------------------------------------
// Environment and links

struct RadioEnvironment {
    double carrier_frequency = 130e9;         // Hz
    double noise_power = 1e-12;               // W (-90 dBm)
    double pathloss_exponent_micro = 3.0;
    double pathloss_exponent_macro = 4.0;

    [[nodiscard]] double wavelength() const { return irsplan::wavelength(carrier_frequency); }

    bool operator==(const RadioEnvironment&) const = default;

    void validate() const {
        detail::require_positive(carrier_frequency, "carrier_frequency");
        detail::require_positive(noise_power, "noise_power");
        if (!(pathloss_exponent_micro >= 2.0) || !std::isfinite(pathloss_exponent_micro))
            throw ConfigError("pathloss_exponent_micro must be >= 2");
        if (!(pathloss_exponent_macro >= 2.0) || !std::isfinite(pathloss_exponent_macro))
            throw ConfigError("pathloss_exponent_macro must be >= 2");
    }
};

struct ConventionalLink {
    double transmit_power = 0.0; // W
    Position3D transmitter;
    Position3D receiver;
    double pathloss_exponent = 2.0;
};

/// Received power of a direct link: P_t * lambda^2 / (D^alpha * 16 pi^2).
/// Reduces to free-space Friis for alpha = 2.
inline double conventional_rx_power(const ConventionalLink& link, const RadioEnvironment& env) {
    detail::require_non_negative(link.transmit_power, "transmit power");
    const double d = distance(link.transmitter, link.receiver);
    if (!(d > 0.0)) throw DomainError("conventional link with zero transmitter-receiver separation");
    const double lambda = env.wavelength();
    const double spreading = std::pow(d, link.pathloss_exponent) * (16.0 * pi * pi);
    return link.transmit_power * (lambda * lambda) / spreading;
}

// ---------------------------------------------------------------------------
// Intelligent reflecting surface

/// Fixed incidence/reflection angles, both in [0, pi/2).
struct FixedAngles {
    double theta_t = pi / 4.0;
    double theta_r = pi / 4.0;
    bool operator==(const FixedAngles&) const = default;
};

/// Angles derived from geometry against the panel's outward unit normal.
struct GeometricNormal {
    Position3D unit_normal{0.0, 0.0, 1.0};
    bool operator==(const GeometricNormal&) const = default;
};

using AngleMode = std::variant<FixedAngles, GeometricNormal>;

struct IrsPanel {
    int elements_m = 128;
    int elements_n = 128;
    double element_len_x = 0.0; // m
    double element_len_y = 0.0; // m
    double reflection_coefficient = 0.9;
    double gain_tx = 100.0;     // linear
    double gain_rx = 1.0;       // linear
    Position3D position;
    AngleMode angle_mode = FixedAngles{};

    bool operator==(const IrsPanel&) const = default;

    void validate() const {
        if (elements_m < 1 || elements_n < 1) throw ConfigError("IRS element counts must be >= 1");
        if (!(element_len_x > 0.0) || !(element_len_y > 0.0) || !std::isfinite(element_len_x) ||
            !std::isfinite(element_len_y))
            throw ConfigError("IRS element lengths must be positive");
        if (!(reflection_coefficient >= 0.0 && reflection_coefficient <= 1.0))
            throw ConfigError("IRS reflection_coefficient must lie in [0, 1]");
        if (!(gain_tx > 0.0) || !(gain_rx > 0.0) || !std::isfinite(gain_tx) || !std::isfinite(gain_rx))
            throw ConfigError("IRS gains must be positive");
        if (!position.is_finite()) throw ConfigError("IRS position must be finite");
        if (const auto* fixed = std::get_if<FixedAngles>(&angle_mode)) {
            const auto in_range = [](double a) { return a >= 0.0 && a < pi / 2.0; };
            if (!in_range(fixed->theta_t) || !in_range(fixed->theta_r))
                throw ConfigError("IRS fixed angles must lie in [0, pi/2)");
        } else {
            const auto& n = std::get<GeometricNormal>(angle_mode).unit_normal;
            if (!n.is_finite() || std::abs(norm(n) - 1.0) > 1e-9)
                throw ConfigError("IRS normal must have unit length");
        }
    }
};

/// 4 pi d_x d_y / lambda^2; exactly pi for half-wavelength elements.
inline double element_scatter_gain(double element_len_x, double element_len_y, double wavelength_m) {
    detail::require_positive(element_len_x, "element length x");
    detail::require_positive(element_len_y, "element length y");
    detail::require_positive(wavelength_m, "wavelength");
    return 4.0 * pi * (element_len_x * element_len_y / (wavelength_m * wavelength_m));
}

struct IncidenceAngles {
    double theta_t = 0.0; // transmitter side, radians
    double theta_r = 0.0; // receiver side, radians
};

/// Incidence angles at the panel. Returns nullopt when a Geometric-mode panel
/// faces away from either endpoint; callers treat that as zero received power.
inline std::optional<IncidenceAngles> incidence_angles(const Position3D& transmitter, const IrsPanel& panel,
                                                       const Position3D& receiver) {
    if (const auto* fixed = std::get_if<FixedAngles>(&panel.angle_mode))
        return IncidenceAngles{fixed->theta_t, fixed->theta_r};

    const auto& n = std::get<GeometricNormal>(panel.angle_mode).unit_normal;
    const Position3D to_tx = transmitter - panel.position;
    const Position3D to_rx = receiver - panel.position;
    const double len_tx = norm(to_tx);
    const double len_rx = norm(to_rx);
    if (!(len_tx > 0.0) || !(len_rx > 0.0))
        throw DomainError("endpoint coincides with the IRS panel");

    const double cos_t = dot(n, to_tx) / len_tx;
    const double cos_r = dot(n, to_rx) / len_rx;
    if (cos_t < 0.0 || cos_r < 0.0) return std::nullopt;
    return IncidenceAngles{std::acos(std::clamp(cos_t, -1.0, 1.0)), std::acos(std::clamp(cos_r, -1.0, 1.0))};
}

/// Received power over the cascaded BS -> IRS -> user path:
///
///   P_t lambda^2 A^2 G_sc G_t G_r d_x d_y M^2 N^2 cos(theta_t) cos(theta_r)
///   ----------------------------------------------------------------------
///                          (R1 R2)^2 64 pi^3
///
/// with G_sc = element_scatter_gain(d_x, d_y, lambda). There is no direct
/// BS -> user term.
inline double irs_rx_power(double transmit_power, const IrsPanel& panel, const Position3D& transmitter,
                           const Position3D& receiver, const RadioEnvironment& env) {
    detail::require_non_negative(transmit_power, "transmit power");
    const double r1 = distance(transmitter, panel.position);
    const double r2 = distance(panel.position, receiver);
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw DomainError("cascaded link with zero segment length");

    const auto angles = incidence_angles(transmitter, panel, receiver);
    if (!angles) return 0.0;

    const double lambda = env.wavelength();
    const double m = panel.elements_m;
    const double n = panel.elements_n;
    const double a = panel.reflection_coefficient;
    const double gain = (lambda * lambda) * (a * a) *
                        element_scatter_gain(panel.element_len_x, panel.element_len_y, lambda) * panel.gain_tx *
                        panel.gain_rx * panel.element_len_x * panel.element_len_y * (m * m) * (n * n) *
                        (std::cos(angles->theta_t) * std::cos(angles->theta_r));
    const double path = r1 * r2;
    return transmit_power * gain / (path * path * (64.0 * pi * pi * pi));
}

} // namespace irsplan
