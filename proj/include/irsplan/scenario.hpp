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

#pragma once

#include "irsplan/grid.hpp"
#include "irsplan/sinr.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace irsplan {

/// Cell-edge statistic used as the placement objective.
enum class Objective { EdgeMin, EdgeMean };

inline std::string_view to_string(Objective o) { return o == Objective::EdgeMin ? "min" : "mean"; }

inline Objective parse_objective(std::string_view s) {
    if (s == "min") return Objective::EdgeMin;
    if (s == "mean") return Objective::EdgeMean;
    throw ConfigError("objective must be 'min' or 'mean', got '" + std::string(s) + "'");
}

/// Half-wavelength element panel with the reference gains and geometry.
inline IrsPanel default_panel(double carrier_frequency) {
    const double half_lambda = wavelength(carrier_frequency) / 2.0;
    IrsPanel p;
    p.elements_m = 128;
    p.elements_n = 128;
    p.element_len_x = half_lambda;
    p.element_len_y = half_lambda;
    p.reflection_coefficient = 0.9;
    p.gain_tx = db_to_linear(20.0);
    p.gain_rx = db_to_linear(15.0);
    p.position = {100.0, 100.0, 6.0};
    p.angle_mode = FixedAngles{pi / 4.0, pi / 4.0};
    return p;
}

/// Opt-in geometric angles for candidates mounted at a different height than
/// the configured panel: the panel normal either aims at the micro-cell ground
/// centre or is given explicitly.
struct DownTilt {
    enum class Aim { GroundCenter, Normal };
    Aim aim = Aim::GroundCenter;
    Position3D normal; // used when aim == Normal

    bool operator==(const DownTilt&) const = default;
};

/// Two-tier deployment: one micro cell (optionally IRS-assisted) inside a
/// macro cell whose BS is the downlink interferer.
struct Scenario {
    RadioEnvironment env;
    CellExtent macro_extent{0.0, 0.0, 1000.0, 1000.0};
    CellExtent micro_extent{0.0, 0.0, 200.0, 200.0};
    InterferenceSource macro_bs{50.0, {500.0, 500.0, 10.0}, 4.0};
    /// Additional interferers (e.g. neighbouring micro BSs); empty by default.
    std::vector<InterferenceSource> extra_interferers;
    Position3D micro_bs_position{0.0, 0.0, 5.0};
    double micro_power_conventional = 10.0; // W
    double micro_power_irs = 1.0;           // W
    IrsPanel panel = default_panel(130e9);
    double user_height = 1.5;     // m
    double grid_resolution = 1.0; // m
    Objective objective = Objective::EdgeMean;
    std::optional<DownTilt> downtilt;

    bool operator==(const Scenario&) const = default;

    [[nodiscard]] std::vector<InterferenceSource> interference_sources() const {
        std::vector<InterferenceSource> sources;
        sources.reserve(1 + extra_interferers.size());
        sources.push_back(macro_bs);
        sources.insert(sources.end(), extra_interferers.begin(), extra_interferers.end());
        return sources;
    }

    void validate() const {
        env.validate();
        macro_extent.validate("macro_extent");
        micro_extent.validate("micro_extent");
        if (!macro_extent.contains(micro_extent)) throw ConfigError("micro_extent must lie inside macro_extent");
        const auto check_source = [](const InterferenceSource& s, const char* what) {
            if (!(s.transmit_power >= 0.0) || !std::isfinite(s.transmit_power))
                throw ConfigError(std::string(what) + ": power must be non-negative");
            if (!(s.pathloss_exponent >= 2.0) || !std::isfinite(s.pathloss_exponent))
                throw ConfigError(std::string(what) + ": path-loss exponent must be >= 2");
            if (!s.position.is_finite()) throw ConfigError(std::string(what) + ": position must be finite");
        };
        check_source(macro_bs, "macro_bs");
        for (const auto& s : extra_interferers) check_source(s, "interferer");
        if (!micro_bs_position.is_finite()) throw ConfigError("micro_bs_position must be finite");
        if (!(micro_power_conventional > 0.0) || !std::isfinite(micro_power_conventional))
            throw ConfigError("micro_power_conventional must be positive");
        if (!(micro_power_irs > 0.0) || !std::isfinite(micro_power_irs))
            throw ConfigError("micro_power_irs must be positive");
        panel.validate();
        if (!std::isfinite(user_height)) throw ConfigError("user_height must be finite");
        if (!(grid_resolution > 0.0) || !std::isfinite(grid_resolution))
            throw ConfigError("grid_resolution must be positive");
        if (downtilt && downtilt->aim == DownTilt::Aim::Normal &&
            (!downtilt->normal.is_finite() || !(norm(downtilt->normal) > 0.0)))
            throw ConfigError("irs_downtilt normal must be a non-zero vector");
        if (grid_resolution > std::min(micro_extent.width, micro_extent.depth))
            throw ConfigError("grid_resolution must not exceed the smaller side of micro_extent");
    }
};

/// Reference scenario: 130 GHz, 200 m micro cell in the corner of a 1000 m
/// macro cell, macro BS at the macro centre, micro BS at (0, 0, 5) and the
/// panel at the micro-cell centre.
inline Scenario default_scenario() {
    Scenario s;
    s.env = RadioEnvironment{130e9, 1e-12, 3.0, 4.0};
    s.panel = default_panel(s.env.carrier_frequency);
    return s;
}

} // namespace irsplan
