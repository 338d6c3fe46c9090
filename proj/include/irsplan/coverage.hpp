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
// SINR maps over the micro-cell lattice and cell-edge statistics.
//
// Grid points at zero distance from a transmitter, interferer or the panel are
// outside the equations' domain; they receive the -inf sentinel and are
// counted in SinrMap::excluded_points instead of failing the whole map.

#pragma once

#include "irsplan/format.hpp"
#include "irsplan/grid.hpp"
#include "irsplan/parallel.hpp"
#include "irsplan/scenario.hpp"
#include "irsplan/sinr.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

namespace irsplan {

inline constexpr double no_signal_db = -std::numeric_limits<double>::infinity();

struct SinrMap {
    CellExtent extent;
    double resolution = 1.0;
    double user_height = 1.5;
    GridShape shape;
    std::vector<double> values; ///< sinr_db, row-major (j outer, i inner)
    std::size_t excluded_points = 0;

    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values.at(j * shape.nx + i); }

    [[nodiscard]] Position3D position(std::size_t i, std::size_t j) const {
        return lattice_point(extent, resolution, user_height, i, j);
    }

    bool operator==(const SinrMap&) const = default;
};

struct EdgeStats {
    double min_db = no_signal_db;
    double mean_db = no_signal_db;
    double max_db = no_signal_db;
    std::size_t point_count = 0;

    bool operator==(const EdgeStats&) const = default;
};

namespace detail {

/// Evaluates signal(point) over the micro-cell lattice and forms SINR against
/// the scenario's interferers and noise. signal returns nullopt for a point
/// outside its domain.
template <typename SignalFn>
SinrMap evaluate_map(const Scenario& scenario, const Execution& exec, SignalFn&& signal) {
    SinrMap map;
    map.extent = scenario.micro_extent;
    map.resolution = scenario.grid_resolution;
    map.user_height = scenario.user_height;
    map.shape = grid_shape(map.extent, map.resolution);
    map.values.assign(map.shape.size(), no_signal_db);

    const std::vector<InterferenceSource> sources = scenario.interference_sources();
    std::vector<unsigned char> excluded(map.shape.size(), 0);
    const std::size_t nx = map.shape.nx;

    parallel_for(map.shape.ny, exec, [&](std::size_t j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t k = j * nx + i;
            const Position3D user = map.position(i, j);
            bool singular = false;
            for (const auto& s : sources) singular = singular || !(distance(s.position, user) > 0.0);
            const std::optional<double> p = singular ? std::nullopt : signal(user);
            if (!p) {
                excluded[k] = 1;
                continue;
            }
            const double interference = interference_power(user, sources, scenario.env);
            map.values[k] = sinr(*p, interference, scenario.env.noise_power).sinr_db;
        }
    });

    for (unsigned char e : excluded) map.excluded_points += e;
    return map;
}

} // namespace detail

/// Direct-link SINR from the micro BS at its conventional transmit power.
inline SinrMap sinr_map_conventional(const Scenario& scenario, const Execution& exec = {}) {
    scenario.validate();
    const ConventionalLink base{scenario.micro_power_conventional, scenario.micro_bs_position, {},
                                scenario.env.pathloss_exponent_micro};
    return detail::evaluate_map(scenario, exec, [&](const Position3D& user) -> std::optional<double> {
        if (!(distance(base.transmitter, user) > 0.0)) return std::nullopt;
        ConventionalLink link = base;
        link.receiver = user;
        return conventional_rx_power(link, scenario.env);
    });
}

/// Cascade-only SINR via the scenario's panel at the IRS-mode transmit power.
inline SinrMap sinr_map_irs(const Scenario& scenario, const Execution& exec = {}) {
    scenario.validate();
    const bool panel_at_bs = !(distance(scenario.micro_bs_position, scenario.panel.position) > 0.0);
    return detail::evaluate_map(scenario, exec, [&](const Position3D& user) -> std::optional<double> {
        if (panel_at_bs || !(distance(scenario.panel.position, user) > 0.0)) return std::nullopt;
        return irs_rx_power(scenario.micro_power_irs, scenario.panel, scenario.micro_bs_position, user,
                            scenario.env);
    });
}

/// Min, linear-domain mean and max of the map over `edge`. The mean is a
/// compensated sum taken in the order of `edge`, so it does not depend on how
/// the map was computed.
inline EdgeStats edge_stats(const SinrMap& map, std::span<const Position3D> edge) {
    if (edge.empty()) throw DomainError("edge point set is empty");

    const auto lattice_index = [&](double coord, double origin, std::size_t n) {
        const double t = (coord - origin) / map.resolution;
        const double r = std::round(t);
        const double snapped = origin + r * map.resolution;
        if (!(r >= 0.0) || r >= static_cast<double>(n) ||
            std::abs(snapped - coord) > 1e-9 * std::max(1.0, std::abs(coord)))
            throw DomainError("edge point is not on the map lattice");
        return static_cast<std::size_t>(r);
    };

    EdgeStats stats;
    stats.min_db = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double compensation = 0.0;
    for (const Position3D& p : edge) {
        if (std::abs(p.z - map.user_height) > 1e-9 * std::max(1.0, std::abs(p.z)))
            throw DomainError("edge point height differs from the map's user height");
        const double v = map.at(lattice_index(p.x, map.extent.origin_x, map.shape.nx),
                                lattice_index(p.y, map.extent.origin_y, map.shape.ny));
        stats.min_db = std::min(stats.min_db, v);
        stats.max_db = std::max(stats.max_db, v);
        const double linear = std::isinf(v) ? 0.0 : std::pow(10.0, v / 10.0);
        // Neumaier summation
        const double t = sum + linear;
        compensation += std::abs(sum) >= std::abs(linear) ? (sum - t) + linear : (linear - t) + sum;
        sum = t;
    }
    stats.point_count = edge.size();
    const double mean = (sum + compensation) / static_cast<double>(edge.size());
    // The linear mean lies between min and max; clamp away conversion rounding.
    stats.mean_db = std::clamp(linear_to_db(mean), stats.min_db, stats.max_db);
    return stats;
}

/// Edge statistics over the perimeter of the map's own lattice.
inline EdgeStats edge_stats(const SinrMap& map) {
    const auto edge = cell_edge_points(map.extent, map.resolution, map.user_height);
    return edge_stats(map, edge);
}

inline double objective_value(const EdgeStats& stats, Objective objective) {
    return objective == Objective::EdgeMin ? stats.min_db : stats.mean_db;
}

/// CSV grid: header `x_m,y_m,sinr_db`, one row per lattice point, row-major.
inline void write_csv(std::ostream& out, const SinrMap& map) {
    out << "x_m,y_m,sinr_db\n";
    for (std::size_t j = 0; j < map.shape.ny; ++j) {
        for (std::size_t i = 0; i < map.shape.nx; ++i) {
            const Position3D p = map.position(i, j);
            out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(map.at(i, j)) << '\n';
        }
    }
}

} // namespace irsplan
