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
// Exhaustive IRS placement search. Each candidate position is scored by a
// cell-edge statistic of the IRS-assisted SINR map; the BS stays where the
// scenario puts it.

#pragma once

#include "irsplan/coverage.hpp"
#include "irsplan/format.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>
#include <variant>
#include <vector>

namespace irsplan {

struct ExplicitList {
    std::vector<Position3D> positions;
};

/// Lattice of candidate positions over `extent` at a fixed height. A step
/// larger than a side degenerates to that side's two end points.
struct GridSweep {
    CellExtent extent;
    double step = 10.0;
    double height = 5.0;
};

using CandidateSpec = std::variant<ExplicitList, GridSweep>;

struct PlacementResult {
    Position3D irs_position;
    double objective_db = no_signal_db;
    EdgeStats edge_stats;

    bool operator==(const PlacementResult&) const = default;
};

struct ComparisonReport {
    double conventional_power = 0.0; // W
    double irs_power = 0.0;          // W
    Position3D irs_position;
    EdgeStats conventional_edge;
    EdgeStats irs_edge;
    double power_reduction_fraction = 0.0;
};

/// IRS positions of the six reference BS/IRS layouts, in layout order (a)..(f).
/// Layouts (a)/(b) and (c)/(d) share an IRS position.
inline std::vector<Position3D> reference_irs_positions() {
    return {{0, 200, 5}, {0, 200, 5}, {100, 200, 5}, {100, 200, 5}, {200, 100, 5}, {100, 100, 6}};
}

/// BS position of each reference layout, parallel to reference_irs_positions().
inline std::vector<Position3D> reference_bs_positions() {
    return {{0, 0, 5}, {0, 100, 5}, {0, 0, 5}, {0, 100, 5}, {0, 100, 5}, {0, 0, 5}};
}

inline std::vector<Position3D> enumerate_candidates(const CandidateSpec& spec) {
    if (const auto* list = std::get_if<ExplicitList>(&spec)) {
        if (list->positions.empty()) throw ConfigError("candidate list is empty");
        for (const auto& p : list->positions)
            if (!p.is_finite()) throw ConfigError("candidate position must be finite");
        return list->positions;
    }

    const auto& sweep = std::get<GridSweep>(spec);
    sweep.extent.validate("candidate extent");
    if (!(sweep.step > 0.0) || !std::isfinite(sweep.step)) throw ConfigError("candidate step must be positive");
    if (!std::isfinite(sweep.height)) throw ConfigError("candidate height must be finite");

    const auto axis = [&](double origin, double side) {
        std::vector<double> values;
        if (sweep.step >= side) {
            values = {origin, origin + side};
        } else {
            const std::size_t n = detail::samples_along(side, sweep.step);
            for (std::size_t k = 0; k < n; ++k) values.push_back(origin + static_cast<double>(k) * sweep.step);
        }
        return values;
    };
    const auto xs = axis(sweep.extent.origin_x, sweep.extent.width);
    const auto ys = axis(sweep.extent.origin_y, sweep.extent.depth);

    std::vector<Position3D> out;
    out.reserve(xs.size() * ys.size());
    for (double y : ys)
        for (double x : xs) out.push_back({x, y, sweep.height});
    return out;
}

/// The scenario's panel moved to `position`. With a configured down-tilt, a
/// candidate whose height differs from the panel's switches to geometric angles.
inline IrsPanel panel_at(const Scenario& scenario, const Position3D& position) {
    IrsPanel panel = scenario.panel;
    panel.position = position;
    if (scenario.downtilt && position.z != scenario.panel.position.z) {
        Position3D normal = scenario.downtilt->normal;
        if (scenario.downtilt->aim == DownTilt::Aim::GroundCenter)
            normal = scenario.micro_extent.ground_center() - position;
        const double len = norm(normal);
        if (!(len > 0.0)) throw ConfigError("down-tilt normal is degenerate for this candidate");
        panel.angle_mode = GeometricNormal{{normal.x / len, normal.y / len, normal.z / len}};
    }
    return panel;
}

inline PlacementResult evaluate_placement(const Scenario& scenario, const Position3D& irs_position,
                                          Objective objective, const Execution& exec = {}) {
    Scenario relocated = scenario;
    relocated.panel = panel_at(scenario, irs_position);
    const SinrMap map = sinr_map_irs(relocated, exec);
    PlacementResult result;
    result.irs_position = irs_position;
    result.edge_stats = edge_stats(map);
    result.objective_db = objective_value(result.edge_stats, objective);
    return result;
}

/// Sorts best first: objective descending, then distance to the micro-cell
/// ground centre ascending, then (x, y, z) ascending.
inline void rank_results(std::vector<PlacementResult>& results, const CellExtent& micro_extent) {
    const Position3D center = micro_extent.ground_center();
    std::stable_sort(results.begin(), results.end(), [&](const PlacementResult& a, const PlacementResult& b) {
        if (a.objective_db != b.objective_db) return a.objective_db > b.objective_db;
        const double da = distance(a.irs_position, center);
        const double db = distance(b.irs_position, center);
        if (da != db) return da < db;
        return std::tie(a.irs_position.x, a.irs_position.y, a.irs_position.z) <
               std::tie(b.irs_position.x, b.irs_position.y, b.irs_position.z);
    });
}

inline std::vector<PlacementResult> optimize_placement(const Scenario& scenario, const CandidateSpec& spec,
                                                       Objective objective, const Execution& exec = {}) {
    const std::vector<Position3D> candidates = enumerate_candidates(spec);
    std::vector<PlacementResult> results;
    results.reserve(candidates.size());
    for (const auto& c : candidates) results.push_back(evaluate_placement(scenario, c, objective, exec));
    rank_results(results, scenario.micro_extent);
    return results;
}

/// Conventional map at the conventional power against the IRS map at the
/// IRS-mode power with the panel at `best`.
inline ComparisonReport compare_models(const Scenario& scenario, const PlacementResult& best,
                                       const Execution& exec = {}) {
    if (scenario.micro_power_irs > scenario.micro_power_conventional)
        throw ConfigError("micro_power_irs exceeds micro_power_conventional");

    ComparisonReport report;
    report.conventional_power = scenario.micro_power_conventional;
    report.irs_power = scenario.micro_power_irs;
    report.irs_position = best.irs_position;
    report.conventional_edge = edge_stats(sinr_map_conventional(scenario, exec));

    Scenario relocated = scenario;
    relocated.panel = panel_at(scenario, best.irs_position);
    report.irs_edge = edge_stats(sinr_map_irs(relocated, exec));
    report.power_reduction_fraction = 1.0 - report.irs_power / report.conventional_power;
    return report;
}

/// `rank,x_m,y_m,z_m,objective_db,edge_min_db,edge_mean_db,edge_max_db`, rank from 1.
inline void write_csv(std::ostream& out, const std::vector<PlacementResult>& ranked) {
    out << "rank,x_m,y_m,z_m,objective_db,edge_min_db,edge_mean_db,edge_max_db\n";
    std::size_t rank = 1;
    for (const auto& r : ranked) {
        out << rank++ << ',' << format_double(r.irs_position.x) << ',' << format_double(r.irs_position.y) << ','
            << format_double(r.irs_position.z) << ',' << format_double(r.objective_db) << ','
            << format_double(r.edge_stats.min_db) << ',' << format_double(r.edge_stats.mean_db) << ','
            << format_double(r.edge_stats.max_db) << '\n';
    }
}

/// `key,value` report.
inline void write_csv(std::ostream& out, const ComparisonReport& r) {
    const auto row = [&](const char* key, const std::string& value) { out << key << ',' << value << '\n'; };
    out << "key,value\n";
    row("conventional_power", format_double(r.conventional_power));
    row("irs_power", format_double(r.irs_power));
    row("irs_x_m", format_double(r.irs_position.x));
    row("irs_y_m", format_double(r.irs_position.y));
    row("irs_z_m", format_double(r.irs_position.z));
    row("conventional_edge_min_db", format_double(r.conventional_edge.min_db));
    row("conventional_edge_mean_db", format_double(r.conventional_edge.mean_db));
    row("conventional_edge_max_db", format_double(r.conventional_edge.max_db));
    row("conventional_edge_points", std::to_string(r.conventional_edge.point_count));
    row("irs_edge_min_db", format_double(r.irs_edge.min_db));
    row("irs_edge_mean_db", format_double(r.irs_edge.mean_db));
    row("irs_edge_max_db", format_double(r.irs_edge.max_db));
    row("irs_edge_points", std::to_string(r.irs_edge.point_count));
    row("power_reduction_fraction", format_double(r.power_reduction_fraction));
}

} // namespace irsplan
