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

#include "irsplan/config.hpp"
#include "irsplan/coverage.hpp"
#include "irsplan/placement.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace irsplan::cli {

/// Candidate file: CSV with the header `x_m,y_m,z_m`, one position per row.
inline std::vector<Position3D> parse_candidates(std::string_view text) {
    std::vector<Position3D> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = irsplan::detail::trim(line);
        if (row.empty()) continue;
        if (!header) {
            if (row != "x_m,y_m,z_m")
                throw ConfigError("candidates line " + std::to_string(line_no) + ": expected header 'x_m,y_m,z_m'");
            header = true;
            continue;
        }
        const auto v = irsplan::detail::to_doubles(row, 3);
        if (!v) throw ConfigError("candidates line " + std::to_string(line_no) + ": expected x,y,z");
        out.push_back(irsplan::detail::to_position(*v));
    }
    if (!header) throw ConfigError("candidates file is missing the 'x_m,y_m,z_m' header");
    if (out.empty()) throw ConfigError("candidates file lists no positions");
    return out;
}

inline std::vector<Position3D> load_candidates(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open candidates file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_candidates(buf.str());
}

/// Reference IRS positions without repeats, first occurrence order.
inline std::vector<Position3D> default_candidates() {
    std::vector<Position3D> unique;
    for (const auto& p : reference_irs_positions())
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    return unique;
}

namespace detail {

struct Options {
    std::string config;
    std::string out;
    std::string objective;
    double resolution = 0.0;
    std::string candidates;
    std::string bs;
    std::string irs;
};

inline Position3D parse_triple(const std::string& flag, const std::string& value) {
    const auto v = irsplan::detail::to_doubles(value, 3);
    if (!v) throw ConfigError(flag + " expects X,Y,Z, got '" + value + "'");
    return irsplan::detail::to_position(*v);
}

inline Scenario scenario_from(const Options& o, CLI::App& sub) {
    Scenario s = o.config.empty() ? default_scenario() : load_scenario(o.config);
    if (sub.count("--resolution") != 0) s.grid_resolution = o.resolution;
    if (sub.count("--objective") != 0) s.objective = parse_objective(o.objective);
    if (!o.bs.empty()) s.micro_bs_position = parse_triple("--bs", o.bs);
    if (!o.irs.empty()) s.panel.position = parse_triple("--irs", o.irs);
    s.validate();
    return s;
}

inline CandidateSpec candidates_from(const Options& o, const Scenario& s) {
    if (!o.candidates.empty()) return ExplicitList{load_candidates(o.candidates)};
    if (!o.irs.empty()) return ExplicitList{{s.panel.position}};
    return ExplicitList{default_candidates()};
}

template <typename Writer>
void emit(const std::string& path, std::ostream& stdout_stream, Writer&& write) {
    if (path.empty() || path == "-") {
        write(stdout_stream);
        return;
    }
    std::ostringstream buf;
    write(buf);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << buf.str();
    if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

inline void warn_excluded(const SinrMap& map, std::ostream& err) {
    if (map.excluded_points != 0)
        err << "warning: " << map.excluded_points
            << " grid point(s) at zero distance from a transmitter or the panel set to -inf\n";
}

} // namespace detail

/// Entry point behind the `irs-planner` binary. Returns 0 on success, 2 on
/// usage errors and 1 on runtime errors.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"SINR coverage maps and IRS placement search for a two-tier micro/macro cell", "irs-planner"};
    app.require_subcommand(1, 1);

    detail::Options o;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "Scenario file (key = value)");
        sub->add_option("--out", o.out, "Output file (default: stdout)");
        sub->add_option("--objective", o.objective, "Cell-edge objective")->check(CLI::IsMember({"min", "mean"}));
        sub->add_option("--resolution", o.resolution, "Grid resolution in meters");
        sub->add_option("--bs", o.bs, "Micro BS position X,Y,Z");
        sub->add_option("--irs", o.irs, "IRS position X,Y,Z");
    };

    auto* map_conv = app.add_subcommand("map-conv", "Conventional SINR map as CSV");
    auto* map_irs = app.add_subcommand("map-irs", "IRS-assisted SINR map as CSV");
    auto* sweep = app.add_subcommand("sweep", "Rank candidate IRS positions as CSV");
    auto* compare = app.add_subcommand("compare", "Compare conventional and best IRS-assisted placement");
    for (auto* sub : {map_conv, map_irs, sweep, compare}) add_common(sub);
    for (auto* sub : {sweep, compare}) sub->add_option("--candidates", o.candidates, "Candidate CSV (x_m,y_m,z_m)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        err << app.help();
        return 2;
    }

    try {
        const Execution exec = Execution::from_environment();
        if (map_conv->parsed()) {
            const Scenario s = detail::scenario_from(o, *map_conv);
            const SinrMap map = sinr_map_conventional(s, exec);
            detail::warn_excluded(map, err);
            detail::emit(o.out, out, [&](std::ostream& os) { write_csv(os, map); });
        } else if (map_irs->parsed()) {
            const Scenario s = detail::scenario_from(o, *map_irs);
            Scenario placed = s;
            placed.panel = panel_at(s, s.panel.position);
            const SinrMap map = sinr_map_irs(placed, exec);
            detail::warn_excluded(map, err);
            detail::emit(o.out, out, [&](std::ostream& os) { write_csv(os, map); });
        } else if (sweep->parsed()) {
            const Scenario s = detail::scenario_from(o, *sweep);
            const auto ranked = optimize_placement(s, detail::candidates_from(o, s), s.objective, exec);
            detail::emit(o.out, out, [&](std::ostream& os) { write_csv(os, ranked); });
        } else if (compare->parsed()) {
            const Scenario s = detail::scenario_from(o, *compare);
            const auto ranked = optimize_placement(s, detail::candidates_from(o, s), s.objective, exec);
            const ComparisonReport report = compare_models(s, ranked.front(), exec);
            detail::emit(o.out, out, [&](std::ostream& os) { write_csv(os, report); });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace irsplan::cli
