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
// Scenario files: one `key = value` per line, `#` starts a comment, SI units.
// Keys ending in `_db` / `_dbm` / `_deg` are converted on load. Omitted keys
// keep the reference defaults; unknown or repeated keys are errors.
//
//   carrier_frequency            Hz                       130e9
//   noise_power | noise_power_dbm                         1e-12 W
//   pathloss_exponent_micro / _macro                      3 / 4
//   macro_extent, micro_extent   origin_x,origin_y,width,depth
//   macro_bs_power               W                        50
//   macro_bs_position | macro_bs_height                   macro centre, 10 m
//   interferer                   x,y,z,power_w,exponent   (repeatable)
//   micro_bs_position            x,y,z                    0,0,5
//   micro_power_conventional, micro_power_irs             10, 1
//   irs_elements_m, irs_elements_n                        128, 128
//   irs_element_len_x, irs_element_len_y                  lambda / 2
//   irs_reflection_coefficient                            0.9
//   irs_gain_tx | irs_gain_tx_db, irs_gain_rx | irs_gain_rx_db   20 dB, 15 dB
//   irs_position                 x,y,z                    100,100,6
//   irs_theta_t | irs_theta_t_deg, irs_theta_r | irs_theta_r_deg  45 deg
//   irs_normal                   x,y,z  (geometric angles; excludes theta keys)
//   irs_downtilt                 ground-center | x,y,z
//   user_height, grid_resolution m                        1.5, 1
//   objective                    min | mean               mean

#pragma once

#include "irsplan/format.hpp"
#include "irsplan/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace irsplan {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<std::vector<double>> to_doubles(std::string_view s, std::size_t count) {
    std::vector<double> out;
    while (true) {
        const auto comma = s.find(',');
        const auto v = to_double(s.substr(0, comma));
        if (!v) return std::nullopt;
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (out.size() != count) return std::nullopt;
    return out;
}

class ConfigReader {
public:
    explicit ConfigReader(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty()) fail(line_no, "missing key");
            if (key != "interferer" && entries_.count(key) != 0)
                fail(line_no, "duplicate key '" + key + "' (first on line " + std::to_string(entries_.find(key)->second.line) + ")");
            entries_.emplace(key, Entry{value, line_no});
        }
    }

    [[noreturn]] static void fail(std::size_t line, const std::string& message) {
        throw ConfigError("line " + std::to_string(line) + ": " + message);
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::optional<double> number(const std::string& key) {
        const Entry* e = take(key);
        if (e == nullptr) return std::nullopt;
        const auto v = to_double(e->value);
        if (!v) fail(e->line, "'" + key + "' expects a number, got '" + e->value + "'");
        return v;
    }

    std::optional<std::vector<double>> numbers(const std::string& key, std::size_t count) {
        const Entry* e = take(key);
        if (e == nullptr) return std::nullopt;
        const auto v = to_doubles(e->value, count);
        if (!v)
            fail(e->line, "'" + key + "' expects " + std::to_string(count) + " comma-separated numbers, got '" +
                              e->value + "'");
        return v;
    }

    std::optional<int> integer(const std::string& key) {
        const Entry* e = take(key);
        if (e == nullptr) return std::nullopt;
        int v = 0;
        const auto [end, ec] = std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
        if (ec != std::errc{} || end != e->value.data() + e->value.size() || e->value.empty())
            fail(e->line, "'" + key + "' expects an integer, got '" + e->value + "'");
        return v;
    }

    std::optional<std::string> text(const std::string& key) {
        const Entry* e = take(key);
        if (e == nullptr) return std::nullopt;
        return e->value;
    }

    std::vector<std::vector<double>> repeated(const std::string& key, std::size_t count) {
        std::vector<std::vector<double>> out;
        const auto [first, last] = entries_.equal_range(key);
        std::vector<const Entry*> ordered;
        for (auto it = first; it != last; ++it) ordered.push_back(&it->second);
        std::sort(ordered.begin(), ordered.end(), [](const Entry* a, const Entry* b) { return a->line < b->line; });
        for (const Entry* e : ordered) {
            const auto v = to_doubles(e->value, count);
            if (!v) fail(e->line, "'" + key + "' expects " + std::to_string(count) + " comma-separated numbers");
            out.push_back(*v);
        }
        consumed_.insert(key);
        return out;
    }

    /// Line of `key`, for error messages about mutually exclusive keys.
    std::size_t line_of(const std::string& key) const { return entries_.find(key)->second.line; }

    void reject_unknown() const {
        for (const auto& [key, entry] : entries_)
            if (consumed_.count(key) == 0) fail(entry.line, "unknown key '" + key + "'");
    }

private:
    struct Entry {
        std::string value;
        std::size_t line = 0;
    };

    const Entry* take(const std::string& key) {
        consumed_.insert(key);
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::multimap<std::string, Entry> entries_;
    std::set<std::string> consumed_;
};

inline void exclusive(const ConfigReader& r, const std::string& a, const std::string& b) {
    if (r.has(a) && r.has(b))
        ConfigReader::fail(r.line_of(b), "'" + a + "' and '" + b + "' are mutually exclusive");
}

inline Position3D to_position(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }
inline CellExtent to_extent(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }

} // namespace detail

/// Parses and validates a scenario; omitted keys take the reference defaults.
inline Scenario parse_scenario(std::string_view text) {
    detail::ConfigReader r(text);
    Scenario s = default_scenario();

    detail::exclusive(r, "noise_power", "noise_power_dbm");
    detail::exclusive(r, "macro_bs_position", "macro_bs_height");
    detail::exclusive(r, "irs_gain_tx", "irs_gain_tx_db");
    detail::exclusive(r, "irs_gain_rx", "irs_gain_rx_db");
    detail::exclusive(r, "irs_theta_t", "irs_theta_t_deg");
    detail::exclusive(r, "irs_theta_r", "irs_theta_r_deg");
    for (const char* k : {"irs_theta_t", "irs_theta_t_deg", "irs_theta_r", "irs_theta_r_deg"})
        detail::exclusive(r, k, "irs_normal");

    if (auto v = r.number("carrier_frequency")) s.env.carrier_frequency = *v;
    if (auto v = r.number("noise_power")) s.env.noise_power = *v;
    if (auto v = r.number("noise_power_dbm")) s.env.noise_power = dbm_to_watts(*v);
    if (auto v = r.number("pathloss_exponent_micro")) s.env.pathloss_exponent_micro = *v;
    if (auto v = r.number("pathloss_exponent_macro")) s.env.pathloss_exponent_macro = *v;

    if (auto v = r.numbers("macro_extent", 4)) s.macro_extent = detail::to_extent(*v);
    if (auto v = r.numbers("micro_extent", 4)) s.micro_extent = detail::to_extent(*v);

    s.macro_bs.pathloss_exponent = s.env.pathloss_exponent_macro;
    if (auto v = r.number("macro_bs_power")) s.macro_bs.transmit_power = *v;
    const Position3D macro_center = s.macro_extent.ground_center();
    s.macro_bs.position = {macro_center.x, macro_center.y, 10.0};
    if (auto v = r.number("macro_bs_height")) s.macro_bs.position.z = *v;
    if (auto v = r.numbers("macro_bs_position", 3)) s.macro_bs.position = detail::to_position(*v);
    for (const auto& v : r.repeated("interferer", 5))
        s.extra_interferers.push_back({v[3], {v[0], v[1], v[2]}, v[4]});

    if (auto v = r.numbers("micro_bs_position", 3)) s.micro_bs_position = detail::to_position(*v);
    if (auto v = r.number("micro_power_conventional")) s.micro_power_conventional = *v;
    if (auto v = r.number("micro_power_irs")) s.micro_power_irs = *v;

    IrsPanel& p = s.panel;
    if (auto v = r.integer("irs_elements_m")) p.elements_m = *v;
    if (auto v = r.integer("irs_elements_n")) p.elements_n = *v;
    // Element size follows the carrier unless given explicitly.
    if (s.env.carrier_frequency > 0.0 && std::isfinite(s.env.carrier_frequency))
        p.element_len_x = p.element_len_y = s.env.wavelength() / 2.0;
    if (auto v = r.number("irs_element_len_x")) p.element_len_x = *v;
    if (auto v = r.number("irs_element_len_y")) p.element_len_y = *v;
    if (auto v = r.number("irs_reflection_coefficient")) p.reflection_coefficient = *v;
    if (auto v = r.number("irs_gain_tx")) p.gain_tx = *v;
    if (auto v = r.number("irs_gain_tx_db")) p.gain_tx = db_to_linear(*v);
    if (auto v = r.number("irs_gain_rx")) p.gain_rx = *v;
    if (auto v = r.number("irs_gain_rx_db")) p.gain_rx = db_to_linear(*v);
    if (auto v = r.numbers("irs_position", 3)) p.position = detail::to_position(*v);

    if (auto v = r.numbers("irs_normal", 3)) {
        Position3D n = detail::to_position(*v);
        const double len = norm(n);
        if (!(len > 0.0) || !std::isfinite(len)) detail::ConfigReader::fail(r.line_of("irs_normal"), "irs_normal must be non-zero");
        if (std::abs(len - 1.0) > 1e-9) n = {n.x / len, n.y / len, n.z / len};
        p.angle_mode = GeometricNormal{n};
    } else {
        FixedAngles angles = std::get<FixedAngles>(default_panel(130e9).angle_mode);
        if (auto v = r.number("irs_theta_t")) angles.theta_t = *v;
        if (auto v = r.number("irs_theta_t_deg")) angles.theta_t = degrees_to_radians(*v);
        if (auto v = r.number("irs_theta_r")) angles.theta_r = *v;
        if (auto v = r.number("irs_theta_r_deg")) angles.theta_r = degrees_to_radians(*v);
        p.angle_mode = angles;
    }

    if (auto v = r.text("irs_downtilt")) {
        if (*v == "ground-center") {
            s.downtilt = DownTilt{DownTilt::Aim::GroundCenter, {}};
        } else if (auto n = detail::to_doubles(*v, 3)) {
            s.downtilt = DownTilt{DownTilt::Aim::Normal, detail::to_position(*n)};
        } else {
            detail::ConfigReader::fail(r.line_of("irs_downtilt"), "irs_downtilt expects 'ground-center' or x,y,z");
        }
    }

    if (auto v = r.number("user_height")) s.user_height = *v;
    if (auto v = r.number("grid_resolution")) s.grid_resolution = *v;
    if (auto v = r.text("objective")) {
        try {
            s.objective = parse_objective(*v);
        } catch (const ConfigError& e) {
            detail::ConfigReader::fail(r.line_of("objective"), e.what());
        }
    }

    r.reject_unknown();
    s.validate();
    return s;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

/// Writes every field explicitly in SI units; parse_scenario() of the result
/// reproduces `s` exactly.
inline std::string dump_scenario(const Scenario& s) {
    std::ostringstream out;
    const auto num = [&](const char* key, double v) { out << key << " = " << format_double(v) << '\n'; };
    const auto pos = [&](const char* key, const Position3D& p) {
        out << key << " = " << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << '\n';
    };
    const auto ext = [&](const char* key, const CellExtent& e) {
        out << key << " = " << format_double(e.origin_x) << ',' << format_double(e.origin_y) << ','
            << format_double(e.width) << ',' << format_double(e.depth) << '\n';
    };

    num("carrier_frequency", s.env.carrier_frequency);
    num("noise_power", s.env.noise_power);
    num("pathloss_exponent_micro", s.env.pathloss_exponent_micro);
    num("pathloss_exponent_macro", s.env.pathloss_exponent_macro);
    ext("macro_extent", s.macro_extent);
    ext("micro_extent", s.micro_extent);
    num("macro_bs_power", s.macro_bs.transmit_power);
    pos("macro_bs_position", s.macro_bs.position);
    for (const auto& i : s.extra_interferers)
        out << "interferer = " << format_double(i.position.x) << ',' << format_double(i.position.y) << ','
            << format_double(i.position.z) << ',' << format_double(i.transmit_power) << ','
            << format_double(i.pathloss_exponent) << '\n';
    pos("micro_bs_position", s.micro_bs_position);
    num("micro_power_conventional", s.micro_power_conventional);
    num("micro_power_irs", s.micro_power_irs);
    out << "irs_elements_m = " << s.panel.elements_m << '\n';
    out << "irs_elements_n = " << s.panel.elements_n << '\n';
    num("irs_element_len_x", s.panel.element_len_x);
    num("irs_element_len_y", s.panel.element_len_y);
    num("irs_reflection_coefficient", s.panel.reflection_coefficient);
    num("irs_gain_tx", s.panel.gain_tx);
    num("irs_gain_rx", s.panel.gain_rx);
    pos("irs_position", s.panel.position);
    if (const auto* fixed = std::get_if<FixedAngles>(&s.panel.angle_mode)) {
        num("irs_theta_t", fixed->theta_t);
        num("irs_theta_r", fixed->theta_r);
    } else {
        pos("irs_normal", std::get<GeometricNormal>(s.panel.angle_mode).unit_normal);
    }
    if (s.downtilt) {
        if (s.downtilt->aim == DownTilt::Aim::GroundCenter)
            out << "irs_downtilt = ground-center\n";
        else
            pos("irs_downtilt", s.downtilt->normal);
    }
    num("user_height", s.user_height);
    num("grid_resolution", s.grid_resolution);
    out << "objective = " << to_string(s.objective) << '\n';
    return out.str();
}

} // namespace irsplan
