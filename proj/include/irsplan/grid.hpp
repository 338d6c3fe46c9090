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

#include "irsplan/linkbudget.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace irsplan {

/// Axis-aligned rectangular cell footprint on the ground plane.
struct CellExtent {
    double origin_x = 0.0; // m
    double origin_y = 0.0; // m
    double width = 0.0;    // m, along x
    double depth = 0.0;    // m, along y

    bool operator==(const CellExtent&) const = default;

    [[nodiscard]] Position3D ground_center() const { return {origin_x + width / 2.0, origin_y + depth / 2.0, 0.0}; }

    [[nodiscard]] bool contains(const CellExtent& inner) const {
        return inner.origin_x >= origin_x && inner.origin_y >= origin_y &&
               inner.origin_x + inner.width <= origin_x + width && inner.origin_y + inner.depth <= origin_y + depth;
    }

    void validate(const char* name) const {
        if (!std::isfinite(origin_x) || !std::isfinite(origin_y) || !(width > 0.0) || !(depth > 0.0) ||
            !std::isfinite(width) || !std::isfinite(depth))
            throw ConfigError(std::string(name) + ": width and depth must be positive and finite");
    }
};

/// Lattice dimensions (samples per axis) for an extent sampled at `resolution`.
struct GridShape {
    std::size_t nx = 0;
    std::size_t ny = 0;

    [[nodiscard]] std::size_t size() const { return nx * ny; }
    [[nodiscard]] bool on_perimeter(std::size_t i, std::size_t j) const {
        return i == 0 || j == 0 || i + 1 == nx || j + 1 == ny;
    }

    bool operator==(const GridShape&) const = default;
};

namespace detail {

// floor(side / step) + 1, with a small relative slack so that sides that are an
// exact multiple of the step in decimal (0.7 / 0.1) keep their last sample.
inline std::size_t samples_along(double side, double step) {
    return static_cast<std::size_t>(std::floor(side / step * (1.0 + 1e-12))) + 1;
}

} // namespace detail

inline GridShape grid_shape(const CellExtent& extent, double resolution) {
    extent.validate("extent");
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw ConfigError("grid_resolution must be positive");
    if (resolution > std::min(extent.width, extent.depth))
        throw ConfigError("grid_resolution must not exceed the smaller side of the extent");
    return {detail::samples_along(extent.width, resolution), detail::samples_along(extent.depth, resolution)};
}

inline Position3D lattice_point(const CellExtent& extent, double resolution, double height, std::size_t i,
                                std::size_t j) {
    return {extent.origin_x + static_cast<double>(i) * resolution,
            extent.origin_y + static_cast<double>(j) * resolution, height};
}

/// All lattice points of the extent at `user_height`, row-major (j outer, i inner).
inline std::vector<Position3D> build_grid(const CellExtent& extent, double resolution, double user_height) {
    const GridShape shape = grid_shape(extent, resolution);
    std::vector<Position3D> points;
    points.reserve(shape.size());
    for (std::size_t j = 0; j < shape.ny; ++j)
        for (std::size_t i = 0; i < shape.nx; ++i) points.push_back(lattice_point(extent, resolution, user_height, i, j));
    return points;
}

/// Perimeter subset of build_grid(), in the same order.
inline std::vector<Position3D> cell_edge_points(const CellExtent& extent, double resolution, double user_height) {
    const GridShape shape = grid_shape(extent, resolution);
    std::vector<Position3D> points;
    for (std::size_t j = 0; j < shape.ny; ++j)
        for (std::size_t i = 0; i < shape.nx; ++i)
            if (shape.on_perimeter(i, j)) points.push_back(lattice_point(extent, resolution, user_height, i, j));
    return points;
}

} // namespace irsplan
