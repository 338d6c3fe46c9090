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

#include "irsplan/grid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace irsplan;

TEST(BuildGrid, LatticeCounts) {
    const CellExtent cell{0, 0, 200, 200};
    EXPECT_EQ(build_grid(cell, 200, 1.5).size(), 4u);
    EXPECT_EQ(build_grid(cell, 100, 1.5).size(), 9u);
    EXPECT_EQ(build_grid(cell, 1, 1.5).size(), 40401u);
}

TEST(BuildGrid, RowMajorOrderAndHeight) {
    const auto g = build_grid({10, 20, 2, 1}, 1, 1.5);
    ASSERT_EQ(g.size(), 6u);
    EXPECT_EQ(g[0], (Position3D{10, 20, 1.5}));
    EXPECT_EQ(g[1], (Position3D{11, 20, 1.5}));
    EXPECT_EQ(g[2], (Position3D{12, 20, 1.5}));
    EXPECT_EQ(g[3], (Position3D{10, 21, 1.5}));
    EXPECT_EQ(g[5], (Position3D{12, 21, 1.5}));
}

TEST(BuildGrid, DecimalMultipleKeepsLastSample) {
    EXPECT_EQ(grid_shape({0, 0, 0.7, 0.7}, 0.1).nx, 8u);
}

TEST(BuildGrid, InvalidResolution) {
    const CellExtent cell{0, 0, 200, 100};
    EXPECT_THROW(build_grid(cell, 0, 1.5), ConfigError);
    EXPECT_THROW(build_grid(cell, -1, 1.5), ConfigError);
    EXPECT_THROW(build_grid(cell, 150, 1.5), ConfigError);
    EXPECT_THROW(build_grid({0, 0, 0, 10}, 1, 1.5), ConfigError);
}

TEST(CellEdgePoints, Counts) {
    EXPECT_EQ(cell_edge_points({0, 0, 200, 200}, 100, 1.5).size(), 8u);
    EXPECT_EQ(cell_edge_points({0, 0, 200, 200}, 200, 1.5).size(), 4u);
    EXPECT_EQ(cell_edge_points({0, 0, 200, 200}, 1, 1.5).size(), 800u);
}

TEST(CellEdgePoints, SubsetOfGridOnPerimeter) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> side(5.0, 120.0);
    std::uniform_real_distribution<double> origin(-50.0, 50.0);
    for (int k = 0; k < 20; ++k) {
        const CellExtent e{origin(rng), origin(rng), side(rng), side(rng)};
        const double res = std::min(e.width, e.depth) / std::uniform_real_distribution<double>(1.0, 12.0)(rng);
        const auto grid = build_grid(e, res, 2.0);
        const auto edge = cell_edge_points(e, res, 2.0);
        for (const auto& p : grid) {
            EXPECT_GE(p.x, e.origin_x);
            EXPECT_LE(p.x, e.origin_x + e.width + 1e-9);
            EXPECT_GE(p.y, e.origin_y);
            EXPECT_LE(p.y, e.origin_y + e.depth + 1e-9);
        }
        for (const auto& p : edge) EXPECT_NE(std::find(grid.begin(), grid.end(), p), grid.end());
    }
}
