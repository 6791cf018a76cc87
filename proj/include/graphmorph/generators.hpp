/*
graphmorph
Copyright 2026 graphmorph contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graphmorph/drawing.hpp"
#include "graphmorph/linsys.hpp"

namespace graphmorph
{

/**
 * @brief rows-by-cols grid on the unit-square torus
 *
 * Vertex (i,j) (row i, column j) sits at ((j + ...)/cols, (i + ...)/rows);
 * row_shift_x[i] shifts row i horizontally and col_shift_y[j] shifts
 * column j vertically, both in torus units. Rows or columns of length 1
 * produce loops. Faces stay parallelograms for any pure row or pure column
 * shifts.
 */
inline TorusDrawing torus_grid(int rows, int cols,
                               const std::vector<double>& row_shift_x = {},
                               const std::vector<double>& col_shift_y = {})
{
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("torus grid: need at least one row and column");
    }
    auto sx = [&](int i) { return row_shift_x.empty() ? 0.0 : row_shift_x[i]; };
    auto sy = [&](int j) { return col_shift_y.empty() ? 0.0 : col_shift_y[j]; };
    auto id = [&](int i, int j) {
        return static_cast<VertexId>(((i % rows + rows) % rows) * cols +
                                     ((j % cols + cols) % cols));
    };
    std::vector<Vec2> pos(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            pos[id(i, j)] = {double(j) / cols + sx(i), double(i) / rows + sy(j)};
        }
    }
    std::vector<std::tuple<VertexId, VertexId, IVec2>> edges;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            IVec2 wrap_right{j + 1 == cols ? 1 : 0, 0};
            IVec2 wrap_up{0, i + 1 == rows ? 1 : 0};
            edges.emplace_back(id(i, j), id(i, j + 1), wrap_right);
            edges.emplace_back(id(i, j), id(i + 1, j), wrap_up);
        }
    }
    return make_torus_drawing(std::move(pos), edges);
}

/** @brief Grid with uniformly random row shifts (or column shifts) */
inline TorusDrawing random_shifted_grid(int rows, int cols, std::mt19937& rng,
                                        bool shift_rows, double max_shift = 0.45)
{
    std::uniform_real_distribution<double> dist(0.0, max_shift);
    if (shift_rows) {
        std::vector<double> sx(rows);
        for (auto& s : sx) {
            s = dist(rng);
        }
        return torus_grid(rows, cols, sx, {});
    }
    std::vector<double> sy(cols);
    for (auto& s : sy) {
        s = dist(rng);
    }
    return torus_grid(rows, cols, {}, sy);
}

/**
 * @brief Triangulated torus: grid plus one diagonal per cell, vertices
 * jittered
 *
 * All faces are triangles, so the drawing is convex whenever it is
 * crossing-free; the default jitter is small enough for that. Needs at
 * least 3 rows and columns to stay essentially simple.
 */
inline TorusDrawing random_triangulated_torus(int rows, int cols, std::mt19937& rng,
                                              double jitter = 0.15)
{
    if (rows < 3 || cols < 3) {
        throw std::invalid_argument("triangulated torus: need rows, cols >= 3");
    }
    auto id = [&](int i, int j) {
        return static_cast<VertexId>(((i % rows + rows) % rows) * cols +
                                     ((j % cols + cols) % cols));
    };
    std::uniform_real_distribution<double> dist(-jitter, jitter);
    std::vector<Vec2> pos(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            pos[id(i, j)] = {(j + dist(rng)) / cols, (i + dist(rng)) / rows};
        }
    }
    std::vector<std::tuple<VertexId, VertexId, IVec2>> edges;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            IVec2 right{j + 1 == cols ? 1 : 0, 0};
            IVec2 up{0, i + 1 == rows ? 1 : 0};
            edges.emplace_back(id(i, j), id(i, j + 1), right);
            edges.emplace_back(id(i, j), id(i + 1, j), up);
            edges.emplace_back(id(i, j), id(i + 1, j + 1), IVec2{right.x, up.y});
        }
    }
    return make_torus_drawing(std::move(pos), edges);
}

/**
 * @brief The 7-vertex complete-graph triangulation of the torus
 *
 * Vertex i sits at (i/7, (3i mod 7)/7); the edge classes i->i+1, i->i+2,
 * i->i+3 triangulate the torus (their displacement vectors sum to zero).
 * `offset_vertex2` perturbs vertex 2, which is how the two isotopic
 * drawings of the averaging counterexample are produced.
 */
inline TorusDrawing k7_torus(Vec2 offset_vertex2 = {0, 0})
{
    std::vector<Vec2> pos(7);
    for (int i = 0; i < 7; ++i) {
        pos[i] = {i / 7.0, (3 * i % 7) / 7.0};
    }
    const Vec2 step[3] = {{1.0 / 7, 3.0 / 7}, {2.0 / 7, -1.0 / 7}, {3.0 / 7, 2.0 / 7}};
    std::vector<std::tuple<VertexId, VertexId, IVec2>> edges;
    for (int i = 0; i < 7; ++i) {
        for (int jump = 1; jump <= 3; ++jump) {
            int k = (i + jump) % 7;
            // tau makes the lifted displacement equal the lattice step
            Vec2 delta = pos[i] + step[jump - 1] - pos[k];
            IVec2 tau{static_cast<std::int64_t>(std::lround(delta.x)),
                      static_cast<std::int64_t>(std::lround(delta.y))};
            edges.emplace_back(i, k, tau);
        }
    }
    // rotation always comes from the unperturbed lattice geometry, so the
    // perturbed drawing shares the same map
    TorusDrawing base = make_torus_drawing(std::move(pos), edges);
    if (offset_vertex2 == Vec2{0, 0}) {
        return base;
    }
    auto moved = base.positions();
    moved[2] += offset_vertex2;
    return base.with_positions(std::move(moved));
}

/**
 * @brief Random maximal planar triangulation with a fixed outer triangle
 *
 * Starts from one big triangle and repeatedly splits a random face
 * (area-weighted) at an interior point biased toward its barycenter.
 * Stacked triangulations are maximal planar, hence 3-connected, and all
 * bounded faces are triangles, so the drawing is convex.
 */
inline PlanarDrawing random_planar_triangulation(int n, std::mt19937& rng)
{
    if (n < 4) {
        throw std::invalid_argument("random triangulation: need n >= 4");
    }
    std::vector<Vec2> pos{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    std::vector<std::array<VertexId, 3>> tris{{0, 1, 2}};
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {2, 0}};
    std::uniform_real_distribution<double> unit(0.3, 1.0);
    while (static_cast<int>(pos.size()) < n) {
        // pick a triangle with probability proportional to its area
        std::vector<double> areas(tris.size());
        double total = 0;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            auto [a, b, c] = tris[t];
            areas[t] = std::abs(cross(pos[b] - pos[a], pos[c] - pos[a])) / 2;
            total += areas[t];
        }
        std::uniform_real_distribution<double> pickd(0.0, total);
        double pick = pickd(rng);
        std::size_t chosen = 0;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            pick -= areas[t];
            if (pick <= 0) {
                chosen = t;
                break;
            }
        }
        auto [a, b, c] = tris[chosen];
        double wa = unit(rng), wb = unit(rng), wc = unit(rng);
        double s = wa + wb + wc;
        Vec2 p = (wa / s) * pos[a] + (wb / s) * pos[b] + (wc / s) * pos[c];
        VertexId v = static_cast<VertexId>(pos.size());
        pos.push_back(p);
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
        edges.emplace_back(v, c);
        tris[chosen] = {a, b, v};
        tris.push_back({b, c, v});
        tris.push_back({c, a, v});
    }
    return make_planar_drawing(std::move(pos), edges);
}

/** @brief A second convex drawing of the same map: the Floater drawing
 * for random positive asymmetric weights */
inline PlanarDrawing random_floater_redraw(const PlanarDrawing& drawing,
                                           std::mt19937& rng,
                                           double log_range = 1.0)
{
    std::uniform_real_distribution<double> dist(-log_range, log_range);
    std::vector<double> vals(drawing.map().dart_count());
    for (auto& v : vals) {
        v = std::exp(dist(rng));
    }
    return floater_drawing(drawing, WeightVector(std::move(vals)));
}

}  // namespace graphmorph
