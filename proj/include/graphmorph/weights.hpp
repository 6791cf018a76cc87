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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "graphmorph/drawing.hpp"
#include "graphmorph/tolerances.hpp"

namespace graphmorph
{

/**
 * @brief One nonnegative weight per dart
 *
 * `strict` records whether every value is positive. Zero weights are the
 * exception, not the rule: they are used only for auxiliary edges whose
 * weights are deliberately driven to zero.
 */
struct WeightVector {
    std::vector<double> values;
    bool strict{true};

    WeightVector() = default;

    explicit WeightVector(std::vector<double> vals) : values{std::move(vals)}
    {
        strict = true;
        for (double v : values) {
            if (v < 0 || !std::isfinite(v)) {
                throw std::invalid_argument("weight vector: negative or non-finite value");
            }
            if (v == 0) {
                strict = false;
            }
        }
    }

    double operator[](DartId d) const { return values[d]; }
    double& operator[](DartId d) { return values[d]; }
    DartId size() const { return static_cast<DartId>(values.size()); }

    double max_value() const
    {
        double m = 0;
        for (double v : values) {
            m = std::max(m, v);
        }
        return m;
    }

    void require_strict(const char* where) const
    {
        for (double v : values) {
            if (v <= 0) {
                throw std::domain_error(std::string(where) +
                                        ": weights must be strictly positive");
            }
        }
    }
};

/** @brief Componentwise (1-t)*a + t*b; dart sets must match */
inline WeightVector interpolate(const WeightVector& a, const WeightVector& b, double t)
{
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("interpolate: mismatched dart sets");
    }
    std::vector<double> out(a.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (1 - t) * a.values[i] + t * b.values[i];
    }
    return WeightVector(std::move(out));
}

/**
 * @brief Rescale so the weights of all darts leaving each vertex sum to 1
 */
inline WeightVector per_vertex_normalize(const WeightVector& w, const CombinatorialMap& map)
{
    if (w.size() != map.dart_count()) {
        throw std::invalid_argument("per-vertex normalize: weight count mismatch");
    }
    std::vector<double> sums(map.vertex_count(), 0.0);
    for (DartId d = 0; d < map.dart_count(); ++d) {
        sums[map.tail(d)] += w[d];
    }
    std::vector<double> out(w.values.size());
    for (DartId d = 0; d < map.dart_count(); ++d) {
        double s = sums[map.tail(d)];
        if (s <= 0) {
            throw std::domain_error("per-vertex normalize: all-zero vertex star");
        }
        out[d] = w[d] / s;
    }
    return WeightVector(std::move(out));
}

namespace detail
{
/**
 * Mean-value weight of each dart in one vertex star. `dirs` lists the
 * lifted dart directions in CCW rotation order. Every consecutive angle
 * must be strictly convex; the weights are
 * (tan(angle_before/2) + tan(angle_after/2)) / |dir|.
 */
inline std::vector<double> mean_value_star(const std::vector<Vec2>& dirs)
{
    const std::size_t k = dirs.size();
    std::vector<double> angle(k), len(k);
    for (std::size_t i = 0; i < k; ++i) {
        len[i] = norm(dirs[i]);
        if (len[i] == 0) {
            throw std::domain_error("mean value weights: zero-length edge");
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        angle[i] = ccw_angle(dirs[i], dirs[(i + 1) % k]);
        if (angle[i] <= 0 || angle[i] >= M_PI) {
            throw std::domain_error(
                "mean value weights: nonconvex corner in vertex star");
        }
    }
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) {
        double before = angle[(i + k - 1) % k];
        double after = angle[i];
        w[i] = (std::tan(before / 2) + std::tan(after / 2)) / len[i];
    }
    return w;
}
}  // namespace detail

/** @brief Worst per-vertex residual of Floater's planar system, scaled by
 * each vertex's outgoing weight sum */
inline double planar_barycentric_residual(const PlanarDrawing& drawing,
                                          const WeightVector& w)
{
    const auto& map = drawing.map();
    double worst = 0;
    for (VertexId u = 0; u < map.vertex_count(); ++u) {
        if (drawing.is_boundary(u)) {
            continue;
        }
        Vec2 r{0, 0};
        double total = 0;
        for (DartId d : map.darts_at(u)) {
            r += w[d] * (drawing.position(map.head(d)) - drawing.position(u));
            total += w[d];
        }
        if (total > 0) {
            worst = std::max(worst, norm(r) / total);
        }
    }
    return worst;
}

/** @brief Worst per-vertex residual of the torus system, scaled by each
 * vertex's outgoing weight sum */
inline double torus_barycentric_residual(const TorusDrawing& drawing,
                                         const WeightVector& w)
{
    const auto& map = drawing.map();
    double worst = 0;
    for (VertexId u = 0; u < map.vertex_count(); ++u) {
        Vec2 r{0, 0};
        double total = 0;
        for (DartId d : map.darts_at(u)) {
            r += w[d] * drawing.dart_vector(d);
            total += w[d];
        }
        if (total > 0) {
            worst = std::max(worst, norm(r) / total);
        }
    }
    return worst;
}

/**
 * @brief Floater's mean-value coordinates for a convex planar drawing
 *
 * Requires strictly convex bounded faces. Interior vertices receive the
 * mean-value weights of their star, which express each interior vertex as
 * a convex combination of its neighbors; darts leaving boundary vertices
 * never enter the linear system and get weight 1.
 */
inline WeightVector mean_value_weights(const PlanarDrawing& drawing)
{
    const auto& map = drawing.map();
    for (FaceId f = 0; f < map.face_count(); ++f) {
        if (f == drawing.outer_face()) {
            continue;
        }
        if (!strictly_convex_ccw(drawing.face_polygon(f))) {
            throw std::domain_error("mean value weights: nonconvex bounded face");
        }
    }
    std::vector<double> vals(map.dart_count(), 1.0);
    for (VertexId u = 0; u < map.vertex_count(); ++u) {
        if (drawing.is_boundary(u)) {
            continue;
        }
        auto darts = map.darts_at(u);
        std::vector<Vec2> dirs;
        dirs.reserve(darts.size());
        for (DartId d : darts) {
            dirs.push_back(drawing.position(map.head(d)) - drawing.position(u));
        }
        auto w = detail::mean_value_star(dirs);
        for (std::size_t i = 0; i < darts.size(); ++i) {
            vals[darts[i]] = w[i];
        }
    }
    WeightVector result(std::move(vals));
    double res = planar_barycentric_residual(drawing, result);
    if (res > kResidualTol * std::max(1.0, drawing.diameter())) {
        throw std::runtime_error("mean value weights: residual check failed");
    }
    return result;
}

/**
 * @brief Mean-value coordinates for a convex torus drawing
 *
 * Angles are measured in the universal cover: each dart's direction is
 * p_head + tau - p_tail. Every vertex is interior on the torus, so all
 * darts receive genuine mean-value weights.
 */
inline WeightVector mean_value_weights(const TorusDrawing& drawing)
{
    const auto& map = drawing.map();
    for (FaceId f = 0; f < map.face_count(); ++f) {
        if (!strictly_convex_ccw(drawing.face_polygon_lifted(f))) {
            throw std::domain_error("mean value weights: nonconvex face");
        }
    }
    std::vector<double> vals(map.dart_count());
    for (VertexId u = 0; u < map.vertex_count(); ++u) {
        auto darts = map.darts_at(u);
        std::vector<Vec2> dirs;
        dirs.reserve(darts.size());
        for (DartId d : darts) {
            dirs.push_back(drawing.dart_vector(d));
        }
        auto w = detail::mean_value_star(dirs);
        for (std::size_t i = 0; i < darts.size(); ++i) {
            vals[darts[i]] = w[i];
        }
    }
    WeightVector result(std::move(vals));
    double res = torus_barycentric_residual(drawing, result);
    if (res > kResidualTol * drawing.diameter()) {
        throw std::runtime_error("mean value weights: residual check failed");
    }
    return result;
}

}  // namespace graphmorph
