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

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphmorph/combmap.hpp"
#include "graphmorph/geometry.hpp"

namespace graphmorph
{

using MapPtr = std::shared_ptr<const CombinatorialMap>;

/** @brief Bounding-box diagonal of a point set (0 for a single point) */
inline double bbox_diameter(const std::vector<Vec2>& pts)
{
    if (pts.empty()) {
        return 0;
    }
    double xmin = pts[0].x, xmax = pts[0].x;
    double ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

/**
 * @brief Straight-line drawing of a planar map with a designated convex
 * outer face
 *
 * Construction checks sizes and strict convexity of the outer boundary.
 * Crossing-freeness of the whole drawing is checked by the validators in
 * validate.hpp, not here.
 */
class PlanarDrawing
{
public:
    PlanarDrawing(MapPtr map, std::vector<Vec2> positions, FaceId outer_face)
        : map_{std::move(map)},
          positions_{std::move(positions)},
          outer_face_{outer_face}
    {
        if (!map_) {
            throw std::invalid_argument("planar drawing: null map");
        }
        if (static_cast<VertexId>(positions_.size()) != map_->vertex_count()) {
            throw std::invalid_argument("planar drawing: position count mismatch");
        }
        if (outer_face_ < 0 || outer_face_ >= map_->face_count()) {
            throw std::invalid_argument("planar drawing: outer face out of range");
        }
        if (map_->euler_characteristic() != 2) {
            throw std::invalid_argument(
                "planar drawing: map has Euler characteristic != 2");
        }
        build_boundary_flags();
        check_outer_convex();
    }

    const CombinatorialMap& map() const { return *map_; }
    const MapPtr& map_ptr() const { return map_; }
    const std::vector<Vec2>& positions() const { return positions_; }
    Vec2 position(VertexId v) const { return positions_[v]; }
    FaceId outer_face() const { return outer_face_; }

    bool is_boundary(VertexId v) const { return boundary_[v] != 0; }
    VertexId interior_count() const { return interior_count_; }

    double diameter() const { return bbox_diameter(positions_); }

    /** @brief Same map and outer face, new vertex positions */
    PlanarDrawing with_positions(std::vector<Vec2> positions) const
    {
        return PlanarDrawing(map_, std::move(positions), outer_face_);
    }

    /** @brief Corner positions of a face walk (tails of its darts) */
    std::vector<Vec2> face_polygon(FaceId f) const
    {
        std::vector<Vec2> poly;
        for (DartId d : map_->faces()[f]) {
            poly.push_back(positions_[map_->tail(d)]);
        }
        return poly;
    }

private:
    void build_boundary_flags()
    {
        boundary_.assign(map_->vertex_count(), 0);
        for (DartId d : map_->faces()[outer_face_]) {
            boundary_[map_->tail(d)] = 1;
        }
        interior_count_ = 0;
        for (char b : boundary_) {
            if (!b) {
                ++interior_count_;
            }
        }
    }

    void check_outer_convex()
    {
        // The outer walk runs clockwise (interior of the unbounded face on
        // its left), so the reversed polygon must be strictly convex CCW.
        auto poly = face_polygon(outer_face_);
        std::reverse(poly.begin(), poly.end());
        if (!strictly_convex_ccw(poly)) {
            throw std::domain_error(
                "planar drawing: outer face boundary is not strictly convex");
        }
    }

    MapPtr map_;
    std::vector<Vec2> positions_;
    FaceId outer_face_;
    std::vector<char> boundary_;
    VertexId interior_count_{0};
};

/**
 * @brief Geodesic drawing on the flat torus in coordinate representation
 *
 * Stores a position per vertex and an integer translation vector per dart
 * with translations(rev(d)) = -translations(d). Dart d from u to v is the
 * projection of the segment from p_u to p_v + tau_d. Every face walk must
 * have zero net translation (faces lift to closed polygons).
 */
class TorusDrawing
{
public:
    TorusDrawing(MapPtr map, std::vector<Vec2> positions, std::vector<IVec2> translations)
        : map_{std::move(map)},
          positions_{std::move(positions)},
          translations_{std::move(translations)}
    {
        if (!map_) {
            throw std::invalid_argument("torus drawing: null map");
        }
        if (static_cast<VertexId>(positions_.size()) != map_->vertex_count()) {
            throw std::invalid_argument("torus drawing: position count mismatch");
        }
        if (static_cast<DartId>(translations_.size()) != map_->dart_count()) {
            throw std::invalid_argument("torus drawing: translation count mismatch");
        }
        for (DartId d = 0; d < map_->dart_count(); ++d) {
            if (translations_[map_->rev(d)] != -translations_[d]) {
                throw std::invalid_argument(
                    "torus drawing: translations not antisymmetric");
            }
        }
        if (map_->euler_characteristic() != 0) {
            throw std::invalid_argument(
                "torus drawing: map has nonzero Euler characteristic");
        }
        for (const auto& cycle : map_->faces()) {
            IVec2 total{0, 0};
            for (DartId d : cycle) {
                total = total + translations_[d];
            }
            if (total != IVec2{0, 0}) {
                throw std::invalid_argument(
                    "torus drawing: face walk with nonzero net translation");
            }
        }
    }

    const CombinatorialMap& map() const { return *map_; }
    const MapPtr& map_ptr() const { return map_; }
    const std::vector<Vec2>& positions() const { return positions_; }
    Vec2 position(VertexId v) const { return positions_[v]; }
    const std::vector<IVec2>& translations() const { return translations_; }
    IVec2 translation(DartId d) const { return translations_[d]; }

    double diameter() const { return std::max(1.0, bbox_diameter(positions_)); }

    /** @brief Lifted displacement of dart d: p_head + tau_d - p_tail */
    Vec2 dart_vector(DartId d) const
    {
        return positions_[map_->head(d)] + translations_[d].toVec2() -
               positions_[map_->tail(d)];
    }

    TorusDrawing with_positions(std::vector<Vec2> positions) const
    {
        return TorusDrawing(map_, std::move(positions), translations_);
    }

    /**
     * @brief Re-coordinatization with all positions in [0,1)^2
     *
     * Shifts each vertex by an integer vector and adjusts incident
     * translation vectors accordingly; the drawing on the torus is
     * unchanged.
     */
    TorusDrawing normalized() const
    {
        std::vector<IVec2> shift(map_->vertex_count());
        std::vector<Vec2> pos = positions_;
        for (VertexId v = 0; v < map_->vertex_count(); ++v) {
            IVec2 z{static_cast<std::int64_t>(std::floor(pos[v].x)),
                    static_cast<std::int64_t>(std::floor(pos[v].y))};
            shift[v] = IVec2{-z.x, -z.y};
            pos[v] = pos[v] + shift[v].toVec2();
        }
        return shifted(pos, shift);
    }

    /** Apply per-vertex integer shifts: tau'_d = tau_d + z_tail - z_head. */
    TorusDrawing shifted(std::vector<Vec2> new_positions,
                         const std::vector<IVec2>& z) const
    {
        std::vector<IVec2> tau = translations_;
        for (DartId d = 0; d < map_->dart_count(); ++d) {
            tau[d] = tau[d] + z[map_->tail(d)] - z[map_->head(d)];
        }
        return TorusDrawing(map_, std::move(new_positions), std::move(tau));
    }

    /** @brief Lifted corner positions of a face walk, starting at its first
     * dart's tail */
    std::vector<Vec2> face_polygon_lifted(FaceId f) const
    {
        std::vector<Vec2> poly;
        IVec2 offset{0, 0};
        for (DartId d : map_->faces()[f]) {
            poly.push_back(positions_[map_->tail(d)] + offset.toVec2());
            offset = offset + translations_[d];
        }
        return poly;
    }

private:
    MapPtr map_;
    std::vector<Vec2> positions_;
    std::vector<IVec2> translations_;
};

/** @brief One dart image inside a universal-cover patch */
struct PatchSegment {
    DartId dart;     ///< source dart
    IVec2 domain;    ///< fundamental-domain copy of the tail
    Vec2 a;          ///< lifted tail position
    Vec2 b;          ///< lifted head position
};

/** @brief One vertex copy inside a universal-cover patch */
struct PatchVertex {
    VertexId vertex;
    IVec2 domain;
    Vec2 pos;
};

/** @brief Finite fragment of the universal cover of a torus drawing */
struct CoverPatch {
    std::vector<PatchVertex> vertices;
    std::vector<PatchSegment> segments;
};

/**
 * @brief Lift of a torus drawing to the k-by-k block of fundamental
 * domains
 *
 * Each vertex is copied at p_v + (i,j) for 0 <= i,j < k, and each dart is
 * drawn once per domain copy as the straight segment given by its
 * translation vector. Segments whose head lands outside the block are
 * kept; this is a drawing fragment, not a closed map.
 */
inline CoverPatch universal_cover_patch(const TorusDrawing& drawing, int copies)
{
    if (copies < 1) {
        throw std::invalid_argument("universal cover patch: copies must be >= 1");
    }
    CoverPatch patch;
    const auto& map = drawing.map();
    for (std::int64_t i = 0; i < copies; ++i) {
        for (std::int64_t j = 0; j < copies; ++j) {
            IVec2 dom{i, j};
            Vec2 offset = dom.toVec2();
            for (VertexId v = 0; v < map.vertex_count(); ++v) {
                patch.vertices.push_back({v, dom, drawing.position(v) + offset});
            }
            for (DartId d = 0; d < map.dart_count(); ++d) {
                Vec2 a = drawing.position(map.tail(d)) + offset;
                Vec2 b = drawing.position(map.head(d)) +
                         (dom + drawing.translation(d)).toVec2();
                patch.segments.push_back({d, dom, a, b});
            }
        }
    }
    return patch;
}

/** @brief Result of translation-vector normalization of two drawings */
struct IsotopyResult {
    bool isotopic;
    std::vector<TorusDrawing> drawings;  ///< both re-coordinatized, same tau, when isotopic
};

namespace detail
{
/** BFS spanning tree shifts that zero every tree dart's translation. */
inline std::vector<IVec2> tree_shifts(const TorusDrawing& drawing)
{
    const auto& map = drawing.map();
    std::vector<IVec2> z(map.vertex_count(), IVec2{0, 0});
    std::vector<char> visited(map.vertex_count(), 0);
    visited[0] = 1;
    std::vector<VertexId> queue{0};
    // z chosen so that tau'_d = tau_d + z_u - z_v = 0 on tree darts
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId u = queue[qi];
        for (DartId d : map.darts_at(u)) {
            VertexId v = map.head(d);
            if (!visited[v]) {
                visited[v] = 1;
                z[v] = z[u] + drawing.translation(d);
                queue.push_back(v);
            }
        }
    }
    return z;
}
}  // namespace detail

/**
 * @brief Normalize two isotopic drawings so their translation vectors
 * agree
 *
 * Both drawings must share one combinatorial map. Roots a deterministic
 * spanning tree at vertex 0, re-coordinatizes each drawing so that every
 * tree dart has zero translation, and compares the remaining darts; a
 * mismatch on any non-tree dart means the drawings lie in different
 * isotopy classes. Idempotent.
 */
inline IsotopyResult normalize_isotopy(const TorusDrawing& g0, const TorusDrawing& g1)
{
    if (!(g0.map() == g1.map())) {
        throw std::invalid_argument("normalize isotopy: drawings use different maps");
    }
    auto apply = [](const TorusDrawing& g) {
        // shifting vertex v by z_v zeroes each tree dart u->v:
        // tau' = tau + z_u - z_v = tau + z_u - (z_u + tau) = 0
        auto z = detail::tree_shifts(g);
        std::vector<Vec2> pos = g.positions();
        for (std::size_t v = 0; v < z.size(); ++v) {
            pos[v] = pos[v] + z[v].toVec2();
        }
        return g.shifted(std::move(pos), z);
    };
    TorusDrawing n0 = apply(g0);
    TorusDrawing n1 = apply(g1);
    for (DartId d = 0; d < n0.map().dart_count(); ++d) {
        if (n0.translation(d) != n1.translation(d)) {
            return {false, {}};
        }
    }
    return {true, {std::move(n0), std::move(n1)}};
}

/**
 * @brief Build a torus drawing from geometry: positions plus an edge list
 * with translation vectors
 *
 * The rotation at each vertex is the counterclockwise angular order of the
 * lifted dart directions. Throws if any dart has zero length or two darts
 * at a vertex point in exactly the same direction.
 */
inline TorusDrawing make_torus_drawing(
    std::vector<Vec2> positions,
    const std::vector<std::tuple<VertexId, VertexId, IVec2>>& edges)
{
    const VertexId n = static_cast<VertexId>(positions.size());
    const DartId m = static_cast<DartId>(2 * edges.size());
    std::vector<DartId> rev(m);
    std::vector<VertexId> tail(m);
    std::vector<IVec2> tau(m);
    std::vector<Vec2> dir(m);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v, t] = edges[e];
        DartId d = static_cast<DartId>(2 * e);
        rev[d] = d + 1;
        rev[d + 1] = d;
        tail[d] = u;
        tail[d + 1] = v;
        tau[d] = t;
        tau[d + 1] = -t;
        dir[d] = positions[v] + t.toVec2() - positions[u];
        dir[d + 1] = -1.0 * dir[d];
        if (dir[d] == Vec2{0, 0}) {
            throw std::domain_error("make torus drawing: zero-length dart");
        }
    }
    std::vector<std::vector<DartId>> at_vertex(n);
    for (DartId d = 0; d < m; ++d) {
        at_vertex[tail[d]].push_back(d);
    }
    std::vector<DartId> next(m);
    for (VertexId v = 0; v < n; ++v) {
        auto& ds = at_vertex[v];
        std::sort(ds.begin(), ds.end(), [&](DartId a, DartId b) {
            return std::atan2(dir[a].y, dir[a].x) < std::atan2(dir[b].y, dir[b].x);
        });
        for (std::size_t i = 1; i < ds.size(); ++i) {
            if (std::atan2(dir[ds[i]].y, dir[ds[i]].x) ==
                std::atan2(dir[ds[i - 1]].y, dir[ds[i - 1]].x)) {
                throw std::domain_error(
                    "make torus drawing: coincident dart directions at a vertex");
            }
        }
        for (std::size_t i = 0; i < ds.size(); ++i) {
            next[ds[i]] = ds[(i + 1) % ds.size()];
        }
    }
    auto map = std::make_shared<const CombinatorialMap>(
        n, std::move(rev), std::move(next), std::move(tail));
    return TorusDrawing(std::move(map), std::move(positions), std::move(tau));
}

/**
 * @brief Build a planar drawing from geometry: positions plus an edge list
 *
 * Rotations come from counterclockwise angular order; the outer face is
 * the unique face whose walk has negative signed area.
 */
inline PlanarDrawing make_planar_drawing(
    std::vector<Vec2> positions,
    const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    const VertexId n = static_cast<VertexId>(positions.size());
    const DartId m = static_cast<DartId>(2 * edges.size());
    std::vector<DartId> rev(m);
    std::vector<VertexId> tail(m);
    std::vector<Vec2> dir(m);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        DartId d = static_cast<DartId>(2 * e);
        rev[d] = d + 1;
        rev[d + 1] = d;
        tail[d] = u;
        tail[d + 1] = v;
        dir[d] = positions[v] - positions[u];
        dir[d + 1] = -1.0 * dir[d];
        if (dir[d] == Vec2{0, 0}) {
            throw std::domain_error("make planar drawing: zero-length edge");
        }
    }
    std::vector<std::vector<DartId>> at_vertex(n);
    for (DartId d = 0; d < m; ++d) {
        at_vertex[tail[d]].push_back(d);
    }
    std::vector<DartId> next(m);
    for (VertexId v = 0; v < n; ++v) {
        auto& ds = at_vertex[v];
        std::sort(ds.begin(), ds.end(), [&](DartId a, DartId b) {
            return std::atan2(dir[a].y, dir[a].x) < std::atan2(dir[b].y, dir[b].x);
        });
        for (std::size_t i = 0; i < ds.size(); ++i) {
            next[ds[i]] = ds[(i + 1) % ds.size()];
        }
    }
    auto map = std::make_shared<const CombinatorialMap>(
        n, std::move(rev), std::move(next), std::move(tail));

    FaceId outer = -1;
    for (FaceId f = 0; f < map->face_count(); ++f) {
        double area2 = 0;
        const auto& cyc = map->faces()[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vec2 a = positions[map->tail(cyc[i])];
            Vec2 b = positions[map->tail(cyc[(i + 1) % cyc.size()])];
            area2 += cross(a, b);
        }
        if (area2 < 0) {
            if (outer >= 0) {
                throw std::domain_error(
                    "make planar drawing: multiple clockwise faces");
            }
            outer = f;
        }
    }
    if (outer < 0) {
        throw std::domain_error("make planar drawing: no clockwise face found");
    }
    return PlanarDrawing(std::move(map), std::move(positions), outer);
}

}  // namespace graphmorph
