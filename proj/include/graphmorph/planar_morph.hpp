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
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphmorph/linsys.hpp"
#include "graphmorph/validate.hpp"
#include "graphmorph/weights.hpp"

namespace graphmorph
{

enum class TransitionKind {
    EdgeWeightSwap,    ///< the two dart weights of one edge jump to the target's
    AuxiliaryRemoval,  ///< an added diagonal's dart weights drop to zero
};

/** @brief One linear morphing step: what changed between two frames */
struct Transition {
    TransitionKind kind;
    VertexId u;    ///< changed edge endpoints
    VertexId v;
    DartId edge;   ///< canonical dart in the frames' map, -1 for auxiliary edges
};

/**
 * @brief Piecewise-linear morph: a frame sequence on one shared map
 *
 * Consecutive frames differ by a weight change on a single edge, so each
 * in-between linear interpolation is a unidirectional morph (all vertices
 * move parallel to that edge).
 */
struct MorphSchedule {
    std::vector<PlanarDrawing> frames;
    std::vector<Transition> transitions;  ///< size frames.size() - 1
};

/**
 * @brief Worst parallel-displacement deviation over a schedule
 *
 * For each transition, every vertex displacement must be parallel to the
 * changed edge's drawing in the earlier frame. Returns the largest
 * |cross(displacement, unit edge direction)| / diameter.
 */
inline double parallel_deviation(const MorphSchedule& schedule)
{
    double worst = 0;
    for (std::size_t k = 0; k < schedule.transitions.size(); ++k) {
        const auto& a = schedule.frames[k];
        const auto& b = schedule.frames[k + 1];
        const auto& tr = schedule.transitions[k];
        Vec2 dir = a.position(tr.v) - a.position(tr.u);
        double len = norm(dir);
        double diam = std::max(a.diameter(), 1e-300);
        if (len == 0) {
            continue;
        }
        Vec2 unit = dir / len;
        for (VertexId w = 0; w < a.map().vertex_count(); ++w) {
            Vec2 disp = b.position(w) - a.position(w);
            worst = std::max(worst, std::abs(cross(disp, unit)) / diam);
        }
    }
    return worst;
}

namespace detail
{
inline void require_same_map_and_boundary(const PlanarDrawing& a,
                                          const PlanarDrawing& b,
                                          const char* where)
{
    if (!(a.map() == b.map())) {
        throw std::invalid_argument(std::string(where) + ": drawings use different maps");
    }
    if (a.outer_face() != b.outer_face()) {
        throw std::domain_error(std::string(where) + ": outer faces differ");
    }
    for (DartId d : a.map().faces()[a.outer_face()]) {
        VertexId v = a.map().tail(d);
        if (a.position(v) != b.position(v)) {
            throw std::domain_error(std::string(where) +
                                    ": outer face positions differ");
        }
    }
}

inline void require_convex(const PlanarDrawing& g, const char* where)
{
    if (!convex_faces(g).ok) {
        throw std::domain_error(std::string(where) + ": drawing is not convex");
    }
}
}  // namespace detail

/**
 * @brief Morph between convex drawings by swapping one edge's weights at a
 * time
 *
 * Computes mean-value weights for both endpoints, then walks the internal
 * edges: each step copies the end weights of one edge's two darts into the
 * working weight vector and re-solves the Floater drawing. Every frame is
 * itself a convex Floater drawing, and consecutive frames differ by a
 * unidirectional linear morph. At most one step per internal edge, so at
 * most 3n-9 steps.
 *
 * `edge_order` optionally permutes the processed internal edges (canonical
 * darts); the default is ascending id order.
 */
inline MorphSchedule morph_convex(const PlanarDrawing& start,
                                  const PlanarDrawing& end,
                                  const std::vector<DartId>& edge_order = {})
{
    detail::require_same_map_and_boundary(start, end, "morph convex");
    detail::require_convex(start, "morph convex (start)");
    detail::require_convex(end, "morph convex (end)");

    const auto& map = start.map();
    WeightVector lambda = mean_value_weights(start);
    WeightVector mu = mean_value_weights(end);

    std::vector<DartId> order = edge_order;
    if (order.empty()) {
        for (DartId d : map.edges()) {
            bool internal = map.face_of(d) != start.outer_face() &&
                            map.face_of(map.rev(d)) != start.outer_face();
            if (internal) {
                order.push_back(d);
            }
        }
    }

    MorphSchedule schedule;
    schedule.frames.push_back(start);
    for (DartId e : order) {
        lambda[e] = mu[e];
        lambda[map.rev(e)] = mu[map.rev(e)];
        schedule.frames.push_back(floater_drawing(start, lambda));
        schedule.transitions.push_back(
            {TransitionKind::EdgeWeightSwap, map.tail(e), map.head(e), map.edge_of(e)});
    }
    return schedule;
}

/** @brief Output of Convexify: the schedule, its convex final frame, and
 * the diagonals that were added and removed along the way
 *
 * The frames are drawings of the input map; the diagonal-augmented map is
 * exposed so callers can check that every frame, drawn with its auxiliary
 * edges, has strictly convex faces throughout. */
struct ConvexifyResult {
    MorphSchedule schedule;
    PlanarDrawing convex;
    std::vector<std::pair<VertexId, VertexId>> added_edges;
    MapPtr augmented_map;       ///< null when no diagonals were needed
    FaceId augmented_outer{-1};
};

namespace detail
{
struct Corner {
    VertexId vertex;
    Vec2 pos;
    DartId out;  ///< face-walk dart leaving this corner
};

/** Interior angle at corner i of a CCW polygon. */
inline double corner_angle(const std::vector<Corner>& poly, std::size_t i)
{
    const std::size_t k = poly.size();
    Vec2 cur = poly[i].pos;
    Vec2 prev = poly[(i + k - 1) % k].pos;
    Vec2 next = poly[(i + 1) % k].pos;
    return ccw_angle(next - cur, prev - cur);
}

inline bool corner_reflex(const std::vector<Corner>& poly, std::size_t i)
{
    const std::size_t k = poly.size();
    Vec2 cur = poly[i].pos;
    Vec2 prev = poly[(i + k - 1) % k].pos;
    Vec2 next = poly[(i + 1) % k].pos;
    return orientation(prev, cur, next) <= 0;
}

/** Diagonal (i,j) lies inside the polygon and avoids all non-incident
 * boundary edges and corners. */
inline bool diagonal_clear(const std::vector<Corner>& poly, std::size_t i,
                           std::size_t j)
{
    const std::size_t k = poly.size();
    Vec2 a = poly[i].pos;
    Vec2 b = poly[j].pos;
    // local test at corner i: direction must enter the interior sector
    Vec2 e_next = poly[(i + 1) % k].pos - a;
    Vec2 e_prev = poly[(i + k - 1) % k].pos - a;
    double theta = ccw_angle(e_next, e_prev);
    double split = ccw_angle(e_next, b - a);
    if (split <= 0 || split >= theta) {
        return false;
    }
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t t = (s + 1) % k;
        if (s == i || s == j || t == i || t == j) {
            continue;  // incident edges share an endpoint
        }
        if (segment_contact(a, b, poly[s].pos, poly[t].pos) != SegmentContact::None) {
            return false;
        }
    }
    return true;
}
}  // namespace detail

/**
 * @brief Morph a crossing-free drawing to a convex one by adding and then
 * releasing diagonals
 *
 * Splits every bounded face into strictly convex polygons, greedily
 * resolving one reflex corner per added diagonal. Mean-value weights of
 * the decomposed drawing reproduce the input; driving each diagonal's two
 * dart weights to zero (one edge per step) then morphs to the Floater
 * drawing of the original map. Frames are emitted without the auxiliary
 * edges.
 *
 * The map must be 3-connected and the input crossing-free.
 */
inline ConvexifyResult convexify(const PlanarDrawing& drawing)
{
    if (!is_three_connected(drawing.map())) {
        throw std::domain_error("convexify: map is not 3-connected");
    }
    if (!crossing_free(drawing).ok) {
        throw std::domain_error("convexify: drawing has crossings");
    }

    // Existing vertex pairs, so no diagonal duplicates a graph edge (the
    // two straight segments would coincide).
    std::set<std::pair<VertexId, VertexId>> used_pairs;
    auto pair_key = [](VertexId a, VertexId b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    const auto& orig_map = drawing.map();
    for (DartId d : orig_map.edges()) {
        used_pairs.insert(pair_key(orig_map.tail(d), orig_map.head(d)));
    }

    // Collect the initial bounded-face polygons.
    std::vector<std::vector<detail::Corner>> queue;
    for (FaceId f = 0; f < orig_map.face_count(); ++f) {
        if (f == drawing.outer_face()) {
            continue;
        }
        std::vector<detail::Corner> poly;
        for (DartId d : orig_map.faces()[f]) {
            poly.push_back({orig_map.tail(d), drawing.position(orig_map.tail(d)), d});
        }
        queue.push_back(std::move(poly));
    }

    auto work_map = std::make_shared<const CombinatorialMap>(orig_map);
    std::vector<std::pair<VertexId, VertexId>> added;
    std::vector<std::pair<DartId, DartId>> added_darts;

    while (!queue.empty()) {
        auto poly = std::move(queue.back());
        queue.pop_back();
        const std::size_t k = poly.size();
        std::size_t reflex = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (detail::corner_reflex(poly, i)) {
                reflex = i;
                break;
            }
        }
        if (reflex == k) {
            continue;  // strictly convex already
        }
        // candidate far corners, best balanced split first
        double best_score = -std::numeric_limits<double>::infinity();
        std::size_t best_j = k;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == reflex || j == (reflex + 1) % k || j == (reflex + k - 1) % k) {
                continue;
            }
            if (poly[j].vertex == poly[reflex].vertex) {
                continue;
            }
            if (used_pairs.count(pair_key(poly[reflex].vertex, poly[j].vertex))) {
                continue;
            }
            if (!detail::diagonal_clear(poly, reflex, j)) {
                continue;
            }
            double theta = detail::corner_angle(poly, reflex);
            double split = ccw_angle(poly[(reflex + 1) % k].pos - poly[reflex].pos,
                                     poly[j].pos - poly[reflex].pos);
            double part1 = split;
            double part2 = theta - split;
            // prefer splits that kill the reflex angle outright
            double score = std::min({part1, M_PI - part1, part2, M_PI - part2});
            if (part1 >= M_PI || part2 >= M_PI) {
                score -= M_PI;  // fallback tier: angle merely reduced
            }
            if (score > best_score) {
                best_score = score;
                best_j = j;
            }
        }
        if (best_j == k) {
            throw std::domain_error(
                "convexify: no admissible diagonal at a reflex corner");
        }

        auto ins = insert_corner_edge(*work_map, poly[reflex].out, poly[best_j].out);
        work_map = std::make_shared<const CombinatorialMap>(std::move(ins.map));
        added.emplace_back(poly[reflex].vertex, poly[best_j].vertex);
        added_darts.emplace_back(ins.first, ins.second);
        used_pairs.insert(pair_key(poly[reflex].vertex, poly[best_j].vertex));

        // split the polygon: reflex..best_j plus the new edge back
        std::vector<detail::Corner> p1, p2;
        for (std::size_t s = reflex;; s = (s + 1) % k) {
            if (s == best_j) {
                break;
            }
            p1.push_back(poly[s]);
        }
        p1.push_back({poly[best_j].vertex, poly[best_j].pos, ins.second});
        for (std::size_t s = best_j;; s = (s + 1) % k) {
            if (s == reflex) {
                break;
            }
            p2.push_back(poly[s]);
        }
        p2.push_back({poly[reflex].vertex, poly[reflex].pos, ins.first});
        queue.push_back(std::move(p1));
        queue.push_back(std::move(p2));
    }

    ConvexifyResult result{MorphSchedule{}, drawing, {}};
    result.added_edges = added;
    result.schedule.frames.push_back(drawing);
    if (added.empty()) {
        return result;  // already convex: empty transition list
    }

    // outer face id in the augmented map (dart ids are preserved)
    DartId outer_dart = orig_map.faces()[drawing.outer_face()].front();
    FaceId aug_outer = work_map->face_of(outer_dart);
    PlanarDrawing augmented(work_map, drawing.positions(), aug_outer);
    result.augmented_map = work_map;
    result.augmented_outer = aug_outer;

    WeightVector lambda = mean_value_weights(augmented);
    for (auto [g, g_rev] : added_darts) {
        lambda[g] = 0;
        lambda[g_rev] = 0;
        auto positions = solve_planar(assemble_planar(augmented, lambda));
        result.schedule.frames.push_back(drawing.with_positions(positions));
    }
    for (auto [u, v] : added) {
        result.schedule.transitions.push_back(
            {TransitionKind::AuxiliaryRemoval, u, v, -1});
    }
    result.convex = result.schedule.frames.back();
    return result;
}

/**
 * @brief Full planar morph: convexify both ends, morph between the convex
 * drawings, and play the second convexification backwards
 *
 * For 3-connected drawings with a shared strictly convex outer face. The
 * step count is bounded by 4n-12: the first convexification's diagonals
 * plus the internal edges fit in one planar graph (at most 3n-9 edges)
 * and the second convexification adds at most one step per reflex angle
 * (at most n-3).
 */
inline MorphSchedule morph(const PlanarDrawing& start, const PlanarDrawing& end,
                           const std::vector<DartId>& edge_order = {})
{
    detail::require_same_map_and_boundary(start, end, "morph");
    ConvexifyResult before = convexify(start);
    ConvexifyResult after = convexify(end);
    MorphSchedule mid = morph_convex(before.convex, after.convex, edge_order);

    MorphSchedule out;
    out.frames = before.schedule.frames;
    out.transitions = before.schedule.transitions;
    for (std::size_t i = 1; i < mid.frames.size(); ++i) {
        out.frames.push_back(mid.frames[i]);
    }
    for (const auto& t : mid.transitions) {
        out.transitions.push_back(t);
    }
    for (std::size_t i = after.schedule.frames.size(); i-- > 1;) {
        out.frames.push_back(after.schedule.frames[i - 1]);
        const auto& t = after.schedule.transitions[i - 1];
        out.transitions.push_back(t);
    }
    return out;
}

/** @brief The nested-squares stress family and its solved drawing */
struct NestedSquares {
    PlanarDrawing drawing;
    WeightVector weights;  ///< symmetric all-ones
    std::vector<std::array<VertexId, 4>> layers;
};

/**
 * @brief Spring embedding of stacked square antiprisms
 *
 * Layer 0 is the fixed outer square; each deeper layer is linked to the
 * previous one by eight crossing edges, and the equilibrium rotates each
 * square an eighth turn while shrinking it geometrically. The classic
 * example of Tutte drawings needing precision linear in the layer count.
 */
inline NestedSquares nested_squares(int layers)
{
    if (layers < 2) {
        throw std::invalid_argument("nested squares: need at least 2 layers");
    }
    std::vector<Vec2> guess(4 * layers);
    std::vector<std::array<VertexId, 4>> layer_ids(layers);
    for (int i = 0; i < layers; ++i) {
        double r = std::sqrt(2.0) * std::pow(0.3, i);
        for (int j = 0; j < 4; ++j) {
            VertexId v = 4 * i + j;
            layer_ids[i][j] = v;
            double ang = M_PI * j / 2 + M_PI * i / 4;
            guess[v] = {r * std::cos(ang), r * std::sin(ang)};
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < layers; ++i) {
        for (int j = 0; j < 4; ++j) {
            edges.emplace_back(layer_ids[i][j], layer_ids[i][(j + 1) % 4]);
            if (i > 0) {
                edges.emplace_back(layer_ids[i][j], layer_ids[i - 1][j]);
                edges.emplace_back(layer_ids[i][j], layer_ids[i - 1][(j + 1) % 4]);
            }
        }
    }
    PlanarDrawing rough = make_planar_drawing(std::move(guess), edges);
    WeightVector ones(std::vector<double>(rough.map().dart_count(), 1.0));
    PlanarDrawing solved = floater_drawing(rough, ones);
    return {std::move(solved), std::move(ones), std::move(layer_ids)};
}

}  // namespace graphmorph
