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
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "graphmorph/drawing.hpp"
#include "graphmorph/geometry.hpp"

namespace graphmorph
{

enum class ViolationKind {
    Crossing,         ///< two edge interiors cross transversally
    Touch,            ///< an endpoint lies on a non-incident edge
    Overlap,          ///< collinear edges share a positive-length piece
    ZeroLength,       ///< degenerate edge
    NonconvexCorner,  ///< face corner fails strict convexity
};

struct Violation {
    ViolationKind kind;
    DartId dart_a{-1};
    DartId dart_b{-1};
    VertexId vertex{-1};
    int frame{-1};
    double t{-1};
    double magnitude{0};
};

/** @brief Aggregated validator output; ok iff no violations */
struct ValidationReport {
    bool ok{true};
    std::vector<Violation> violations;

    void add(Violation v)
    {
        ok = false;
        violations.push_back(v);
    }

    void absorb(const ValidationReport& other, int frame, double t)
    {
        for (Violation v : other.violations) {
            v.frame = frame;
            v.t = t;
            add(v);
        }
    }
};

namespace detail
{
/** Segment prepared for pairwise checking. Endpoint keys identify allowed
 * shared endpoints (vertex ids in the plane, lifted-point ids in a cover
 * patch). */
struct CheckedSegment {
    Vec2 a;
    Vec2 b;
    DartId edge;
    std::int64_t key_a;
    std::int64_t key_b;
};

inline void check_pair(const CheckedSegment& s, const CheckedSegment& t,
                       ValidationReport& report)
{
    // bounding-box reject
    if (std::max(s.a.x, s.b.x) < std::min(t.a.x, t.b.x) ||
        std::max(t.a.x, t.b.x) < std::min(s.a.x, s.b.x) ||
        std::max(s.a.y, s.b.y) < std::min(t.a.y, t.b.y) ||
        std::max(t.a.y, t.b.y) < std::min(s.a.y, s.b.y)) {
        return;
    }
    int shared = 0;
    Vec2 p{}, q1{}, q2{};
    if (s.key_a == t.key_a) { ++shared; p = s.a; q1 = s.b; q2 = t.b; }
    if (s.key_a == t.key_b) { ++shared; p = s.a; q1 = s.b; q2 = t.a; }
    if (s.key_b == t.key_a) { ++shared; p = s.b; q1 = s.a; q2 = t.b; }
    if (s.key_b == t.key_b) { ++shared; p = s.b; q1 = s.a; q2 = t.a; }

    if (shared >= 2) {
        report.add({ViolationKind::Overlap, s.edge, t.edge});
        return;
    }
    if (shared == 1) {
        // only a collinear continuation past the shared endpoint is illegal
        if (orientation(p, q1, q2) == 0 && dot(q1 - p, q2 - p) > 0) {
            report.add({ViolationKind::Overlap, s.edge, t.edge});
        }
        return;
    }
    switch (segment_contact(s.a, s.b, t.a, t.b)) {
        case SegmentContact::None:
            break;
        case SegmentContact::Proper:
            report.add({ViolationKind::Crossing, s.edge, t.edge});
            break;
        case SegmentContact::Touch:
            report.add({ViolationKind::Touch, s.edge, t.edge});
            break;
        case SegmentContact::Overlap:
            report.add({ViolationKind::Overlap, s.edge, t.edge});
            break;
    }
}

/** All-pairs intersection check with a uniform-grid broad phase. A pair is
 * tested only in the cell holding the max of the two bbox-min corners, so
 * every candidate pair is examined exactly once. */
inline ValidationReport check_segment_set(const std::vector<CheckedSegment>& segs)
{
    ValidationReport report;
    if (segs.empty()) {
        return report;
    }
    std::vector<double> ext;
    ext.reserve(segs.size());
    for (const auto& s : segs) {
        if (s.a == s.b) {
            report.add({ViolationKind::ZeroLength, s.edge, -1});
        }
        ext.push_back(std::max(std::abs(s.b.x - s.a.x), std::abs(s.b.y - s.a.y)));
    }
    auto mid = ext.begin() + ext.size() / 2;
    std::nth_element(ext.begin(), mid, ext.end());
    double cell = std::max(*mid, 1e-12);

    struct CellRange {
        std::int32_t x0, x1, y0, y1;
    };
    std::vector<CellRange> range(segs.size());
    auto cell_of = [cell](double v) {
        return static_cast<std::int32_t>(std::floor(v / cell));
    };
    auto pack = [](std::int32_t x, std::int32_t y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
               static_cast<std::uint32_t>(y);
    };
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> grid;
    grid.reserve(2 * segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        CellRange r{cell_of(std::min(s.a.x, s.b.x)), cell_of(std::max(s.a.x, s.b.x)),
                    cell_of(std::min(s.a.y, s.b.y)), cell_of(std::max(s.a.y, s.b.y))};
        range[i] = r;
        for (auto ix = r.x0; ix <= r.x1; ++ix) {
            for (auto iy = r.y0; iy <= r.y1; ++iy) {
                grid[pack(ix, iy)].push_back(static_cast<std::int32_t>(i));
            }
        }
    }
    for (auto& [key, bucket] : grid) {
        auto cx = static_cast<std::int32_t>(key >> 32);
        auto cy = static_cast<std::int32_t>(key & 0xFFFFFFFFu);
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            const auto& ri = range[bucket[i]];
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                const auto& rj = range[bucket[j]];
                if (std::max(ri.x0, rj.x0) != cx || std::max(ri.y0, rj.y0) != cy) {
                    continue;  // another cell owns this pair
                }
                check_pair(segs[bucket[i]], segs[bucket[j]], report);
            }
        }
    }
    return report;
}
}  // namespace detail

/**
 * @brief Report every pair of edge segments that intersect away from
 * shared endpoints
 *
 * Exact orientation predicates; touching at a shared vertex is legal,
 * everything else (proper crossings, endpoint-on-interior contacts,
 * collinear overlaps, zero-length edges) is a violation.
 */
inline ValidationReport crossing_free(const PlanarDrawing& drawing)
{
    const auto& map = drawing.map();
    std::vector<detail::CheckedSegment> segs;
    segs.reserve(map.edge_count());
    for (DartId d : map.edges()) {
        VertexId u = map.tail(d);
        VertexId v = map.head(d);
        segs.push_back({drawing.position(u), drawing.position(v), d, u, v});
    }
    return detail::check_segment_set(segs);
}

namespace detail
{
/** Key lifted points by exact coordinates: bitwise-equal points share a
 * key, everything else gets its own. */
struct PointKeyTable {
    std::map<std::pair<double, double>, std::int64_t> table;
    std::int64_t next_id{0};

    std::int64_t key(Vec2 p)
    {
        auto [it, inserted] = table.try_emplace({p.x, p.y}, next_id);
        if (inserted) {
            ++next_id;
        }
        return it->second;
    }
};

inline std::vector<CheckedSegment> patch_segments_per_edge(
    const TorusDrawing& drawing, int span)
{
    const auto& map = drawing.map();
    std::vector<CheckedSegment> segs;
    PointKeyTable keys;
    for (std::int64_t i = 0; i < span; ++i) {
        for (std::int64_t j = 0; j < span; ++j) {
            Vec2 offset{double(i), double(j)};
            for (DartId d : map.edges()) {
                Vec2 a = drawing.position(map.tail(d)) + offset;
                Vec2 b = drawing.position(map.head(d)) +
                         (drawing.translation(d) + IVec2{i, j}).toVec2();
                segs.push_back({a, b, d, keys.key(a), keys.key(b)});
            }
        }
    }
    return segs;
}
}  // namespace detail

/**
 * @brief Crossing check for a torus drawing via its universal cover
 *
 * Normalizes positions to the unit square and checks a patch of
 * fundamental-domain copies large enough for the recorded translation
 * vectors (3x3 when no |tau| component exceeds 1). Violations are
 * deduplicated per edge pair.
 */
inline ValidationReport torus_crossing_free(const TorusDrawing& drawing)
{
    TorusDrawing norm = drawing.normalized();
    std::int64_t max_tau = 1;
    for (const auto& t : norm.translations()) {
        max_tau = std::max({max_tau, std::abs(t.x), std::abs(t.y)});
    }
    int span = static_cast<int>(2 * max_tau + 1);
    auto segs = detail::patch_segments_per_edge(norm, span);
    ValidationReport raw = detail::check_segment_set(segs);

    ValidationReport report;
    std::unordered_set<std::uint64_t> seen;
    for (const Violation& v : raw.violations) {
        auto lo = static_cast<std::uint64_t>(std::min(v.dart_a, v.dart_b) + 1);
        auto hi = static_cast<std::uint64_t>(std::max(v.dart_a, v.dart_b) + 1);
        auto kind = static_cast<std::uint64_t>(v.kind);
        if (seen.insert((kind << 60) | (lo << 30) | hi).second) {
            report.add(v);
        }
    }
    return report;
}

/** @brief Crossing check over an explicit cover patch (reversal twins are
 * skipped; each edge lift is checked once) */
inline ValidationReport crossing_free(const CoverPatch& patch,
                                      const CombinatorialMap& map)
{
    detail::PointKeyTable keys;
    std::vector<detail::CheckedSegment> segs;
    for (const auto& ps : patch.segments) {
        if (ps.dart != map.edge_of(ps.dart)) {
            continue;
        }
        segs.push_back({ps.a, ps.b, ps.dart, keys.key(ps.a), keys.key(ps.b)});
    }
    return detail::check_segment_set(segs);
}

/**
 * @brief Strict convexity of every face
 *
 * Bounded planar faces and all lifted torus faces must make strict left
 * turns at every corner; the planar outer face must be strictly convex as
 * a clockwise walk. Assumes the drawing is crossing-free.
 */
inline ValidationReport convex_faces(const PlanarDrawing& drawing)
{
    ValidationReport report;
    const auto& map = drawing.map();
    for (FaceId f = 0; f < map.face_count(); ++f) {
        auto poly = drawing.face_polygon(f);
        const auto& cycle = map.faces()[f];
        bool outer = f == drawing.outer_face();
        const auto k = poly.size();
        if (k < 3) {
            report.add({ViolationKind::NonconvexCorner, cycle[0], -1});
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
            int o = orientation(poly[i], poly[(i + 1) % k], poly[(i + 2) % k]);
            bool good = outer ? o < 0 : o > 0;
            if (!good) {
                report.add({ViolationKind::NonconvexCorner, cycle[(i + 1) % k],
                            -1, map.tail(cycle[(i + 2) % k])});
            }
        }
    }
    return report;
}

/** @brief Strict convexity of every lifted face of a torus drawing */
inline ValidationReport convex_faces(const TorusDrawing& drawing)
{
    ValidationReport report;
    const auto& map = drawing.map();
    for (FaceId f = 0; f < map.face_count(); ++f) {
        auto poly = drawing.face_polygon_lifted(f);
        const auto& cycle = map.faces()[f];
        const auto k = poly.size();
        if (k < 3) {
            report.add({ViolationKind::NonconvexCorner, cycle[0], -1});
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (orientation(poly[i], poly[(i + 1) % k], poly[(i + 2) % k]) <= 0) {
                report.add({ViolationKind::NonconvexCorner, cycle[(i + 1) % k],
                            -1, map.tail(cycle[(i + 2) % k])});
            }
        }
    }
    return report;
}

/**
 * @brief Sampled crossing-freeness of the linear interpolations between
 * consecutive frames
 *
 * For each transition, interpolates vertex positions at `samples` uniform
 * times (endpoints included) and runs the planar crossing check on each
 * sampled drawing. The frames themselves are covered by the endpoint
 * samples.
 */
inline ValidationReport morph_frames_valid(const std::vector<PlanarDrawing>& frames,
                                           int samples = 11)
{
    ValidationReport report;
    if (samples < 2) {
        throw std::invalid_argument("morph frames valid: need at least 2 samples");
    }
    for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
        const auto& a = frames[k];
        const auto& b = frames[k + 1];
        for (int s = 0; s < samples; ++s) {
            double t = double(s) / (samples - 1);
            std::vector<Vec2> pos(a.positions().size());
            for (std::size_t v = 0; v < pos.size(); ++v) {
                pos[v] = (1 - t) * a.positions()[v] + t * b.positions()[v];
            }
            auto frame_report = crossing_free(a.with_positions(std::move(pos)));
            report.absorb(frame_report, static_cast<int>(k), t);
        }
    }
    return report;
}

}  // namespace graphmorph
