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
See the License for the specific language governing permissions or
limitations under the License.
*/
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphmorph
{

using DartId = std::int32_t;
using VertexId = std::int32_t;
using FaceId = std::int32_t;

/**
 * @brief Rotation-system representation of a graph embedded in an
 * orientable surface
 *
 * Every edge is a pair of opposing darts exchanged by the reversal
 * involution `rev`. `next` is the counterclockwise rotation: it permutes
 * the darts leaving each vertex in CCW geometric order. Faces are derived,
 * never stored; they are the orbits of rev∘next, reported here as
 * head-to-tail walks with the face interior on the left. Loops and
 * parallel edges are first-class.
 *
 * Instances are immutable after construction and safe to share between
 * threads.
 */
class CombinatorialMap
{
public:
    CombinatorialMap(
        VertexId vertex_count,
        std::vector<DartId> rev,
        std::vector<DartId> next,
        std::vector<VertexId> tail)
        : vertex_count_{vertex_count},
          rev_{std::move(rev)},
          next_{std::move(next)},
          tail_{std::move(tail)}
    {
        validate();
        next_inv_.assign(dart_count(), -1);
        for (DartId d = 0; d < dart_count(); ++d) {
            next_inv_[next_[d]] = d;
        }
        build_faces();
    }

    DartId dart_count() const { return static_cast<DartId>(rev_.size()); }
    VertexId vertex_count() const { return vertex_count_; }
    DartId edge_count() const { return dart_count() / 2; }

    DartId rev(DartId d) const { return rev_[d]; }
    DartId next(DartId d) const { return next_[d]; }
    DartId next_inv(DartId d) const { return next_inv_[d]; }
    VertexId tail(DartId d) const { return tail_[d]; }
    VertexId head(DartId d) const { return tail_[rev_[d]]; }

    /** Successor along a face walk: the next dart head-to-tail. */
    DartId face_next(DartId d) const { return next_inv_[rev_[d]]; }

    /** @brief Canonical dart of d's edge (the smaller of the pair) */
    DartId edge_of(DartId d) const { return std::min(d, rev_[d]); }

    /** @brief One canonical dart per edge, ascending */
    std::vector<DartId> edges() const
    {
        std::vector<DartId> out;
        out.reserve(edge_count());
        for (DartId d = 0; d < dart_count(); ++d) {
            if (d < rev_[d]) {
                out.push_back(d);
            }
        }
        return out;
    }

    /** @brief Darts leaving v, in rotation order starting at the smallest */
    std::vector<DartId> darts_at(VertexId v) const
    {
        std::vector<DartId> out;
        DartId first = vertex_dart_[v];
        DartId d = first;
        do {
            out.push_back(d);
            d = next_[d];
        } while (d != first);
        return out;
    }

    int degree(VertexId v) const
    {
        return static_cast<int>(darts_at(v).size());
    }

    /**
     * @brief Face walks: each dart appears in exactly one cycle
     *
     * Cycle k lists darts d0, d1, ... with head(di) = tail(di+1); cycles
     * are ordered by their smallest dart and start at it.
     */
    const std::vector<std::vector<DartId>>& faces() const { return faces_; }

    FaceId face_of(DartId d) const { return face_of_[d]; }

    FaceId face_count() const { return static_cast<FaceId>(faces_.size()); }

    /** @brief V - E + F: 2 for planar maps, 0 for torus maps */
    int euler_characteristic() const
    {
        return vertex_count_ - edge_count() + face_count();
    }

    friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.rev_ == b.rev_ &&
               a.next_ == b.next_ && a.tail_ == b.tail_;
    }

private:
    void validate()
    {
        const auto m = dart_count();
        if (m < 2 || m % 2 != 0) {
            throw std::invalid_argument("map: dart count must be even and positive");
        }
        if (next_.size() != rev_.size() || tail_.size() != rev_.size()) {
            throw std::invalid_argument("map: rev/next/tail size mismatch");
        }
        if (vertex_count_ <= 0) {
            throw std::invalid_argument("map: no vertices");
        }
        std::vector<char> seen(m, 0);
        for (DartId d = 0; d < m; ++d) {
            if (rev_[d] < 0 || rev_[d] >= m || rev_[d] == d || rev_[rev_[d]] != d) {
                throw std::invalid_argument("map: rev is not a fixed-point-free involution");
            }
            if (next_[d] < 0 || next_[d] >= m) {
                throw std::invalid_argument("map: next out of range");
            }
            if (seen[next_[d]]++) {
                throw std::invalid_argument("map: next is not a bijection");
            }
            if (tail_[d] < 0 || tail_[d] >= vertex_count_) {
                throw std::invalid_argument("map: tail out of range");
            }
        }
        for (DartId d = 0; d < m; ++d) {
            if (tail_[next_[d]] != tail_[d]) {
                throw std::invalid_argument("map: next does not preserve the dart tail");
            }
        }
        vertex_dart_.assign(vertex_count_, -1);
        for (DartId d = m - 1; d >= 0; --d) {
            vertex_dart_[tail_[d]] = d;
        }
        for (VertexId v = 0; v < vertex_count_; ++v) {
            if (vertex_dart_[v] < 0) {
                throw std::invalid_argument(
                    "map: isolated vertex " + std::to_string(v));
            }
        }
        // connectivity over the underlying graph
        std::vector<char> visited(vertex_count_, 0);
        std::vector<VertexId> stack{0};
        visited[0] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            DartId first = vertex_dart_[u];
            DartId d = first;
            do {
                VertexId w = tail_[rev_[d]];
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
                d = next_[d];
            } while (d != first);
        }
        if (std::accumulate(visited.begin(), visited.end(), 0) != vertex_count_) {
            throw std::invalid_argument("map: graph is not connected");
        }
    }

    void build_faces()
    {
        const auto m = dart_count();
        face_of_.assign(m, -1);
        for (DartId d0 = 0; d0 < m; ++d0) {
            if (face_of_[d0] >= 0) {
                continue;
            }
            FaceId f = static_cast<FaceId>(faces_.size());
            std::vector<DartId> cycle;
            DartId d = d0;
            do {
                face_of_[d] = f;
                cycle.push_back(d);
                d = face_next(d);
            } while (d != d0);
            faces_.push_back(std::move(cycle));
        }
    }

    VertexId vertex_count_;
    std::vector<DartId> rev_;
    std::vector<DartId> next_;
    std::vector<DartId> next_inv_;
    std::vector<VertexId> tail_;
    std::vector<DartId> vertex_dart_;
    std::vector<std::vector<DartId>> faces_;
    std::vector<FaceId> face_of_;
};

/**
 * @brief Insert one new edge whose darts live in two corners of a common
 * face
 *
 * A corner is named by its outgoing face-walk dart; the new dart is
 * spliced into the rotation immediately after that dart, which places it
 * inside the corner's angular sector. Returns the enlarged map plus the
 * ids of the two new darts: `first` leaves tail(corner_a), `second` is its
 * reversal. Geometric validity of the chord is the caller's concern.
 */
struct CornerEdgeInsertion {
    CombinatorialMap map;
    DartId first;
    DartId second;
};

inline CornerEdgeInsertion insert_corner_edge(
    const CombinatorialMap& map,
    DartId corner_a_out,
    DartId corner_b_out)
{
    const DartId m = map.dart_count();
    const DartId g = m;
    const DartId g_rev = m + 1;

    std::vector<DartId> rev(m + 2);
    std::vector<DartId> next(m + 2);
    std::vector<VertexId> tail(m + 2);
    for (DartId d = 0; d < m; ++d) {
        rev[d] = map.rev(d);
        next[d] = map.next(d);
        tail[d] = map.tail(d);
    }
    rev[g] = g_rev;
    rev[g_rev] = g;
    tail[g] = map.tail(corner_a_out);
    tail[g_rev] = map.tail(corner_b_out);

    next[g] = next[corner_a_out];
    next[corner_a_out] = g;
    next[g_rev] = next[corner_b_out];
    next[corner_b_out] = g_rev;

    return {CombinatorialMap(map.vertex_count(), std::move(rev),
                             std::move(next), std::move(tail)),
            g, g_rev};
}

/**
 * @brief Vertex 3-connectivity (brute force, desk scale)
 *
 * Removes each vertex in turn and looks for articulation points in the
 * remainder. Maps with fewer than four vertices are accepted when
 * connected. Loops and parallel edges are ignored for connectivity.
 */
inline bool is_three_connected(const CombinatorialMap& map)
{
    const VertexId n = map.vertex_count();
    if (n < 4) {
        return true;
    }
    // simple adjacency lists
    std::vector<std::vector<VertexId>> adj(n);
    for (DartId d = 0; d < map.dart_count(); ++d) {
        VertexId u = map.tail(d);
        VertexId v = map.head(d);
        if (u != v) {
            adj[u].push_back(v);
        }
    }

    std::vector<int> disc(n), low(n);
    std::vector<char> art(n);
    int timer = 0;

    // articulation points of G - removed; any hit means a 2-cut
    for (VertexId removed = 0; removed < n; ++removed) {
        std::fill(disc.begin(), disc.end(), -1);
        std::fill(art.begin(), art.end(), 0);
        timer = 0;
        VertexId root = removed == 0 ? 1 : 0;
        struct Frame {
            VertexId v;
            VertexId parent;
            std::size_t child_idx;
        };
        std::vector<Frame> stack;
        std::vector<int> tree_children(n, 0);
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        int reached = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.child_idx < adj[fr.v].size()) {
                VertexId w = adj[fr.v][fr.child_idx++];
                if (w == removed || w == fr.parent) {
                    continue;
                }
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    ++reached;
                    ++tree_children[fr.v];
                    stack.push_back({w, fr.v, 0});
                } else {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                VertexId v = fr.v;
                VertexId parent = fr.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (parent != root && low[v] >= disc[parent]) {
                        art[parent] = 1;
                    }
                }
            }
        }
        if (reached != n - 1) {
            return false;  // removed vertex alone is a cut
        }
        if (tree_children[root] > 1) {
            return false;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (v != removed && art[v]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace graphmorph
