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
#include <utility>
#include <vector>

#include "graphmorph/linsys.hpp"
#include "graphmorph/validate.hpp"
#include "graphmorph/weights.hpp"

namespace graphmorph
{

/** @brief Two torus drawings whose translation vectors cannot be made to
 * agree: they lie in different isotopy classes */
struct NotIsotopicError : std::runtime_error {
    NotIsotopicError() : std::runtime_error("drawings are not isotopic") {}
};

/** @brief A weight vector whose linear system has no solution */
struct UnrealizableError : std::runtime_error {
    explicit UnrealizableError(double res)
        : std::runtime_error("weight vector is not realizable"), residual{res}
    {
    }
    double residual;
};

struct MorphabilityCheck {
    bool morphable;
    double deviation;  ///< worst column-sum magnitude, relative to max weight
};

/**
 * @brief Is the weight vector morphable: do all columns of L and H sum to
 * zero?
 *
 * Morphable vectors are closed under convex combination and are always
 * realizable, which is what makes weight interpolation work on the torus.
 */
inline MorphabilityCheck is_morphable(const WeightVector& lambda,
                                      const CombinatorialMap& map,
                                      const std::vector<IVec2>& tau)
{
    LaplacianSystem sys = assemble_torus(map, tau, lambda);
    double worst = 0;
    for (double c : sys.column_sums()) {
        worst = std::max(worst, std::abs(c));
    }
    Vec2 h = sys.rhs_column_sum();
    worst = std::max({worst, std::abs(h.x), std::abs(h.y)});
    double scale = std::max(sys.max_weight, 1e-300);
    double dev = worst / scale;
    return {dev <= kMorphableTol, dev};
}

struct MorphableWeights {
    WeightVector mu;
};

/**
 * @brief Eulerian scaling: make a barycentric weight vector morphable
 *
 * Multiplies the weights of all darts leaving each vertex by that vertex's
 * entry of the left null vector of the Laplacian. Row u of the scaled
 * system is alpha_u times the old row, so the solution set is unchanged
 * and the scaled vector stays barycentric for the drawing; the columns of
 * the scaled system sum to zero by construction.
 */
inline MorphableWeights morphable_scaling(const WeightVector& lambda,
                                          const TorusDrawing& drawing)
{
    lambda.require_strict("morphable scaling");
    double res = torus_barycentric_residual(drawing, lambda);
    if (res > kResidualTol * drawing.diameter()) {
        throw std::domain_error(
            "morphable scaling: weights are not barycentric for the drawing");
    }
    const auto& map = drawing.map();
    LaplacianSystem sys = assemble_torus(map, drawing.translations(), lambda);
    ScalingVector alpha = left_null_vector(sys);
    std::vector<double> mu(map.dart_count());
    for (DartId d = 0; d < map.dart_count(); ++d) {
        mu[d] = alpha.alpha[map.tail(d)] * lambda[d];
    }
    MorphableWeights out{WeightVector(std::move(mu))};
    auto check = is_morphable(out.mu, map, drawing.translations());
    if (!check.morphable) {
        throw std::runtime_error("morphable scaling: column sums failed to vanish");
    }
    if (torus_barycentric_residual(drawing, out.mu) >
        kResidualTol * drawing.diameter()) {
        throw std::runtime_error("morphable scaling: scaled weights lost the drawing");
    }
    return out;
}

/**
 * @brief Weight-interpolation morph between isotopic convex torus drawings
 *
 * Holds the shared map and translation vectors (via a reference drawing),
 * morphable weights for both ends, and the anchor vertex with its straight
 * anchor path. Intermediate drawings are Floater drawings of the
 * interpolated weights, which stay morphable and hence solvable.
 */
struct TorusMorph {
    TorusDrawing reference;
    WeightVector mu0;
    WeightVector mu1;
    VertexId anchor{0};
    Vec2 anchor_start;
    Vec2 anchor_end;
};

/** @brief Drawing at time t of the morph; solver failure here means a
 * broken invariant and aborts loudly */
inline TorusDrawing torus_morph_eval(const TorusMorph& m, double t)
{
    WeightVector mu = interpolate(m.mu0, m.mu1, t);
    LaplacianSystem sys =
        assemble_torus(m.reference.map(), m.reference.translations(), mu);
    Vec2 anchor_pos = (1 - t) * m.anchor_start + t * m.anchor_end;
    std::vector<Vec2> pos = fixed_vertex_solve(sys, m.anchor, anchor_pos);
    double res = system_residual(sys, pos);
    if (res > kResidualTol * std::max(1.0, bbox_diameter(pos))) {
        throw std::logic_error(
            "torus morph eval: interpolated system is inconsistent (residual " +
            std::to_string(res) + ")");
    }
    return m.reference.with_positions(std::move(pos));
}

/**
 * @brief Build the convex-case morph: normalize, compute mean-value
 * weights, scale them morphable
 *
 * Both drawings must be convex and isotopic. The anchor travels along the
 * straight segment between its two end positions.
 */
inline TorusMorph torus_morph_build(const TorusDrawing& g0, const TorusDrawing& g1)
{
    IsotopyResult iso = normalize_isotopy(g0, g1);
    if (!iso.isotopic) {
        throw NotIsotopicError{};
    }
    const TorusDrawing& n0 = iso.drawings[0];
    const TorusDrawing& n1 = iso.drawings[1];
    if (!convex_faces(n0).ok || !convex_faces(n1).ok) {
        throw std::domain_error(
            "torus morph: nonconvex input, use the nonconvex pipeline");
    }
    WeightVector l0 = mean_value_weights(n0);
    WeightVector l1 = mean_value_weights(n1);
    MorphableWeights m0 = morphable_scaling(l0, n0);
    MorphableWeights m1 = morphable_scaling(l1, n1);
    return TorusMorph{n0, std::move(m0.mu), std::move(m1.mu), 0,
                      n0.position(0), n1.position(0)};
}

namespace detail
{
struct LiftedCorner {
    VertexId vertex;
    Vec2 pos;       ///< lifted position
    DartId out;     ///< face-walk dart leaving this corner
    IVec2 offset;   ///< cumulative translation at this corner
};

/** Triangulation of every face of a torus drawing by ear clipping in the
 * universal cover. */
struct TorusTriangulation {
    MapPtr map;
    std::vector<IVec2> tau;
    std::vector<std::pair<DartId, DartId>> added_darts;
    std::vector<std::pair<VertexId, VertexId>> added_edges;
};

inline TorusTriangulation triangulate_torus_faces(const TorusDrawing& drawing)
{
    const auto& orig = drawing.map();
    auto work = std::make_shared<const CombinatorialMap>(orig);
    std::vector<IVec2> tau = drawing.translations();
    TorusTriangulation out;

    std::vector<std::vector<LiftedCorner>> queue;
    for (FaceId f = 0; f < orig.face_count(); ++f) {
        const auto& cycle = orig.faces()[f];
        if (cycle.size() <= 3) {
            continue;
        }
        std::vector<LiftedCorner> poly;
        IVec2 offset{0, 0};
        for (DartId d : cycle) {
            poly.push_back({orig.tail(d),
                            drawing.position(orig.tail(d)) + offset.toVec2(), d,
                            offset});
            offset = offset + drawing.translation(d);
        }
        queue.push_back(std::move(poly));
    }

    while (!queue.empty()) {
        auto poly = std::move(queue.back());
        queue.pop_back();
        if (poly.size() <= 3) {
            continue;
        }
        const std::size_t k = poly.size();
        std::size_t ear = k;
        for (std::size_t i = 0; i < k && ear == k; ++i) {
            Vec2 a = poly[(i + k - 1) % k].pos;
            Vec2 b = poly[i].pos;
            Vec2 c = poly[(i + 1) % k].pos;
            if (orientation(a, b, c) <= 0) {
                continue;
            }
            bool clean = true;
            for (std::size_t j = 0; j < k && clean; ++j) {
                if (j == i || j == (i + 1) % k || j == (i + k - 1) % k) {
                    continue;
                }
                Vec2 p = poly[j].pos;
                if (orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 &&
                    orientation(c, a, p) >= 0) {
                    clean = false;
                }
            }
            if (clean) {
                ear = i;
            }
        }
        if (ear == k) {
            throw std::runtime_error("triangulate torus faces: no ear found");
        }
        std::size_t prev = (ear + k - 1) % k;
        std::size_t next = (ear + 1) % k;
        auto ins = insert_corner_edge(*work, poly[prev].out, poly[next].out);
        work = std::make_shared<const CombinatorialMap>(std::move(ins.map));
        IVec2 diag_tau = poly[next].offset - poly[prev].offset;
        tau.push_back(diag_tau);
        tau.push_back(-diag_tau);
        out.added_darts.emplace_back(ins.first, ins.second);
        out.added_edges.emplace_back(poly[prev].vertex, poly[next].vertex);

        std::vector<LiftedCorner> rest;
        for (std::size_t s = next;; s = (s + 1) % k) {
            if (s == prev) {
                break;
            }
            rest.push_back(poly[s]);
        }
        rest.push_back({poly[prev].vertex, poly[prev].pos, ins.first, poly[prev].offset});
        queue.push_back(std::move(rest));
    }
    out.map = work;
    out.tau = std::move(tau);
    return out;
}
}  // namespace detail

/**
 * @brief Composite torus morph: one weight-interpolation leg, or two legs
 * through the uniform-weight drawing for nonconvex input
 *
 * Each stage runs on its own (possibly diagonal-augmented) map; emitted
 * frames drop the auxiliary darts and live on the original map.
 */
struct TorusMorphStage {
    TorusMorph leg;
    MapPtr emit_map;              ///< original map
    std::vector<IVec2> emit_tau;  ///< original translations
    std::vector<std::pair<VertexId, VertexId>> added_edges;
};

struct TorusMorphPath {
    std::vector<TorusMorphStage> stages;  ///< one or two

    TorusDrawing eval(double t) const
    {
        if (t < 0 || t > 1) {
            throw std::invalid_argument("torus morph eval: t outside [0,1]");
        }
        if (stages.size() == 1) {
            TorusDrawing full = torus_morph_eval(stages[0].leg, t);
            return TorusDrawing(stages[0].emit_map, full.positions(),
                                stages[0].emit_tau);
        }
        const auto& st = t <= 0.5 ? stages[0] : stages[1];
        double local = t <= 0.5 ? 2 * t : 2 * t - 1;
        TorusDrawing full = torus_morph_eval(st.leg, local);
        return TorusDrawing(st.emit_map, full.positions(), st.emit_tau);
    }
};

/**
 * @brief Nonconvex-case morph through the uniform-weight Floater drawing
 *
 * Triangulates each end in the universal cover, draws the same diagonals
 * in the all-ones Floater drawing (valid there because its faces are
 * convex), gives the diagonals weight zero (symmetric, hence morphable),
 * and runs one weight-interpolation leg per half.
 */
inline TorusMorphPath torus_morph_build_nonconvex(const TorusDrawing& g0,
                                                  const TorusDrawing& g1)
{
    IsotopyResult iso = normalize_isotopy(g0, g1);
    if (!iso.isotopic) {
        throw NotIsotopicError{};
    }
    const TorusDrawing& n0 = iso.drawings[0];
    const TorusDrawing& n1 = iso.drawings[1];
    const auto& map = n0.map();

    // uniform-weight Floater drawing, anchored between the two ends
    WeightVector ones(std::vector<double>(map.dart_count(), 1.0));
    LaplacianSystem ones_sys = assemble_torus(map, n0.translations(), ones);
    Vec2 star_anchor = 0.5 * (n0.position(0) + n1.position(0));
    std::vector<Vec2> star_pos = fixed_vertex_solve(ones_sys, 0, star_anchor);
    if (system_residual(ones_sys, star_pos) > kResidualTol) {
        throw std::runtime_error("torus morph: uniform-weight solve inconsistent");
    }
    TorusDrawing star(n0.map_ptr(), star_pos, n0.translations());
    if (!convex_faces(star).ok) {
        throw std::runtime_error(
            "torus morph: uniform-weight drawing is not convex (map not "
            "essentially 3-connected?)");
    }

    auto make_stage = [&](const TorusDrawing& endpoint, bool toward_star) {
        detail::TorusTriangulation tri = detail::triangulate_torus_faces(endpoint);
        TorusDrawing tri_drawing(tri.map, endpoint.positions(), tri.tau);
        WeightVector lambda = mean_value_weights(tri_drawing);
        MorphableWeights mu = morphable_scaling(lambda, tri_drawing);

        std::vector<double> star_vals(tri.map->dart_count(), 1.0);
        for (auto [g, g_rev] : tri.added_darts) {
            star_vals[g] = 0.0;
            star_vals[g_rev] = 0.0;
        }
        WeightVector mu_star(std::move(star_vals));
        auto check = is_morphable(mu_star, *tri.map, tri.tau);
        if (!check.morphable) {
            throw std::runtime_error("torus morph: star weights not morphable");
        }

        TorusMorph leg =
            toward_star
                ? TorusMorph{tri_drawing, mu.mu, mu_star, 0,
                             endpoint.position(0), star_anchor}
                : TorusMorph{TorusDrawing(tri.map, star.positions(), tri.tau),
                             mu_star, mu.mu, 0, star_anchor, endpoint.position(0)};
        return TorusMorphStage{std::move(leg), endpoint.map_ptr(),
                               endpoint.translations(), tri.added_edges};
    };

    TorusMorphPath path;
    path.stages.push_back(make_stage(n0, true));
    path.stages.push_back(make_stage(n1, false));
    return path;
}

/** @brief Route to the convex or nonconvex pipeline as the inputs demand */
inline TorusMorphPath torus_morph_path(const TorusDrawing& g0, const TorusDrawing& g1)
{
    IsotopyResult iso = normalize_isotopy(g0, g1);
    if (!iso.isotopic) {
        throw NotIsotopicError{};
    }
    if (convex_faces(iso.drawings[0]).ok && convex_faces(iso.drawings[1]).ok) {
        TorusMorph leg = torus_morph_build(iso.drawings[0], iso.drawings[1]);
        TorusMorphStage stage{leg, leg.reference.map_ptr(),
                              leg.reference.translations(), {}};
        return TorusMorphPath{{std::move(stage)}};
    }
    return torus_morph_build_nonconvex(iso.drawings[0], iso.drawings[1]);
}

enum class TweakStatus { Ok, ConditionViolated };

struct EdgeTweakResult {
    TweakStatus status;
    WeightVector mu;       ///< valid when Ok
    double condition_gap;  ///< |delta*alpha_tail - eps*alpha_head|, relative
    double residual;       ///< realizability residual of mu when Ok
};

/**
 * @brief Single-edge weight change that provably stays realizable
 *
 * Given realizable lambda and a positive row vector alpha annihilating
 * both L and H, adding delta to one dart and eps to its reversal keeps the
 * vector realizable when delta*alpha_tail = eps*alpha_head. That condition
 * is sufficient only; when it fails the result reports ConditionViolated
 * and makes no claim either way.
 */
inline EdgeTweakResult edge_tweak_realizable(const WeightVector& lambda,
                                             const ScalingVector& alpha,
                                             const CombinatorialMap& map,
                                             const std::vector<IVec2>& tau,
                                             DartId d,
                                             double delta,
                                             double eps)
{
    lambda.require_strict("edge tweak");
    LaplacianSystem sys = assemble_torus(map, tau, lambda);
    // verify the annihilation premises
    std::vector<double> colsum(sys.n, 0.0);
    Vec2 hsum{0, 0};
    for (VertexId u = 0; u < sys.n; ++u) {
        colsum[u] += alpha.alpha[u] * sys.diag[u];
        for (auto [v, s] : sys.off[u]) {
            colsum[v] -= alpha.alpha[u] * s;
        }
        hsum += alpha.alpha[u] * sys.rhs[u];
    }
    double scale = std::max(sys.max_weight, 1e-300);
    double worst = std::max(std::abs(hsum.x), std::abs(hsum.y));
    for (double c : colsum) {
        worst = std::max(worst, std::abs(c));
    }
    if (worst > 1e-8 * scale) {
        throw std::invalid_argument(
            "edge tweak: alpha does not annihilate the system");
    }

    double lhs = delta * alpha.alpha[map.tail(d)];
    double rhs = eps * alpha.alpha[map.head(d)];
    double gap = std::abs(lhs - rhs);
    double rel = gap / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    if (gap != 0 && rel > kTweakConditionTol) {
        return {TweakStatus::ConditionViolated, WeightVector{}, rel, 0};
    }
    WeightVector mu = lambda;
    mu[d] += delta;
    mu[map.rev(d)] += eps;
    if (mu[d] <= 0 || mu[map.rev(d)] <= 0) {
        throw std::domain_error("edge tweak: resulting weights not positive");
    }
    mu = WeightVector(std::move(mu.values));
    double residual = realizability_residual(map, tau, mu);
    return {TweakStatus::Ok, std::move(mu), rel, residual};
}

/**
 * @brief Parallel-displacement deviation of two realizable vectors that
 * differ on one edge
 *
 * Solves both Floater drawings with the last vertex pinned at the origin
 * and returns the worst |cross(displacement, unit direction of the changed
 * dart in the first drawing)| / diameter. For realizable vectors that
 * differ on a single edge, every vertex moves parallel to that edge, so
 * the deviation vanishes up to solver error.
 */
inline double edge_tweak_displacement_check(const WeightVector& lambda,
                                            const WeightVector& mu,
                                            const CombinatorialMap& map,
                                            const std::vector<IVec2>& tau)
{
    if (lambda.size() != mu.size() || lambda.size() != map.dart_count()) {
        throw std::invalid_argument("edge tweak check: size mismatch");
    }
    DartId changed = -1;
    for (DartId d = 0; d < map.dart_count(); ++d) {
        if (lambda[d] != mu[d]) {
            if (changed == -1) {
                changed = d;
            } else if (map.rev(d) != changed) {
                throw std::invalid_argument(
                    "edge tweak check: vectors differ on more than one edge");
            }
        }
    }
    if (changed == -1) {
        return 0;  // identical weights, identical drawings
    }
    VertexId anchor = map.vertex_count() - 1;
    auto solve = [&](const WeightVector& w) {
        LaplacianSystem sys = assemble_torus(map, tau, w);
        FloaterSolveResult r = solve_floater(sys, anchor);
        if (r.status != SolveStatus::Solved) {
            throw UnrealizableError(r.residual);
        }
        return r.positions;
    };
    std::vector<Vec2> p_lambda = solve(lambda);
    std::vector<Vec2> p_mu = solve(mu);

    Vec2 dir = p_lambda[map.head(changed)] + tau[changed].toVec2() -
               p_lambda[map.tail(changed)];
    double len = norm(dir);
    if (len == 0) {
        throw std::domain_error("edge tweak check: changed dart has zero length");
    }
    Vec2 unit = dir / len;
    double diam = std::max(1.0, bbox_diameter(p_lambda));
    double worst = 0;
    for (VertexId w = 0; w < map.vertex_count(); ++w) {
        worst = std::max(worst, std::abs(cross(p_mu[w] - p_lambda[w], unit)) / diam);
    }
    return worst;
}

}  // namespace graphmorph
