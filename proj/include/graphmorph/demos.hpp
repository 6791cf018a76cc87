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

#include <sstream>
#include <string>
#include <vector>

#include "graphmorph/generators.hpp"
#include "graphmorph/planar_morph.hpp"
#include "graphmorph/torus_morph.hpp"
#include "graphmorph/validate.hpp"

namespace graphmorph
{

/** @brief Outcome of one demo run: a pass flag plus human-readable lines */
struct DemoReport {
    std::string name;
    bool pass{false};
    std::vector<std::string> lines;
    /// drawings worth rendering: label plus torus drawing
    std::vector<std::pair<std::string, TorusDrawing>> torus_figures;
    std::vector<std::pair<std::string, PlanarDrawing>> planar_figures;
};

/**
 * @brief Weight 2 on one dart, weight 1 everywhere else: never realizable
 *
 * Checks torus grids with 4, 9 and 36 vertices: the rank test must reject
 * the vector and the minimum-norm residual must sit clearly above the
 * unrealizability threshold.
 */
inline DemoReport demo_bad_weights()
{
    DemoReport report{"bad-weights", true, {}, {}, {}};
    for (int n : {2, 3, 6}) {
        auto g = torus_grid(n, n);
        std::vector<double> vals(g.map().dart_count(), 1.0);
        vals[0] = 2.0;
        WeightVector w(std::move(vals));
        double residual = realizability_residual(g.map(), g.translations(), w);
        auto solve = solve_floater(assemble_torus(g.map(), g.translations(), w), 0);
        bool flagged = solve.status == SolveStatus::Unrealizable && residual > kRealizabilitySeparation;
        report.pass = report.pass && flagged;
        std::ostringstream line;
        line << n * n << "-vertex grid: min-norm residual " << residual << ", "
             << (solve.status == SolveStatus::Unrealizable ? "unrealizable"
                                                           : "SOLVED (unexpected)");
        report.lines.push_back(line.str());
    }
    return report;
}

/**
 * @brief Averaged normalized mean-value weights of two isotopic K7
 * drawings are not realizable
 *
 * The two drawings differ only in the position of vertex 2. The morphable
 * rescalings of the same two weight vectors average to a realizable vector
 * whose Floater drawing is crossing-free, which is the fix the scaling
 * provides.
 */
inline DemoReport demo_k7_average(Vec2 offset = {0.10, 0.07})
{
    DemoReport report{"k7-average", true, {}, {}, {}};
    TorusDrawing a = k7_torus();
    TorusDrawing b = k7_torus(offset);
    if (!convex_faces(a).ok || !convex_faces(b).ok || !torus_crossing_free(b).ok) {
        report.pass = false;
        report.lines.push_back("constructed K7 drawings are not both convex");
        return report;
    }
    WeightVector la = per_vertex_normalize(mean_value_weights(a), a.map());
    WeightVector lb = per_vertex_normalize(mean_value_weights(b), b.map());
    WeightVector avg = interpolate(la, lb, 0.5);
    double residual = realizability_residual(a.map(), a.translations(), avg);
    bool not_realizable = residual > kRealizabilitySeparation;
    {
        std::ostringstream line;
        line << "average of normalized mean-value weights: residual " << residual
             << (not_realizable ? " (not realizable)" : " (realizable?!)");
        report.lines.push_back(line.str());
    }

    WeightVector ma = morphable_scaling(la, a).mu;
    WeightVector mb = morphable_scaling(lb, b).mu;
    WeightVector mavg = interpolate(ma, mb, 0.5);
    auto solve = solve_floater(assemble_torus(a.map(), a.translations(), mavg), 0);
    bool fixed = solve.status == SolveStatus::Solved;
    if (fixed) {
        TorusDrawing mid(a.map_ptr(), solve.positions, a.translations());
        fixed = torus_crossing_free(mid).ok && convex_faces(mid).ok;
        report.torus_figures.emplace_back("k7-morphable-average", mid);
    }
    report.lines.push_back(fixed
                               ? "morphable rescaling: average realizable, drawing convex"
                               : "morphable rescaling FAILED");
    report.torus_figures.emplace_back("k7-first", a);
    report.torus_figures.emplace_back("k7-second", b);
    report.pass = not_realizable && fixed;
    return report;
}

/**
 * @brief Fixed-vertex interpolation on a 12x12 grid produces crossings
 *
 * One drawing shifts a row half way around, the other shifts a column.
 * Interpolating their normalized mean-value weights 2:1 and solving with a
 * pinned vertex yields a drawing with crossings; interpolating the
 * morphable rescalings instead stays crossing-free.
 */
inline DemoReport demo_steiner_fischer()
{
    DemoReport report{"steiner-fischer", true, {}, {}, {}};
    const int n = 12;
    std::vector<double> row_shift(n, 0.0), col_shift(n, 0.0);
    row_shift[n / 2] = 0.5;
    col_shift[n / 2] = 0.5;
    TorusDrawing left = torus_grid(n, n, row_shift, {});
    TorusDrawing down = torus_grid(n, n, {}, col_shift);

    WeightVector l_left = per_vertex_normalize(mean_value_weights(left), left.map());
    WeightVector l_down = per_vertex_normalize(mean_value_weights(down), down.map());
    // same edges and translation vectors dart for dart; only the rotation
    // differs, and the linear system never looks at it
    WeightVector mixed = interpolate(l_left, l_down, 1.0 / 3.0);

    auto sys = assemble_torus(left.map(), left.translations(), mixed);
    auto pinned = fixed_vertex_solve(sys, 0, left.position(0));
    TorusDrawing bad(left.map_ptr(), pinned, left.translations());
    auto crossings = torus_crossing_free(bad);
    {
        std::ostringstream line;
        line << "fixed-vertex drawing: " << crossings.violations.size()
             << " crossing violations";
        report.lines.push_back(line.str());
    }
    report.torus_figures.emplace_back("sf-fixed-vertex", bad);

    double residual = realizability_residual(left.map(), left.translations(), mixed);
    {
        std::ostringstream line;
        line << "mixed weight vector residual " << residual;
        report.lines.push_back(line.str());
    }

    WeightVector m_left = morphable_scaling(l_left, left).mu;
    WeightVector m_down = morphable_scaling(l_down, down).mu;
    WeightVector m_mixed = interpolate(m_left, m_down, 1.0 / 3.0);
    auto good_solve =
        solve_floater(assemble_torus(left.map(), left.translations(), m_mixed), 0);
    bool good = good_solve.status == SolveStatus::Solved;
    if (good) {
        TorusDrawing fine(left.map_ptr(), good_solve.positions, left.translations());
        good = torus_crossing_free(fine).ok;
        report.torus_figures.emplace_back("sf-morphable", fine);
    }
    report.lines.push_back(good ? "morphable route: crossing-free"
                                : "morphable route FAILED");
    report.torus_figures.emplace_back("sf-row-shifted", left);
    report.torus_figures.emplace_back("sf-col-shifted", down);
    report.pass = !crossings.ok && residual > kRealizabilitySeparation && good;
    return report;
}

/**
 * @brief Nested-squares precision stress: layer diameters decay
 * geometrically
 *
 * Reports the ratio of consecutive layer diameters and the first layer
 * count (if any) at which the solver's residual or the crossing check
 * fails in double precision.
 */
inline DemoReport demo_nested_squares(int layers = 10)
{
    DemoReport report{"nested-squares", true, {}, {}, {}};
    NestedSquares fam = nested_squares(layers);
    report.planar_figures.emplace_back("nested-squares", fam.drawing);

    auto layer_diameter = [&](int i) {
        Vec2 a = fam.drawing.position(fam.layers[i][0]);
        Vec2 b = fam.drawing.position(fam.layers[i][2]);
        return norm(a - b);
    };
    double worst_ratio = 0;
    for (int i = 0; i + 1 < layers; ++i) {
        double ratio = layer_diameter(i + 1) / layer_diameter(i);
        worst_ratio = std::max(worst_ratio, ratio);
        std::ostringstream line;
        line << "layer " << i << " -> " << i + 1 << ": diameter ratio " << ratio;
        report.lines.push_back(line.str());
    }
    report.pass = worst_ratio < 0.9;

    int first_bad = -1;
    for (int count = 2; count <= layers; ++count) {
        NestedSquares f = nested_squares(count);
        double res = planar_barycentric_residual(f.drawing, f.weights);
        bool ok = res <= 1e-9 * f.drawing.diameter() && crossing_free(f.drawing).ok;
        if (!ok) {
            first_bad = count;
            break;
        }
    }
    report.lines.push_back(
        first_bad < 0
            ? "residual and crossing checks pass for every layer count tested"
            : "first failing layer count: " + std::to_string(first_bad));
    return report;
}

}  // namespace graphmorph
