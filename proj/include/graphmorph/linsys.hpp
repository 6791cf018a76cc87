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

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphmorph/drawing.hpp"
#include "graphmorph/tolerances.hpp"
#include "graphmorph/weights.hpp"

namespace graphmorph
{

/**
 * @brief The torus Laplacian system L P = H
 *
 * Row u: diagonal = sum of u's outgoing non-loop weights, off-diagonal
 * (u,v) = -(sum of weights of darts u->v). The diagonal is computed by
 * summing the accumulated off-diagonal values in column order, so every
 * row sums to zero exactly, not merely to rounding. Loops contribute
 * lambda*tau to H and nothing to L.
 */
struct LaplacianSystem {
    VertexId n{0};
    /// per row: (column, accumulated weight), column != row, ascending
    std::vector<std::vector<std::pair<VertexId, double>>> off;
    /// per row: sum of off weights, added in the stored order
    std::vector<double> diag;
    /// per row: sum over all outgoing darts (loops included) of lambda*tau
    std::vector<Vec2> rhs;
    /// per row: sum of |lambda| over all outgoing darts, for residual scaling
    std::vector<double> row_scale;
    double max_weight{0};

    /** L row u applied to positions P */
    Vec2 apply_row(VertexId u, const std::vector<Vec2>& p) const
    {
        Vec2 acc = diag[u] * p[u];
        for (auto [v, s] : off[u]) {
            acc -= s * p[v];
        }
        return acc;
    }

    /** Row sum: zero exactly, because the diagonal is defined as this very
     * left-fold of the off-diagonal values */
    double row_sum(VertexId u) const
    {
        double s = 0;
        for (auto [v, w] : off[u]) {
            s += w;
        }
        return diag[u] - s;
    }

    /** Column sums of L */
    std::vector<double> column_sums() const
    {
        std::vector<double> c(n, 0.0);
        for (VertexId u = 0; u < n; ++u) {
            c[u] += diag[u];
            for (auto [v, s] : off[u]) {
                c[v] -= s;
            }
        }
        return c;
    }

    /** Column sums of H (one 2-vector) */
    Vec2 rhs_column_sum() const
    {
        Vec2 c{0, 0};
        for (const auto& h : rhs) {
            c += h;
        }
        return c;
    }

    Eigen::MatrixXd dense() const
    {
        Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
        for (VertexId u = 0; u < n; ++u) {
            L(u, u) = diag[u];
            for (auto [v, s] : off[u]) {
                L(u, v) -= s;
            }
        }
        return L;
    }
};

/** @brief Positive per-vertex scaling with alpha * L = 0 */
struct ScalingVector {
    std::vector<double> alpha;
};

/** @brief Debug dump: "row col value" per nonzero of L, then "# rhs" and
 * one "row hx hy" line per vertex */
inline void dump_coordinate(std::ostream& out, const LaplacianSystem& sys)
{
    for (VertexId u = 0; u < sys.n; ++u) {
        out << u << ' ' << u << ' ' << sys.diag[u] << '\n';
        for (auto [v, s] : sys.off[u]) {
            out << u << ' ' << v << ' ' << -s << '\n';
        }
    }
    out << "# rhs\n";
    for (VertexId u = 0; u < sys.n; ++u) {
        out << u << ' ' << sys.rhs[u].x << ' ' << sys.rhs[u].y << '\n';
    }
}

/** @brief Assemble the system of Eq-style torus constraints */
inline LaplacianSystem assemble_torus(const CombinatorialMap& map,
                                      const std::vector<IVec2>& tau,
                                      const WeightVector& lambda)
{
    if (static_cast<DartId>(tau.size()) != map.dart_count() ||
        lambda.size() != map.dart_count()) {
        throw std::invalid_argument("assemble torus: size mismatch");
    }
    for (DartId d = 0; d < map.dart_count(); ++d) {
        if (tau[map.rev(d)] != -tau[d]) {
            throw std::invalid_argument("assemble torus: tau not antisymmetric");
        }
    }
    LaplacianSystem sys;
    sys.n = map.vertex_count();
    sys.off.resize(sys.n);
    sys.diag.assign(sys.n, 0.0);
    sys.rhs.assign(sys.n, Vec2{0, 0});
    sys.row_scale.assign(sys.n, 0.0);
    sys.max_weight = lambda.max_value();

    std::vector<std::map<VertexId, double>> acc(sys.n);
    for (DartId d = 0; d < map.dart_count(); ++d) {
        VertexId u = map.tail(d);
        VertexId v = map.head(d);
        double w = lambda[d];
        sys.rhs[u] += w * tau[d].toVec2();
        sys.row_scale[u] += w;
        if (u != v) {
            acc[u][v] += w;
        }
    }
    for (VertexId u = 0; u < sys.n; ++u) {
        double d = 0;
        for (auto& [v, s] : acc[u]) {
            sys.off[u].emplace_back(v, s);
            d += s;
        }
        sys.diag[u] = d;
    }
    return sys;
}

namespace detail
{
inline Eigen::SparseMatrix<double> reduced_matrix(const LaplacianSystem& sys,
                                                  VertexId skip)
{
    const VertexId n = sys.n;
    std::vector<int> idx(n, -1);
    int k = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (v != skip) {
            idx[v] = k++;
        }
    }
    std::vector<Eigen::Triplet<double>> trip;
    for (VertexId u = 0; u < n; ++u) {
        if (u == skip) {
            continue;
        }
        trip.emplace_back(idx[u], idx[u], sys.diag[u]);
        for (auto [v, s] : sys.off[u]) {
            if (v != skip) {
                trip.emplace_back(idx[u], idx[v], -s);
            }
        }
    }
    Eigen::SparseMatrix<double> A(n - 1, n - 1);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}
}  // namespace detail

/**
 * @brief Solve L P = H with one vertex pinned, no consistency check
 *
 * Deletes the pinned vertex's row and column, which restores full rank,
 * and substitutes its fixed position into the right-hand side. For
 * inconsistent weight vectors the output can contain crossings; that is
 * the point of exposing this operation separately.
 */
inline std::vector<Vec2> fixed_vertex_solve(const LaplacianSystem& sys,
                                            VertexId fixed,
                                            Vec2 fixed_pos)
{
    const VertexId n = sys.n;
    if (fixed < 0 || fixed >= n) {
        throw std::invalid_argument("fixed vertex solve: vertex out of range");
    }
    std::vector<Vec2> out(n);
    out[fixed] = fixed_pos;
    if (n == 1) {
        return out;
    }
    std::vector<int> idx(n, -1);
    int k = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (v != fixed) {
            idx[v] = k++;
        }
    }
    Eigen::MatrixXd B(n - 1, 2);
    for (VertexId u = 0; u < n; ++u) {
        if (u == fixed) {
            continue;
        }
        Vec2 b = sys.rhs[u];
        for (auto [v, s] : sys.off[u]) {
            if (v == fixed) {
                b += s * fixed_pos;
            }
        }
        B(idx[u], 0) = b.x;
        B(idx[u], 1) = b.y;
    }
    Eigen::SparseMatrix<double> A = detail::reduced_matrix(sys, fixed);
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("fixed vertex solve: factorization failed");
    }
    Eigen::MatrixXd X = lu.solve(B);
    for (VertexId v = 0; v < n; ++v) {
        if (v != fixed) {
            out[v] = Vec2{X(idx[v], 0), X(idx[v], 1)};
        }
    }
    return out;
}

/** @brief Worst per-row residual of L P = H, scaled per row by the row's
 * total outgoing weight */
inline double system_residual(const LaplacianSystem& sys, const std::vector<Vec2>& p)
{
    double worst = 0;
    for (VertexId u = 0; u < sys.n; ++u) {
        Vec2 r = sys.apply_row(u, p) - sys.rhs[u];
        double scale = std::max(sys.row_scale[u], 1e-300);
        worst = std::max(worst, norm(r) / scale);
    }
    return worst;
}

/**
 * @brief Left null vector of L, normalized to max entry 1
 *
 * Pins the last vertex's entry to 1 and solves the transpose system on
 * the remaining principal block, which is nonsingular for strictly
 * positive weights on a connected graph. All entries of the result are
 * positive (weighted directed matrix-tree theorem: entry i is proportional
 * to the total weight of inward spanning trees rooted at i).
 */
inline ScalingVector left_null_vector(const LaplacianSystem& sys)
{
    const VertexId n = sys.n;
    if (n == 1) {
        return {{1.0}};
    }
    const VertexId pivot = n - 1;
    std::vector<int> idx(n, -1);
    int k = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (v != pivot) {
            idx[v] = k++;
        }
    }
    // alpha^T L = 0 with alpha[pivot] = 1: (L^T)_red x = -(row pivot of L)_red
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n - 1);
    for (VertexId u = 0; u < n; ++u) {
        for (auto [v, s] : sys.off[u]) {
            if (u == pivot) {
                if (v != pivot) {
                    b(idx[v]) += s;  // -L(pivot, v) = s
                }
            } else if (v != pivot) {
                trip.emplace_back(idx[v], idx[u], -s);
            }
        }
        if (u != pivot) {
            trip.emplace_back(idx[u], idx[u], sys.diag[u]);
        }
    }
    Eigen::SparseMatrix<double> At(n - 1, n - 1);
    At.setFromTriplets(trip.begin(), trip.end());
    At.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(At);
    lu.factorize(At);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("left null vector: factorization failed");
    }
    Eigen::VectorXd x = lu.solve(b);

    ScalingVector alpha;
    alpha.alpha.assign(n, 1.0);
    for (VertexId v = 0; v < pivot; ++v) {
        alpha.alpha[v] = x(idx[v]);
    }
    double amax = 0;
    for (double a : alpha.alpha) {
        amax = std::max(amax, std::abs(a));
    }
    for (double& a : alpha.alpha) {
        a /= amax;
    }
    // residual and positivity diagnostics
    std::vector<double> colsum(n, 0.0);
    for (VertexId u = 0; u < n; ++u) {
        colsum[u] += alpha.alpha[u] * sys.diag[u];
        for (auto [v, s] : sys.off[u]) {
            colsum[v] -= alpha.alpha[u] * s;
        }
    }
    double resid = 0;
    for (double c : colsum) {
        resid = std::max(resid, std::abs(c));
    }
    double amin = alpha.alpha[0];
    for (double a : alpha.alpha) {
        amin = std::min(amin, a);
    }
    double scale = std::max(sys.max_weight, 1e-300);
    if (amin <= 0 || resid > 1e-6 * scale) {
        throw std::runtime_error(
            "left null vector: numerical rank failure (min entry " +
            std::to_string(amin) + ", residual " + std::to_string(resid / scale) +
            " of max weight)");
    }
    return alpha;
}

/**
 * @brief Minimum-norm residual of L P = H over all P
 *
 * Since rank(L) = n-1 for strictly positive weights, the minimum residual
 * is the component of H along the left null direction:
 * |alpha^T H| / |alpha|. Scaled by max(1, max weight) so the
 * classification is insensitive to uniform weight rescaling. Zero (up to
 * tolerance) exactly when the weight vector is realizable.
 */
inline double realizability_residual(const CombinatorialMap& map,
                                     const std::vector<IVec2>& tau,
                                     const WeightVector& lambda)
{
    lambda.require_strict("realizability residual");
    LaplacianSystem sys = assemble_torus(map, tau, lambda);
    ScalingVector alpha = left_null_vector(sys);
    Vec2 dot{0, 0};
    double nrm2 = 0;
    for (VertexId u = 0; u < sys.n; ++u) {
        dot += alpha.alpha[u] * sys.rhs[u];
        nrm2 += alpha.alpha[u] * alpha.alpha[u];
    }
    return norm(dot) / (std::sqrt(nrm2) * std::max(1.0, sys.max_weight));
}

enum class SolveStatus { Solved, Unrealizable };

struct FloaterSolveResult {
    SolveStatus status{SolveStatus::Solved};
    std::vector<Vec2> positions;  ///< valid when Solved
    double residual{0};           ///< least-squares residual when Unrealizable
};

/// Dense rank tests are used up to this size; larger systems fall back to
/// the left-null-vector residual test.
inline constexpr VertexId kDenseRankLimit = 1024;

/**
 * @brief Solve the full torus system with one anchored vertex, detecting
 * unrealizable weight vectors
 *
 * Realizability is decided by comparing rank([L|H]) with rank(L) via a
 * rank-revealing QR with relative pivot threshold kRankThreshold. When
 * consistent, returns the unique solution with the anchor at (0,0).
 */
inline FloaterSolveResult solve_floater(const LaplacianSystem& sys, VertexId anchor)
{
    if (anchor < 0 || anchor >= sys.n) {
        throw std::invalid_argument("solve floater: anchor out of range");
    }
    bool consistent = true;
    if (sys.n <= kDenseRankLimit) {
        Eigen::MatrixXd L = sys.dense();
        Eigen::MatrixXd LH(sys.n, sys.n + 2);
        LH.leftCols(sys.n) = L;
        for (VertexId u = 0; u < sys.n; ++u) {
            LH(u, sys.n) = sys.rhs[u].x;
            LH(u, sys.n + 1) = sys.rhs[u].y;
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qrL(L);
        qrL.setThreshold(kRankThreshold);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qrLH(LH);
        qrLH.setThreshold(kRankThreshold);
        consistent = qrLH.rank() == qrL.rank();
    } else {
        ScalingVector alpha = left_null_vector(sys);
        Vec2 dot{0, 0};
        double nrm2 = 0;
        for (VertexId u = 0; u < sys.n; ++u) {
            dot += alpha.alpha[u] * sys.rhs[u];
            nrm2 += alpha.alpha[u] * alpha.alpha[u];
        }
        consistent = norm(dot) / (std::sqrt(nrm2) * std::max(1.0, sys.max_weight)) <=
                     kRankThreshold;
    }
    if (!consistent) {
        FloaterSolveResult r;
        r.status = SolveStatus::Unrealizable;
        // report the least-squares residual for diagnostics
        ScalingVector alpha = left_null_vector(sys);
        Vec2 dot{0, 0};
        double nrm2 = 0;
        for (VertexId u = 0; u < sys.n; ++u) {
            dot += alpha.alpha[u] * sys.rhs[u];
            nrm2 += alpha.alpha[u] * alpha.alpha[u];
        }
        r.residual = norm(dot) / std::sqrt(nrm2);
        return r;
    }
    FloaterSolveResult r;
    r.positions = fixed_vertex_solve(sys, anchor, Vec2{0, 0});
    r.residual = system_residual(sys, r.positions);
    return r;
}

/**
 * @brief Reduced planar system of Floater's equations over the interior
 * vertices
 *
 * One equation per interior vertex; boundary positions are substituted
 * into the right-hand side. For strictly positive weights the system has
 * a unique solution, the Floater drawing.
 */
struct PlanarSystem {
    MapPtr map;
    FaceId outer_face{-1};
    std::vector<Vec2> base_positions;       ///< boundary entries are used
    std::vector<int> interior_index;        ///< -1 for boundary vertices
    std::vector<VertexId> interior;         ///< inverse of interior_index
    std::vector<std::vector<std::pair<int, double>>> off;  ///< interior columns
    std::vector<double> diag;
    std::vector<Vec2> rhs;
    std::vector<double> row_scale;
};

/**
 * @brief Assemble Floater's equations for a drawing's topology, boundary
 * and weights
 *
 * Interior positions of the drawing are ignored; only the outer-face
 * geometry enters. Weights on darts with interior tails must be positive,
 * except that auxiliary edges being driven out of the drawing may carry
 * exact zeros; a zero-weight dart is simply an absent arc. Every interior
 * vertex must keep a positive total outgoing weight.
 */
inline PlanarSystem assemble_planar(const PlanarDrawing& drawing,
                                    const WeightVector& lambda)
{
    const auto& map = drawing.map();
    if (lambda.size() != map.dart_count()) {
        throw std::invalid_argument("assemble planar: weight count mismatch");
    }
    PlanarSystem sys;
    sys.map = drawing.map_ptr();
    sys.outer_face = drawing.outer_face();
    sys.base_positions = drawing.positions();
    sys.interior_index.assign(map.vertex_count(), -1);
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        if (!drawing.is_boundary(v)) {
            sys.interior_index[v] = static_cast<int>(sys.interior.size());
            sys.interior.push_back(v);
        }
    }
    const auto ni = sys.interior.size();
    sys.off.resize(ni);
    sys.diag.assign(ni, 0.0);
    sys.rhs.assign(ni, Vec2{0, 0});
    sys.row_scale.assign(ni, 0.0);

    for (std::size_t i = 0; i < ni; ++i) {
        VertexId u = sys.interior[i];
        std::map<int, double> acc;
        for (DartId d : map.darts_at(u)) {
            double w = lambda[d];
            if (w < 0) {
                throw std::domain_error(
                    "assemble planar: negative weight on an interior dart");
            }
            if (w == 0) {
                continue;
            }
            VertexId v = map.head(d);
            sys.row_scale[i] += w;
            if (v == u) {
                continue;  // loop cancels
            }
            sys.diag[i] += w;
            if (sys.interior_index[v] >= 0) {
                acc[sys.interior_index[v]] += w;
            } else {
                sys.rhs[i] += w * drawing.position(v);
            }
        }
        if (sys.row_scale[i] <= 0) {
            throw std::domain_error(
                "assemble planar: interior vertex with no positive outgoing weight");
        }
        for (auto& [j, s] : acc) {
            sys.off[i].emplace_back(j, s);
        }
    }
    return sys;
}

/** @brief Solve a planar system; returns the full position vector */
inline std::vector<Vec2> solve_planar(const PlanarSystem& sys)
{
    const auto ni = sys.interior.size();
    std::vector<Vec2> out = sys.base_positions;
    if (ni == 0) {
        return out;
    }
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::MatrixXd B(ni, 2);
    for (std::size_t i = 0; i < ni; ++i) {
        trip.emplace_back(i, i, sys.diag[i]);
        for (auto [j, s] : sys.off[i]) {
            trip.emplace_back(i, j, -s);
        }
        B(i, 0) = sys.rhs[i].x;
        B(i, 1) = sys.rhs[i].y;
    }
    Eigen::SparseMatrix<double> A(ni, ni);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("solve planar: factorization failed");
    }
    Eigen::MatrixXd X = lu.solve(B);
    for (std::size_t i = 0; i < ni; ++i) {
        out[sys.interior[i]] = Vec2{X(i, 0), X(i, 1)};
    }
    return out;
}

/** @brief Floater drawing of a planar drawing's map for given weights */
inline PlanarDrawing floater_drawing(const PlanarDrawing& drawing,
                                     const WeightVector& lambda)
{
    return drawing.with_positions(solve_planar(assemble_planar(drawing, lambda)));
}

}  // namespace graphmorph
