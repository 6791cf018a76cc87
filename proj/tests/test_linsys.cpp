#include <catch2/catch.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "graphmorph/generators.hpp"
#include "graphmorph/linsys.hpp"
#include "graphmorph/torus_morph.hpp"
#include "graphmorph/validate.hpp"
#include "oracles.hpp"

using namespace graphmorph;

namespace
{
WeightVector random_weights(const CombinatorialMap& map, std::mt19937& rng,
                            bool symmetric = false)
{
    std::uniform_real_distribution<double> dist(0.2, 4.0);
    std::vector<double> vals(map.dart_count());
    for (auto& v : vals) {
        v = dist(rng);
    }
    if (symmetric) {
        for (DartId d = 0; d < map.dart_count(); ++d) {
            if (d < map.rev(d)) {
                vals[map.rev(d)] = vals[d];
            }
        }
    }
    return WeightVector(std::move(vals));
}

oracles::Matrix sys_to_matrix(const LaplacianSystem& sys)
{
    oracles::Matrix m(sys.n, std::vector<double>(sys.n, 0.0));
    for (VertexId u = 0; u < sys.n; ++u) {
        m[u][u] = sys.diag[u];
        for (auto [v, s] : sys.off[u]) {
            m[u][v] -= s;
        }
    }
    return m;
}

/// Dense assembly of the torus system, independent of the library's path.
void dense_torus_system(const CombinatorialMap& map, const std::vector<IVec2>& tau,
                        const WeightVector& lambda, oracles::Matrix& L,
                        std::vector<std::vector<double>>& H)
{
    const int n = map.vertex_count();
    L.assign(n, std::vector<double>(n, 0.0));
    H.assign(n, {0.0, 0.0});
    for (DartId d = 0; d < map.dart_count(); ++d) {
        int u = map.tail(d);
        int v = map.head(d);
        double w = lambda[d];
        H[u][0] += w * double(tau[d].x);
        H[u][1] += w * double(tau[d].y);
        if (u != v) {
            L[u][u] += w;
            L[u][v] -= w;
        }
    }
}
}  // namespace

TEST_CASE("triangle with interior vertex solves to the centroid", "[linsys]")
{
    auto g = make_planar_drawing(
        {{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}},
        {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
    WeightVector ones(std::vector<double>(g.map().dart_count(), 1.0));
    auto pos = solve_planar(assemble_planar(g, ones));
    CHECK(pos[3].x == Approx(1.0 / 3).margin(1e-12));
    CHECK(pos[3].y == Approx(1.0 / 3).margin(1e-12));
}

TEST_CASE("square with interior 4-cycle matches dense elimination", "[linsys]")
{
    // outer square corners joined to an inner 4-cycle
    std::vector<Vec2> pos{{1, 1},      {-1, 1},      {-1, -1},    {1, -1},
                          {0.3, 0.3},  {-0.3, 0.3},  {-0.3, -0.3}, {0.3, -0.3}};
    std::vector<std::pair<VertexId, VertexId>> edges{
        {0, 1}, {1, 2}, {2, 3}, {3, 0},  // outer
        {4, 5}, {5, 6}, {6, 7}, {7, 4},  // inner cycle
        {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    auto g = make_planar_drawing(std::move(pos), edges);
    std::mt19937 rng(31);
    auto w = random_weights(g.map(), rng);
    auto sys = assemble_planar(g, w);
    auto solved = solve_planar(sys);

    // oracle: dense assembly straight from the equations
    const auto& map = g.map();
    std::vector<int> idx(map.vertex_count(), -1);
    std::vector<VertexId> interior;
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
        if (!g.is_boundary(v)) {
            idx[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }
    }
    const int ni = static_cast<int>(interior.size());
    REQUIRE(ni == 4);
    oracles::Matrix A(ni, std::vector<double>(ni, 0.0));
    std::vector<std::vector<double>> B(ni, {0.0, 0.0});
    for (int i = 0; i < ni; ++i) {
        VertexId u = interior[i];
        for (DartId d = 0; d < map.dart_count(); ++d) {
            if (map.tail(d) != u) {
                continue;
            }
            VertexId v = map.head(d);
            A[i][i] += w[d];
            if (idx[v] >= 0) {
                A[i][idx[v]] -= w[d];
            } else {
                B[i][0] += w[d] * g.position(v).x;
                B[i][1] += w[d] * g.position(v).y;
            }
        }
    }
    auto X = oracles::dense_solve(A, B);
    for (int i = 0; i < ni; ++i) {
        CHECK(solved[interior[i]].x == Approx(X[i][0]).margin(1e-9));
        CHECK(solved[interior[i]].y == Approx(X[i][1]).margin(1e-9));
    }
}

TEST_CASE("uniform weights give the symmetric Tutte drawing", "[linsys]")
{
    std::mt19937 rng(12);
    auto tri = random_planar_triangulation(20, rng);
    WeightVector ones(std::vector<double>(tri.map().dart_count(), 1.0));
    auto tutte = floater_drawing(tri, ones);
    CHECK(crossing_free(tutte).ok);
    CHECK(convex_faces(tutte).ok);
    CHECK(planar_barycentric_residual(tutte, ones) <= 1e-9 * tutte.diameter());
}

TEST_CASE("single vertex with two loops assembles to the zero system", "[linsys]")
{
    auto g = torus_grid(1, 1);
    WeightVector w(std::vector<double>{2.0, 2.0, 3.0, 3.0});
    auto sys = assemble_torus(g.map(), g.translations(), w);
    REQUIRE(sys.n == 1);
    CHECK(sys.diag[0] == 0.0);
    CHECK(sys.off[0].empty());
    CHECK(sys.rhs[0].x == 0.0);
    CHECK(sys.rhs[0].y == 0.0);
}

TEST_CASE("2x2 grid with uniform weights has zero column sums", "[linsys]")
{
    auto g = torus_grid(2, 2);
    WeightVector ones(std::vector<double>(g.map().dart_count(), 1.0));
    auto sys = assemble_torus(g.map(), g.translations(), ones);
    for (double c : sys.column_sums()) {
        CHECK(std::abs(c) <= 1e-12);
    }
}

TEST_CASE("3x3 grid with random asymmetric weights has rank n-1", "[linsys]")
{
    auto g = torus_grid(3, 3);
    std::mt19937 rng(77);
    auto w = random_weights(g.map(), rng);
    auto sys = assemble_torus(g.map(), g.translations(), w);
    CHECK(oracles::dense_rank(sys_to_matrix(sys)) == 8);
}

TEST_CASE("row sums are exactly zero by construction", "[linsys]")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = random_triangulated_torus(3 + trial % 3, 4, rng);
        auto w = random_weights(g.map(), rng);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        for (VertexId u = 0; u < sys.n; ++u) {
            CHECK(sys.row_sum(u) == 0.0);
        }
    }
}

TEST_CASE("solve_floater accepts morphable weights", "[linsys]")
{
    auto g = torus_grid(6, 6, {0.1, 0.3, 0.2, 0.05, 0.4, 0.0}, {});
    auto mv = mean_value_weights(g);
    auto morphable = morphable_scaling(mv, g);
    auto sys = assemble_torus(g.map(), g.translations(), morphable.mu);
    auto res = solve_floater(sys, 0);
    REQUIRE(res.status == SolveStatus::Solved);
    CHECK(system_residual(sys, res.positions) <=
          1e-9 * std::max(1.0, bbox_diameter(res.positions)));
}

TEST_CASE("symmetric weights are always realizable", "[linsys]")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        auto g = torus_grid(3, 4);
        auto w = random_weights(g.map(), rng, true);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto res = solve_floater(sys, 0);
        REQUIRE(res.status == SolveStatus::Solved);
        CHECK(system_residual(sys, res.positions) <= 1e-9);
    }
}

TEST_CASE("the one-dart-weight-2 vector is unrealizable", "[linsys]")
{
    for (int n : {2, 3, 6}) {
        auto g = torus_grid(n, n);
        std::vector<double> vals(g.map().dart_count(), 1.0);
        vals[0] = 2.0;
        WeightVector w(std::move(vals));
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto res = solve_floater(sys, 0);
        CHECK(res.status == SolveStatus::Unrealizable);
        CHECK(realizability_residual(g.map(), g.translations(), w) > 1e-6);
    }
}

TEST_CASE("left null vector annihilates random systems", "[linsys]")
{
    std::mt19937 rng(27);
    for (int trial = 0; trial < 4; ++trial) {
        auto g = random_triangulated_torus(3 + trial, 4, rng);
        auto w = random_weights(g.map(), rng);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto alpha = left_null_vector(sys);
        // alpha^T L, entry by entry
        std::vector<double> prod(sys.n, 0.0);
        for (VertexId u = 0; u < sys.n; ++u) {
            prod[u] += alpha.alpha[u] * sys.diag[u];
            for (auto [v, s] : sys.off[u]) {
                prod[v] -= alpha.alpha[u] * s;
            }
        }
        for (double p : prod) {
            CHECK(std::abs(p) <= 1e-9 * sys.max_weight);
        }
        for (double a : alpha.alpha) {
            CHECK(a > 0);
        }
        CHECK(*std::max_element(alpha.alpha.begin(), alpha.alpha.end()) == 1.0);
    }
}

TEST_CASE("left null vector of a symmetric system is all ones", "[linsys]")
{
    std::mt19937 rng(8);
    auto g = torus_grid(4, 3);
    auto w = random_weights(g.map(), rng, true);
    auto sys = assemble_torus(g.map(), g.translations(), w);
    auto alpha = left_null_vector(sys);
    for (double a : alpha.alpha) {
        CHECK(a == Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("left null vector matches the arborescence oracle", "[linsys]")
{
    std::mt19937 rng(99);
    SECTION("single vertex")
    {
        auto g = torus_grid(1, 1);
        auto w = random_weights(g.map(), rng);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto alpha = left_null_vector(sys);
        REQUIRE(alpha.alpha.size() == 1);
        CHECK(alpha.alpha[0] == 1.0);
    }
    SECTION("2x2 grid, n = 4")
    {
        auto g = torus_grid(2, 2);
        auto w = random_weights(g.map(), rng);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto alpha = left_null_vector(sys);
        std::vector<double> oracle(4);
        double omax = 0;
        for (VertexId r = 0; r < 4; ++r) {
            oracle[r] = oracles::arborescence_weight(g.map(), w.values, r);
            omax = std::max(omax, oracle[r]);
        }
        for (VertexId r = 0; r < 4; ++r) {
            CHECK(alpha.alpha[r] == Approx(oracle[r] / omax).margin(1e-9));
            CHECK(alpha.alpha[r] > 0);
        }
    }
    SECTION("1x5 ring with loops, n = 5")
    {
        auto g = torus_grid(1, 5);
        auto w = random_weights(g.map(), rng);
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto alpha = left_null_vector(sys);
        std::vector<double> oracle(5);
        double omax = 0;
        for (VertexId r = 0; r < 5; ++r) {
            oracle[r] = oracles::arborescence_weight(g.map(), w.values, r);
            omax = std::max(omax, oracle[r]);
        }
        for (VertexId r = 0; r < 5; ++r) {
            CHECK(alpha.alpha[r] == Approx(oracle[r] / omax).margin(1e-9));
        }
    }
}

TEST_CASE("realizability residual separates good from bad", "[linsys]")
{
    auto g = torus_grid(4, 4);
    auto mv = mean_value_weights(g);
    auto morphable = morphable_scaling(mv, g);
    CHECK(realizability_residual(g.map(), g.translations(), morphable.mu) <= 1e-9);

    std::vector<double> bad(g.map().dart_count(), 1.0);
    bad[3] = 2.0;
    CHECK(realizability_residual(g.map(), g.translations(), WeightVector(bad)) >
          1e-6);
}

TEST_CASE("fixed vertex solve matches anchored solve for realizable weights",
          "[linsys]")
{
    auto g = torus_grid(5, 4);
    auto mv = mean_value_weights(g);
    auto morphable = morphable_scaling(mv, g);
    auto sys = assemble_torus(g.map(), g.translations(), morphable.mu);
    auto anchored = solve_floater(sys, 0);
    REQUIRE(anchored.status == SolveStatus::Solved);
    auto pinned = fixed_vertex_solve(sys, 3, Vec2{0.25, 0.75});
    // the two solutions differ by one global translation
    Vec2 delta = pinned[0] - anchored.positions[0];
    for (VertexId v = 0; v < sys.n; ++v) {
        Vec2 diff = pinned[v] - anchored.positions[v];
        CHECK(diff.x == Approx(delta.x).margin(1e-9));
        CHECK(diff.y == Approx(delta.y).margin(1e-9));
    }
}

TEST_CASE("fixed vertex solve with symmetric weights is crossing-free", "[linsys]")
{
    std::mt19937 rng(6);
    auto g = torus_grid(4, 4);
    auto w = random_weights(g.map(), rng, true);
    auto sys = assemble_torus(g.map(), g.translations(), w);
    auto pos = fixed_vertex_solve(sys, 0, Vec2{0, 0});
    TorusDrawing solved(g.map_ptr(), pos, g.translations());
    CHECK(torus_crossing_free(solved).ok);
    CHECK(convex_faces(solved).ok);
}

TEST_CASE("coordinate-format dump lists every nonzero and the rhs", "[linsys]")
{
    auto g = torus_grid(2, 2);
    WeightVector ones(std::vector<double>(g.map().dart_count(), 1.0));
    auto sys = assemble_torus(g.map(), g.translations(), ones);
    std::ostringstream out;
    dump_coordinate(out, sys);
    std::string text = out.str();
    CHECK(text.find("# rhs") != std::string::npos);
    // 4 diagonal entries + 2 distinct neighbors per vertex + 4 rhs rows
    int lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    CHECK(lines == 4 + 8 + 1 + 4);
}

TEST_CASE("collinear outer boundaries are rejected", "[linsys]")
{
    // pentagon with three collinear boundary vertices
    CHECK_THROWS_AS(
        make_planar_drawing({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}),
        std::domain_error);
}

TEST_CASE("sparse and dense solves agree on small torus maps", "[linsys]")
{
    std::mt19937 rng(55);
    for (auto [r, c] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 5}, {2, 3}}) {
        auto g = torus_grid(r, c);
        auto w = random_weights(g.map(), rng, true);  // realizable for sure
        auto sys = assemble_torus(g.map(), g.translations(), w);
        auto sparse = solve_floater(sys, 0);
        REQUIRE(sparse.status == SolveStatus::Solved);

        oracles::Matrix L;
        std::vector<std::vector<double>> H;
        dense_torus_system(g.map(), g.translations(), w, L, H);
        // pin vertex 0: drop its row and column
        const int n = g.map().vertex_count();
        if (n == 1) {
            CHECK(sparse.positions[0] == Vec2{0, 0});
            continue;
        }
        oracles::Matrix A(n - 1, std::vector<double>(n - 1, 0.0));
        std::vector<std::vector<double>> B(n - 1, {0.0, 0.0});
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                A[i - 1][j - 1] = L[i][j];
            }
            B[i - 1] = H[i];
        }
        auto X = oracles::dense_solve(A, B);
        for (int v = 1; v < n; ++v) {
            CHECK(sparse.positions[v].x == Approx(X[v - 1][0]).margin(1e-9));
            CHECK(sparse.positions[v].y == Approx(X[v - 1][1]).margin(1e-9));
        }
    }
}
