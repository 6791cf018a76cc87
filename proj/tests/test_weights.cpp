#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "graphmorph/generators.hpp"
#include "graphmorph/linsys.hpp"
#include "graphmorph/weights.hpp"

using namespace graphmorph;

namespace
{
/// wheel: k-gon boundary on a circle plus a hub joined to every rim vertex
PlanarDrawing wheel_drawing(int k, Vec2 hub)
{
    std::vector<Vec2> pos;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < k; ++i) {
        double a = 2 * M_PI * i / k;
        pos.push_back({std::cos(a), std::sin(a)});
        edges.emplace_back(i, (i + 1) % k);
    }
    pos.push_back(hub);
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(k, i);
    }
    return make_planar_drawing(std::move(pos), edges);
}

/// 5x5 grid graph with boundary on a circle; interior solved with random
/// positive weights to get a random convex drawing
PlanarDrawing random_grid_drawing(std::mt19937& rng)
{
    const int n = 5;
    auto id = [&](int i, int j) { return static_cast<VertexId>(i * n + j); };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j + 1 < n) {
                edges.emplace_back(id(i, j), id(i, j + 1));
            }
            if (i + 1 < n) {
                edges.emplace_back(id(i, j), id(i + 1, j));
            }
        }
    }
    // boundary cycle, counterclockwise with row 0 at the bottom
    std::vector<VertexId> ring;
    for (int j = 0; j < n; ++j) ring.push_back(id(0, j));
    for (int i = 1; i < n; ++i) ring.push_back(id(i, n - 1));
    for (int j = n - 2; j >= 0; --j) ring.push_back(id(n - 1, j));
    for (int i = n - 2; i >= 1; --i) ring.push_back(id(i, 0));

    std::vector<Vec2> pos(n * n, Vec2{0, 0});
    for (std::size_t r = 0; r < ring.size(); ++r) {
        double a = 2 * M_PI * r / ring.size() - M_PI * 0.75;
        pos[ring[r]] = {std::cos(a), std::sin(a)};
    }
    // rough interior guess so the rotation system is usable
    for (int i = 1; i + 1 < n; ++i) {
        for (int j = 1; j + 1 < n; ++j) {
            pos[id(i, j)] = {0.4 * (j - 2), 0.4 * (i - 2)};
        }
    }
    PlanarDrawing rough = make_planar_drawing(std::move(pos), edges);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> w(rough.map().dart_count());
    for (auto& v : w) {
        v = std::exp(dist(rng));
    }
    return floater_drawing(rough, WeightVector(std::move(w)));
}
}  // namespace

TEST_CASE("mean value weights of a regular hexagon hub are equal", "[weights]")
{
    auto g = wheel_drawing(6, {0, 0});
    auto w = mean_value_weights(g);
    const auto& map = g.map();
    auto hub_darts = map.darts_at(6);
    REQUIRE(hub_darts.size() == 6);
    double first = w[hub_darts[0]];
    for (DartId d : hub_darts) {
        CHECK(w[d] == Approx(first).epsilon(1e-12));
    }
    CHECK(w.strict);
}

TEST_CASE("square of neighbors around the origin gives equal weights", "[weights]")
{
    // outer face (+-1, +-1), interior vertex at the origin
    std::vector<Vec2> pos{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {0, 0}};
    std::vector<std::pair<VertexId, VertexId>> edges{
        {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
    auto g = make_planar_drawing(std::move(pos), edges);
    auto w = mean_value_weights(g);
    auto hub = g.map().darts_at(4);
    double first = w[hub[0]];
    for (DartId d : hub) {
        CHECK(w[d] == Approx(first).epsilon(1e-12));
    }
    CHECK(planar_barycentric_residual(g, w) <= 1e-15);
}

TEST_CASE("mean value weights reproduce a random convex grid drawing", "[weights]")
{
    std::mt19937 rng(17);
    auto g = random_grid_drawing(rng);
    auto w = mean_value_weights(g);
    // independent residual evaluation, dart by dart
    const auto& map = g.map();
    double worst = 0;
    for (VertexId u = 0; u < map.vertex_count(); ++u) {
        if (g.is_boundary(u)) {
            continue;
        }
        Vec2 acc{0, 0};
        double total = 0;
        for (DartId d = 0; d < map.dart_count(); ++d) {
            if (map.tail(d) == u) {
                acc += w[d] * (g.position(map.head(d)) - g.position(u));
                total += w[d];
            }
        }
        worst = std::max(worst, norm(acc) / total);
    }
    CHECK(worst <= 1e-9 * g.diameter());
}

TEST_CASE("torus mean value weights satisfy the system", "[weights]")
{
    auto g = torus_grid(6, 6, {0.2, 0.0, 0.31, 0.11, 0.4, 0.26}, {});
    auto w = mean_value_weights(g);
    CHECK(w.strict);
    CHECK(torus_barycentric_residual(g, w) <= 1e-9 * g.diameter());
}

TEST_CASE("interpolate endpoints and arithmetic", "[weights]")
{
    WeightVector a(std::vector<double>{1, 1, 1, 1});
    WeightVector b(std::vector<double>{3, 3, 3, 3});
    auto at0 = interpolate(a, b, 0);
    auto at1 = interpolate(a, b, 1);
    auto mid = interpolate(a, b, 0.5);
    for (DartId d = 0; d < 4; ++d) {
        CHECK(at0[d] == 1.0);
        CHECK(at1[d] == 3.0);
        CHECK(mid[d] == 2.0);
    }
    WeightVector wrong(std::vector<double>{1, 2});
    CHECK_THROWS_AS(interpolate(a, wrong, 0.5), std::invalid_argument);
}

TEST_CASE("interpolation keeps strict positivity", "[weights]")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    std::vector<double> av(20), bv(20);
    for (int i = 0; i < 20; ++i) {
        av[i] = dist(rng);
        bv[i] = dist(rng);
    }
    WeightVector a(av), b(bv);
    for (double t : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        auto w = interpolate(a, b, t);
        CHECK(w.strict);
    }
}

TEST_CASE("per-vertex normalization", "[weights]")
{
    SECTION("degree-4 equal weights become 0.25")
    {
        std::vector<Vec2> pos{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {0, 0}};
        std::vector<std::pair<VertexId, VertexId>> edges{
            {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
        auto g = make_planar_drawing(std::move(pos), edges);
        WeightVector ones(std::vector<double>(g.map().dart_count(), 1.0));
        auto w = per_vertex_normalize(ones, g.map());
        for (DartId d : g.map().darts_at(4)) {
            CHECK(w[d] == 0.25);
        }
    }
    SECTION("weights (1,3) at a degree-2 vertex become (0.25, 0.75)")
    {
        auto tri = make_planar_drawing({{0, 0}, {1, 0}, {0, 1}},
                                       {{0, 1}, {1, 2}, {2, 0}});
        auto darts0 = tri.map().darts_at(0);
        REQUIRE(darts0.size() == 2);
        std::vector<double> vals(tri.map().dart_count(), 1.0);
        vals[darts0[0]] = 1.0;
        vals[darts0[1]] = 3.0;
        auto w = per_vertex_normalize(WeightVector(vals), tri.map());
        CHECK(w[darts0[0]] == 0.25);
        CHECK(w[darts0[1]] == 0.75);
    }
    SECTION("random weights on the K7 torus drawing get unit row sums")
    {
        auto g = k7_torus();
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> dist(0.2, 5.0);
        std::vector<double> vals(g.map().dart_count());
        for (auto& v : vals) {
            v = dist(rng);
        }
        auto w = per_vertex_normalize(WeightVector(vals), g.map());
        for (VertexId u = 0; u < g.map().vertex_count(); ++u) {
            double sum = 0;
            for (DartId d : g.map().darts_at(u)) {
                sum += w[d];
            }
            CHECK(sum == Approx(1.0).margin(1e-12));
        }
    }
    SECTION("all-zero star is rejected")
    {
        auto tri = make_planar_drawing({{0, 0}, {1, 0}, {0, 1}},
                                       {{0, 1}, {1, 2}, {2, 0}});
        std::vector<double> vals(tri.map().dart_count(), 1.0);
        for (DartId d : tri.map().darts_at(0)) {
            vals[d] = 0.0;
        }
        CHECK_THROWS_AS(per_vertex_normalize(WeightVector(vals), tri.map()),
                        std::domain_error);
    }
}

TEST_CASE("mean value error paths", "[weights]")
{
    SECTION("coincident interior vertex gives a degenerate-input error")
    {
        // interior vertex placed exactly on a rim vertex
        std::vector<Vec2> pos{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {1, 1}};
        std::vector<std::pair<VertexId, VertexId>> edges{
            {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
        // geometric construction fails already at the zero-length edge
        CHECK_THROWS_AS(make_planar_drawing(std::move(pos), edges),
                        std::domain_error);
    }
    SECTION("nonconvex bounded face is a domain error")
    {
        std::vector<Vec2> pos{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}};
        std::vector<std::pair<VertexId, VertexId>> edges{
            {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}};
        auto g = make_planar_drawing(std::move(pos), edges);
        CHECK_THROWS_AS(mean_value_weights(g), std::domain_error);
    }
}

TEST_CASE("weight vector validation", "[weights]")
{
    CHECK_THROWS_AS(WeightVector(std::vector<double>{1.0, -0.5}),
                    std::invalid_argument);
    WeightVector with_zero(std::vector<double>{1.0, 0.0});
    CHECK_FALSE(with_zero.strict);
    CHECK_THROWS_AS(with_zero.require_strict("test"), std::domain_error);
}
