#include <catch2/catch.hpp>

#include "graphmorph/combmap.hpp"
#include "graphmorph/drawing.hpp"
#include "graphmorph/generators.hpp"
#include "graphmorph/validate.hpp"
#include "oracles.hpp"

using namespace graphmorph;

namespace
{
PlanarDrawing triangle_drawing()
{
    return make_planar_drawing({{0, 0}, {1, 0}, {0, 1}},
                               {{0, 1}, {1, 2}, {2, 0}});
}
}  // namespace

TEST_CASE("triangle map has two triangular faces", "[combmap]")
{
    auto tri = triangle_drawing();
    const auto& map = tri.map();
    REQUIRE(map.dart_count() == 6);
    REQUIRE(map.face_count() == 2);
    for (const auto& cycle : map.faces()) {
        CHECK(cycle.size() == 3);
    }
    CHECK(map.euler_characteristic() == 2);
}

TEST_CASE("single-vertex torus map with two loops has one square face", "[combmap]")
{
    auto g = torus_grid(1, 1);
    const auto& map = g.map();
    REQUIRE(map.vertex_count() == 1);
    REQUIRE(map.dart_count() == 4);
    REQUIRE(map.face_count() == 1);
    CHECK(map.faces()[0].size() == 4);
    CHECK(map.euler_characteristic() == 0);
}

TEST_CASE("6x6 torus grid has 36 quadrilateral faces", "[combmap]")
{
    auto g = torus_grid(6, 6);
    const auto& map = g.map();
    REQUIRE(map.vertex_count() == 36);
    REQUIRE(map.edge_count() == 72);
    REQUIRE(map.face_count() == 36);
    for (const auto& cycle : map.faces()) {
        CHECK(cycle.size() == 4);
    }
    CHECK(map.face_count() == oracles::face_count_brute(map));
    CHECK(map.euler_characteristic() == 0);
}

TEST_CASE("face walks partition the darts and close up", "[combmap]")
{
    std::mt19937 rng(7);
    auto g = random_triangulated_torus(4, 5, rng);
    const auto& map = g.map();
    std::vector<int> seen(map.dart_count(), 0);
    std::size_t total = 0;
    for (const auto& cycle : map.faces()) {
        total += cycle.size();
        for (DartId d : cycle) {
            ++seen[d];
        }
        // walking face_next around the cycle returns to the start
        DartId d = cycle.front();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            d = map.face_next(d);
        }
        CHECK(d == cycle.front());
    }
    CHECK(total == static_cast<std::size_t>(map.dart_count()));
    for (int s : seen) {
        CHECK(s == 1);
    }
    CHECK(map.face_count() == oracles::face_count_brute(map));
}

TEST_CASE("rev and next are validated", "[combmap]")
{
    // rev with a fixed point
    CHECK_THROWS_AS(CombinatorialMap(1, {0, 1}, {1, 0}, {0, 0}),
                    std::invalid_argument);
    // next not a bijection
    CHECK_THROWS_AS(CombinatorialMap(2, {1, 0, 3, 2}, {0, 0, 2, 3}, {0, 1, 0, 1}),
                    std::invalid_argument);
    // next must keep the tail
    CHECK_THROWS_AS(CombinatorialMap(2, {1, 0, 3, 2}, {1, 0, 3, 2}, {0, 1, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("universal cover patch counts", "[combmap]")
{
    SECTION("two loops, k = 2")
    {
        auto g = torus_grid(1, 1);
        auto patch = universal_cover_patch(g, 2);
        CHECK(patch.vertices.size() == 4);
        CHECK(patch.segments.size() == 16);  // one image per dart per domain
    }
    SECTION("2x2 grid, k = 1")
    {
        auto g = torus_grid(2, 2);
        auto patch = universal_cover_patch(g, 1);
        CHECK(patch.vertices.size() == 4);
        CHECK(patch.segments.size() == static_cast<std::size_t>(g.map().dart_count()));
        for (const auto& seg : patch.segments) {
            Vec2 expected = g.position(g.map().head(seg.dart)) +
                            g.translation(seg.dart).toVec2();
            CHECK(seg.b == expected);
        }
    }
}

TEST_CASE("shifted 6x6 grid lifts without crossings", "[combmap]")
{
    std::vector<double> shifts{0.1, 0.35, 0.0, 0.22, 0.4, 0.05};
    auto g = torus_grid(6, 6, shifts, {});
    auto patch = universal_cover_patch(g.normalized(), 3);
    auto report = crossing_free(patch, g.map());
    CHECK(report.ok);
}

TEST_CASE("normalize_isotopy", "[combmap]")
{
    auto g = torus_grid(3, 3);

    SECTION("identical drawings normalize identically")
    {
        auto res = normalize_isotopy(g, g);
        REQUIRE(res.isotopic);
        for (DartId d = 0; d < g.map().dart_count(); ++d) {
            CHECK(res.drawings[0].translation(d) == res.drawings[1].translation(d));
        }
        for (VertexId v = 0; v < g.map().vertex_count(); ++v) {
            CHECK(res.drawings[0].position(v) == res.drawings[1].position(v));
        }
    }

    SECTION("integer vertex shift is undone")
    {
        std::vector<IVec2> z(g.map().vertex_count(), IVec2{0, 0});
        z[4] = IVec2{1, 0};
        auto pos = g.positions();
        pos[4] = pos[4] + Vec2{1, 0};
        TorusDrawing shifted = g.shifted(pos, z);
        auto res = normalize_isotopy(g, shifted);
        REQUIRE(res.isotopic);
        for (DartId d = 0; d < g.map().dart_count(); ++d) {
            CHECK(res.drawings[0].translation(d) == res.drawings[1].translation(d));
        }
    }

    SECTION("different homotopy class is rejected")
    {
        auto loops = torus_grid(1, 1);
        auto tau = loops.translations();
        // double one loop's wrap: (1,0) becomes (2,0)
        for (DartId d = 0; d < 4; ++d) {
            if (tau[d] == IVec2{1, 0}) {
                tau[d] = IVec2{2, 0};
                tau[loops.map().rev(d)] = IVec2{-2, 0};
                break;
            }
        }
        TorusDrawing other(loops.map_ptr(), loops.positions(), tau);
        auto res = normalize_isotopy(loops, other);
        CHECK_FALSE(res.isotopic);
    }

    SECTION("idempotence")
    {
        std::mt19937 rng(11);
        auto a = random_shifted_grid(4, 4, rng, true);
        auto b = random_shifted_grid(4, 4, rng, false);
        // same map required: rebuild b on a's map via shared topology
        auto res1 = normalize_isotopy(a, a.normalized());
        REQUIRE(res1.isotopic);
        auto res2 = normalize_isotopy(res1.drawings[0], res1.drawings[1]);
        REQUIRE(res2.isotopic);
        for (DartId d = 0; d < a.map().dart_count(); ++d) {
            CHECK(res1.drawings[0].translation(d) == res2.drawings[0].translation(d));
        }
        for (VertexId v = 0; v < a.map().vertex_count(); ++v) {
            CHECK(res1.drawings[0].position(v) == res2.drawings[0].position(v));
        }
        (void)b;
    }
}

TEST_CASE("corner edge insertion splits a face", "[combmap]")
{
    // square face: insert one diagonal, expect two triangles
    auto sq = make_planar_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                  {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto& map = sq.map();
    FaceId inner = 1 - sq.outer_face();
    const auto& cycle = map.faces()[inner];
    REQUIRE(cycle.size() == 4);
    auto ins = insert_corner_edge(map, cycle[0], cycle[2]);
    CHECK(ins.map.dart_count() == map.dart_count() + 2);
    CHECK(ins.map.face_count() == map.face_count() + 1);
    CHECK(ins.map.tail(ins.first) == map.tail(cycle[0]));
    CHECK(ins.map.tail(ins.second) == map.tail(cycle[2]));
    CHECK(ins.map.euler_characteristic() == 2);
}

TEST_CASE("three-connectivity brute force", "[combmap]")
{
    std::mt19937 rng(3);
    auto tri = random_planar_triangulation(12, rng);
    CHECK(is_three_connected(tri.map()));

    // a 4-cycle is only 2-connected
    auto square = make_planar_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_three_connected(square.map()));

    CHECK(is_three_connected(triangle_drawing().map()));
}
