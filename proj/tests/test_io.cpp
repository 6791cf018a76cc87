#include <catch2/catch.hpp>

#include <random>

#include "graphmorph/generators.hpp"
#include "graphmorph/io.hpp"
#include "graphmorph/planar_morph.hpp"
#include "graphmorph/torus_morph.hpp"

using namespace graphmorph;

TEST_CASE("planar drawing round-trips bit-exactly", "[io]")
{
    std::mt19937 rng(19);
    auto g = random_planar_triangulation(25, rng);
    Json j = to_json(g);
    // through text, as a file would go
    Json parsed = Json::parse(j.dump());
    auto loaded = drawing_from_json(parsed);
    auto* p = std::get_if<PlanarDrawing>(&loaded);
    REQUIRE(p != nullptr);
    CHECK(p->map() == g.map());
    CHECK(p->outer_face() == g.outer_face());
    for (VertexId v = 0; v < g.map().vertex_count(); ++v) {
        CHECK(p->position(v).x == g.position(v).x);
        CHECK(p->position(v).y == g.position(v).y);
    }
}

TEST_CASE("torus drawing round-trips bit-exactly", "[io]")
{
    auto g = torus_grid(5, 3, {1.0 / 3, 0.1, 0.7, 0.05, 0.21}, {});
    Json parsed = Json::parse(to_json(g).dump());
    auto loaded = drawing_from_json(parsed);
    auto* t = std::get_if<TorusDrawing>(&loaded);
    REQUIRE(t != nullptr);
    CHECK(t->map() == g.map());
    for (VertexId v = 0; v < g.map().vertex_count(); ++v) {
        CHECK(t->position(v).x == g.position(v).x);
        CHECK(t->position(v).y == g.position(v).y);
    }
    for (DartId d = 0; d < g.map().dart_count(); ++d) {
        CHECK(t->translation(d) == g.translation(d));
    }
}

TEST_CASE("weights round-trip bit-exactly", "[io]")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(1e-8, 1e8);
    std::vector<double> vals(64);
    for (auto& v : vals) {
        v = dist(rng);
    }
    vals[0] = 1.0 / 3;
    vals[1] = 0.1;
    WeightVector w(vals);
    Json parsed = Json::parse(to_json(w).dump());
    auto loaded = weights_from_json(parsed);
    REQUIRE(loaded.size() == w.size());
    for (DartId d = 0; d < w.size(); ++d) {
        CHECK(loaded[d] == w[d]);
    }
}

TEST_CASE("schedules round-trip", "[io]")
{
    std::mt19937 rng(3);
    auto start = random_planar_triangulation(10, rng);
    auto end = random_floater_redraw(start, rng);
    auto schedule = morph_convex(start, end);
    Json parsed = Json::parse(to_json(schedule).dump());
    auto loaded = schedule_from_json(parsed);
    REQUIRE(loaded.frames.size() == schedule.frames.size());
    REQUIRE(loaded.transitions.size() == schedule.transitions.size());
    for (std::size_t k = 0; k < schedule.frames.size(); ++k) {
        for (VertexId v = 0; v < start.map().vertex_count(); ++v) {
            CHECK(loaded.frames[k].position(v).x ==
                  schedule.frames[k].position(v).x);
            CHECK(loaded.frames[k].position(v).y ==
                  schedule.frames[k].position(v).y);
        }
    }
    for (std::size_t k = 0; k < schedule.transitions.size(); ++k) {
        CHECK(loaded.transitions[k].kind == schedule.transitions[k].kind);
        CHECK(loaded.transitions[k].u == schedule.transitions[k].u);
        CHECK(loaded.transitions[k].v == schedule.transitions[k].v);
        CHECK(loaded.transitions[k].edge == schedule.transitions[k].edge);
    }
}

TEST_CASE("torus morphs round-trip", "[io]")
{
    std::mt19937 rng(11);
    auto g0 = random_shifted_grid(4, 4, rng, true);
    auto g1 = random_shifted_grid(4, 4, rng, false);
    auto m = torus_morph_build(g0, g1);
    Json parsed = Json::parse(to_json(m).dump());
    auto loaded = torus_morph_from_json(parsed);
    CHECK(loaded.anchor == m.anchor);
    for (DartId d = 0; d < m.mu0.size(); ++d) {
        CHECK(loaded.mu0[d] == m.mu0[d]);
        CHECK(loaded.mu1[d] == m.mu1[d]);
    }
    auto a = torus_morph_eval(m, 0.4);
    auto b = torus_morph_eval(loaded, 0.4);
    for (VertexId v = 0; v < a.map().vertex_count(); ++v) {
        CHECK(a.position(v).x == b.position(v).x);
        CHECK(a.position(v).y == b.position(v).y);
    }
}

TEST_CASE("malformed input is reported as InputError", "[io]")
{
    CHECK_THROWS_AS(drawing_from_json(Json{{"vertices", 2}}), InputError);

    // rev not an involution
    Json bad{{"vertices", 2},
             {"darts",
              {{{"tail", 0}, {"rev", 0}, {"next", 0}},
               {{"tail", 1}, {"rev", 0}, {"next", 1}}}},
             {"positions", {{0.0, 0.0}, {1.0, 0.0}}},
             {"outer_face", 0}};
    CHECK_THROWS_AS(drawing_from_json(bad), InputError);

    // truncated positions
    Json short_pos{{"vertices", 2},
                   {"darts",
                    {{{"tail", 0}, {"rev", 1}, {"next", 0}},
                     {{"tail", 1}, {"rev", 0}, {"next", 1}}}},
                   {"positions", {{0.0, 0.0}}},
                   {"outer_face", 0}};
    CHECK_THROWS_AS(drawing_from_json(short_pos), InputError);

    CHECK_THROWS_AS(weights_from_json(Json{{"not", "array"}}), InputError);
}

TEST_CASE("validation reports serialize", "[io]")
{
    ValidationReport r;
    r.add({ViolationKind::Crossing, 3, 7, -1, 2, 0.5, 0.0});
    Json j = to_json(r);
    CHECK(j["ok"] == false);
    REQUIRE(j["violations"].size() == 1);
    CHECK(j["violations"][0]["kind"] == "crossing");
    CHECK(j["violations"][0]["dart_a"] == 3);
    CHECK(j["violations"][0]["frame"] == 2);
}
