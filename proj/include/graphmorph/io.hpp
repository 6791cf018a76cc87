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

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "graphmorph/planar_morph.hpp"
#include "graphmorph/torus_morph.hpp"
#include "graphmorph/validate.hpp"

namespace graphmorph
{

/** @brief Malformed or unreadable input file */
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

// ---- drawings -------------------------------------------------------------
//
// {"vertices": n,
//  "darts": [{"tail": v, "rev": d, "next": d, "tau": [a, b]}, ...],
//  "positions": [[x, y], ...],
//  "outer_face": f}          // planar drawings only; torus darts carry tau

inline Json to_json(const PlanarDrawing& g)
{
    const auto& map = g.map();
    Json darts = Json::array();
    for (DartId d = 0; d < map.dart_count(); ++d) {
        darts.push_back({{"tail", map.tail(d)},
                         {"rev", map.rev(d)},
                         {"next", map.next(d)}});
    }
    Json positions = Json::array();
    for (const auto& p : g.positions()) {
        positions.push_back({p.x, p.y});
    }
    return Json{{"vertices", map.vertex_count()},
                {"darts", std::move(darts)},
                {"positions", std::move(positions)},
                {"outer_face", g.outer_face()}};
}

inline Json to_json(const TorusDrawing& g)
{
    const auto& map = g.map();
    Json darts = Json::array();
    for (DartId d = 0; d < map.dart_count(); ++d) {
        darts.push_back({{"tail", map.tail(d)},
                         {"rev", map.rev(d)},
                         {"next", map.next(d)},
                         {"tau", {g.translation(d).x, g.translation(d).y}}});
    }
    Json positions = Json::array();
    for (const auto& p : g.positions()) {
        positions.push_back({p.x, p.y});
    }
    return Json{{"vertices", map.vertex_count()},
                {"darts", std::move(darts)},
                {"positions", std::move(positions)}};
}

namespace detail
{
struct ParsedMap {
    MapPtr map;
    std::optional<std::vector<IVec2>> tau;
};

inline ParsedMap parse_map(const Json& j)
{
    try {
        auto n = j.at("vertices").get<VertexId>();
        const Json& darts = j.at("darts");
        std::vector<DartId> rev, next;
        std::vector<VertexId> tail;
        std::optional<std::vector<IVec2>> tau;
        if (!darts.empty() && darts.front().contains("tau")) {
            tau.emplace();
        }
        for (const Json& d : darts) {
            tail.push_back(d.at("tail").get<VertexId>());
            rev.push_back(d.at("rev").get<DartId>());
            next.push_back(d.at("next").get<DartId>());
            if (tau) {
                const Json& t = d.at("tau");
                tau->push_back(IVec2{t.at(0).get<std::int64_t>(),
                                     t.at(1).get<std::int64_t>()});
            }
        }
        auto map = std::make_shared<const CombinatorialMap>(
            n, std::move(rev), std::move(next), std::move(tail));
        return {std::move(map), std::move(tau)};
    } catch (const Json::exception& e) {
        throw InputError(std::string("drawing: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("drawing: ") + e.what());
    }
}

inline std::vector<Vec2> parse_positions(const Json& j, VertexId n)
{
    try {
        const Json& arr = j.at("positions");
        if (static_cast<VertexId>(arr.size()) != n) {
            throw InputError("drawing: position count mismatch");
        }
        std::vector<Vec2> pos;
        pos.reserve(arr.size());
        for (const Json& p : arr) {
            pos.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
        return pos;
    } catch (const Json::exception& e) {
        throw InputError(std::string("drawing: ") + e.what());
    }
}
}  // namespace detail

using AnyDrawing = std::variant<PlanarDrawing, TorusDrawing>;

/** @brief Parse a drawing; darts with tau are toroidal, otherwise the
 * outer_face field selects the planar form */
inline AnyDrawing drawing_from_json(const Json& j)
{
    detail::ParsedMap parsed = detail::parse_map(j);
    auto pos = detail::parse_positions(j, parsed.map->vertex_count());
    try {
        if (parsed.tau) {
            return TorusDrawing(parsed.map, std::move(pos), std::move(*parsed.tau));
        }
        if (!j.contains("outer_face")) {
            throw InputError("drawing: planar drawing needs outer_face");
        }
        return PlanarDrawing(parsed.map, std::move(pos),
                             j.at("outer_face").get<FaceId>());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("drawing: ") + e.what());
    } catch (const std::domain_error& e) {
        throw InputError(std::string("drawing: ") + e.what());
    }
}

// ---- weights ---------------------------------------------------------------

/** Weight vectors are a bare JSON array indexed by dart id. */
inline Json to_json(const WeightVector& w)
{
    return Json(w.values);
}

inline WeightVector weights_from_json(const Json& j)
{
    try {
        return WeightVector(j.get<std::vector<double>>());
    } catch (const Json::exception& e) {
        throw InputError(std::string("weights: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("weights: ") + e.what());
    }
}

// ---- schedules ------------------------------------------------------------

inline Json to_json(const MorphSchedule& s)
{
    if (s.frames.empty()) {
        throw std::invalid_argument("schedule: no frames");
    }
    Json j = to_json(s.frames.front());
    j.erase("positions");
    Json frames = Json::array();
    for (const auto& f : s.frames) {
        Json pos = Json::array();
        for (const auto& p : f.positions()) {
            pos.push_back({p.x, p.y});
        }
        frames.push_back(std::move(pos));
    }
    Json transitions = Json::array();
    for (const auto& t : s.transitions) {
        Json tj{{"kind", t.kind == TransitionKind::EdgeWeightSwap
                             ? "edge-weight-swap"
                             : "auxiliary-removal"},
                {"u", t.u},
                {"v", t.v}};
        if (t.edge >= 0) {
            tj["edge"] = t.edge;
        }
        transitions.push_back(std::move(tj));
    }
    j["frames"] = std::move(frames);
    j["transitions"] = std::move(transitions);
    return j;
}

inline MorphSchedule schedule_from_json(const Json& j)
{
    detail::ParsedMap parsed = detail::parse_map(j);
    if (parsed.tau) {
        throw InputError("schedule: expected a planar map");
    }
    MorphSchedule s;
    try {
        FaceId outer = j.at("outer_face").get<FaceId>();
        for (const Json& frame : j.at("frames")) {
            std::vector<Vec2> pos;
            pos.reserve(frame.size());
            for (const Json& p : frame) {
                pos.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            }
            s.frames.emplace_back(parsed.map, std::move(pos), outer);
        }
        for (const Json& tj : j.at("transitions")) {
            Transition t{tj.at("kind").get<std::string>() == "edge-weight-swap"
                             ? TransitionKind::EdgeWeightSwap
                             : TransitionKind::AuxiliaryRemoval,
                         tj.at("u").get<VertexId>(), tj.at("v").get<VertexId>(),
                         tj.contains("edge") ? tj.at("edge").get<DartId>() : -1};
            s.transitions.push_back(t);
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("schedule: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("schedule: ") + e.what());
    } catch (const std::domain_error& e) {
        throw InputError(std::string("schedule: ") + e.what());
    }
    if (s.frames.size() != s.transitions.size() + 1) {
        throw InputError("schedule: frame/transition count mismatch");
    }
    return s;
}

// ---- torus morphs ----------------------------------------------------------

inline Json to_json(const TorusMorph& m)
{
    Json j = to_json(m.reference);
    j["mu0"] = to_json(m.mu0);
    j["mu1"] = to_json(m.mu1);
    j["anchor"] = m.anchor;
    j["anchor_start"] = {m.anchor_start.x, m.anchor_start.y};
    j["anchor_end"] = {m.anchor_end.x, m.anchor_end.y};
    return j;
}

inline TorusMorph torus_morph_from_json(const Json& j)
{
    auto drawing = drawing_from_json(j);
    auto* torus = std::get_if<TorusDrawing>(&drawing);
    if (!torus) {
        throw InputError("torus morph: expected a torus drawing");
    }
    try {
        WeightVector mu0 = weights_from_json(j.at("mu0"));
        WeightVector mu1 = weights_from_json(j.at("mu1"));
        VertexId anchor = j.at("anchor").get<VertexId>();
        Vec2 a{j.at("anchor_start").at(0).get<double>(),
               j.at("anchor_start").at(1).get<double>()};
        Vec2 b{j.at("anchor_end").at(0).get<double>(),
               j.at("anchor_end").at(1).get<double>()};
        return TorusMorph{*torus, std::move(mu0), std::move(mu1), anchor, a, b};
    } catch (const Json::exception& e) {
        throw InputError(std::string("torus morph: ") + e.what());
    }
}

// ---- validation reports -----------------------------------------------------

inline const char* to_string(ViolationKind k)
{
    switch (k) {
        case ViolationKind::Crossing: return "crossing";
        case ViolationKind::Touch: return "touch";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::ZeroLength: return "zero-length";
        case ViolationKind::NonconvexCorner: return "nonconvex-corner";
    }
    return "unknown";
}

inline Json to_json(const ValidationReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json vj{{"kind", to_string(v.kind)}};
        if (v.dart_a >= 0) {
            vj["dart_a"] = v.dart_a;
        }
        if (v.dart_b >= 0) {
            vj["dart_b"] = v.dart_b;
        }
        if (v.vertex >= 0) {
            vj["vertex"] = v.vertex;
        }
        if (v.frame >= 0) {
            vj["frame"] = v.frame;
        }
        if (v.t >= 0) {
            vj["t"] = v.t;
        }
        violations.push_back(std::move(vj));
    }
    return Json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

// ---- files ------------------------------------------------------------------

inline Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline void save_json(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

}  // namespace graphmorph
