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
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "graphmorph/graphmorph.hpp"

namespace gm = graphmorph;
namespace fs = std::filesystem;

namespace
{
enum ExitCode : int {
    kOk = 0,
    kInputMalformed = 2,
    kUnrealizable = 3,
    kNotIsotopic = 4,
    kValidationFailure = 5,
};

bool verbose()
{
    const char* env = std::getenv("GRAPHMORPH_VERBOSE");
    return env && *env && std::string(env) != "0";
}

void info(const std::string& msg)
{
    if (verbose()) {
        std::cerr << "[graphmorph] " << msg << '\n';
    }
}

std::string frame_name(int index, const std::string& ext)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04d.%s", index, ext.c_str());
    return buf;
}

struct CommonOptions {
    std::string out_dir = "out";
    std::string format = "svg";
    int frames = 10;
    int samples = 11;
    int patch = 2;
    unsigned seed = 1;
    bool no_validate = false;
    std::string edge_order = "input";
};

int cmd_embed(const std::string& graph_file, const std::string& weights_file,
              gm::VertexId anchor, const std::string& output)
{
    auto any = gm::drawing_from_json(gm::load_json(graph_file));
    if (auto* planar = std::get_if<gm::PlanarDrawing>(&any)) {
        gm::WeightVector w =
            weights_file.empty()
                ? gm::WeightVector(
                      std::vector<double>(planar->map().dart_count(), 1.0))
                : gm::weights_from_json(gm::load_json(weights_file));
        auto solved = gm::floater_drawing(*planar, w);
        gm::save_json(output, gm::to_json(solved));
        info("planar embedding written to " + output);
        return kOk;
    }
    auto& torus = std::get<gm::TorusDrawing>(any);
    gm::WeightVector w =
        weights_file.empty()
            ? gm::WeightVector(std::vector<double>(torus.map().dart_count(), 1.0))
            : gm::weights_from_json(gm::load_json(weights_file));
    auto sys = gm::assemble_torus(torus.map(), torus.translations(), w);
    auto res = gm::solve_floater(sys, anchor);
    if (res.status == gm::SolveStatus::Unrealizable) {
        std::cerr << "unrealizable weight vector (least-squares residual "
                  << res.residual << ")\n";
        return kUnrealizable;
    }
    gm::TorusDrawing solved(torus.map_ptr(), res.positions, torus.translations());
    gm::save_json(output, gm::to_json(solved));
    info("torus embedding written to " + output);
    return kOk;
}

int cmd_morph_planar(const std::string& start_file, const std::string& end_file,
                     const CommonOptions& opt)
{
    auto any0 = gm::drawing_from_json(gm::load_json(start_file));
    auto any1 = gm::drawing_from_json(gm::load_json(end_file));
    auto* g0 = std::get_if<gm::PlanarDrawing>(&any0);
    auto* g1 = std::get_if<gm::PlanarDrawing>(&any1);
    if (!g0 || !g1) {
        throw gm::InputError("morph-planar expects two planar drawings");
    }

    std::vector<gm::DartId> order;
    if (opt.edge_order == "random") {
        const auto& map = g0->map();
        for (gm::DartId d : map.edges()) {
            if (map.face_of(d) != g0->outer_face() &&
                map.face_of(map.rev(d)) != g0->outer_face()) {
                order.push_back(d);
            }
        }
        std::mt19937 rng(opt.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    gm::MorphSchedule schedule = gm::morph(*g0, *g1, order);

    const int n = g0->map().vertex_count();
    const std::size_t bound = 4 * n - 12;
    if (schedule.transitions.size() > bound) {
        std::cerr << "step count " << schedule.transitions.size()
                  << " exceeds the 4n-12 bound " << bound << '\n';
        return kValidationFailure;
    }

    fs::create_directories(opt.out_dir);
    gm::Json meta = gm::to_json(schedule);
    meta["step_count"] = schedule.transitions.size();
    meta["step_bound"] = bound;
    gm::save_json((fs::path(opt.out_dir) / "schedule.json").string(), meta);
    for (std::size_t k = 0; k < schedule.frames.size(); ++k) {
        fs::path file = fs::path(opt.out_dir) /
                        frame_name(static_cast<int>(k), opt.format);
        if (opt.format == "svg") {
            gm::VertexId hu = -1, hv = -1;
            if (k < schedule.transitions.size()) {
                hu = schedule.transitions[k].u;  // the edge about to change
                hv = schedule.transitions[k].v;
            }
            gm::write_svg_file(file.string(), schedule.frames[k], hu, hv);
        } else {
            gm::save_json(file.string(), gm::to_json(schedule.frames[k]));
        }
    }
    info("wrote " + std::to_string(schedule.frames.size()) + " frames to " +
         opt.out_dir);

    if (!opt.no_validate) {
        auto report = gm::morph_frames_valid(schedule.frames, opt.samples);
        if (!report.ok) {
            std::cerr << gm::to_json(report).dump(2) << '\n';
            return kValidationFailure;
        }
    }
    std::cout << "steps " << schedule.transitions.size() << " (bound " << bound
              << ")\n";
    return kOk;
}

int cmd_morph_torus(const std::string& start_file, const std::string& end_file,
                    std::vector<double> times, const CommonOptions& opt)
{
    auto any0 = gm::drawing_from_json(gm::load_json(start_file));
    auto any1 = gm::drawing_from_json(gm::load_json(end_file));
    auto* g0 = std::get_if<gm::TorusDrawing>(&any0);
    auto* g1 = std::get_if<gm::TorusDrawing>(&any1);
    if (!g0 || !g1) {
        throw gm::InputError("morph-torus expects two torus drawings");
    }
    gm::TorusMorphPath path = gm::torus_morph_path(*g0, *g1);

    if (times.empty()) {
        if (opt.frames < 2) {
            throw gm::InputError("need at least 2 frames");
        }
        for (int i = 0; i < opt.frames; ++i) {
            times.push_back(double(i) / (opt.frames - 1));
        }
    }
    fs::create_directories(opt.out_dir);
    gm::Json morph_meta;
    if (path.stages.size() == 1) {
        morph_meta = gm::to_json(path.stages[0].leg);
    } else {
        morph_meta["stages"] = gm::Json::array();
        for (const auto& st : path.stages) {
            gm::Json sj = gm::to_json(st.leg);
            gm::Json diag = gm::Json::array();
            for (auto [u, v] : st.added_edges) {
                diag.push_back({u, v});
            }
            sj["added_diagonals"] = std::move(diag);
            morph_meta["stages"].push_back(std::move(sj));
        }
    }
    gm::save_json((fs::path(opt.out_dir) / "morph.json").string(), morph_meta);

    bool all_valid = true;
    for (std::size_t i = 0; i < times.size(); ++i) {
        gm::TorusDrawing frame = path.eval(times[i]);
        fs::path file = fs::path(opt.out_dir) /
                        frame_name(static_cast<int>(i), opt.format);
        if (opt.format == "svg") {
            gm::write_svg_file(file.string(), frame, opt.patch);
        } else {
            gm::save_json(file.string(), gm::to_json(frame));
        }
        if (!opt.no_validate) {
            auto crossings = gm::torus_crossing_free(frame);
            auto convexity = gm::convex_faces(frame);
            if (!crossings.ok || !convexity.ok) {
                std::cerr << "frame at t=" << times[i] << " failed validation\n";
                all_valid = false;
            }
        }
        info("frame t=" + std::to_string(times[i]) + " written");
    }
    if (!all_valid) {
        return kValidationFailure;
    }
    std::cout << times.size() << " frames written to " << opt.out_dir << '\n';
    return kOk;
}

int cmd_validate(const std::string& file, int samples)
{
    gm::Json j = gm::load_json(file);
    gm::ValidationReport report;
    if (j.contains("frames")) {
        auto schedule = gm::schedule_from_json(j);
        report = gm::morph_frames_valid(schedule.frames, samples);
    } else {
        auto any = gm::drawing_from_json(j);
        if (auto* planar = std::get_if<gm::PlanarDrawing>(&any)) {
            report = gm::crossing_free(*planar);
            auto convexity = gm::convex_faces(*planar);
            report.absorb(convexity, -1, -1);
            report.ok = report.violations.empty();
        } else {
            auto& torus = std::get<gm::TorusDrawing>(any);
            report = gm::torus_crossing_free(torus);
            auto convexity = gm::convex_faces(torus);
            report.absorb(convexity, -1, -1);
            report.ok = report.violations.empty();
        }
    }
    std::cout << gm::to_json(report).dump(2) << '\n';
    return report.ok ? kOk : kValidationFailure;
}

int cmd_demo(const std::string& name, int layers, const std::string& out_dir)
{
    gm::DemoReport report;
    if (name == "bad-weights") {
        report = gm::demo_bad_weights();
    } else if (name == "k7-average") {
        report = gm::demo_k7_average();
    } else if (name == "steiner-fischer") {
        report = gm::demo_steiner_fischer();
    } else if (name == "nested-squares") {
        report = gm::demo_nested_squares(layers);
    } else {
        std::cerr << "unknown demo: " << name << '\n';
        return kInputMalformed;
    }
    std::cout << report.name << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& line : report.lines) {
        std::cout << "  " << line << '\n';
    }
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (const auto& [label, drawing] : report.torus_figures) {
            gm::write_svg_file((fs::path(out_dir) / (label + ".svg")).string(),
                               drawing, 2);
        }
        for (const auto& [label, drawing] : report.planar_figures) {
            gm::write_svg_file((fs::path(out_dir) / (label + ".svg")).string(),
                               drawing);
        }
        info("figures written to " + out_dir);
    }
    return report.pass ? kOk : 1;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"crossing-free morphs of planar and toroidal graph drawings"};
    app.require_subcommand(1);

    CommonOptions opt;

    // embed
    std::string graph_file, weights_file, output = "drawing.json";
    gm::VertexId anchor = 0;
    auto* embed = app.add_subcommand(
        "embed", "solve the spring embedding for a graph and weights");
    embed->add_option("graph", graph_file, "drawing JSON (positions may be rough)")
        ->required();
    embed->add_option("--weights", weights_file, "weight JSON (default all ones)");
    embed->add_option("--anchor", anchor, "pinned vertex for torus systems");
    embed->add_option("-o,--output", output, "output drawing path");

    // morph-planar
    std::string start_file, end_file;
    auto* mplanar = app.add_subcommand(
        "morph-planar", "piecewise-linear morph between planar drawings");
    mplanar->add_option("start", start_file)->required();
    mplanar->add_option("end", end_file)->required();
    mplanar->add_option("--out", opt.out_dir, "output directory");
    mplanar->add_option("--format", opt.format)
        ->check(CLI::IsMember({"svg", "json"}));
    mplanar->add_option("--samples", opt.samples,
                        "interpolation samples per transition");
    mplanar->add_option("--edge-order", opt.edge_order)
        ->check(CLI::IsMember({"input", "random"}));
    mplanar->add_option("--seed", opt.seed);
    mplanar->add_flag("--no-validate", opt.no_validate);

    // morph-torus
    std::vector<double> times;
    auto* mtorus = app.add_subcommand(
        "morph-torus", "weight-interpolation morph between torus drawings");
    mtorus->add_option("start", start_file)->required();
    mtorus->add_option("end", end_file)->required();
    mtorus->add_option("--out", opt.out_dir, "output directory");
    mtorus->add_option("--format", opt.format)
        ->check(CLI::IsMember({"svg", "json"}));
    mtorus->add_option("--frames", opt.frames, "number of uniform frames");
    mtorus->add_option("--t", times, "explicit evaluation times in [0,1]");
    mtorus->add_option("--patch", opt.patch, "universal-cover copies per side");
    mtorus->add_flag("--no-validate", opt.no_validate);
    mtorus->add_option("--seed", opt.seed);

    // validate
    std::string validate_file;
    auto* validate = app.add_subcommand(
        "validate", "crossing and convexity checks for a drawing or schedule");
    validate->add_option("file", validate_file)->required();
    validate->add_option("--samples", opt.samples);

    // demo
    std::string demo_name, demo_out;
    int layers = 10;
    auto* demo = app.add_subcommand(
        "demo", "counterexample demos: bad-weights, k7-average, "
                "steiner-fischer, nested-squares");
    demo->add_option("name", demo_name)->required();
    demo->add_option("--layers", layers, "layer count for nested-squares");
    demo->add_option("--out", demo_out, "write SVG figures here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kInputMalformed;
    }

    try {
        if (embed->parsed()) {
            return cmd_embed(graph_file, weights_file, anchor, output);
        }
        if (mplanar->parsed()) {
            return cmd_morph_planar(start_file, end_file, opt);
        }
        if (mtorus->parsed()) {
            return cmd_morph_torus(start_file, end_file, times, opt);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_file, opt.samples);
        }
        if (demo->parsed()) {
            return cmd_demo(demo_name, layers, demo_out);
        }
    } catch (const gm::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputMalformed;
    } catch (const gm::NotIsotopicError& e) {
        std::cerr << e.what() << '\n';
        return kNotIsotopic;
    } catch (const gm::UnrealizableError& e) {
        std::cerr << e.what() << " (residual " << e.residual << ")\n";
        return kUnrealizable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}
