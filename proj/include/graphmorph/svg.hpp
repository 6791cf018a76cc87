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
#include <ostream>
#include <string>

#include "graphmorph/drawing.hpp"

namespace graphmorph
{

namespace detail
{
struct SvgCanvas {
    double xmin, ymin, scale, height_px;

    double sx(double x) const { return (x - xmin) * scale + 10; }
    // flip y so the drawing appears with y up
    double sy(double y) const { return height_px - ((y - ymin) * scale + 10); }
};

inline SvgCanvas fit_canvas(double xmin, double xmax, double ymin, double ymax,
                            double target = 620)
{
    double w = std::max(xmax - xmin, 1e-9);
    double h = std::max(ymax - ymin, 1e-9);
    double scale = target / std::max(w, h);
    return {xmin, ymin, scale, h * scale + 20};
}

inline void open_svg(std::ostream& out, double width, double height)
{
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
}

inline void line(std::ostream& out, const SvgCanvas& c, Vec2 a, Vec2 b,
                 const char* stroke, double width)
{
    out << "  <line x1=\"" << c.sx(a.x) << "\" y1=\"" << c.sy(a.y) << "\" x2=\""
        << c.sx(b.x) << "\" y2=\"" << c.sy(b.y) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << width << "\" stroke-linecap=\"round\"/>\n";
}

inline void circle(std::ostream& out, const SvgCanvas& c, Vec2 p, double r,
                   const char* fill)
{
    out << "  <circle cx=\"" << c.sx(p.x) << "\" cy=\"" << c.sy(p.y) << "\" r=\""
        << r << "\" fill=\"" << fill << "\"/>\n";
}
}  // namespace detail

/**
 * @brief One frame of a planar drawing; the highlighted edge (if any) is
 * drawn in red
 */
inline void write_svg(std::ostream& out, const PlanarDrawing& g,
                      VertexId highlight_u = -1, VertexId highlight_v = -1)
{
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& p : g.positions()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    auto canvas = detail::fit_canvas(xmin, xmax, ymin, ymax);
    detail::open_svg(out, (xmax - xmin) * canvas.scale + 20, canvas.height_px);
    const auto& map = g.map();
    for (DartId d : map.edges()) {
        VertexId u = map.tail(d);
        VertexId v = map.head(d);
        bool hot = (u == highlight_u && v == highlight_v) ||
                   (u == highlight_v && v == highlight_u);
        detail::line(out, canvas, g.position(u), g.position(v),
                     hot ? "#cc2222" : "#333333", hot ? 2.4 : 1.2);
    }
    for (const auto& p : g.positions()) {
        detail::circle(out, canvas, p, 2.2, "#111111");
    }
    out << "</svg>\n";
}

/**
 * @brief A k-by-k universal-cover patch of a torus drawing with the
 * fundamental domain outlined
 */
inline void write_svg(std::ostream& out, const TorusDrawing& g, int copies = 2)
{
    TorusDrawing norm = g.normalized();
    auto canvas = detail::fit_canvas(0, copies, 0, copies);
    detail::open_svg(out, copies * canvas.scale + 20, canvas.height_px);
    const auto& map = norm.map();
    for (int i = 0; i < copies; ++i) {
        for (int j = 0; j < copies; ++j) {
            Vec2 offset{double(i), double(j)};
            for (DartId d : map.edges()) {
                Vec2 a = norm.position(map.tail(d)) + offset;
                Vec2 b = norm.position(map.head(d)) +
                         norm.translation(d).toVec2() + offset;
                detail::line(out, canvas, a, b, "#333333", 1.1);
            }
            for (const auto& p : norm.positions()) {
                detail::circle(out, canvas, p + offset, 2.0, "#111111");
            }
        }
    }
    // fundamental-domain outline
    out << "  <rect x=\"" << canvas.sx(0) << "\" y=\"" << canvas.sy(1)
        << "\" width=\"" << canvas.scale << "\" height=\"" << canvas.scale
        << "\" fill=\"none\" stroke=\"#4466cc\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\"/>\n";
    out << "</svg>\n";
}

inline void write_svg_file(const std::string& path, const PlanarDrawing& g,
                           VertexId hu = -1, VertexId hv = -1)
{
    std::ofstream out(path);
    write_svg(out, g, hu, hv);
}

inline void write_svg_file(const std::string& path, const TorusDrawing& g,
                           int copies = 2)
{
    std::ofstream out(path);
    write_svg(out, g, copies);
}

}  // namespace graphmorph
