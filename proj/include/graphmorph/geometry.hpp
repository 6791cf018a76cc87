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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace graphmorph
{

/** @brief 2D point / vector with double coordinates */
struct Vec2 {
    double x{0};
    double y{0};

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
    Vec2& operator-=(Vec2 b) { x -= b.x; y -= b.y; return *this; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
};

/** @brief Integer translation vector (fundamental-domain offsets) */
struct IVec2 {
    std::int64_t x{0};
    std::int64_t y{0};

    friend IVec2 operator+(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend IVec2 operator-(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend IVec2 operator-(IVec2 a) { return {-a.x, -a.y}; }
    friend bool operator==(IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(IVec2 a, IVec2 b) { return !(a == b); }
    Vec2 toVec2() const { return {double(x), double(y)}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

/** @brief Counterclockwise angle from a to b, in [0, 2*pi) */
inline double ccw_angle(Vec2 a, Vec2 b)
{
    double ang = std::atan2(cross(a, b), dot(a, b));
    if (ang < 0) {
        ang += 2 * M_PI;
    }
    return ang;
}

namespace detail
{
// Error-free transformations and floating-point expansions used by the
// exact orientation predicate. An expansion stores a real number as a sum
// of nonoverlapping doubles in increasing order of magnitude; summing
// expansions is exact, so the sign of the top component is the sign of
// the represented value.

inline void two_sum(double a, double b, double& x, double& y)
{
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y)
{
    x = a * b;
    y = std::fma(a, b, -x);
}

/** Merge two nonoverlapping expansions; drops zero components. */
template <std::size_t N>
inline int expansion_sum(
    const std::array<double, N>& buf,
    int elen,
    int flen,
    std::array<double, N>& out)
{
    // e occupies buf[0..elen), f occupies buf[elen..elen+flen)
    std::array<double, N> merged{};
    int i = 0;
    int j = elen;
    int m = 0;
    while (i < elen && j < elen + flen) {
        merged[m++] =
            (std::abs(buf[i]) < std::abs(buf[j])) ? buf[i++] : buf[j++];
    }
    while (i < elen) {
        merged[m++] = buf[i++];
    }
    while (j < elen + flen) {
        merged[m++] = buf[j++];
    }

    double q = merged[0];
    int n = 0;
    for (int k = 1; k < m; ++k) {
        double sum{};
        double err{};
        two_sum(q, merged[k], sum, err);
        if (err != 0.0) {
            out[n++] = err;
        }
        q = sum;
    }
    out[n++] = q;
    return n;
}
}  // namespace detail

/**
 * @brief Exact sign of the orientation determinant of (a, b, c)
 *
 * Positive when the triple makes a strict left turn (counterclockwise),
 * negative for a right turn, zero when collinear. A floating-point filter
 * handles the common case; near-degenerate inputs fall through to an exact
 * evaluation of the 3x3 determinant with expansion arithmetic, so the
 * result is exact for all double-precision inputs.
 */
inline int orientation(Vec2 a, Vec2 b, Vec2 c)
{
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;

    // Shewchuk's stage-A filter bound
    constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
    constexpr double errbound_coeff = (3.0 + 16.0 * eps) * eps;
    double detsum = std::abs(detleft) + std::abs(detright);
    if (std::abs(det) >= errbound_coeff * detsum) {
        return (det > 0) - (det < 0);
    }

    // Exact path: det = ax*by - ax*cy - ay*bx + ay*cx + bx*cy - by*cx
    std::array<std::array<double, 2>, 6> terms;
    detail::two_product(a.x, b.y, terms[0][1], terms[0][0]);
    detail::two_product(-a.x, c.y, terms[1][1], terms[1][0]);
    detail::two_product(-a.y, b.x, terms[2][1], terms[2][0]);
    detail::two_product(a.y, c.x, terms[3][1], terms[3][0]);
    detail::two_product(b.x, c.y, terms[4][1], terms[4][0]);
    detail::two_product(-b.y, c.x, terms[5][1], terms[5][0]);

    std::array<double, 16> acc{};
    int len = 0;
    for (auto& t : terms) {
        std::array<double, 16> buf{};
        int blen = 0;
        for (int k = 0; k < len; ++k) {
            buf[blen++] = acc[k];
        }
        int flen = 0;
        for (double v : t) {
            if (v != 0.0) {
                buf[blen++] = v;
                ++flen;
            }
        }
        if (flen == 0) {
            continue;
        }
        len = detail::expansion_sum(buf, len, flen, acc);
    }
    if (len == 0) {
        return 0;
    }
    double top = acc[len - 1];
    return (top > 0) - (top < 0);
}

/** @brief How two closed segments meet */
enum class SegmentContact {
    None,     ///< disjoint
    Touch,    ///< single common point involving an endpoint
    Proper,   ///< interiors cross transversally
    Overlap,  ///< collinear with a shared sub-segment of positive length
};

/** p collinear with [a,b] assumed; is p within the closed bounding range? */
inline bool collinear_on_segment(Vec2 a, Vec2 b, Vec2 p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/** @brief Classify the intersection of closed segments [p1,q1] and [p2,q2] */
inline SegmentContact segment_contact(Vec2 p1, Vec2 q1, Vec2 p2, Vec2 q2)
{
    int d1 = orientation(p2, q2, p1);
    int d2 = orientation(p2, q2, q1);
    int d3 = orientation(p1, q1, p2);
    int d4 = orientation(p1, q1, q2);

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return SegmentContact::Proper;
    }

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: measure overlap along the dominant axis.
        bool use_x = std::abs(q1.x - p1.x) + std::abs(q2.x - p2.x) >=
                     std::abs(q1.y - p1.y) + std::abs(q2.y - p2.y);
        double a0 = use_x ? std::min(p1.x, q1.x) : std::min(p1.y, q1.y);
        double a1 = use_x ? std::max(p1.x, q1.x) : std::max(p1.y, q1.y);
        double b0 = use_x ? std::min(p2.x, q2.x) : std::min(p2.y, q2.y);
        double b1 = use_x ? std::max(p2.x, q2.x) : std::max(p2.y, q2.y);
        double lo = std::max(a0, b0);
        double hi = std::min(a1, b1);
        if (lo > hi) {
            return SegmentContact::None;
        }
        return lo == hi ? SegmentContact::Touch : SegmentContact::Overlap;
    }

    if (d1 == 0 && collinear_on_segment(p2, q2, p1)) {
        return SegmentContact::Touch;
    }
    if (d2 == 0 && collinear_on_segment(p2, q2, q1)) {
        return SegmentContact::Touch;
    }
    if (d3 == 0 && collinear_on_segment(p1, q1, p2)) {
        return SegmentContact::Touch;
    }
    if (d4 == 0 && collinear_on_segment(p1, q1, q2)) {
        return SegmentContact::Touch;
    }
    return SegmentContact::None;
}

/**
 * @brief Strict convexity of a closed polygon given in CCW order
 *
 * Every consecutive triple must make a strict left turn. Assumes the
 * polygon is simple (a simple polygon with all-strict left turns is
 * strictly convex).
 */
template <class PointRange>
inline bool strictly_convex_ccw(const PointRange& pts)
{
    auto n = std::size(pts);
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = pts[i];
        Vec2 b = pts[(i + 1) % n];
        Vec2 c = pts[(i + 2) % n];
        if (orientation(a, b, c) <= 0) {
            return false;
        }
    }
    return true;
}

}  // namespace graphmorph
