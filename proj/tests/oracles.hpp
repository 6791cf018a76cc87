// Test-only oracles, kept independent of the library's solver path:
// dense Gaussian elimination, brute-force rank, and exhaustive
// arborescence enumeration for the directed matrix-tree scaling.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "graphmorph/combmap.hpp"
#include "graphmorph/geometry.hpp"

namespace oracles
{

using Matrix = std::vector<std::vector<double>>;

/// Dense Gaussian elimination with partial pivoting; solves A x = b for
/// several right-hand sides. Throws on (numerically) singular input.
inline std::vector<std::vector<double>> dense_solve(Matrix a,
                                                    std::vector<std::vector<double>> b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.empty() ? 0 : b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        if (a[piv][col] == 0) {
            throw std::runtime_error("dense_solve: singular matrix");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            for (std::size_t c = 0; c < k; ++c) {
                b[r][c] -= f * b[col][c];
            }
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t c = 0; c < k; ++c) {
            double s = b[col][c];
            for (std::size_t j = col + 1; j < n; ++j) {
                s -= a[col][j] * b[j][c];
            }
            b[col][c] = s / a[col][col];
        }
    }
    return b;
}

/// Row-reduction rank with a relative pivot threshold.
inline int dense_rank(Matrix a, double rel_tol = 1e-10)
{
    if (a.empty()) {
        return 0;
    }
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    double scale = 0;
    for (const auto& row : a) {
        for (double v : row) {
            scale = std::max(scale, std::abs(v));
        }
    }
    if (scale == 0) {
        return 0;
    }
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (std::abs(a[i][c]) > std::abs(a[piv][c])) {
                piv = i;
            }
        }
        if (std::abs(a[piv][c]) <= rel_tol * scale) {
            continue;
        }
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) {
                continue;
            }
            double f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= f * a[r][j];
            }
        }
        ++rank;
        ++r;
    }
    return rank;
}

/// Sum over all inward directed spanning trees rooted at `root` of the
/// product of their dart weights. Exhaustive: every non-root vertex picks
/// one outgoing dart; acyclic selections count. Exponential, n <= 6 only.
inline double arborescence_weight(const graphmorph::CombinatorialMap& map,
                                  const std::vector<double>& lambda,
                                  graphmorph::VertexId root)
{
    using namespace graphmorph;
    const VertexId n = map.vertex_count();
    std::vector<std::vector<DartId>> out(n);
    for (VertexId v = 0; v < n; ++v) {
        for (DartId d : map.darts_at(v)) {
            if (map.head(d) != v) {  // loops can never join a tree
                out[v].push_back(d);
            }
        }
    }
    std::vector<VertexId> choosers;
    for (VertexId v = 0; v < n; ++v) {
        if (v != root) {
            choosers.push_back(v);
        }
    }
    double total = 0;
    std::vector<DartId> choice(n, -1);
    auto acyclic = [&]() {
        for (VertexId s : choosers) {
            VertexId v = s;
            int steps = 0;
            while (v != root) {
                v = map.head(choice[v]);
                if (++steps > n) {
                    return false;
                }
            }
        }
        return true;
    };
    if (choosers.empty()) {
        return 1.0;  // single vertex: the empty tree
    }
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == choosers.size()) {
            if (acyclic()) {
                double w = 1;
                for (VertexId v : choosers) {
                    w *= lambda[choice[v]];
                }
                total += w;
            }
            return;
        }
        for (DartId d : out[choosers[i]]) {
            choice[choosers[i]] = d;
            recurse(i + 1);
        }
    };
    recurse(0);
    return total;
}

/// Face count by brute-force orbit enumeration of rev(next(d)), kept
/// separate from the library's face-walk direction.
inline int face_count_brute(const graphmorph::CombinatorialMap& map)
{
    using namespace graphmorph;
    std::vector<char> seen(map.dart_count(), 0);
    int count = 0;
    for (DartId d0 = 0; d0 < map.dart_count(); ++d0) {
        if (seen[d0]) {
            continue;
        }
        ++count;
        DartId d = d0;
        do {
            seen[d] = 1;
            d = map.rev(map.next(d));
        } while (d != d0);
    }
    return count;
}

}  // namespace oracles
