#pragma once

// Test-only helpers. The oracles here use plain 64-bit integer arithmetic on
// straight-line drawings and do not call into the library's geometry code.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "djm/geom.hpp"
#include "djm/model.hpp"

namespace djm::test {

struct IPoint {
    std::int64_t x;
    std::int64_t y;
};

inline int naive_orient(IPoint p, IPoint q, IPoint r)
{
    __int128 d = __int128(q.x - p.x) * (r.y - p.y) - __int128(q.y - p.y) * (r.x - p.x);
    return (d > 0) - (d < 0);
}

// Straight segments with four distinct endpoints in general position.
inline bool naive_proper_cross(IPoint a, IPoint b, IPoint c, IPoint d)
{
    return naive_orient(a, b, c) * naive_orient(a, b, d) < 0 && naive_orient(c, d, a) * naive_orient(c, d, b) < 0;
}

inline Point to_point(IPoint p) { return {Rational(p.x), Rational(p.y)}; }

inline std::vector<Point> to_points(const std::vector<IPoint>& pts)
{
    std::vector<Point> out;
    for (IPoint p : pts) out.push_back(to_point(p));
    return out;
}

// Convex quadrilateral-ish positions used by several fixtures.
inline std::vector<IPoint> convex_square() { return {{0, 0}, {4, 0}, {4, 4}, {0, 4}}; }

// Points on the parabola y = x^2: convex position with distinct x.
inline std::vector<IPoint> parabola_points(int n)
{
    std::vector<IPoint> pts;
    for (int k = 0; k < n; ++k) pts.push_back({k, std::int64_t(k) * k});
    return pts;
}

// Pairwise-disjointness of two straight edges {a,b},{c,d} on points `pts`.
inline bool naive_disjoint(const std::vector<IPoint>& pts, std::pair<int, int> e, std::pair<int, int> f)
{
    if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
    return !naive_proper_cross(pts[e.first], pts[e.second], pts[f.first], pts[f.second]);
}

// Maximum disjoint matching of the straight-line complete graph on pts, by
// enumerating every matching recursively.
inline int naive_max_disjoint_matching(const std::vector<IPoint>& pts)
{
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<int, int>> chosen;
    std::vector<bool> used(n, false);
    int best = 0;
    std::function<void(int)> rec = [&](int from) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (int a = from; a < n; ++a) {
            if (used[a]) continue;
            for (int b = a + 1; b < n; ++b) {
                if (used[b]) continue;
                bool ok = true;
                for (auto& c : chosen)
                    if (!naive_disjoint(pts, {a, b}, c)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                used[a] = used[b] = true;
                chosen.push_back({a, b});
                rec(a + 1);
                chosen.pop_back();
                used[a] = used[b] = false;
            }
        }
    };
    rec(0);
    return best;
}

// Number of crossing pairs in the straight-line complete graph on pts.
inline int naive_crossing_pairs(const std::vector<IPoint>& pts)
{
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    int count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (naive_proper_cross(pts[a], pts[b], pts[c], pts[d])) ++count;
        }
    return count;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t range = 1000, std::int64_t max_den = 50)
{
    std::uniform_int_distribution<std::int64_t> num(-range, range);
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Point random_point(std::mt19937_64& rng, std::int64_t range = 1000, std::int64_t max_den = 50)
{
    return {random_rational(rng, range, max_den), random_rational(rng, range, max_den)};
}

}  // namespace djm::test
