#include "djm/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "djm/errors.hpp"
#include "djm/grower.hpp"

namespace djm {

namespace {

constexpr std::int64_t kGrid = std::int64_t{1} << 20;
constexpr int kPointAttempts = 200;
constexpr int kHostAttempts = 400;
constexpr int kEdgeAttempts = 400;
constexpr int kCylinderRestarts = 200;

Point ipoint(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

bool collinear_with_any(const std::vector<Point>& pts, const Point& p)
{
    for (std::size_t a = 0; a < pts.size(); ++a) {
        if (pts[a] == p) return true;
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (orient(pts[a], pts[b], p) == Orientation::Collinear) return true;
    }
    return false;
}

// Combinatorial crossing count of two cylinder edges given by per-column
// keys (0 at their endpoints).
struct KeyedEdge {
    int start;                        // first cover x
    std::vector<std::int64_t> key;    // per visited column, endpoints 0
    int i, j;
};

int keyed_crossings(const KeyedEdge& a, const KeyedEdge& b, int delta)
{
    int count = 0;
    int a1 = a.start + static_cast<int>(a.key.size()) - 1;
    int b1 = b.start + static_cast<int>(b.key.size()) - 1;
    auto sign = [](std::int64_t v) { return (v > 0) - (v < 0); };
    for (int k = -1; k <= 1; ++k) {
        int shift = k * delta;
        int lo = std::max(a.start, b.start + shift);
        int hi = std::min(a1, b1 + shift);
        for (int s = lo; s < hi; ++s) {
            int before = sign(a.key[s - a.start] - b.key[s - shift - b.start]);
            int after = sign(a.key[s + 1 - a.start] - b.key[s + 1 - shift - b.start]);
            if (before * after < 0) ++count;
        }
    }
    return count;
}

}  // namespace

std::string to_string(GenKind kind)
{
    switch (kind) {
    case GenKind::Convex: return "convex";
    case GenKind::RandomPoints: return "random-points";
    case GenKind::CylSelfHosted: return "cyl-selfhosted";
    case GenKind::CylRandom: return "cyl-random";
    }
    return "unknown";
}

GenKind parse_gen_kind(const std::string& text)
{
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return ch == '_' ? '-' : std::tolower(ch); });
    for (GenKind k : {GenKind::Convex, GenKind::RandomPoints, GenKind::CylSelfHosted, GenKind::CylRandom})
        if (to_string(k) == t) return k;
    throw InputError("unknown generator kind '" + text + "'");
}

Drawing convex_drawing(int n)
{
    if (n < 3) throw InputError("convex drawing needs n >= 3");
    std::vector<Point> pts;
    for (int k = 0; k < n; ++k) {
        // Irregular offsets keep antipodal points (and so concurrent
        // diameters) out of the rounded point set.
        double offset = 0.25 * std::fmod(k * std::numbers::phi, 1.0) + 0.125;
        double theta = 2 * std::numbers::pi * (k + offset) / n;
        pts.push_back(ipoint(std::llround(kGrid * std::cos(theta)), std::llround(kGrid * std::sin(theta))));
    }
    std::vector<Rational> xs;
    for (const Point& p : pts) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw GenerationFailure("rounded circle points share an x-coordinate");
    for (int k = 0; k < n; ++k)
        if (orient(pts[k], pts[(k + 1) % n], pts[(k + 2) % n]) != Orientation::CCW)
            throw GenerationFailure("rounded circle points are not in strictly convex position");
    Drawing d = Drawing::straight_line_complete(std::move(pts));
    if (!validate_simple(d).ok) throw GenerationFailure("rounded circle drawing has concurrent diagonals");
    return d;
}

Drawing random_points_drawing(int n, std::uint64_t seed)
{
    if (n < 3) throw InputError("random drawing needs n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(0, kGrid - 1);
    for (int attempt = 0; attempt < kPointAttempts; ++attempt) {
        std::vector<Point> pts;
        int rejected = 0;
        while (static_cast<int>(pts.size()) < n && rejected < 100 * n) {
            Point p = ipoint(coord(rng), coord(rng));
            if (collinear_with_any(pts, p)) {
                ++rejected;
                continue;
            }
            pts.push_back(p);
        }
        if (static_cast<int>(pts.size()) < n) continue;
        Drawing d = Drawing::straight_line_complete(std::move(pts));
        if (validate_simple(d).ok) return d;
    }
    throw GenerationFailure("no simple random point drawing within the attempt budget");
}

CylindricalDrawing selfhosted_cylinder(int delta, std::uint64_t seed)
{
    if (delta < 2) throw InputError("cylinder needs at least two columns");
    // Host sizes start at delta + 2, the smallest that can give u delta
    // non-root neighbours. Wide cylinders are rare on small hosts, so the
    // size grows every few misses up to a cap.
    for (int attempt = 0; attempt < kHostAttempts; ++attempt) {
        int n = std::min(delta + 2 + attempt / 8, 3 * delta + 6);
        Drawing host = attempt == 0 ? convex_drawing(n) : random_points_drawing(n, derive_seed(seed, attempt));
        for (VertexId root = 0; root < n; ++root) {
            PlaneSubgraph g = grow_plane_subgraph(host, root);
            DegreeMax dm = max_degree_non_root(g);
            if (dm.delta - 1 != delta) continue;
            CylindricalDrawing c = build_cylindrical(host, g, dm.vertex);
            ValidationReport r = validate_cylindrical(c);
            if (!r.ok)
                throw ClaimViolation("self-hosted cylinder failed validation: " + to_string(r.violations.front().kind));
            c.provenance.reset();
            return c;
        }
    }
    throw GenerationFailure("no host produced a cylinder with the requested number of columns");
}

CylindricalDrawing random_cylinder(int delta, std::uint64_t seed)
{
    if (delta < 2) throw InputError("cylinder needs at least two columns");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> key_dist(std::numeric_limits<std::int64_t>::min() / 2,
                                                         std::numeric_limits<std::int64_t>::max() / 2);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < delta; ++i)
        for (int j = i + 1; j < delta; ++j) pairs.emplace_back(i, j);

    for (int restart = 0; restart < kCylinderRestarts; ++restart) {
        std::vector<KeyedEdge> placed;
        std::vector<Side> sides;
        bool stuck = false;
        for (auto [i, j] : pairs) {
            bool ok = false;
            for (int attempt = 0; attempt < kEdgeAttempts && !ok; ++attempt) {
                Side side = make_side(rng() & 1 ? SideKind::Outer : SideKind::Inner, i, j, delta);
                KeyedEdge e{side.kind == SideKind::Inner ? i : j, {0}, i, j};
                for (std::size_t t = 0; t < side.columns.size(); ++t) {
                    std::int64_t k = 0;
                    while (k == 0) k = key_dist(rng);
                    e.key.push_back(k);
                }
                e.key.push_back(0);
                ok = true;
                for (const KeyedEdge& f : placed) {
                    bool adjacent = f.i == i || f.i == j || f.j == i || f.j == j;
                    int n = keyed_crossings(e, f, delta);
                    if (n > (adjacent ? 0 : 1)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    placed.push_back(std::move(e));
                    sides.push_back(std::move(side));
                }
            }
            if (!ok) {
                stuck = true;
                break;
            }
        }
        if (stuck) continue;

        // Keys to ranks: order by key inside every column, counted outward
        // from the column vertex.
        CylindricalDrawing c;
        c.delta = delta;
        for (int l = 0; l < delta; ++l) c.column_vertex.push_back(l);
        std::vector<std::vector<std::pair<std::int64_t, std::pair<int, int>>>> column_keys(delta);
        for (std::size_t k = 0; k < placed.size(); ++k) {
            c.edges.push_back({placed[k].i, placed[k].j, sides[k], std::vector<int>(sides[k].columns.size(), 0)});
            for (std::size_t t = 0; t < sides[k].columns.size(); ++t)
                column_keys[sides[k].columns[t]].push_back({placed[k].key[t + 1], {int(k), int(t)}});
        }
        for (auto& keys : column_keys) {
            std::sort(keys.begin(), keys.end());
            auto zero = std::lower_bound(keys.begin(), keys.end(), std::pair<std::int64_t, std::pair<int, int>>{0, {-1, -1}});
            int rank = 0;
            for (auto it = zero; it != keys.begin();) {
                --it;
                c.edges[it->second.first].heights[it->second.second] = --rank;
            }
            rank = 0;
            for (auto it = zero; it != keys.end(); ++it) c.edges[it->second.first].heights[it->second.second] = ++rank;
        }
        ValidationReport r = validate_cylindrical(c);
        if (r.ok) return c;
    }
    throw GenerationFailure("random cylinder rejection budget exhausted");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream), std::uint32_t(stream >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t(out[0]) << 32) | out[1];
}

Instance generate(const GenSpec& spec)
{
    switch (spec.kind) {
    case GenKind::Convex: return convex_drawing(spec.size);
    case GenKind::RandomPoints: return random_points_drawing(spec.size, spec.seed);
    case GenKind::CylSelfHosted: return selfhosted_cylinder(spec.size, spec.seed);
    case GenKind::CylRandom: return random_cylinder(spec.size, spec.seed);
    }
    throw InputError("unknown generator kind");
}

}  // namespace djm
