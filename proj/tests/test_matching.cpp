#include <doctest.h>

#include <functional>
#include <map>

#include "djm/errors.hpp"
#include "djm/gen.hpp"
#include "djm/matching.hpp"
#include "support.hpp"

using namespace djm;
using namespace djm::test;

namespace {

// Straight segments with distinct x, no three points collinear.
struct SegmentSet {
    std::vector<IPoint> pts;
    std::vector<std::pair<int, int>> pairs;  // left endpoint first
};

SegmentSet random_segments(std::mt19937_64& rng, int points, int edges)
{
    SegmentSet s;
    std::vector<std::int64_t> xs(points * 3);
    std::iota(xs.begin(), xs.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::uniform_int_distribution<std::int64_t> ydist(-40, 40);
    while (static_cast<int>(s.pts.size()) < points) {
        IPoint p{xs[s.pts.size()], ydist(rng)};
        bool collinear = false;
        for (std::size_t a = 0; a < s.pts.size() && !collinear; ++a)
            for (std::size_t b = a + 1; b < s.pts.size() && !collinear; ++b)
                collinear = naive_orient(s.pts[a], s.pts[b], p) == 0;
        if (!collinear) s.pts.push_back(p);
    }
    std::set<std::pair<int, int>> seen;
    std::uniform_int_distribution<int> vdist(0, points - 1);
    while (static_cast<int>(s.pairs.size()) < edges) {
        int a = vdist(rng), b = vdist(rng);
        if (a == b) continue;
        if (s.pts[a].x > s.pts[b].x) std::swap(a, b);
        if (seen.insert({a, b}).second) s.pairs.push_back({a, b});
    }
    return s;
}

Drawing to_drawing(const SegmentSet& s) { return Drawing::straight_line(to_points(s.pts), s.pairs); }

// Independent relation oracle on integer segments.
struct NaiveOrders {
    const SegmentSet& s;

    std::int64_t L(int e) const { return s.pts[s.pairs[e].first].x; }
    std::int64_t R(int e) const { return s.pts[s.pairs[e].second].x; }

    bool below(int e, int f) const
    {
        if (!naive_disjoint(s.pts, s.pairs[e], s.pairs[f])) return false;
        std::int64_t x0 = std::max(L(e), L(f));
        if (x0 > std::min(R(e), R(f))) return false;
        // y_e(x0) < y_f(x0), cross-multiplied by the positive run lengths.
        auto [a, b] = s.pairs[e];
        auto [c, d] = s.pairs[f];
        IPoint pa = s.pts[a], pb = s.pts[b], pc = s.pts[c], pd = s.pts[d];
        std::int64_t re = pb.x - pa.x, rf = pd.x - pc.x;
        std::int64_t ye = pa.y * re + (pb.y - pa.y) * (x0 - pa.x);
        std::int64_t yf = pc.y * rf + (pd.y - pc.y) * (x0 - pc.x);
        return ye * rf < yf * re;
    }

    bool precedes(OrderKind k, int e, int f) const
    {
        switch (k) {
        case OrderKind::LeftStair:
            return (R(e) < L(f) && naive_disjoint(s.pts, s.pairs[e], s.pairs[f])) ||
                   (below(e, f) && L(e) < L(f) && R(e) < R(f));
        case OrderKind::RightStair:
            return (R(f) < L(e) && naive_disjoint(s.pts, s.pairs[e], s.pairs[f])) ||
                   (below(e, f) && L(f) < L(e) && R(f) < R(e));
        case OrderKind::NestUp: return below(e, f) && L(f) <= L(e) && R(e) <= R(f);
        case OrderKind::NestDown: return below(e, f) && L(e) <= L(f) && R(f) <= R(e);
        }
        return false;
    }

    int longest_chain(OrderKind k) const
    {
        const int m = static_cast<int>(s.pairs.size());
        std::vector<int> memo(m, 0);
        std::function<int(int)> from = [&](int e) {
            if (memo[e]) return memo[e];
            int best = 1;
            for (int f = 0; f < m; ++f)
                if (precedes(k, e, f)) best = std::max(best, 1 + from(f));
            return memo[e] = best;
        };
        int best = m ? 1 : 0;
        for (int e = 0; e < m; ++e) best = std::max(best, from(e));
        return best;
    }
};

Relation naive_relation(const NaiveOrders& o, OrderKind k, int e, int f)
{
    if (o.precedes(k, e, f)) return Relation::Below;
    if (o.precedes(k, f, e)) return Relation::Above;
    return Relation::Incomparable;
}

}  // namespace

TEST_CASE("greedy matching examples")
{
    Drawing k3 = Drawing::straight_line_complete(to_points({{0, 0}, {4, 0}, {1, 3}}));
    PlaneSubgraph g3 = grow_plane_subgraph(k3, 0);
    auto m3 = greedy_matching_avoiding(g3);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == k3.edge_between(1, 2));

    Drawing d = Drawing::straight_line_complete(to_points({{0, 0}, {10, 1}, {1, 10}, {-10, -1}, {-1, -10}}));
    std::set<EdgeId> edges;
    for (VertexId w = 1; w <= 4; ++w) edges.insert(d.edge_between(0, w));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}) edges.insert(d.edge_between(a, b));
    auto m = greedy_matching_avoiding(PlaneSubgraph(d, 0, edges));
    std::vector<EdgeId> want{d.edge_between(1, 2), d.edge_between(3, 4)};
    std::sort(want.begin(), want.end());
    CHECK(m == want);
}

TEST_CASE("order_relation examples")
{
    Drawing d = Drawing::straight_line(to_points({{0, 0}, {1, 0}, {2, 1}, {3, 1}}), {{0, 1}, {2, 3}});
    CHECK(order_relation(d, OrderKind::LeftStair, 0, 1) == Relation::Below);
    CHECK(order_relation(d, OrderKind::LeftStair, 1, 0) == Relation::Above);
    CHECK(order_relation(d, OrderKind::RightStair, 0, 1) == Relation::Above);
    CHECK(order_relation(d, OrderKind::NestUp, 0, 1) == Relation::Incomparable);

    Drawing n = Drawing::straight_line(to_points({{0, 0}, {3, 0}, {1, 1}, {2, 1}}), {{0, 1}, {2, 3}});
    CHECK(below(n, 0, 1));
    CHECK_FALSE(below(n, 1, 0));
    CHECK(order_relation(n, OrderKind::NestDown, 0, 1) == Relation::Below);
    CHECK(order_relation(n, OrderKind::NestUp, 0, 1) == Relation::Incomparable);
    CHECK(order_relation(n, OrderKind::LeftStair, 0, 1) == Relation::Incomparable);

    // Sharing a vertex makes two edges incomparable everywhere.
    Drawing s = Drawing::straight_line(to_points({{0, 0}, {1, 5}, {2, 0}}), {{0, 1}, {1, 2}});
    for (OrderKind k : kOrderKinds) CHECK(order_relation(s, k, 0, 1) == Relation::Incomparable);

    CHECK(to_string(OrderKind::LeftStair) == "LEFT_STAIR");
    CHECK(to_string(OrderKind::NestDown) == "NEST_DOWN");
}

TEST_CASE("property: the four orders are strict partial orders that cover disjoint pairs")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        SegmentSet s = random_segments(rng, 10, 14);
        Drawing d = to_drawing(s);
        NaiveOrders oracle{s};
        const int m = d.edge_count();
        std::vector<std::vector<std::array<Relation, 4>>> rel(m, std::vector<std::array<Relation, 4>>(m));
        for (int e = 0; e < m; ++e)
            for (int f = 0; f < m; ++f)
                for (int k = 0; k < 4; ++k) {
                    rel[e][f][k] = order_relation(d, kOrderKinds[k], e, f);
                    CHECK(rel[e][f][k] == naive_relation(oracle, kOrderKinds[k], e, f));
                }
        for (int e = 0; e < m; ++e) {
            for (int k = 0; k < 4; ++k) CHECK(rel[e][e][k] == Relation::Incomparable);
            for (int f = 0; f < m; ++f) {
                bool any = false;
                for (int k = 0; k < 4; ++k) {
                    if (rel[e][f][k] == Relation::Below) CHECK(rel[f][e][k] == Relation::Above);
                    any |= rel[e][f][k] != Relation::Incomparable;
                    for (int g = 0; g < m; ++g)
                        if (rel[e][f][k] == Relation::Below && rel[f][g][k] == Relation::Below)
                            CHECK(rel[e][g][k] == Relation::Below);
                }
                if (e != f && naive_disjoint(s.pts, s.pairs[e], s.pairs[f])) CHECK(any);
                if (any) CHECK(naive_disjoint(s.pts, s.pairs[e], s.pairs[f]));
            }
        }
    }
}

TEST_CASE("chain_extract examples")
{
    SUBCASE("three stacked nested edges")
    {
        Drawing d = Drawing::straight_line(to_points({{0, 0}, {5, 0}, {1, 1}, {4, 1}, {2, 2}, {3, 2}}),
                                           {{0, 1}, {2, 3}, {4, 5}});
        ChainResult r = chain_extract(XMonotoneDrawing::from_drawing(d));
        CHECK(r.edges.size() == 3);
        CHECK(r.best == OrderKind::NestDown);
        CHECK(r.lengths[2] == 1);
        CHECK(r.lengths[3] == 3);
    }
    SUBCASE("single edge")
    {
        Drawing d = Drawing::straight_line(to_points({{0, 0}, {1, 1}}), {{0, 1}});
        ChainResult r = chain_extract(XMonotoneDrawing::from_drawing(d));
        CHECK(r.edges == std::vector<EdgeId>{0});
    }
    SUBCASE("convex K6")
    {
        ChainResult r = chain_extract(XMonotoneDrawing::from_drawing(convex_drawing(6)));
        CHECK(r.edges.size() >= 3);
    }
}

TEST_CASE("property: chain lengths agree with a brute-force longest path")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        SegmentSet s = random_segments(rng, 9, 12);
        Drawing d = to_drawing(s);
        NaiveOrders oracle{s};
        ChainResult r = chain_extract(XMonotoneDrawing::from_drawing(d));
        int best = 0;
        for (int k = 0; k < 4; ++k) {
            CHECK(r.lengths[k] == oracle.longest_chain(kOrderKinds[k]));
            best = std::max(best, r.lengths[k]);
        }
        CHECK(static_cast<int>(r.edges.size()) == best);
        for (std::size_t a = 0; a < r.edges.size(); ++a)
            for (std::size_t b = a + 1; b < r.edges.size(); ++b)
                CHECK(naive_disjoint(s.pts, s.pairs[r.edges[a]], s.pairs[r.edges[b]]));
    }
}

TEST_CASE("property: complete x-monotone drawings give at least half the vertices")
{
    for (int n = 3; n <= 14; ++n) {
        auto pts = parabola_points(n);
        ChainResult r = chain_extract(XMonotoneDrawing::from_drawing(Drawing::straight_line_complete(to_points(pts))));
        CHECK(static_cast<int>(r.edges.size()) >= n / 2);
    }
}

TEST_CASE("solve")
{
    Drawing k3 = Drawing::straight_line_complete(to_points({{0, 0}, {4, 0}, {1, 3}}));
    MatchingResult r3 = solve(k3);
    CHECK(r3.size == 1);
    CHECK(r3.stats.cut_column == -1);

    Drawing k9 = convex_drawing(9);
    MatchingResult r9 = solve(k9);
    CHECK(r9.size >= 3);
    CHECK(r9.size <= 4);
    CHECK(certificate_failures(k9, r9.edges).empty());

    Drawing k2 = Drawing::straight_line_complete(to_points({{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(solve(k2), InputError);

    std::vector<EdgeId> bad{k9.edge_between(0, 4), k9.edge_between(2, 7)};
    auto failures = certificate_failures(k9, bad);
    REQUIRE(failures.size() == 1);
}

TEST_CASE("property: solve is certified, deterministic and meets the stage A bound")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 5 + static_cast<int>(seed % 12);
        Drawing d = random_points_drawing(n, seed);
        MatchingResult r = solve(d);
        MatchingResult again = solve(d);
        CHECK(r.edges == again.edges);
        CHECK(r.size == static_cast<int>(r.edges.size()));
        CHECK(r.size == std::max(r.stats.stage_a_size, r.stats.stage_b_size));
        CHECK(r.stats.columns == r.stats.delta - 1);
        int bound = (n - 1 + 4 * r.stats.delta - 1) / (4 * r.stats.delta);
        CHECK(r.stats.stage_a_size >= bound);

        std::vector<IPoint> pts;
        for (const Point& p : d.vertices()) pts.push_back({p.x.small_num(), p.y.small_num()});
        for (std::size_t a = 0; a < r.edges.size(); ++a)
            for (std::size_t b = a + 1; b < r.edges.size(); ++b) {
                const auto& e = d.edge(r.edges[a]);
                const auto& f = d.edge(r.edges[b]);
                CHECK(naive_disjoint(pts, {e.u, e.v}, {f.u, f.v}));
            }

        MatchingResult all = solve(d, RootPolicy::best_of_all());
        CHECK(all.size >= r.size);
    }
}
