#include <doctest.h>

#include "djm/cylinder.hpp"
#include "djm/errors.hpp"
#include "djm/gen.hpp"
#include "support.hpp"

using namespace djm;
using namespace djm::test;

namespace {

IPoint ip(const Point& p) { return {p.x.small_num(), p.y.small_num()}; }

bool host_cross(const Drawing& d, VertexId a, VertexId b, VertexId c, VertexId e)
{
    if (a == c || a == e || b == c || b == e) return false;
    return naive_proper_cross(ip(d.vertex(a)), ip(d.vertex(b)), ip(d.vertex(c)), ip(d.vertex(e)));
}

CylEdge edge(int i, int j, SideKind kind, int delta, std::vector<int> heights)
{
    Side s = make_side(kind, i, j, delta);
    REQUIRE(s.columns.size() == heights.size());
    return {i, j, s, std::move(heights)};
}

CylindricalDrawing bare(int delta, std::vector<CylEdge> edges)
{
    CylindricalDrawing c;
    c.delta = delta;
    for (int l = 0; l < delta; ++l) c.column_vertex.push_back(l);
    c.edges = std::move(edges);
    return c;
}

// Every pair on its shorter side; {0,2} and {1,3} go inner and cross once.
CylindricalDrawing width4()
{
    return bare(4, {edge(0, 1, SideKind::Inner, 4, {}), edge(0, 2, SideKind::Inner, 4, {1}),
                    edge(0, 3, SideKind::Outer, 4, {}), edge(1, 2, SideKind::Inner, 4, {}),
                    edge(1, 3, SideKind::Inner, 4, {1}), edge(2, 3, SideKind::Inner, 4, {})});
}

CylindricalDrawing width3()
{
    return bare(3, {edge(0, 1, SideKind::Inner, 3, {}), edge(0, 2, SideKind::Outer, 3, {}),
                    edge(1, 2, SideKind::Inner, 3, {})});
}

struct Hosted {
    Drawing host;
    VertexId root;
};

// Random hosts whose grown subgraph yields at least `min_columns` columns.
std::vector<Hosted> hosts(int count, int min_columns)
{
    std::vector<Hosted> out;
    for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
        Drawing d = random_points_drawing(8 + static_cast<int>(seed % 6), seed);
        for (VertexId root = 0; root < d.vertex_count() && static_cast<int>(out.size()) < count; ++root) {
            PlaneSubgraph g = grow_plane_subgraph(d, root);
            if (max_degree_non_root(g).delta - 1 >= min_columns) out.push_back({d, root});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("make_side lists the passed columns in travel order")
{
    CHECK(make_side(SideKind::Inner, 0, 2, 4).columns == std::vector<int>{1});
    CHECK(make_side(SideKind::Outer, 0, 2, 4).columns == std::vector<int>{3});
    CHECK(make_side(SideKind::Outer, 1, 3, 5).columns == std::vector<int>{4, 0});
    CHECK(make_side(SideKind::Inner, 0, 1, 2).columns.empty());
    CHECK(make_side(SideKind::Outer, 0, 1, 2).columns.empty());
    CHECK(to_string(SideKind::Inner) == "INNER");
    CHECK(to_string(SideKind::Outer) == "OUTER");
}

TEST_CASE("hand-built width 4 drawing")
{
    CylindricalDrawing c = width4();
    CHECK(validate_cylindrical(c).ok);
    auto pairs = cylinder_crossing_pairs(c);
    REQUIRE(pairs.size() == 1);
    CHECK(c.edges[pairs[0].first].i == 0);
    CHECK(c.edges[pairs[0].second].i == 1);
    CHECK(c.edges[1].height_at(1) == 1);
    CHECK(c.edges[1].height_at(2) == 0);
    CHECK(c.find_edge(1, 3) == 4);
    CHECK_FALSE(c.find_edge(3, 3).has_value());

    auto kept = kept_counts(c);
    CHECK(kept == std::vector<int>{3, 2, 2, 3});
    CutChoice cut = best_cut(c);
    CHECK(cut.cut_column == 0);
    CHECK(cut.kept_count == 3);

    XMonotoneDrawing x = cut_and_unroll(c, 0);
    CHECK(x.drawing.vertex_count() == 3);
    CHECK(x.drawing.edge_count() == 3);
    CHECK(x.cut_column == 0);
    CHECK(x.vertex_column == std::vector<int>{1, 2, 3});
    CHECK(is_x_monotone(x.drawing));
    CHECK(validate_simple(x.drawing).ok);
}

TEST_CASE("width 3 with empty sides keeps one edge per cut")
{
    CylindricalDrawing c = width3();
    CHECK(validate_cylindrical(c).ok);
    CHECK(kept_counts(c) == std::vector<int>{1, 1, 1});
    CHECK(best_cut(c).cut_column == 0);
    for (int l = 0; l < 3; ++l) {
        XMonotoneDrawing x = cut_and_unroll(c, l);
        REQUIRE(x.drawing.edge_count() == 1);
        auto [a, b] = x.origin_pair(0);
        CHECK(a != l);
        CHECK(b != l);
    }
    CHECK_THROWS_AS(best_cut(bare(2, {edge(0, 1, SideKind::Inner, 2, {})})), InputError);
}

TEST_CASE("constructed violations")
{
    SUBCASE("two equal ranks in one column")
    {
        CylindricalDrawing c = bare(4, {edge(0, 2, SideKind::Inner, 4, {1}), edge(0, 3, SideKind::Inner, 4, {1, 2})});
        ValidationReport r = validate_cylindrical(c);
        CHECK_FALSE(r.ok);
        CHECK(r.has(ViolationKind::RankClash));
    }
    SUBCASE("height list of the wrong length")
    {
        CylindricalDrawing c = width4();
        c.edges[1].heights.push_back(2);
        CHECK(validate_cylindrical(c).has(ViolationKind::Malformed));
    }
    SUBCASE("adjacent edges that cross")
    {
        // Raising {0,2} above {0,3} at column 1 forces a crossing before
        // {0,2} drops to its endpoint at column 2.
        CylindricalDrawing c = bare(4, {edge(0, 2, SideKind::Inner, 4, {1}), edge(0, 3, SideKind::Inner, 4, {2, 1})});
        CHECK(validate_cylindrical(c).ok);
        c.edges[0].heights = {2};
        c.edges[1].heights = {1, 1};
        ValidationReport r = validate_cylindrical(c);
        CHECK(r.has(ViolationKind::AdjacentCrossing));
    }
    SUBCASE("a crossing pair absent from the host")
    {
        auto hs = hosts(6, 4);
        bool produced = false;
        for (const Hosted& h : hs) {
            PlaneSubgraph g = grow_plane_subgraph(h.host, h.root);
            CylindricalDrawing base = build_cylindrical(h.host, g);
            REQUIRE(validate_cylindrical(base).ok);
            for (std::size_t a = 0; a < base.edges.size() && !produced; ++a)
                for (std::size_t b = a + 1; b < base.edges.size() && !produced; ++b)
                    for (int col : base.edges[a].side.columns) {
                        if (base.edges[b].height_at(col) == 0) continue;
                        CylindricalDrawing c = base;
                        auto& ha = c.edges[a].heights;
                        auto& hb = c.edges[b].heights;
                        auto ia = std::find(c.edges[a].side.columns.begin(), c.edges[a].side.columns.end(), col) -
                                  c.edges[a].side.columns.begin();
                        auto ib = std::find(c.edges[b].side.columns.begin(), c.edges[b].side.columns.end(), col) -
                                  c.edges[b].side.columns.begin();
                        std::swap(ha[ia], hb[ib]);
                        ValidationReport r = validate_cylindrical(c);
                        if (r.has(ViolationKind::Equivalence) && !r.has(ViolationKind::RankClash)) {
                            produced = true;
                            break;
                        }
                    }
            if (produced) break;
        }
        CHECK(produced);
    }
    SUBCASE("columns out of rotation order")
    {
        Hosted h = hosts(1, 3).front();
        PlaneSubgraph g = grow_plane_subgraph(h.host, h.root);
        CylindricalDrawing c = build_cylindrical(h.host, g);
        std::swap(c.column_vertex[0], c.column_vertex[1]);
        ValidationReport r = validate_cylindrical(c);
        CHECK_FALSE(r.ok);
        CHECK(r.has(ViolationKind::RotationMismatch));
    }
}

TEST_CASE("convex K5 and K7 give valid cylinders")
{
    for (int n : {5, 7}) {
        Drawing d = convex_drawing(n);
        PlaneSubgraph g = grow_plane_subgraph(d, 0);
        CylindricalDrawing c = build_cylindrical(d, g);
        ValidationReport r = validate_cylindrical(c);
        CHECK(r.ok);
        DegreeMax dm = max_degree_non_root(g);
        CHECK(c.delta == dm.delta - 1);
        const int w = c.delta;
        CHECK(static_cast<int>(c.edges.size()) == w * (w - 1) / 2);
    }
}

TEST_CASE("property: path crossings split into one crossed and one uncrossed interval")
{
    // Counts come from integer segment tests on the host, not from the library.
    int checked = 0;
    for (const Hosted& h : hosts(25, 2)) {
        PlaneSubgraph g = grow_plane_subgraph(h.host, h.root);
        for (VertexId u = 0; u < h.host.vertex_count(); ++u) {
            if (u == h.root || g.degree(u) < 3) continue;
            CylinderFrame f = cylinder_frame(h.host, g, u);
            const int w = static_cast<int>(f.columns.size());
            for (int i = 0; i < w; ++i)
                for (int j = i + 1; j < w; ++j) {
                    VertexId a = f.columns[i], b = f.columns[j];
                    std::vector<int> counts(w, 0);
                    for (int l = 0; l < w; ++l) {
                        if (l == i || l == j) continue;
                        VertexId v = f.columns[l];
                        counts[l] = host_cross(h.host, a, b, u, v) + host_cross(h.host, a, b, v, h.root);
                        CHECK(counts[l] <= 1);
                    }
                    bool inner_hit = true, outer_hit = true, inner_clear = true, outer_clear = true;
                    for (int l = 0; l < w; ++l) {
                        if (l == i || l == j) continue;
                        bool inner = i < l && l < j;
                        (inner ? inner_hit : outer_hit) &= counts[l] == 1;
                        (inner ? inner_clear : outer_clear) &= counts[l] == 0;
                    }
                    CHECK(((inner_hit && outer_clear) || (outer_hit && inner_clear)));

                    SideAnalysis s = analyze_side(f, i, j);
                    CHECK(s.path_crossings == counts);
                    for (int l : s.side.columns) CHECK(counts[l] == 1);
                    ++checked;
                }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("property: cylinder crossings match the host")
{
    for (const Hosted& h : hosts(20, 3)) {
        PlaneSubgraph g = grow_plane_subgraph(h.host, h.root);
        CylindricalDrawing c = build_cylindrical(h.host, g);
        REQUIRE(validate_cylindrical(c).ok);
        std::set<std::pair<int, int>> got;
        for (auto p : cylinder_crossing_pairs(c)) got.insert(p);
        for (int a = 0; a < static_cast<int>(c.edges.size()); ++a)
            for (int b = a + 1; b < static_cast<int>(c.edges.size()); ++b) {
                const CylEdge& ea = c.edges[a];
                const CylEdge& eb = c.edges[b];
                bool cross = host_cross(h.host, c.column_vertex[ea.i], c.column_vertex[ea.j], c.column_vertex[eb.i],
                                        c.column_vertex[eb.j]);
                CHECK(cross == (got.count({a, b}) == 1));
                CHECK(cylinder_crossing_count(c, a, b) == (cross ? 1 : 0));
            }
        // Every passed column carries a nonzero rank, and ranks are distinct per column.
        for (int l = 0; l < c.delta; ++l) {
            std::set<int> ranks;
            for (const CylEdge& e : c.edges) {
                int r = e.height_at(l);
                if (std::find(e.side.columns.begin(), e.side.columns.end(), l) != e.side.columns.end()) {
                    CHECK(r != 0);
                    CHECK(ranks.insert(r).second);
                }
            }
        }
    }
}

TEST_CASE("property: the cut keeps disjointness exactly")
{
    for (const Hosted& h : hosts(20, 3)) {
        PlaneSubgraph g = grow_plane_subgraph(h.host, h.root);
        CylindricalDrawing c = build_cylindrical(h.host, g);
        std::vector<int> kept = kept_counts(c);
        CutChoice best = best_cut(c);
        CHECK(best.kept_count == *std::max_element(kept.begin(), kept.end()));
        CHECK(best.kept_count >= kept[0]);
        CHECK(best.kept_count >= kept[c.delta / 2]);

        for (int cut = 0; cut < c.delta; ++cut) {
            XMonotoneDrawing x = cut_and_unroll(c, cut);
            CHECK(x.drawing.edge_count() == kept[cut]);
            CHECK(x.drawing.vertex_count() == c.delta - 1);
            CHECK(is_x_monotone(x.drawing));
            CHECK(validate_simple(x.drawing).ok);
            CrossingMatrix cm = crossing_matrix(x.drawing);
            for (EdgeId e = 0; e < x.drawing.edge_count(); ++e) {
                auto [a, b] = x.origin_pair(e);
                CHECK(a != c.column_vertex[cut]);
                CHECK(b != c.column_vertex[cut]);
                for (EdgeId f = e + 1; f < x.drawing.edge_count(); ++f) {
                    auto [p, q] = x.origin_pair(f);
                    CHECK((cm.count(e, f) == 1) == host_cross(h.host, a, b, p, q));
                    CHECK(cm.count(e, f) <= 1);
                }
            }
        }
    }
}

TEST_CASE("x-monotone wrapper")
{
    Drawing ok = Drawing::straight_line_complete(to_points(parabola_points(5)));
    CHECK(is_x_monotone(ok));
    XMonotoneDrawing x = XMonotoneDrawing::from_drawing(ok);
    CHECK(x.drawing.edge_count() == 10);
    Drawing vertical = Drawing::straight_line_complete(to_points({{0, 0}, {0, 3}, {2, 1}}));
    CHECK_FALSE(is_x_monotone(vertical));
    CHECK_THROWS_AS(XMonotoneDrawing::from_drawing(vertical), InputError);
}
