#include "djm/cylinder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "djm/errors.hpp"

namespace djm {

namespace {

constexpr std::int64_t kRankScale = 1024;
constexpr std::int64_t kJitter = 255;  // |jitter| <= kJitter < kRankScale / 2

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Order-preserving realization of a rank; rank 0 is the vertex itself.
std::int64_t realize(int column, int rank, unsigned salt)
{
    if (rank == 0) return 0;
    std::uint64_t h = splitmix((std::uint64_t(std::uint32_t(column)) << 32) ^ std::uint32_t(rank));
    h = splitmix(h ^ salt);
    auto jitter = static_cast<std::int64_t>(h % (2 * kJitter + 1)) - kJitter;
    return rank * kRankScale + jitter;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// Columns visited by an edge, endpoints included, in cover order.
std::vector<int> visit_order(const CylEdge& e)
{
    std::vector<int> cols;
    if (e.side.kind == SideKind::Inner) {
        cols.push_back(e.i);
        cols.insert(cols.end(), e.side.columns.begin(), e.side.columns.end());
        cols.push_back(e.j);
    } else {
        cols.push_back(e.j);
        cols.insert(cols.end(), e.side.columns.begin(), e.side.columns.end());
        cols.push_back(e.i);
    }
    return cols;
}

int cover_start(const CylEdge& e) { return e.side.kind == SideKind::Inner ? e.i : e.j; }

Point ipoint(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

Point direction(const Drawing& d, EdgeId e, VertexId at) { return d.first_step(e, at) - d.vertex(at); }

// True when `order` lists 0..m-1 as a cyclic shift, ascending or descending.
bool is_cyclic_run(const std::vector<int>& order, bool ascending)
{
    int m = static_cast<int>(order.size());
    for (int k = 0; k < m; ++k) {
        int next = order[(k + 1) % m];
        int want = ascending ? (order[k] + 1) % m : (order[k] + m - 1) % m;
        if (next != want) return false;
    }
    return true;
}

// Column indices sorted counter-clockwise by the direction of edge
// center -> column_vertex[l].
std::vector<int> ccw_columns(const Drawing& d, VertexId center, const std::vector<VertexId>& column_vertex)
{
    std::vector<Point> dirs;
    for (VertexId w : column_vertex) dirs.push_back(direction(d, d.edge_between(center, w), center));
    std::vector<int> order(column_vertex.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return angle_less(dirs[a], dirs[b]); });
    return order;
}

struct PathHit {
    int edge;   // index into the pair list
    bool upper; // on v_l -> root
    ChainPosition pos;  // measured from v_l
};

struct PairScan {
    SideAnalysis analysis;
    std::vector<std::pair<int, PathHit>> hits;  // (column, hit)
};

PairScan scan_pair(const CylinderFrame& f, int i, int j, int edge_index)
{
    const Drawing& host = *f.host;
    int delta = static_cast<int>(f.columns.size());
    EdgeId e = host.edge_between(f.columns[i], f.columns[j]);
    const auto& chain = host.edge(e).chain;

    PairScan scan;
    scan.analysis.path_crossings.assign(delta, 0);
    for (int l = 0; l < delta; ++l) {
        if (l == i || l == j) continue;
        for (bool upper : {false, true}) {
            EdgeId p = upper ? f.upper[l] : f.lower[l];
            std::vector<Point> from_vl = host.chain_from(p, f.columns[l]);
            std::vector<Point> pts = polyline_crossings(std::span<const Point>(chain), std::span<const Point>(from_vl));
            scan.analysis.path_crossings[l] += static_cast<int>(pts.size());
            for (const Point& x : pts)
                scan.hits.push_back({l, {edge_index, upper, chain_position(from_vl, x)}});
        }
    }

    Side inner = make_side(SideKind::Inner, i, j, delta);
    Side outer = make_side(SideKind::Outer, i, j, delta);
    auto all = [&](const Side& s, int want) {
        return std::all_of(s.columns.begin(), s.columns.end(),
                           [&](int l) { return scan.analysis.path_crossings[l] == want; });
    };
    if (all(inner, 1) && all(outer, 0)) {
        scan.analysis.side = inner;
    } else if (all(outer, 1) && all(inner, 0)) {
        scan.analysis.side = outer;
    } else {
        std::ostringstream msg;
        msg << "edge " << f.columns[i] << "-" << f.columns[j] << " path crossing counts [";
        for (int l = 0; l < delta; ++l) msg << (l ? " " : "") << scan.analysis.path_crossings[l];
        msg << "] do not split into a crossed and an uncrossed interval";
        throw ClaimViolation(msg.str());
    }
    return scan;
}

}  // namespace

std::string to_string(SideKind kind) { return kind == SideKind::Inner ? "INNER" : "OUTER"; }

Side make_side(SideKind kind, int i, int j, int delta)
{
    Side s{kind, {}};
    if (kind == SideKind::Inner) {
        for (int l = i + 1; l < j; ++l) s.columns.push_back(l);
    } else {
        for (int l = j + 1; l < delta; ++l) s.columns.push_back(l);
        for (int l = 0; l < i; ++l) s.columns.push_back(l);
    }
    return s;
}

int CylEdge::height_at(int column) const
{
    for (std::size_t k = 0; k < side.columns.size(); ++k)
        if (side.columns[k] == column) return heights[k];
    return 0;
}

std::optional<int> CylindricalDrawing::find_edge(int i, int j) const
{
    if (i > j) std::swap(i, j);
    for (int k = 0; k < static_cast<int>(edges.size()); ++k)
        if (edges[k].i == i && edges[k].j == j) return k;
    return std::nullopt;
}

CylinderFrame cylinder_frame(const Drawing& host, const PlaneSubgraph& g, VertexId u)
{
    VertexId root = g.root();
    if (u < 0 || u >= host.vertex_count() || u == root) throw InputError("cylinder vertex must be a non-root vertex");
    auto uv = host.find_edge(u, root);
    if (!uv || !g.contains(*uv)) throw InputError("cylinder vertex is not joined to the root in the subgraph");

    CylinderFrame f;
    f.host = &host;
    f.u = u;
    f.root = root;
    for (VertexId w : g.neighbours(u))
        if (w != root) f.columns.push_back(w);

    // Clockwise from the edge to the root: decreasing counter-clockwise angle.
    Point ref = direction(host, *uv, u);
    std::vector<Point> dirs(host.vertex_count());
    for (VertexId w : f.columns) dirs[w] = direction(host, host.edge_between(u, w), u);
    std::sort(f.columns.begin(), f.columns.end(),
              [&](VertexId a, VertexId b) { return angle_less_from(ref, dirs[b], dirs[a]); });

    for (VertexId w : f.columns) {
        f.lower.push_back(host.edge_between(u, w));
        f.upper.push_back(host.edge_between(w, root));
    }
    return f;
}

SideAnalysis analyze_side(const CylinderFrame& frame, int i, int j)
{
    if (i > j) std::swap(i, j);
    return scan_pair(frame, i, j, 0).analysis;
}

Side edge_side(const Drawing& host, const PlaneSubgraph& g, VertexId u, int i, int j)
{
    return analyze_side(cylinder_frame(host, g, u), i, j).side;
}

CylindricalDrawing build_cylindrical(const Drawing& host, const PlaneSubgraph& g)
{
    return build_cylindrical(host, g, max_degree_non_root(g).vertex);
}

CylindricalDrawing build_cylindrical(const Drawing& host, const PlaneSubgraph& g, VertexId u)
{
    CylinderFrame f = cylinder_frame(host, g, u);
    int delta = static_cast<int>(f.columns.size());

    CylindricalDrawing c;
    c.delta = delta;
    c.column_vertex = f.columns;
    c.provenance = CylinderProvenance{&host, u, g.root()};

    std::vector<std::vector<PathHit>> per_column(delta);
    for (int i = 0; i < delta; ++i)
        for (int j = i + 1; j < delta; ++j) {
            int index = static_cast<int>(c.edges.size());
            PairScan scan = scan_pair(f, i, j, index);
            CylEdge e{i, j, scan.analysis.side, std::vector<int>(scan.analysis.side.columns.size(), 0)};
            c.edges.push_back(std::move(e));
            for (auto& [l, hit] : scan.hits) per_column[l].push_back(hit);
        }

    for (int l = 0; l < delta; ++l) {
        auto& hits = per_column[l];
        std::sort(hits.begin(), hits.end(), [](const PathHit& a, const PathHit& b) {
            if (a.upper != b.upper) return a.upper < b.upper;
            return a.pos < b.pos;
        });
        int below = 0;
        int above = 0;
        for (const PathHit& h : hits) {
            CylEdge& e = c.edges[h.edge];
            auto it = std::find(e.side.columns.begin(), e.side.columns.end(), l);
            e.heights[it - e.side.columns.begin()] = h.upper ? ++above : -(++below);
        }
    }
    return c;
}

std::vector<Point> cover_chain(const CylindricalDrawing& c, int edge, unsigned salt)
{
    const CylEdge& e = c.edges[edge];
    std::vector<int> cols = visit_order(e);
    int x = cover_start(e);
    std::vector<Point> chain;
    for (std::size_t k = 0; k < cols.size(); ++k, ++x) {
        int rank = (k == 0 || k + 1 == cols.size()) ? 0 : e.heights[k - 1];
        chain.push_back(ipoint(x, realize(cols[k], rank, salt)));
    }
    return chain;
}

int cylinder_crossing_count(const CylindricalDrawing& c, int a, int b)
{
    std::vector<Point> ca = cover_chain(c, a);
    std::vector<Point> cb = cover_chain(c, b);
    int a0 = cover_start(c.edges[a]);
    int b0 = cover_start(c.edges[b]);
    int a1 = a0 + static_cast<int>(ca.size()) - 1;
    int b1 = b0 + static_cast<int>(cb.size()) - 1;
    int count = 0;
    for (int k = -1; k <= 1; ++k) {
        int shift = k * c.delta;
        int lo = std::max(a0, b0 + shift);
        int hi = std::min(a1, b1 + shift);
        for (int s = lo; s < hi; ++s) {
            Segment sa{ca[s - a0], ca[s - a0 + 1]};
            const Point& p = cb[s - shift - b0];
            const Point& q = cb[s - shift - b0 + 1];
            Segment sb{{p.x + Rational(shift), p.y}, {q.x + Rational(shift), q.y}};
            auto r = segment_intersection(sa, sb);
            if (r.kind == IntersectionKind::Proper) ++count;
            else if (r.kind == IntersectionKind::Overlap) count += 2;
        }
    }
    return count;
}

std::vector<std::pair<int, int>> cylinder_crossing_pairs(const CylindricalDrawing& c)
{
    std::vector<std::pair<int, int>> out;
    int m = static_cast<int>(c.edges.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (cylinder_crossing_count(c, a, b) > 0) out.emplace_back(a, b);
    return out;
}

ValidationReport validate_cylindrical(const CylindricalDrawing& c)
{
    ValidationReport report;
    int delta = c.delta;
    int m = static_cast<int>(c.edges.size());

    // Structure; nothing geometric is meaningful past a malformed edge.
    if (delta < 1 || static_cast<int>(c.column_vertex.size()) != delta) {
        report.add({ViolationKind::Malformed, -1, -1, -1, std::nullopt});
        return report;
    }
    std::vector<VertexId> sorted_cols = c.column_vertex;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    if (std::adjacent_find(sorted_cols.begin(), sorted_cols.end()) != sorted_cols.end())
        report.add({ViolationKind::Malformed, -1, -1, -1, std::nullopt});
    std::set<std::pair<int, int>> seen;
    for (int k = 0; k < m; ++k) {
        const CylEdge& e = c.edges[k];
        bool bad = e.i < 0 || e.j >= delta || e.i >= e.j || !seen.insert({e.i, e.j}).second;
        if (!bad) {
            bad = make_side(e.side.kind, e.i, e.j, delta).columns != e.side.columns ||
                  e.heights.size() != e.side.columns.size() ||
                  std::find(e.heights.begin(), e.heights.end(), 0) != e.heights.end();
        }
        if (bad) report.add({ViolationKind::Malformed, k, -1, -1, std::nullopt});
    }
    if (!report.ok) return report;

    // (c) distinct ranks per column.
    std::vector<std::map<int, int>> owner(delta);
    for (int k = 0; k < m; ++k) {
        const CylEdge& e = c.edges[k];
        for (std::size_t t = 0; t < e.side.columns.size(); ++t) {
            auto [it, fresh] = owner[e.side.columns[t]].emplace(e.heights[t], k);
            if (!fresh) report.add({ViolationKind::RankClash, it->second, k, e.side.columns[t], std::nullopt});
        }
    }
    if (!report.ok) return report;

    // (a) at most one crossing, none between edges sharing a column vertex.
    std::vector<std::vector<int>> counts(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int n = cylinder_crossing_count(c, a, b);
            counts[a][b] = counts[b][a] = n;
            const CylEdge& ea = c.edges[a];
            const CylEdge& eb = c.edges[b];
            bool adjacent = ea.incident(eb.i) || ea.incident(eb.j);
            if (adjacent && n > 0) report.add({ViolationKind::AdjacentCrossing, a, b, -1, std::nullopt});
            else if (n > 1) report.add({ViolationKind::MultiCrossing, a, b, -1, std::nullopt});
        }

    if (!c.provenance || !c.provenance->host) return report;
    const Drawing& host = *c.provenance->host;
    VertexId u = c.provenance->u;
    VertexId root = c.provenance->root;

    // (b) crossing-equivalence with the host.
    std::vector<EdgeId> host_edge(m);
    for (int k = 0; k < m; ++k)
        host_edge[k] = host.edge_between(c.column_vertex[c.edges[k].i], c.column_vertex[c.edges[k].j]);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if ((counts[a][b] > 0) != edges_cross(host, host_edge[a], host_edge[b]))
                report.add({ViolationKind::Equivalence, a, b, -1, std::nullopt});

    // (d) clockwise at u, counter-clockwise at the root.
    if (delta >= 3) {
        if (!is_cyclic_run(ccw_columns(host, u, c.column_vertex), false))
            report.add({ViolationKind::RotationMismatch, -1, -1, u, std::nullopt});
        if (!is_cyclic_run(ccw_columns(host, root, c.column_vertex), true))
            report.add({ViolationKind::RotationMismatch, -1, -1, root, std::nullopt});
    }
    return report;
}

std::vector<int> kept_counts(const CylindricalDrawing& c)
{
    std::vector<int> kept(c.delta, 0);
    for (int l = 0; l < c.delta; ++l)
        for (const CylEdge& e : c.edges)
            if (!e.incident(l) && e.height_at(l) == 0) ++kept[l];
    return kept;
}

CutChoice best_cut(const CylindricalDrawing& c)
{
    if (c.delta < 3) throw InputError("best_cut needs at least three columns");
    std::vector<int> kept = kept_counts(c);
    auto it = std::max_element(kept.begin(), kept.end());
    return {static_cast<int>(it - kept.begin()), *it};
}

std::pair<VertexId, VertexId> XMonotoneDrawing::origin_pair(EdgeId e) const
{
    const PolylineEdge& pe = drawing.edge(e);
    return {vertex_origin[pe.u], vertex_origin[pe.v]};
}

bool is_x_monotone(const Drawing& d)
{
    std::vector<Rational> xs;
    for (const Point& p : d.vertices()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
    for (const PolylineEdge& e : d.edges()) {
        bool up = e.chain.front().x < e.chain.back().x;
        for (std::size_t k = 0; k + 1 < e.chain.size(); ++k)
            if ((e.chain[k].x < e.chain[k + 1].x) != up || e.chain[k].x == e.chain[k + 1].x) return false;
    }
    return true;
}

XMonotoneDrawing XMonotoneDrawing::from_drawing(Drawing d)
{
    if (!is_x_monotone(d)) throw InputError("drawing is not x-monotone");
    XMonotoneDrawing x;
    x.vertex_origin.resize(d.vertex_count());
    std::iota(x.vertex_origin.begin(), x.vertex_origin.end(), 0);
    x.vertex_column.assign(d.vertex_count(), -1);
    x.cyl_edge.assign(d.edge_count(), -1);
    x.drawing = std::move(d);
    return x;
}

XMonotoneDrawing cut_and_unroll(const CylindricalDrawing& c, int cut)
{
    if (cut < 0 || cut >= c.delta) throw InputError("cut column out of range");
    int delta = c.delta;
    auto x_of = [&](int column) { return mod(column - cut - 1, delta); };

    std::vector<int> kept;
    for (int k = 0; k < static_cast<int>(c.edges.size()); ++k)
        if (!c.edges[k].incident(cut) && c.edges[k].height_at(cut) == 0) kept.push_back(k);

    XMonotoneDrawing out;
    out.cut_column = cut;
    for (int x = 0; x + 1 < delta; ++x) {
        int column = mod(cut + 1 + x, delta);
        out.vertex_column.push_back(column);
        out.vertex_origin.push_back(c.column_vertex[column]);
    }
    out.cyl_edge = kept;

    static constexpr unsigned kSalts = 16;
    for (unsigned salt = 0; salt < kSalts; ++salt) {
        std::vector<Point> vertices;
        for (int x = 0; x + 1 < delta; ++x) vertices.push_back(ipoint(x, 0));
        std::vector<PolylineEdge> edges;
        for (int k : kept) {
            const CylEdge& e = c.edges[k];
            std::vector<int> cols = visit_order(e);
            PolylineEdge pe{x_of(cols.front()), x_of(cols.back()), {}};
            for (std::size_t t = 0; t < cols.size(); ++t) {
                int rank = (t == 0 || t + 1 == cols.size()) ? 0 : e.heights[t - 1];
                pe.chain.push_back(ipoint(x_of(cols[t]), realize(cols[t], rank, salt)));
            }
            edges.push_back(std::move(pe));
        }
        int mv = delta - 1;
        bool complete = static_cast<int>(edges.size()) == mv * (mv - 1) / 2;
        Drawing d(std::move(vertices), std::move(edges), complete);

        ValidationReport r = validate_simple(d);
        bool only_triples = std::all_of(r.violations.begin(), r.violations.end(),
                                        [](const Violation& v) { return v.kind == ViolationKind::TripleCrossing; });
        if (!r.ok && only_triples) continue;
        if (!r.ok)
            throw EquivalenceViolation("unrolled drawing is not simple: " + to_string(r.violations.front().kind));

        CrossingMatrix cm = crossing_matrix(d);
        for (int a = 0; a < d.edge_count(); ++a)
            for (int b = a + 1; b < d.edge_count(); ++b)
                if ((cm.count(a, b) > 0) != (cylinder_crossing_count(c, kept[a], kept[b]) > 0))
                    throw EquivalenceViolation("unrolled drawing crosses differently from the cylinder");
        out.drawing = std::move(d);
        return out;
    }
    throw EquivalenceViolation("every perturbation of the unrolled drawing has a triple crossing");
}

}  // namespace djm
