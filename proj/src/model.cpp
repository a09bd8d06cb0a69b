#include "djm/model.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "djm/errors.hpp"

namespace djm {

namespace {

std::string pair_text(VertexId a, VertexId b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

std::uint64_t point_hash(const Point& p)
{
    std::uint64_t h = p.x.hash();
    h ^= p.y.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Drawing::Drawing(std::vector<Point> vertices, std::vector<PolylineEdge> edges, bool complete)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), complete_(complete)
{
    const int n = vertex_count();
    std::set<Point> positions(vertices_.begin(), vertices_.end());
    if (static_cast<int>(positions.size()) != n) throw InputError("vertex positions are not pairwise distinct");

    pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const PolylineEdge& e = edges_[id];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError("edge " + std::to_string(id) + " has an invalid endpoint");
        if (e.u == e.v) throw InputError("edge " + std::to_string(id) + " is a loop");
        if (e.chain.size() < 2) throw InputError("edge " + pair_text(e.u, e.v) + " has fewer than two chain points");
        if (e.chain.front() != vertices_[e.u] || e.chain.back() != vertices_[e.v])
            throw InputError("chain of edge " + pair_text(e.u, e.v) + " does not end at its vertices");
        for (std::size_t k = 0; k + 1 < e.chain.size(); ++k)
            if (e.chain[k] == e.chain[k + 1]) throw InputError("chain of edge " + pair_text(e.u, e.v) + " repeats a point");
        for (std::size_t k = 1; k + 1 < e.chain.size(); ++k)
            if (positions.count(e.chain[k])) throw InputError("chain of edge " + pair_text(e.u, e.v) + " has a breakpoint on a vertex");
        auto& slot = pair_index_[static_cast<std::size_t>(e.u) * n + e.v];
        if (slot != -1) throw InputError("edge " + pair_text(e.u, e.v) + " appears twice");
        slot = id;
        pair_index_[static_cast<std::size_t>(e.v) * n + e.u] = id;
    }
    if (complete_ && edge_count() != n * (n - 1) / 2) throw InputError("drawing marked complete but edges are missing");
}

Drawing Drawing::straight_line(std::vector<Point> vertices, const std::vector<std::pair<VertexId, VertexId>>& pairs)
{
    std::vector<PolylineEdge> edges;
    edges.reserve(pairs.size());
    const int n = static_cast<int>(vertices.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("edge " + pair_text(a, b) + " has an invalid endpoint");
        edges.push_back({a, b, {vertices[a], vertices[b]}});
    }
    const bool complete = static_cast<int>(pairs.size()) == n * (n - 1) / 2;
    return Drawing(std::move(vertices), std::move(edges), complete);
}

Drawing Drawing::straight_line_complete(std::vector<Point> vertices)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    const int n = static_cast<int>(vertices.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return straight_line(std::move(vertices), pairs);
}

std::optional<EdgeId> Drawing::find_edge(VertexId a, VertexId b) const
{
    const int n = vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n) return std::nullopt;
    EdgeId id = pair_index_[static_cast<std::size_t>(a) * n + b];
    if (id < 0) return std::nullopt;
    return id;
}

EdgeId Drawing::edge_between(VertexId a, VertexId b) const
{
    auto id = find_edge(a, b);
    if (!id) throw InputError("drawing has no edge " + pair_text(a, b));
    return *id;
}

bool Drawing::adjacent(EdgeId e, EdgeId f) const
{
    const PolylineEdge& a = edges_[e];
    const PolylineEdge& b = edges_[f];
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

std::vector<Point> Drawing::chain_from(EdgeId e, VertexId from) const
{
    const PolylineEdge& edge = edges_[e];
    std::vector<Point> chain = edge.chain;
    if (from == edge.v) std::reverse(chain.begin(), chain.end());
    return chain;
}

const Point& Drawing::first_step(EdgeId e, VertexId at) const
{
    const PolylineEdge& edge = edges_[e];
    return at == edge.u ? edge.chain[1] : edge.chain[edge.chain.size() - 2];
}

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::MultiCrossing: return "multi-crossing";
    case ViolationKind::AdjacentCrossing: return "adjacent-crossing";
    case ViolationKind::Touching: return "touching";
    case ViolationKind::EdgeThroughVertex: return "edge-through-vertex";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::TripleCrossing: return "triple-crossing";
    case ViolationKind::DuplicateDirection: return "duplicate-direction";
    case ViolationKind::SelfIntersection: return "self-intersection";
    case ViolationKind::Malformed: return "malformed";
    case ViolationKind::RankClash: return "rank-clash";
    case ViolationKind::Equivalence: return "equivalence";
    case ViolationKind::RotationMismatch: return "rotation-mismatch";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_simple(const Drawing& d)
{
    ValidationReport report;
    const int n = d.vertex_count();
    const int m = d.edge_count();

    // Each chain must be a Jordan arc on its own.
    for (EdgeId id = 0; id < m; ++id) {
        const auto& c = d.edge(id).chain;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            for (std::size_t j = i + 1; j + 1 < c.size(); ++j) {
                SegmentIntersection r = segment_intersection({c[i], c[i + 1]}, {c[j], c[j + 1]});
                bool bad = j == i + 1 ? r.kind == IntersectionKind::Overlap : r.kind != IntersectionKind::None;
                if (bad) report.add({ViolationKind::SelfIntersection, id, -1, -1, r.point});
            }
        }
    }

    for (EdgeId id = 0; id < m; ++id) {
        const PolylineEdge& e = d.edge(id);
        for (VertexId w = 0; w < n; ++w) {
            if (w == e.u || w == e.v) continue;
            for (std::size_t k = 0; k + 1 < e.chain.size(); ++k) {
                if (on_segment(e.chain[k], e.chain[k + 1], d.vertex(w))) {
                    report.add({ViolationKind::EdgeThroughVertex, id, -1, w, d.vertex(w)});
                    break;
                }
            }
        }
    }

    {
        std::vector<std::vector<EdgeId>> incident(n);
        for (EdgeId id = 0; id < m; ++id) {
            incident[d.edge(id).u].push_back(id);
            incident[d.edge(id).v].push_back(id);
        }
        for (VertexId w = 0; w < n; ++w) {
            auto dir = [&](EdgeId id) { return d.first_step(id, w) - d.vertex(w); };
            auto& list = incident[w];
            std::sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) { return angle_less(dir(a), dir(b)); });
            for (std::size_t k = 0; k + 1 < list.size(); ++k) {
                Point a = dir(list[k]);
                Point b = dir(list[k + 1]);
                if (cross(a, b).sign() == 0 && dot(a, b).sign() > 0)
                    report.add({ViolationKind::DuplicateDirection, list[k], list[k + 1], w, d.vertex(w)});
            }
        }
    }

    // Pairwise contacts. Crossing points are remembered by hash only; equal
    // hashes are re-examined exactly afterwards to find concurrent triples.
    struct CrossingKey {
        std::uint64_t hash;
        EdgeId e;
        EdgeId f;
    };
    std::vector<CrossingKey> keys;
    for (EdgeId i = 0; i < m; ++i) {
        const auto& ci = d.edge(i).chain;
        for (EdgeId j = i + 1; j < m; ++j) {
            PolylineContacts c = polyline_contacts(ci, d.edge(j).chain);
            if (c.empty()) continue;
            if (c.overlap) {
                report.add({ViolationKind::Overlap, i, j, -1, c.overlap});
                continue;
            }
            const bool adj = d.adjacent(i, j);
            if (adj && !c.crossings.empty()) report.add({ViolationKind::AdjacentCrossing, i, j, -1, c.crossings.front()});
            if (!adj && c.crossings.size() > 1) report.add({ViolationKind::MultiCrossing, i, j, -1, c.crossings[1]});
            if (!c.touchings.empty()) report.add({ViolationKind::Touching, i, j, -1, c.touchings.front()});
            for (const Point& p : c.crossings) keys.push_back({point_hash(p), i, j});
        }
    }

    std::sort(keys.begin(), keys.end(), [](const CrossingKey& a, const CrossingKey& b) { return a.hash < b.hash; });
    for (std::size_t lo = 0; lo < keys.size();) {
        std::size_t hi = lo + 1;
        while (hi < keys.size() && keys[hi].hash == keys[lo].hash) ++hi;
        if (hi - lo > 1) {
            std::vector<std::pair<Point, std::pair<EdgeId, EdgeId>>> exact;
            for (std::size_t k = lo; k < hi; ++k)
                for (Point& p : polyline_contacts(d.edge(keys[k].e).chain, d.edge(keys[k].f).chain).crossings)
                    if (point_hash(p) == keys[lo].hash) exact.push_back({std::move(p), {keys[k].e, keys[k].f}});
            std::sort(exact.begin(), exact.end());
            for (std::size_t k = 0; k + 1 < exact.size(); ++k) {
                if (exact[k].first == exact[k + 1].first && exact[k].second != exact[k + 1].second) {
                    auto [a, b] = exact[k].second;
                    auto [c, e] = exact[k + 1].second;
                    EdgeId third = (c != a && c != b) ? c : e;
                    report.add({ViolationKind::TripleCrossing, a, third, -1, exact[k].first});
                }
            }
        }
        lo = hi;
    }
    return report;
}

int CrossingMatrix::count(EdgeId e, EdgeId f) const
{
    auto it = crossings_.find(std::minmax(e, f));
    return it == crossings_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<Point>& CrossingMatrix::points(EdgeId e, EdgeId f) const
{
    static const std::vector<Point> none;
    auto it = crossings_.find(std::minmax(e, f));
    return it == crossings_.end() ? none : it->second;
}

void CrossingMatrix::set(EdgeId e, EdgeId f, std::vector<Point> points)
{
    if (points.empty())
        crossings_.erase(std::minmax(e, f));
    else
        crossings_[std::minmax(e, f)] = std::move(points);
}

std::vector<std::pair<EdgeId, EdgeId>> CrossingMatrix::crossing_pairs() const
{
    std::vector<std::pair<EdgeId, EdgeId>> out;
    out.reserve(crossings_.size());
    for (const auto& [key, pts] : crossings_) out.push_back(key);
    return out;
}

CrossingMatrix crossing_matrix(const Drawing& d)
{
    CrossingMatrix cm(d.edge_count());
    for (EdgeId i = 0; i < d.edge_count(); ++i)
        for (EdgeId j = i + 1; j < d.edge_count(); ++j) {
            auto pts = polyline_crossings(std::span<const Point>(d.edge(i).chain), std::span<const Point>(d.edge(j).chain));
            if (!pts.empty()) cm.set(i, j, std::move(pts));
        }
    return cm;
}

bool disjoint(const Drawing& d, const CrossingMatrix& cm, EdgeId e, EdgeId f)
{
    return e != f && !d.adjacent(e, f) && cm.count(e, f) == 0;
}

bool edges_disjoint(const Drawing& d, EdgeId e, EdgeId f)
{
    if (e == f || d.adjacent(e, f)) return false;
    return polyline_contacts(d.edge(e).chain, d.edge(f).chain).empty();
}

bool edges_cross(const Drawing& d, EdgeId e, EdgeId f)
{
    return !polyline_contacts(d.edge(e).chain, d.edge(f).chain).crossings.empty();
}

}  // namespace djm
