#include "djm/matching.hpp"

#include <algorithm>
#include <numeric>

#include "djm/errors.hpp"

namespace djm {

namespace {

struct Span {
    Rational left;
    Rational right;
};

Span span_of(const Drawing& x, EdgeId e)
{
    const auto& c = x.edge(e).chain;
    return c.front().x < c.back().x ? Span{c.front().x, c.back().x} : Span{c.back().x, c.front().x};
}

// y of an x-monotone chain at abscissa t inside its span.
Rational y_at(const std::vector<Point>& chain, const Rational& t)
{
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const Point& a = chain[k];
        const Point& b = chain[k + 1];
        const auto& [lo, hi] = std::minmax(a.x, b.x);
        if (t < lo || hi < t) continue;
        return a.y + (b.y - a.y) * ((t - a.x) / (b.x - a.x));
    }
    throw InputError("abscissa outside the edge span");
}

bool precedes(OrderKind kind, bool e_below_f, const Span& e, const Span& f)
{
    switch (kind) {
    case OrderKind::LeftStair:
        return e.right < f.left || (e_below_f && e.left < f.left && e.right < f.right);
    case OrderKind::RightStair:
        return f.right < e.left || (e_below_f && f.left < e.left && f.right < e.right);
    case OrderKind::NestUp:
        return e_below_f && f.left <= e.left && e.right <= f.right;
    case OrderKind::NestDown:
        return e_below_f && e.left <= f.left && f.right <= e.right;
    }
    return false;
}

// Longest path in the DAG given by `less[a][b]` (a before b), by DP over a
// topological order.
std::vector<int> longest_chain(const std::vector<std::vector<char>>& less)
{
    int m = static_cast<int>(less.size());
    std::vector<int> indeg(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) indeg[b] += less[a][b];
    std::vector<int> order;
    for (int a = 0; a < m; ++a)
        if (indeg[a] == 0) order.push_back(a);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int b = 0; b < m; ++b)
            if (less[order[k]][b] && --indeg[b] == 0) order.push_back(b);
    if (static_cast<int>(order.size()) != m) throw CertificationFailure("order relation has a cycle");

    std::vector<int> len(m, 1), prev(m, -1);
    for (int a : order)
        for (int b = 0; b < m; ++b)
            if (less[a][b] && len[a] + 1 > len[b]) {
                len[b] = len[a] + 1;
                prev[b] = a;
            }
    if (m == 0) return {};
    int end = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
    std::vector<int> chain;
    for (int v = end; v != -1; v = prev[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

std::vector<EdgeId> greedy_matching_avoiding(const PlaneSubgraph& g)
{
    const Drawing& d = g.base();
    std::vector<EdgeId> candidates;
    for (EdgeId e : g.edges())
        if (d.edge(e).u != g.root() && d.edge(e).v != g.root()) candidates.push_back(e);
    auto key = [&](EdgeId e) { return std::minmax(d.edge(e).u, d.edge(e).v); };
    std::sort(candidates.begin(), candidates.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });

    std::vector<char> used(d.vertex_count(), 0);
    std::vector<EdgeId> out;
    for (EdgeId e : candidates) {
        auto [a, b] = key(e);
        if (used[a] || used[b]) continue;
        used[a] = used[b] = 1;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(OrderKind kind)
{
    switch (kind) {
    case OrderKind::LeftStair: return "LEFT_STAIR";
    case OrderKind::RightStair: return "RIGHT_STAIR";
    case OrderKind::NestUp: return "NEST_UP";
    case OrderKind::NestDown: return "NEST_DOWN";
    }
    return "unknown";
}

bool below(const Drawing& x, EdgeId e, EdgeId f)
{
    if (!edges_disjoint(x, e, f)) return false;
    Span se = span_of(x, e);
    Span sf = span_of(x, f);
    if (se.right < sf.left || sf.right < se.left) return false;
    const Rational& t = std::max(se.left, sf.left);
    return y_at(x.edge(e).chain, t) < y_at(x.edge(f).chain, t);
}

Relation order_relation(const Drawing& x, OrderKind kind, EdgeId e, EdgeId f)
{
    if (e == f) return Relation::Incomparable;
    Span se = span_of(x, e);
    Span sf = span_of(x, f);
    bool ef = below(x, e, f);
    bool fe = !ef && below(x, f, e);
    if (precedes(kind, ef, se, sf)) return Relation::Below;
    if (precedes(kind, fe, sf, se)) return Relation::Above;
    return Relation::Incomparable;
}

ChainResult chain_extract(const XMonotoneDrawing& xm)
{
    const Drawing& x = xm.drawing;
    int m = x.edge_count();
    std::vector<Span> spans;
    for (EdgeId e = 0; e < m; ++e) spans.push_back(span_of(x, e));
    std::vector<std::vector<char>> is_below(m, std::vector<char>(m, 0));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f) {
            if (below(x, e, f)) is_below[e][f] = 1;
            else if (below(x, f, e)) is_below[f][e] = 1;
        }

    ChainResult best;
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < kOrderKinds.size(); ++k) {
        OrderKind kind = kOrderKinds[k];
        std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
        for (EdgeId e = 0; e < m; ++e)
            for (EdgeId f = 0; f < m; ++f)
                if (e != f) less[e][f] = precedes(kind, is_below[e][f], spans[e], spans[f]);
        std::vector<int> chain = longest_chain(less);
        best.lengths[k] = static_cast<int>(chain.size());
        if (chain.size() > best_len) {
            best_len = chain.size();
            best.edges.assign(chain.begin(), chain.end());
            best.best = kind;
        }
    }
    for (std::size_t a = 0; a < best.edges.size(); ++a)
        for (std::size_t b = a + 1; b < best.edges.size(); ++b)
            if (!edges_disjoint(x, best.edges[a], best.edges[b]))
                throw CertificationFailure("chain contains two edges that are not disjoint");
    return best;
}

std::vector<std::pair<EdgeId, EdgeId>> certificate_failures(const Drawing& d, const std::vector<EdgeId>& edges)
{
    std::vector<std::pair<EdgeId, EdgeId>> bad;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (!edges_disjoint(d, edges[a], edges[b]))
                bad.emplace_back(std::min(edges[a], edges[b]), std::max(edges[a], edges[b]));
    return bad;
}

namespace {

MatchingResult solve_root(const Drawing& d, VertexId root)
{
    PlaneSubgraph g = grow_plane_subgraph(d, root);
    MatchingResult r;
    r.stats.root = root;
    std::vector<EdgeId> stage_a = greedy_matching_avoiding(g);
    r.stats.stage_a_size = static_cast<int>(stage_a.size());

    DegreeMax dm = max_degree_non_root(g);
    r.stats.delta = dm.delta;
    r.stats.u = dm.vertex;
    r.stats.columns = dm.delta - 1;

    std::vector<EdgeId> stage_b;
    if (r.stats.columns >= 3) {
        CylindricalDrawing c = build_cylindrical(d, g, dm.vertex);
        ValidationReport vr = validate_cylindrical(c);
        if (!vr.ok) throw EquivalenceViolation("cylindrical drawing failed validation: " + to_string(vr.violations.front().kind));
        CutChoice cut = best_cut(c);
        r.stats.cut_column = cut.cut_column;
        r.stats.kept_count = cut.kept_count;
        XMonotoneDrawing xm = cut_and_unroll(c, cut.cut_column);
        ChainResult chain = chain_extract(xm);
        r.stats.chain_lengths = chain.lengths;
        for (EdgeId e : chain.edges) {
            auto [a, b] = xm.origin_pair(e);
            stage_b.push_back(d.edge_between(a, b));
        }
        std::sort(stage_b.begin(), stage_b.end());
        r.stats.stage_b_size = static_cast<int>(stage_b.size());
    }

    r.edges = stage_b.size() > stage_a.size() ? stage_b : stage_a;
    r.size = static_cast<int>(r.edges.size());
    if (!certificate_failures(d, r.edges).empty())
        throw CertificationFailure("matching for root " + std::to_string(root) + " is not pairwise disjoint");
    return r;
}

}  // namespace

MatchingResult solve(const Drawing& d, RootPolicy policy)
{
    if (!d.complete() || d.vertex_count() < 3) throw InputError("solve needs a complete drawing with n >= 3");
    if (!policy.all) {
        if (policy.root < 0 || policy.root >= d.vertex_count()) throw InputError("root out of range");
        return solve_root(d, policy.root);
    }
    MatchingResult best;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        MatchingResult r = solve_root(d, v);
        if (v == 0 || r.size > best.size) best = std::move(r);
    }
    return best;
}

}  // namespace djm
