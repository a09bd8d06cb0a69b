#include "djm/grower.hpp"

#include <algorithm>
#include <queue>

#include "djm/errors.hpp"

namespace djm {

PlaneSubgraph::PlaneSubgraph(const Drawing& base, VertexId root, std::set<EdgeId> edges, std::vector<GrowStep> trace)
    : base_(&base), root_(root), edges_(std::move(edges)), trace_(std::move(trace)), neighbours_(base.vertex_count())
{
    if (root < 0 || root >= base.vertex_count()) throw InputError("root vertex out of range");
    for (EdgeId e : edges_) {
        if (e < 0 || e >= base.edge_count()) throw InputError("subgraph edge id out of range");
        neighbours_[base.edge(e).u].push_back(base.edge(e).v);
        neighbours_[base.edge(e).v].push_back(base.edge(e).u);
    }
    for (auto& list : neighbours_) std::sort(list.begin(), list.end());
}

PlaneSubgraph grow_plane_subgraph(const Drawing& d, VertexId root)
{
    const int n = d.vertex_count();
    if (!d.complete()) throw InputError("the grower needs a complete drawing");
    if (n < 3) throw InputError("the grower needs at least three vertices");
    if (root < 0 || root >= n) throw InputError("root vertex out of range");

    std::set<EdgeId> edges;
    std::vector<std::vector<EdgeId>> incident(n);
    auto insert = [&](EdgeId e) {
        if (!edges.insert(e).second) return false;
        incident[d.edge(e).u].push_back(e);
        incident[d.edge(e).v].push_back(e);
        return true;
    };
    for (VertexId w = 0; w < n; ++w)
        if (w != root) insert(d.edge_between(root, w));

    std::vector<GrowStep> trace;
    for (;;) {
        VertexId u = -1;
        for (VertexId w = 0; w < n; ++w)
            if (incident[w].size() == 1) {
                u = w;
                break;
            }
        if (u < 0) break;
        const EdgeId e = incident[u].front();

        // Edges at u that avoid everything but e stay inside u's face.
        auto avoids_rest = [&](EdgeId cand) {
            for (EdgeId f : edges) {
                if (f == e || d.adjacent(cand, f)) continue;
                if (edges_cross(d, cand, f)) return false;
            }
            return true;
        };
        std::vector<EdgeId> candidates;
        if (avoids_rest(e)) candidates.push_back(e);
        for (VertexId w = 0; w < n && candidates.size() < 2; ++w) {
            if (w == u) continue;
            EdgeId cand = d.edge_between(u, w);
            if (cand != e && avoids_rest(cand)) candidates.push_back(cand);
        }
        if (candidates.size() < 2)
            throw GuaranteeViolation("vertex " + std::to_string(u) + " has " + std::to_string(candidates.size()) +
                                     " face-contained candidate edge(s); the input drawing is not simple");

        GrowStep step{u, {}};
        for (EdgeId c : candidates)
            if (insert(c)) step.added.push_back(c);
        trace.push_back(std::move(step));
    }
    return PlaneSubgraph(d, root, std::move(edges), std::move(trace));
}

DegreeMax max_degree_non_root(const PlaneSubgraph& g)
{
    DegreeMax best{-1, 0};
    for (VertexId w = 0; w < g.base().vertex_count(); ++w) {
        if (w == g.root()) continue;
        if (g.degree(w) > best.delta) best = {w, g.degree(w)};
    }
    return best;
}

std::vector<std::string> check_plane_subgraph(const PlaneSubgraph& g)
{
    std::vector<std::string> problems;
    const Drawing& d = g.base();
    const int n = d.vertex_count();

    for (VertexId w = 0; w < n; ++w) {
        if (w == g.root()) continue;
        auto e = d.find_edge(g.root(), w);
        if (!e || !g.contains(*e)) problems.push_back("root star edge to " + std::to_string(w) + " missing");
    }

    std::vector<EdgeId> list(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (!polyline_contacts(d.edge(list[i]).chain, d.edge(list[j]).chain).crossings.empty())
                problems.push_back("edges " + std::to_string(list[i]) + " and " + std::to_string(list[j]) + " cross");

    std::vector<bool> seen(n, false);
    std::queue<VertexId> bfs;
    bfs.push(g.root());
    seen[g.root()] = true;
    int reached = 1;
    while (!bfs.empty()) {
        VertexId w = bfs.front();
        bfs.pop();
        for (VertexId x : g.neighbours(w))
            if (!seen[x]) {
                seen[x] = true;
                ++reached;
                bfs.push(x);
            }
    }
    if (reached != n) problems.push_back("subgraph is not connected");

    for (VertexId w = 0; w < n; ++w)
        if (g.degree(w) < 2) problems.push_back("vertex " + std::to_string(w) + " has degree " + std::to_string(g.degree(w)));

    const int bound = n - 1 + n / 2;
    if (static_cast<int>(g.edges().size()) < bound)
        problems.push_back("only " + std::to_string(g.edges().size()) + " edges, expected at least " + std::to_string(bound));
    return problems;
}

}  // namespace djm
