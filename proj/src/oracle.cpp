#include "djm/oracle.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace djm {

namespace {

using Bits = boost::dynamic_bitset<>;

class Search {
public:
    Search(const std::vector<std::vector<int>>& conflicts, std::int64_t limit) : limit_(limit)
    {
        std::size_t m = conflicts.size();
        adj_.assign(m, Bits(m));
        for (std::size_t a = 0; a < m; ++a)
            for (int b : conflicts[a]) {
                adj_[a].set(b);
                adj_[b].set(a);
            }
    }

    OracleResult run()
    {
        Bits all(adj_.size());
        all.set();
        std::vector<int> current;
        descend(all, current);
        OracleResult r;
        r.optimum = static_cast<int>(best_.size());
        r.witness = best_;
        std::sort(r.witness.begin(), r.witness.end());
        r.explored = explored_;
        r.exact = !stopped_;
        return r;
    }

private:
    // Number of cliques in a greedy cover of p; bounds any independent set in p.
    int clique_cover(Bits p) const
    {
        int count = 0;
        for (auto v = p.find_first(); v != Bits::npos; v = p.find_first()) {
            p.reset(v);
            Bits candidates = p & adj_[v];
            for (auto w = candidates.find_first(); w != Bits::npos; w = candidates.find_first()) {
                p.reset(w);
                candidates &= adj_[w];
            }
            ++count;
        }
        return count;
    }

    void record(const std::vector<int>& current)
    {
        if (current.size() > best_.size()) best_ = current;
    }

    void descend(const Bits& p, std::vector<int>& current)
    {
        if (stopped_) return;
        if (++explored_ > limit_) {
            stopped_ = true;
            return;
        }
        if (p.none()) {
            record(current);
            return;
        }
        if (current.size() + clique_cover(p) <= best_.size()) return;

        std::size_t pick = Bits::npos;
        std::size_t pick_degree = 0;
        for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
            std::size_t deg = (adj_[v] & p).count();
            if (pick == Bits::npos || deg > pick_degree) {
                pick = v;
                pick_degree = deg;
            }
        }
        if (pick_degree == 0) {
            std::size_t before = current.size();
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) current.push_back(static_cast<int>(v));
            record(current);
            current.resize(before);
            return;
        }

        Bits with = p - adj_[pick];
        with.reset(pick);
        current.push_back(static_cast<int>(pick));
        descend(with, current);
        current.pop_back();

        Bits without = p;
        without.reset(pick);
        descend(without, current);
    }

    std::vector<Bits> adj_;
    std::int64_t limit_;
    std::int64_t explored_ = 0;
    bool stopped_ = false;
    std::vector<int> best_;
};

}  // namespace

OracleResult max_independent_set(const std::vector<std::vector<int>>& conflicts, std::int64_t node_limit)
{
    return Search(conflicts, node_limit).run();
}

OracleResult max_disjoint_bruteforce(const Drawing& d, std::int64_t node_limit)
{
    int m = d.edge_count();
    std::vector<std::vector<int>> conflicts(m);
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            if (!edges_disjoint(d, a, b)) conflicts[a].push_back(b);
    return max_independent_set(conflicts, node_limit);
}

OracleResult max_disjoint_bruteforce(const CylindricalDrawing& c, std::int64_t node_limit)
{
    int m = static_cast<int>(c.edges.size());
    std::vector<std::vector<int>> conflicts(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const CylEdge& ea = c.edges[a];
            const CylEdge& eb = c.edges[b];
            bool shared = ea.incident(eb.i) || ea.incident(eb.j);
            if (shared || cylinder_crossing_count(c, a, b) > 0) conflicts[a].push_back(b);
        }
    return max_independent_set(conflicts, node_limit);
}

}  // namespace djm
