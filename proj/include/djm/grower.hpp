#pragma once

// Growing a connected plane subgraph that contains the whole star of a root
// vertex and has minimum degree two.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "djm/model.hpp"

namespace djm {

struct GrowStep {
    VertexId vertex;             // the degree-1 vertex that was processed
    std::vector<EdgeId> added;   // edges that were not yet in the subgraph
};

class PlaneSubgraph {
public:
    PlaneSubgraph(const Drawing& base, VertexId root, std::set<EdgeId> edges, std::vector<GrowStep> trace = {});

    const Drawing& base() const { return *base_; }
    VertexId root() const { return root_; }
    const std::set<EdgeId>& edges() const { return edges_; }
    const std::vector<GrowStep>& trace() const { return trace_; }

    bool contains(EdgeId e) const { return edges_.count(e) != 0; }
    int degree(VertexId w) const { return static_cast<int>(neighbours_[w].size()); }
    // Neighbours of w in the subgraph, ascending.
    const std::vector<VertexId>& neighbours(VertexId w) const { return neighbours_[w]; }

private:
    const Drawing* base_;
    VertexId root_;
    std::set<EdgeId> edges_;
    std::vector<GrowStep> trace_;
    std::vector<std::vector<VertexId>> neighbours_;
};

// Requires a complete simple drawing with at least three vertices.
// Throws GuaranteeViolation when a degree-1 vertex has fewer than two
// candidate edges that avoid the rest of the subgraph.
PlaneSubgraph grow_plane_subgraph(const Drawing& d, VertexId root);

struct DegreeMax {
    VertexId vertex;
    int delta;
};

// Maximum subgraph degree over non-root vertices; ties go to the smaller index.
DegreeMax max_degree_non_root(const PlaneSubgraph& g);

// Every unmet invariant of a grown subgraph, as readable messages.
std::vector<std::string> check_plane_subgraph(const PlaneSubgraph& g);

}  // namespace djm
