#pragma once

// Angularly monotone cylindrical drawings obtained from a plane subgraph,
// and their cut to x-monotone planar drawings.
//
// Columns 0..delta-1 are the neighbours v_l of a vertex u != root in the
// grown subgraph, listed clockwise around u. Each column stands for the path
// u -> v_l -> root. An edge v_i v_j (i < j) passes over the columns strictly
// between i and j (INNER) or over the complementary cyclic interval (OUTER);
// at every passed column it carries a nonzero rank: negative when it crosses
// the u v_l half of the path, positive for the v_l root half, with |rank|
// growing away from v_l.

#include <optional>
#include <string>
#include <vector>

#include "djm/grower.hpp"
#include "djm/model.hpp"

namespace djm {

enum class SideKind { Inner, Outer };

std::string to_string(SideKind kind);

struct Side {
    SideKind kind = SideKind::Inner;
    std::vector<int> columns;
};

// Side of kind `kind` for the pair i < j on `delta` columns.
Side make_side(SideKind kind, int i, int j, int delta);

struct CylEdge {
    int i = 0;
    int j = 0;  // i < j
    Side side;
    std::vector<int> heights;  // parallel to side.columns

    // Rank at a passed column, 0 when the edge does not pass it.
    int height_at(int column) const;
    bool incident(int column) const { return column == i || column == j; }
};

struct CylinderProvenance {
    const Drawing* host = nullptr;  // must outlive the cylinder
    VertexId u = -1;
    VertexId root = -1;
};

struct CylindricalDrawing {
    int delta = 0;
    std::vector<VertexId> column_vertex;
    std::vector<CylEdge> edges;
    std::optional<CylinderProvenance> provenance;

    std::optional<int> find_edge(int i, int j) const;
};

// Column order and path edges for one choice of u.
struct CylinderFrame {
    const Drawing* host = nullptr;
    VertexId u = -1;
    VertexId root = -1;
    std::vector<VertexId> columns;  // clockwise around u, starting after the edge u-root
    std::vector<EdgeId> lower;      // edge u v_l
    std::vector<EdgeId> upper;      // edge v_l root
};

// Requires u != root and u adjacent to root in the subgraph.
CylinderFrame cylinder_frame(const Drawing& host, const PlaneSubgraph& g, VertexId u);

struct SideAnalysis {
    Side side;
    std::vector<int> path_crossings;  // per column; entries at i and j stay 0
};

// Crossing counts of v_i v_j with every path, and the side they single out.
// Throws ClaimViolation when the counts are not 1 on one cyclic interval and
// 0 on the other.
SideAnalysis analyze_side(const CylinderFrame& frame, int i, int j);

Side edge_side(const Drawing& host, const PlaneSubgraph& g, VertexId u, int i, int j);

// Uses u = max_degree_non_root(g).vertex.
CylindricalDrawing build_cylindrical(const Drawing& host, const PlaneSubgraph& g);
CylindricalDrawing build_cylindrical(const Drawing& host, const PlaneSubgraph& g, VertexId u);

// Realized geometry of a cylinder edge in the universal cover: x runs from
// i to j (INNER) or from j to i + delta (OUTER), vertices sit at height 0
// and ranks become order-preserving integer heights. `salt` reshuffles the
// small per-column perturbation that keeps three strip segments from
// meeting in one point.
std::vector<Point> cover_chain(const CylindricalDrawing& c, int edge, unsigned salt = 0);

// Number of crossings of two cylinder edges, strip by strip.
int cylinder_crossing_count(const CylindricalDrawing& c, int a, int b);

// Pairs (a < b) of cylinder edges that cross.
std::vector<std::pair<int, int>> cylinder_crossing_pairs(const CylindricalDrawing& c);

ValidationReport validate_cylindrical(const CylindricalDrawing& c);

struct CutChoice {
    int cut_column = 0;
    int kept_count = 0;
};

// kept[l]: edges neither incident to column l nor passing over it.
std::vector<int> kept_counts(const CylindricalDrawing& c);
// Column maximizing the kept count, smallest on ties. Requires delta >= 3.
CutChoice best_cut(const CylindricalDrawing& c);

struct XMonotoneDrawing {
    Drawing drawing;
    std::vector<VertexId> vertex_origin;  // drawing vertex -> host vertex id
    std::vector<int> vertex_column;       // drawing vertex -> cylinder column (-1 if none)
    std::vector<int> cyl_edge;            // drawing edge -> cylinder edge (-1 if none)
    int cut_column = -1;

    // Host vertex pair of an edge of the x-monotone drawing.
    std::pair<VertexId, VertexId> origin_pair(EdgeId e) const;

    // Wraps a drawing whose vertices have distinct x and whose chains are
    // strictly x-monotone; throws InputError otherwise.
    static XMonotoneDrawing from_drawing(Drawing d);
};

bool is_x_monotone(const Drawing& d);

// Keeps the edges counted by kept_counts(c)[cut], relabels the remaining
// columns left to right starting after the cut and draws them in the plane.
// Throws EquivalenceViolation if the result is not simple or does not cross
// exactly like the cylinder.
XMonotoneDrawing cut_and_unroll(const CylindricalDrawing& c, int cut);

}  // namespace djm
