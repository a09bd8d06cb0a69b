#pragma once

// Drawings of graphs with polyline edges, simplicity validation and the
// pairwise crossing matrix.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "djm/geom.hpp"

namespace djm {

using VertexId = int;
using EdgeId = int;

struct PolylineEdge {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Point> chain;  // chain.front() at u, chain.back() at v
};

class Drawing {
public:
    Drawing() = default;
    // Checks the structural invariants and throws InputError on failure.
    Drawing(std::vector<Point> vertices, std::vector<PolylineEdge> edges, bool complete);

    // Straight-line drawing; every listed pair becomes a one-segment edge.
    static Drawing straight_line(std::vector<Point> vertices, const std::vector<std::pair<VertexId, VertexId>>& pairs);
    // Straight-line complete graph, edges ordered by (min, max) endpoint.
    static Drawing straight_line_complete(std::vector<Point> vertices);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<PolylineEdge>& edges() const { return edges_; }
    const Point& vertex(VertexId v) const { return vertices_[v]; }
    const PolylineEdge& edge(EdgeId e) const { return edges_[e]; }
    bool complete() const { return complete_; }

    // Edge joining a and b, if present.
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    EdgeId edge_between(VertexId a, VertexId b) const;  // throws if absent
    bool adjacent(EdgeId e, EdgeId f) const;

    // Edge chain oriented to start at `from` (an endpoint of e).
    std::vector<Point> chain_from(EdgeId e, VertexId from) const;
    // Point next to `at` on the chain of e; gives the initial direction.
    const Point& first_step(EdgeId e, VertexId at) const;

private:
    std::vector<Point> vertices_;
    std::vector<PolylineEdge> edges_;
    bool complete_ = false;
    std::vector<EdgeId> pair_index_;  // n x n, -1 when absent
};

enum class ViolationKind {
    MultiCrossing,       // independent edges cross more than once
    AdjacentCrossing,    // edges sharing a vertex cross
    Touching,            // edges meet without crossing away from a shared vertex
    EdgeThroughVertex,   // an edge passes through a vertex position
    Overlap,             // edges share a positive-length piece
    TripleCrossing,      // three edges through one interior point
    DuplicateDirection,  // two edges leave a vertex in the same direction
    SelfIntersection,    // an edge chain meets itself
    // Cylindrical drawings only.
    Malformed,           // side, heights or columns inconsistent with the pair
    RankClash,           // two edges share a rank in one column
    Equivalence,         // crossing pair set differs from the host drawing
    RotationMismatch,    // column order disagrees with the rotation at u or the root
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    EdgeId first = -1;
    EdgeId second = -1;  // -1 when the violation involves a single edge
    VertexId vertex = -1;
    std::optional<Point> witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(Violation v)
    {
        ok = false;
        violations.push_back(std::move(v));
    }
    bool has(ViolationKind kind) const;
};

ValidationReport validate_simple(const Drawing& d);

class CrossingMatrix {
public:
    explicit CrossingMatrix(int edge_count = 0) : edge_count_(edge_count) {}

    int edge_count() const { return edge_count_; }
    int count(EdgeId e, EdgeId f) const;
    const std::vector<Point>& points(EdgeId e, EdgeId f) const;
    void set(EdgeId e, EdgeId f, std::vector<Point> points);
    // Unordered pairs (e < f) with at least one crossing.
    std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs() const;

private:
    int edge_count_;
    std::map<std::pair<EdgeId, EdgeId>, std::vector<Point>> crossings_;
};

// Requires a simple drawing; throws DegeneracyError on overlaps.
CrossingMatrix crossing_matrix(const Drawing& d);

bool disjoint(const Drawing& d, const CrossingMatrix& cm, EdgeId e, EdgeId f);

// Direct test: no shared vertex and no common point at all.
bool edges_disjoint(const Drawing& d, EdgeId e, EdgeId f);
// Direct test for at least one transversal crossing.
bool edges_cross(const Drawing& d, EdgeId e, EdgeId f);

}  // namespace djm
