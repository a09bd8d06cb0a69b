#pragma once

// Disjoint matchings: greedy matching in the plane subgraph (stage A),
// longest chains under four partial orders on an x-monotone drawing
// (stage B), and the combined pipeline with certification.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "djm/cylinder.hpp"
#include "djm/grower.hpp"
#include "djm/model.hpp"

namespace djm {

// Maximal matching among subgraph edges not incident to the root, built
// greedily over edges sorted by (min endpoint, max endpoint).
std::vector<EdgeId> greedy_matching_avoiding(const PlaneSubgraph& g);

enum class OrderKind { LeftStair, RightStair, NestUp, NestDown };
inline constexpr std::array<OrderKind, 4> kOrderKinds{OrderKind::LeftStair, OrderKind::RightStair, OrderKind::NestUp,
                                                      OrderKind::NestDown};
std::string to_string(OrderKind kind);

// Below: e precedes f. Above: f precedes e.
enum class Relation { Below, Above, Incomparable };

// Requires an x-monotone drawing (distinct vertex x, strictly x-monotone chains).
// "e below f": vertex-disjoint, non-crossing, overlapping spans, and e lower
// than f at the leftmost common x.
bool below(const Drawing& x, EdgeId e, EdgeId f);
Relation order_relation(const Drawing& x, OrderKind kind, EdgeId e, EdgeId f);

struct ChainResult {
    std::vector<EdgeId> edges;       // edges of the x-monotone drawing
    std::array<int, 4> lengths{};    // longest chain per order kind
    OrderKind best = OrderKind::LeftStair;
};

// Longest chain over the four orders; ties go to the earlier kind.
// Throws CertificationFailure if the chain is not pairwise disjoint.
ChainResult chain_extract(const XMonotoneDrawing& x);

struct RootPolicy {
    bool all = false;
    VertexId root = 0;

    static RootPolicy fixed(VertexId v) { return {false, v}; }
    static RootPolicy best_of_all() { return {true, 0}; }
};

struct StageStats {
    VertexId root = -1;
    int delta = 0;        // maximum non-root degree in the subgraph
    VertexId u = -1;      // vertex attaining it
    int columns = 0;      // cylinder width, delta minus the root column
    int stage_a_size = 0;
    int cut_column = -1;  // -1 when stage B did not run
    int kept_count = 0;
    std::array<int, 4> chain_lengths{};
    int stage_b_size = 0;
};

struct MatchingResult {
    std::vector<EdgeId> edges;  // ascending
    int size = 0;
    StageStats stats;
};

// Pairs of the set that are not disjoint in d, as (e, f) with e < f.
std::vector<std::pair<EdgeId, EdgeId>> certificate_failures(const Drawing& d, const std::vector<EdgeId>& edges);

// Requires a complete simple drawing with n >= 3. Deterministic.
// Throws CertificationFailure if the chosen set is not pairwise disjoint in d.
MatchingResult solve(const Drawing& d, RootPolicy policy = RootPolicy::fixed(0));

}  // namespace djm
