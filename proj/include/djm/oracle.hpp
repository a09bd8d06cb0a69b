#pragma once

// Exact maximum set of pairwise disjoint edges for small instances:
// branch and bound for a maximum independent set in the conflict graph
// (two edges conflict when they share a vertex or cross).

#include <cstdint>
#include <vector>

#include "djm/cylinder.hpp"
#include "djm/model.hpp"

namespace djm {

struct OracleResult {
    int optimum = 0;
    std::vector<int> witness;  // ascending node (edge) ids
    std::int64_t explored = 0;
    bool exact = true;         // false when the node limit stopped the search
};

inline constexpr std::int64_t kDefaultNodeLimit = 50'000'000;

// conflicts[a] lists the nodes conflicting with a (symmetric, no self loops).
OracleResult max_independent_set(const std::vector<std::vector<int>>& conflicts,
                                 std::int64_t node_limit = kDefaultNodeLimit);

// Requires a simple drawing.
OracleResult max_disjoint_bruteforce(const Drawing& d, std::int64_t node_limit = kDefaultNodeLimit);

// Same search on a cylindrical drawing; node ids are cylinder edge indices.
OracleResult max_disjoint_bruteforce(const CylindricalDrawing& c, std::int64_t node_limit = kDefaultNodeLimit);

}  // namespace djm
