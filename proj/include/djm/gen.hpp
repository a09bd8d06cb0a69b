#pragma once

// Seeded instance generators.

#include <cstdint>
#include <string>
#include <variant>

#include "djm/cylinder.hpp"
#include "djm/model.hpp"

namespace djm {

enum class GenKind { Convex, RandomPoints, CylSelfHosted, CylRandom };

std::string to_string(GenKind kind);
GenKind parse_gen_kind(const std::string& text);  // throws InputError

struct GenSpec {
    GenKind kind = GenKind::Convex;
    int size = 3;  // n for drawings, number of columns for cylindrical kinds
    std::uint64_t seed = 0;
};

// Integer points rounded from a circle of radius 2^20, strictly convex,
// with pairwise distinct x. Straight-line complete drawing.
Drawing convex_drawing(int n);

// Uniform integer grid points in [0, 2^20)^2, resampled until the
// straight-line complete drawing is simple.
Drawing random_points_drawing(int n, std::uint64_t seed);

// Cylinder of exactly `delta` columns extracted from random straight-line
// hosts by the grower and the cylinder reduction.
CylindricalDrawing selfhosted_cylinder(int delta, std::uint64_t seed);

// Random sides and column heights, one edge at a time, each edge resampled
// until it is compatible with the edges placed before it.
CylindricalDrawing random_cylinder(int delta, std::uint64_t seed);

using Instance = std::variant<Drawing, CylindricalDrawing>;

// Independent sub-seed for stream `stream` of a user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Throws GenerationFailure when the rejection budget runs out.
Instance generate(const GenSpec& spec);

}  // namespace djm
