#pragma once

// Static SVG 1.1 snapshots: one <polyline> per edge, one <circle> per vertex.

#include <set>
#include <string>

#include "djm/cylinder.hpp"
#include "djm/model.hpp"

namespace djm {

struct SvgOptions {
    double size = 800;           // width and height in user units
    std::set<EdgeId> subgraph;   // drawn thicker, in blue
    std::set<EdgeId> highlight;  // drawn thickest, in red
};

std::string drawing_svg(const Drawing& d, const SvgOptions& options = {});

// Cylinder in the universal cover, x in [0, 2 delta]; the seam at x = delta
// is dashed and every column vertex appears in both copies.
std::string cylinder_svg(const CylindricalDrawing& c, const SvgOptions& options = {});

}  // namespace djm
