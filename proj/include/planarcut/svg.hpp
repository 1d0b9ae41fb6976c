#pragma once

#include <string>
#include <vector>

#include "planarcut/instance_io.hpp"

namespace planarcut {

/// Static SVG of the embedding: primal edges as solid <line> elements,
/// terminals as filled disks, dual vertices as squares, the cut's dual
/// segments dashed, joint-vertices highlighted. Deterministic output.
std::string render_svg(const ParsedInstance& pi, const std::vector<int>& cut);

}  // namespace planarcut
