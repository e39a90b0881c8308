#pragma once

// Standalone SVG pictures of an instance, its queries and their answers.

#include <string>
#include <vector>

#include "esq/engine.hpp"

namespace esq {

enum class Overlay { None, Axis, Voronoi, Grid };

/// Throws std::invalid_argument on an unknown name.
Overlay overlay_from_string(const std::string& s);

/// Input in black, queries as crosses, answers outlined in red (one <circle>
/// per circle answer; sites are drawn as small squares). An overlay that does
/// not apply to the mode is ignored.
std::string render_svg(const Engine& e, const std::vector<Point2>& queries, const std::vector<QueryAnswer>& answers,
                       Overlay overlay);

}  // namespace esq
