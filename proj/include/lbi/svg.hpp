#pragma once

#include <string>
#include <vector>

#include "lbi/lattice_graphs.hpp"

namespace lbi {

struct FigureVertex {
  Vertex2 at;
  bool infinite = false;
};

struct FigureEdge {
  Vertex2 from;
  Vertex2 to;
};

/// Lattice graph figure in the style of the band and slice pictures: a dotted
/// grid, edges as segments, finite vertices as stars and infinite vertices as
/// filled dots.
std::string render_svg(const std::vector<FigureVertex>& vertices, const std::vector<FigureEdge>& edges,
                       const std::string& title, const std::string& x_label = "w", const std::string& y_label = "z");

}  // namespace lbi
