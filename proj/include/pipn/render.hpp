#pragma once

#include <string>

#include "pipn/diagram.hpp"

namespace pipn {

  // Two columns, X on the left and X' on the right; each line gets a letter,
  // points are drawn as 'o'. A legend lists the blocks.
  std::string render_ascii(Diagram const& a);

  // Standalone SVG. Every block is a <g class="block" data-labels="..."> with
  // one closed contour around its vertices.
  std::string render_svg(Diagram const& a);

}  // namespace pipn
