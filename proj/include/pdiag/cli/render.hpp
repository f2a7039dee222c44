#pragma once

#include <string>
#include <vector>

#include "pdiag/diagram.hpp"

namespace pdiag::cli {

struct RenderSpec {
  unsigned width_px = 800;
  unsigned height_px = 600;
  /// Place x at log_q(x), which spaces A_0..A_k evenly. Labels keep true coordinates.
  bool log_x = false;
  unsigned margins = 40;
};

struct RenderResult {
  std::string svg;
  std::vector<std::string> warnings;
};

/// Standalone SVG 1.1 document: axes, the diagram as one closed path, and a
/// labelled marker per vertex. Output depends only on the arguments.
RenderResult render_svg(const PolynomialDiagram& diagram, const RenderSpec& spec);

}  // namespace pdiag::cli
