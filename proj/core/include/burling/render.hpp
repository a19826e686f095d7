#pragma once

#include <string>

#include "burling/construction.hpp"

namespace burling {

struct RenderOptions {
  bool territories = false;
  bool probs = true;
  double canvas = 1000.0;
};

/// Axis-true SVG of a scene scaled into a square canvas.
std::string render_svg(const Scene& sc, const RenderOptions& opts = {});

}  // namespace burling
