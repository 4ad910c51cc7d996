#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quanthelly/geometry.hpp"

namespace quanthelly {

struct SvgStyle {
  std::string fill = "none";
  std::string stroke = "black";
  std::string stroke_width = "1";
  std::string opacity = "1";
};

struct SvgItem {
  std::variant<ConvexBody, Point, Halfspace> object;
  SvgStyle style;
};

/// Plane objects as a standalone SVG document. The view box is the joint
/// bounding box of bodies and points plus a 5% margin; halfspaces are drawn
/// as their boundary line across it. Unbounded bodies are drawn through
/// their window. Output depends only on the input.
std::string render_svg(const std::vector<SvgItem>& items, int width = 480);

}  // namespace quanthelly
