#pragma once

#include <array>
#include <span>
#include <vector>

#include "quanthelly/geometry.hpp"

namespace quanthelly::detail {

struct Hull3 {
  int affine_dim = -1;
  // Extreme points, sorted lexicographically.
  std::vector<Point> vertices;
  // Outward-oriented boundary triangles when affine_dim == 3; a fan of the
  // planar polygon when affine_dim == 2; empty otherwise.
  std::vector<std::array<Point, 3>> triangles;
  std::vector<Halfspace> halfspaces;
};

Hull3 hull3d(std::span<const Point> points);

Vector cross3(const Vector& a, const Vector& b);

}  // namespace quanthelly::detail
