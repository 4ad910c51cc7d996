#pragma once

// Hand-rolled random inputs for property tests.

#include <vector>

#include "quanthelly/geometry.hpp"
#include "quanthelly/random.hpp"

namespace gen {

using quanthelly::Point;
using quanthelly::Rng;
using quanthelly::Scalar;

inline Point grid_point(Rng& rng, long lo, long hi, long den) { return Point{rng.grid(lo, hi, den), rng.grid(lo, hi, den)}; }

inline std::vector<Point> grid_points(Rng& rng, std::size_t n, long lo, long hi, long den) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(grid_point(rng, lo, hi, den));
  return pts;
}

// No three collinear, no repeats.
inline std::vector<Point> general_position(Rng& rng, std::size_t n, long lo, long hi, long den) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p = grid_point(rng, lo, hi, den);
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = pts[i] != p;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        ok = (pts[j][0] - pts[i][0]) * (p[1] - pts[i][1]) != (pts[j][1] - pts[i][1]) * (p[0] - pts[i][0]);
      }
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

// Full-dimensional hull of random grid points around a random centre.
inline quanthelly::ConvexBody polygon(Rng& rng, long lo, long hi, long den, std::size_t vertices = 5) {
  while (true) {
    auto b = quanthelly::convex_hull(grid_points(rng, vertices, lo, hi, den));
    if (b.affine_dim() == 2) return b;
  }
}

}  // namespace gen
