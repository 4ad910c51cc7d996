#pragma once

#include <vector>

#include "quanthelly/measures.hpp"

namespace quanthelly {

enum class DirectionScheme { Axis, Farey, Custom };

/// Finite set of directions, pairwise not positively parallel.
class DirectionSet {
 public:
  /// ±e_i.
  static DirectionSet axis(int dim);
  /// All primitive integer (a, b) with |a|, |b| ≤ n, i.e. every rational
  /// slope with denominator at most n, in both orientations.
  static DirectionSet farey(int n);
  static DirectionSet custom(std::vector<Direction> directions);

  const std::vector<Direction>& directions() const { return directions_; }
  DirectionScheme scheme() const { return scheme_; }
  int order() const { return order_; }
  std::size_t size() const { return directions_.size(); }
  int dim() const { return static_cast<int>(directions_.front().dim()); }

  /// Union of two sets (scheme becomes Custom).
  DirectionSet merged(const DirectionSet& other) const;

 private:
  DirectionSet(std::vector<Direction> d, DirectionScheme s, int order);
  std::vector<Direction> directions_;
  DirectionScheme scheme_;
  int order_;
};

struct Cut {
  Direction direction;
  Halfspace halfspace;
};

struct FloatingBodyResult {
  ConvexBody body;
  MeasureValue delta = MeasureValue::exact(0);
  std::vector<Cut> cuts;
};

struct FloatingBodyOptions {
  // Bisection stops when the bracket on α is at most rel_tol times the
  // width of K in direction v.
  Scalar rel_tol = pow2(-40);
};

/// Smallest α (certified from above for continuous measures) such that
/// f(K ∩ {<x, v> ≤ α}) ≥ target. Plane only.
Halfspace minimal_v_halfspace(const ConvexBody& k, const Direction& v, const Measure& m, const Scalar& target,
                              const FloatingBodyOptions& options = {});

/// True when the projections of the points of S in K's bounding box onto v
/// are pairwise distinct.
bool is_generic_direction(const ConvexBody& k, const Direction& v, const Measure& m);

/// Deterministic generic tilt v' = D·v + rot90(v) of v for a lattice measure
/// (returns v itself when it is already generic).
Direction generic_direction(const ConvexBody& k, const Direction& v, const Measure& m);

/// Outer approximation of the floating body K(f, ε) over the directions of
/// D. For lattice measures non-generic directions are tilted first.
FloatingBodyResult floating_body(const ConvexBody& k, const Measure& m, const Scalar& eps, const DirectionSet& d,
                                 const FloatingBodyOptions& options = {});

/// Whether f(A ∩ K) ≥ (1-ε) f(K) implies K(f, ε) ⊆ A for the computed body.
bool check_separation(const ConvexBody& k, const Measure& m, const Scalar& eps, const DirectionSet& d,
                      const ConvexBody& a);

}  // namespace quanthelly
