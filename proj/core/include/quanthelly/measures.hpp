#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quanthelly/geometry.hpp"

namespace quanthelly {

enum class MeasureKind {
  Volume,
  Perimeter,
  LatticeCount,
  // Indicator of nonemptiness (1 on nonempty bodies, 0 on the empty body).
  // Recovers the classical Helly/Tverberg statements with λ = 1.
  Nonempty,
};

/// A monotone set function on convex bodies.
///
/// LatticeCount counts |K ∩ S| with S = L \ (L_1 ∪ ... ∪ L_m). Lattices are
/// given by basis rows; excluded sublattices must be full rank and contained
/// in L.
class Measure {
 public:
  static Measure volume();
  static Measure perimeter(Scalar tol = pow2(-40));
  static Measure lattice(std::vector<Vector> basis, std::vector<std::vector<Vector>> excluded = {});
  /// Z^dim minus the given sublattices.
  static Measure integer_lattice(int dim, std::vector<std::vector<Vector>> excluded = {});
  static Measure nonempty();

  MeasureKind kind() const { return kind_; }
  bool continuous() const { return kind_ == MeasureKind::Volume || kind_ == MeasureKind::Perimeter; }
  bool discrete() const { return kind_ == MeasureKind::LatticeCount; }
  const Scalar& tol() const { return tol_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::vector<Vector>>& excluded() const { return excluded_; }
  int lattice_dim() const { return static_cast<int>(basis_.size()); }

  /// Lattice coordinates of x (x = c · basis).
  Vector lattice_coords(const Point& x) const;
  Point from_lattice_coords(const Vector& c) const;
  bool in_lattice(const Point& x) const;
  /// Membership in S.
  bool in_set(const Point& x) const;
  /// lcm of the indices [L : L_i]; multiples of this keep S invariant.
  Integer period() const;

 private:
  MeasureKind kind_ = MeasureKind::Volume;
  Scalar tol_ = pow2(-40);
  std::vector<Vector> basis_;
  std::vector<Vector> inverse_;
  std::vector<std::vector<Vector>> excluded_;
  std::vector<std::vector<Vector>> excluded_inverse_;
};

/// Exact value, infinity, or a certified interval [lo, hi].
class MeasureValue {
 public:
  static MeasureValue exact(Scalar v) { return MeasureValue(false, v, v); }
  static MeasureValue infinite() { return MeasureValue(true, 0, 0); }
  static MeasureValue interval(Scalar lo, Scalar hi) { return MeasureValue(false, std::move(lo), std::move(hi)); }

  bool is_infinite() const { return infinite_; }
  bool is_exact() const { return !infinite_ && lo_ == hi_; }
  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  /// Exact value; throws if this is an interval or infinite.
  const Scalar& value() const;

  /// Certainly ≥ t (infinite counts as ≥ everything).
  bool at_least(const Scalar& t) const { return infinite_ || lo_ >= t; }
  /// Certainly < t.
  bool below(const Scalar& t) const { return !infinite_ && hi_ < t; }

  friend bool operator==(const MeasureValue& a, const MeasureValue& b) {
    return a.infinite_ == b.infinite_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  MeasureValue(bool inf, Scalar lo, Scalar hi) : infinite_(inf), lo_(std::move(lo)), hi_(std::move(hi)) {}
  bool infinite_;
  Scalar lo_;
  Scalar hi_;
};

MeasureValue evaluate(const Measure& m, const ConvexBody& k);

/// Perimeter bounds at a fixed working precision of `bits` fractional bits.
MeasureValue perimeter_bounds(const ConvexBody& k, unsigned bits);

/// Certified decision of f(K) ≥ t. Perimeter refines until decided and
/// throws BudgetExceeded at the precision cap.
bool at_least(const Measure& m, const ConvexBody& k, const Scalar& t);

/// Points of S in K, sorted lexicographically. K must be bounded.
std::vector<Point> lattice_points(const ConvexBody& k, const Measure& m);

struct InscribedOptions {
  // Level λ to approximate; defaults to f(K).
  std::optional<Scalar> level;
  // Vertex budget; defaults to max(ceil((2d/ε)^((d-1)/2)), d+1) for the
  // continuous measures and ceil((1-ε)λ) for lattice counts.
  std::optional<std::size_t> budget;
};

struct Inscribed {
  ConvexBody body;
  std::size_t vertex_count = 0;
  MeasureValue achieved = MeasureValue::exact(0);
};

/// P ⊆ K with few vertices and f(P) ≥ (1-ε)λ.
Inscribed inscribed_polytope(const Measure& m, const ConvexBody& k, const Scalar& eps,
                             const InscribedOptions& options = {});

std::size_t default_vertex_budget(int dim, const Scalar& eps);

}  // namespace quanthelly
