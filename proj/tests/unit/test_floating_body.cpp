#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "quanthelly/error.hpp"
#include "quanthelly/floating_body.hpp"

using namespace quanthelly;

namespace {

Point P(const Scalar& x, const Scalar& y) { return Point{x, y}; }

const ConvexBody kUnit = ConvexBody::box(P(0, 0), P(1, 1));

Scalar width(const ConvexBody& k, const Direction& v) {
  return support(k, v).value + support(k, -v).value;
}

}  // namespace

TEST(FloatingBody, UnitSquareAxisQuarter) {
  const auto r = floating_body(kUnit, Measure::volume(), Scalar(1, 4), DirectionSet::axis(2));
  EXPECT_EQ(r.body, ConvexBody::box(P(Scalar(1, 4), Scalar(1, 4)), P(Scalar(3, 4), Scalar(3, 4))));
  EXPECT_EQ(r.delta, MeasureValue::exact(Scalar(3, 4)));
  EXPECT_EQ(r.cuts.size(), 4u);
}

TEST(FloatingBody, DirectionSets) {
  EXPECT_EQ(DirectionSet::axis(2).size(), 4u);
  // Primitive (a, b) with |a|, |b| <= 1.
  EXPECT_EQ(DirectionSet::farey(1).size(), 8u);
  const auto f3 = DirectionSet::farey(3);
  for (const auto& d : f3.directions()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.vector()[0].get_num_mpz_t(), d.vector()[1].get_num_mpz_t());
    EXPECT_EQ(g, 1);
  }
  EXPECT_EQ(DirectionSet::axis(2).merged(DirectionSet::farey(1)).size(), 8u);
}

TEST(FloatingBody, MonotoneInEpsAndDirections) {
  const std::vector<Scalar> eps{Scalar(1, 16), Scalar(1, 8), Scalar(1, 4), Scalar(3, 8), Scalar(1, 2)};
  const std::vector<DirectionSet> dirs{DirectionSet::axis(2), DirectionSet::farey(2), DirectionSet::farey(4)};
  const auto k = convex_hull({P(0, 0), P(4, 0), P(5, 2), P(1, 3)});
  std::vector<std::vector<ConvexBody>> grid(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (const auto& d : dirs) grid[i].push_back(floating_body(k, Measure::volume(), eps[i], d).body);
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      EXPECT_TRUE(is_subset(grid[i][j], k));
      if (i + 1 < eps.size()) EXPECT_TRUE(is_subset(grid[i + 1][j], grid[i][j]));
      if (j + 1 < dirs.size()) EXPECT_TRUE(is_subset(grid[i][j + 1], grid[i][j]));
    }
  }
}

TEST(FloatingBody, MinimalHalfspaceIsTightVolume) {
  Rng rng(41);
  const Scalar slack = pow2(-30);
  for (int t = 0; t < 100; ++t) {
    const auto k = gen::polygon(rng, 0, 8, 2, 6);
    const Direction v{Scalar(rng.between(-3, 3)), Scalar(rng.between(1, 3))};
    const Scalar total = evaluate(Measure::volume(), k).value();
    const Scalar target = total * Scalar(rng.between(1, 9)) / 10;
    const auto h = minimal_v_halfspace(k, v, Measure::volume(), target);
    const auto below = clip(k, h);
    EXPECT_GE(oracle::area(below.vertex_list()), target);
    const Halfspace tighter(v.vector(), h.offset() - slack * width(k, v) * 2);
    const auto less = clip(k, tighter);
    const Scalar less_area = less.affine_dim() == 2 ? oracle::area(less.vertex_list()) : Scalar(0);
    EXPECT_LT(less_area, target);
  }
}

TEST(FloatingBody, MinimalHalfspaceLatticeExact) {
  const auto z2 = Measure::integer_lattice(2);
  const auto k = ConvexBody::box(P(0, 0), P(3, 3));
  const Direction v{Scalar(1), Scalar(7)};
  const auto h = minimal_v_halfspace(k, v, z2, Scalar(5));
  const auto pts = lattice_points(k, z2);
  std::vector<Scalar> proj;
  for (const auto& p : pts) proj.push_back(dot(p, v.vector()));
  std::sort(proj.begin(), proj.end());
  EXPECT_EQ(h.offset(), proj[4]);
}

TEST(FloatingBody, LatticeTiltIsGeneric) {
  const auto z2 = Measure::integer_lattice(2);
  const auto k = ConvexBody::box(P(0, 0), P(4, 4));
  const Direction axis{Scalar(1), Scalar(0)};
  EXPECT_FALSE(is_generic_direction(k, axis, z2));
  const auto g = generic_direction(k, axis, z2);
  EXPECT_TRUE(is_generic_direction(k, g, z2));
  EXPECT_GT(g.vector()[0], 0);
}

TEST(FloatingBody, SeparationForHalfplanesInDirectionSet) {
  Rng rng(43);
  const auto dirs = DirectionSet::farey(2);
  const Scalar eps(1, 5);
  for (int t = 0; t < 60; ++t) {
    const auto k = gen::polygon(rng, 0, 6, 2, 6);
    const auto fb = floating_body(k, Measure::volume(), eps, dirs).body;
    const auto& v = dirs.directions()[rng.below(dirs.size())];
    const Scalar hi = support(k, v).value;
    const Scalar lo = -support(k, -v).value;
    const Scalar alpha = lo + (hi - lo) * Scalar(rng.between(0, 20)) / 20;
    const auto a = ConvexBody::from_halfspaces(2, {Halfspace(v.vector(), alpha)});
    EXPECT_TRUE(check_separation(k, Measure::volume(), eps, dirs, a));
    const auto cut = clip(k, Halfspace(v.vector(), alpha));
    const Scalar share = cut.affine_dim() == 2 ? oracle::area(cut.vertex_list()) : Scalar(0);
    if (share >= (1 - eps) * evaluate(Measure::volume(), k).value()) EXPECT_TRUE(is_subset(fb, a));
  }
}

TEST(FloatingBody, PerimeterStaysInside) {
  const auto tri = convex_hull({P(0, 0), P(4, 0), P(0, 3)});
  const auto r = floating_body(tri, Measure::perimeter(), Scalar(1, 10), DirectionSet::axis(2));
  EXPECT_TRUE(is_subset(r.body, tri));
  EXPECT_FALSE(r.body.is_empty());
}

TEST(FloatingBody, RejectsBadInput) {
  EXPECT_THROW(floating_body(kUnit, Measure::volume(), Scalar(0), DirectionSet::axis(2)), InvalidArgument);
  EXPECT_THROW(floating_body(kUnit, Measure::volume(), Scalar(1), DirectionSet::axis(2)), InvalidArgument);
  const auto seg = convex_hull({P(0, 0), P(1, 0)});
  EXPECT_THROW(floating_body(seg, Measure::volume(), Scalar(1, 2), DirectionSet::axis(2)), InvalidArgument);
}
