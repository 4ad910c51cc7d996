#include "quanthelly/generators.hpp"

#include <algorithm>
#include <set>

#include "quanthelly/error.hpp"
#include "quanthelly/random.hpp"

namespace quanthelly {

namespace {

const std::pair<GeneratorKind, const char*> kNames[] = {
    {GeneratorKind::RandomPolygons, "random-polygons"},
    {GeneratorKind::ClusteredVolume, "clustered-volume"},
    {GeneratorKind::ClusteredLattice, "clustered-lattice"},
    {GeneratorKind::DoignonWitness, "doignon-witness"},
    {GeneratorKind::BkpCounterexample, "bkp-counterexample"},
    {GeneratorKind::HalfplaneBundle, "halfplane-bundle"},
    {GeneratorKind::PointCloud, "point-cloud"},
    {GeneratorKind::PlantedFractional, "planted-fractional"},
    {GeneratorKind::PlantedLatticeHelly, "planted-lattice-helly"},
};

Point pt(const Scalar& x, const Scalar& y) { return Point{x, y}; }

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailed("generator: planted structure failed: " + what);
}

Family random_polygons(const GeneratorSpec& s, Rng& rng) {
  if (s.vertices < 3) throw InvalidArgument("random-polygons: need at least 3 vertices");
  Family f;
  while (f.size() < s.count) {
    const Scalar cx = rng.grid(0, s.extent, s.denominator), cy = rng.grid(0, s.extent, s.denominator);
    const Scalar half = rng.grid(1, std::max<std::int64_t>(1, s.extent / 2), s.denominator) / 2;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < s.vertices; ++i) {
      const Scalar u = rng.grid(0, 2, s.denominator) - 1, v = rng.grid(0, 2, s.denominator) - 1;
      pts.push_back(pt(cx + u * half, cy + v * half));
    }
    ConvexBody b = convex_hull(pts);
    if (b.affine_dim() == 2) f.members.push_back(std::move(b));
  }
  return f;
}

Family clustered_volume(const GeneratorSpec& s, Rng& rng) {
  if (s.clusters == 0) throw InvalidArgument("clustered-volume: need at least one cluster");
  Family f;
  for (std::size_t i = 0; i < s.count; ++i) {
    const Scalar c = Scalar(10 * static_cast<long>(i % s.clusters));
    const Scalar a = rng.grid(0, 2, s.denominator), b = rng.grid(0, 2, s.denominator);
    const Scalar e = rng.grid(0, 2, s.denominator), g = rng.grid(0, 2, s.denominator);
    f.members.push_back(ConvexBody::box(pt(c - 1 - a, -1 - e), pt(c + 1 + b, 1 + g)));
    f.labels.push_back("cluster " + std::to_string(i % s.clusters));
    check(is_subset(ConvexBody::box(pt(c - 1, Scalar(-1)), pt(c + 1, Scalar(1))), f.members.back()),
          "cluster core");
  }
  return f;
}

Family clustered_lattice(const GeneratorSpec& s, Rng& rng) {
  if (s.clusters == 0) throw InvalidArgument("clustered-lattice: need at least one cluster");
  const std::int64_t den = std::max<std::int64_t>(2, s.denominator);
  Family f;
  for (std::size_t i = 0; i < s.count; ++i) {
    const Scalar c = Scalar(10 * static_cast<long>(i % s.clusters));
    auto side = [&]() -> Scalar { return Scalar(rng.between(1, 2 * den - 1)) / den; };
    const Scalar a = side(), b = side(), e = side(), g = side();
    f.members.push_back(ConvexBody::box(pt(c - a, -e), pt(c + b, g)));
    f.labels.push_back("cluster " + std::to_string(i % s.clusters));
    check(contains(f.members.back(), pt(c, Scalar(0))), "cluster lattice point");
  }
  return f;
}

Family doignon_witness() {
  const std::vector<Point> corners{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  Family f;
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::vector<Point> tri;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != omit) tri.push_back(corners[j]);
    }
    f.members.push_back(convex_hull(tri));
  }
  const Measure z2 = Measure::integer_lattice(2);
  check(lattice_points(intersect(f.members), z2).empty(), "full intersection free of lattice points");
  for (std::size_t omit = 0; omit < 4; ++omit) {
    std::vector<ConvexBody> three;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != omit) three.push_back(f.members[j]);
    }
    check(contains(intersect(three), corners[omit]), "triple shares the omitted corner");
  }
  return f;
}

Family bkp_counterexample(const Scalar& side) {
  if (side <= 0) throw InvalidArgument("bkp-counterexample: side must be positive");
  Family f;
  f.members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(Vector{Scalar(-1), Scalar(0)}, Scalar(0))}));
  f.members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(Vector{Scalar(1), Scalar(0)}, side)}));
  f.members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(Vector{Scalar(0), Scalar(-1)}, Scalar(0))}));
  f.members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(Vector{Scalar(0), Scalar(1)}, side)}));
  check(evaluate(Measure::volume(), intersect(f.members)) == MeasureValue::exact(side * side), "square area");
  return f;
}

Family halfplane_bundle(const GeneratorSpec& s, Rng& rng) {
  const Point q = pt(rng.grid(0, s.extent, s.denominator), rng.grid(0, s.extent, s.denominator));
  Family f;
  while (f.size() < s.count) {
    const Scalar a = rng.between(-5, 5), b = rng.between(-5, 5);
    if (a == 0 && b == 0) continue;
    const Vector n{a, b};
    const Scalar slack = rng.grid(0, std::max<std::int64_t>(1, s.extent / 2), s.denominator);
    f.members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(n, dot(q, n) + slack)}));
    check(contains(f.members.back(), q), "common point");
  }
  return f;
}

Family point_cloud(const GeneratorSpec& s, Rng& rng) {
  std::vector<Point> pts;
  std::size_t attempts = 0;
  while (pts.size() < s.count) {
    if (++attempts > 100000) throw BudgetExceeded("point-cloud: could not place points in general position");
    Point p = pt(rng.grid(0, s.extent, s.denominator), rng.grid(0, s.extent, s.denominator));
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j) ok = orient2d(pts[i], pts[j], p) != 0;
    }
    if (ok) pts.push_back(std::move(p));
  }
  return Family::from_points(pts);
}

Family planted_fractional(const GeneratorSpec& s, Rng& rng) {
  if (s.planted > s.count) throw InvalidArgument("planted-fractional: planted exceeds count");
  const ConvexBody q = ConvexBody::box(pt(0, 0), pt(2, 1));
  Family f;
  for (std::size_t i = 0; i < s.planted; ++i) {
    std::vector<Point> pts = q.vertex_list();
    pts.push_back(pt(rng.grid(0, 2, s.denominator), 1 + rng.grid(0, 2, s.denominator) + Scalar(1, s.denominator)));
    f.members.push_back(convex_hull(pts));
    f.labels.push_back("planted");
    check(is_subset(q, f.members.back()), "planted core");
  }
  while (f.size() < s.count) {
    const Scalar x = rng.grid(-s.extent, s.extent, s.denominator), y = rng.grid(-s.extent, s.extent, s.denominator);
    const Scalar w = rng.grid(0, 1, s.denominator) + Scalar(1, s.denominator);
    f.members.push_back(ConvexBody::box(pt(x, y), pt(x + w, y + Scalar(1, 2))));
    f.labels.push_back("noise");
  }
  return f;
}

Family planted_lattice_helly(const GeneratorSpec& s, Rng& rng) {
  if (s.count < 2) throw InvalidArgument("planted-lattice-helly: need at least 2 members");
  std::vector<Point> z;
  for (std::size_t i = 0; i < s.count; ++i) z.push_back(pt(rng.between(0, s.extent), rng.between(0, s.extent)));
  Family f;
  for (std::size_t j = 0; j < s.count; ++j) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < s.count; ++i) {
      if (i != j) pts.push_back(z[i]);
    }
    const std::size_t extra = rng.below(s.vertices + 1);
    for (std::size_t e = 0; e < extra; ++e) {
      pts.push_back(pt(rng.grid(0, s.extent, s.denominator), rng.grid(0, s.extent, s.denominator)));
    }
    f.members.push_back(convex_hull(pts));
  }
  for (std::size_t i = 0; i < s.count; ++i) {
    for (std::size_t j = 0; j < s.count; ++j) {
      if (i != j) check(contains(f[j], z[i]), "planted lattice point");
    }
  }
  return f;
}

}  // namespace

std::string generator_name(GeneratorKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  throw InvalidArgument("unknown generator kind");
}

GeneratorKind parse_generator(const std::string& name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  throw InvalidArgument("unknown generator '" + name + "'");
}

Family generate(const GeneratorSpec& spec) {
  if (spec.extent <= 0 || spec.denominator <= 0) throw InvalidArgument("generator: extent and denominator must be positive");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::RandomPolygons:
      return random_polygons(spec, rng);
    case GeneratorKind::ClusteredVolume:
      return clustered_volume(spec, rng);
    case GeneratorKind::ClusteredLattice:
      return clustered_lattice(spec, rng);
    case GeneratorKind::DoignonWitness:
      return doignon_witness();
    case GeneratorKind::BkpCounterexample:
      return bkp_counterexample(spec.side);
    case GeneratorKind::HalfplaneBundle:
      return halfplane_bundle(spec, rng);
    case GeneratorKind::PointCloud:
      return point_cloud(spec, rng);
    case GeneratorKind::PlantedFractional:
      return planted_fractional(spec, rng);
    case GeneratorKind::PlantedLatticeHelly:
      return planted_lattice_helly(spec, rng);
  }
  throw InvalidArgument("unknown generator kind");
}

}  // namespace quanthelly
