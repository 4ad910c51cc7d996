#include "quanthelly/helly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quanthelly/error.hpp"
#include "quanthelly/random.hpp"

namespace quanthelly {

namespace {

Point some_point(const ConvexBody& b) { return b.bounded() ? b.vertex_list().front() : b.window().front(); }

void add_points(std::vector<Point>& pts, const ConvexBody& b) {
  if (b.is_empty()) return;
  const auto& src = b.bounded() ? b.vertex_list() : b.window();
  pts.insert(pts.end(), src.begin(), src.end());
}

// Bounding box of the points, widened by one on every side.
ConvexBody enclosing_box(const std::vector<Point>& pts) {
  Point lo = pts.front(), hi = pts.front();
  Vector l = lo.coords(), u = hi.coords();
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      l[i] = std::min(l[i], p[i]);
      u[i] = std::max(u[i], p[i]);
    }
  }
  for (auto& x : l) x -= 1;
  for (auto& x : u) x += 1;
  return ConvexBody::box(Point(l), Point(u));
}

void require_bounded(const std::vector<const ConvexBody*>& bodies, const Measure& msr) {
  if (msr.kind() == MeasureKind::Nonempty) return;
  for (auto b : bodies) {
    if (!b->bounded()) throw Unsupported("unbounded members are only supported for the nonemptiness measure");
  }
}

// v itself when no member edge is orthogonal to it, else a tilt of v, so
// that minimal faces in direction v are vertices.
Direction vertex_generic(const std::vector<const ConvexBody*>& bodies, const Direction& v) {
  std::vector<Vector> normals{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  for (auto b : bodies) {
    if (b->is_empty()) continue;
    for (const auto& h : b->h_rep()) normals.push_back(h.normal());
  }
  auto generic = [&](const Vector& a) {
    return std::none_of(normals.begin(), normals.end(),
                        [&](const Vector& n) { return n[0] * a[1] - n[1] * a[0] == 0; });
  };
  if (generic(v.vector())) return v;
  const Vector& a = v.vector();
  Integer big = 2;
  for (int attempt = 0; attempt < 256; ++attempt, big *= 2) {
    Vector t{big * a[0] - a[1], big * a[1] + a[0]};
    if (generic(t)) return Direction(t);
  }
  throw BudgetExceeded("no direction in general position found");
}

DirectionSet default_directions(const std::vector<const ConvexBody*>& bodies, int dim) {
  std::set<Direction> dirs;
  const DirectionSet axis = DirectionSet::axis(dim);
  for (const auto& d : axis.directions()) dirs.insert(d);
  for (auto b : bodies) {
    if (b->is_empty()) continue;
    for (const auto& h : b->h_rep()) dirs.insert(Direction(h.normal()));
  }
  return DirectionSet::custom({dirs.begin(), dirs.end()});
}

struct Shaper {
  const Measure& msr;
  Scalar lambda;
  Scalar eps;
  Direction v;
  DirectionSet dirs;
  FloatingBodyOptions floating;

  Halfspace cut(const ConvexBody& k) const { return minimal_v_halfspace(k, v, msr, lambda, floating); }

  // K_B(f, ε) for K_B = k ∩ cut.
  ConvexBody core(const ConvexBody& k, const Halfspace& h) const {
    const ConvexBody kb = clip(k, h);
    switch (msr.kind()) {
      case MeasureKind::Nonempty: {
        // The minimum of v over kb; a single vertex since v is generic.
        const auto& vs = kb.vertex_list();
        auto best = std::min_element(vs.begin(), vs.end(), [&](const Point& a, const Point& b) {
          const Scalar da = dot(a, v.vector()), db = dot(b, v.vector());
          return da != db ? da < db : a < b;
        });
        return ConvexBody::point(*best);
      }
      case MeasureKind::LatticeCount:
        if (eps == 0) {
          auto pts = lattice_points(kb, msr);
          return convex_hull(pts);
        }
        return floating_body(kb, msr, eps, dirs, floating).body;
      case MeasureKind::Volume:
      case MeasureKind::Perimeter:
        if (eps == 0) return kb;
        return floating_body(kb, msr, eps, dirs, floating).body;
    }
    throw InvalidArgument("unknown measure kind");
  }
};

std::string pairs_text(const std::vector<std::pair<std::size_t, std::size_t>>& t) {
  std::string s;
  for (const auto& [c, m] : t) s += (s.empty() ? "" : ", ") + std::string("class ") + std::to_string(c) + " member " + std::to_string(m);
  return "{" + s + "}";
}

}  // namespace

HellyReport helly_check(const Family& f, std::size_t h, const Measure& msr, const Scalar& lambda, const Scalar& eps,
                        std::size_t budget, std::uint64_t seed) {
  if (h == 0) throw InvalidArgument("helly_check: h must be positive");
  if (f.size() == 0) throw InvalidArgument("helly_check: empty family");
  const std::size_t n = f.size();
  const std::size_t k = std::min(h, n);
  HellyReport r;
  auto check = [&](const IndexSet& idx) {
    std::vector<ConvexBody> bodies;
    for (auto i : idx) bodies.push_back(f[i]);
    if (at_least(msr, intersect(bodies), lambda)) return true;
    r.hypothesis = false;
    r.violator = idx;
    return false;
  };
  const Integer total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (total <= static_cast<unsigned long>(budget)) {
    for_each_subset(n, k, check);
  } else {
    r.exhaustive = false;
    Rng rng(seed);
    IndexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t t = 0; t < budget && r.hypothesis; ++t) {
      rng.shuffle(all);
      IndexSet idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(idx.begin(), idx.end());
      check(idx);
    }
  }
  r.intersection = intersect(f.members);
  r.value = evaluate(msr, r.intersection);
  r.conclusion = at_least(msr, r.intersection, (1 - eps) * lambda);
  return r;
}

FractionalHellyResult fractional_helly_witness(const Family& f, const Measure& msr, const Scalar& lambda,
                                               const Scalar& eps, std::size_t h, const Direction& v,
                                               const CutOptions& options) {
  const std::size_t n = f.size();
  if (h < 2) throw InvalidArgument("fractional_helly_witness: h must be at least 2");
  if (n < h) throw InvalidArgument("fractional_helly_witness: family has fewer than h members");
  if (eps < 0 || eps >= 1) throw InvalidArgument("fractional_helly_witness: eps must lie in [0,1)");
  if (f.dim() != 2) throw Unsupported("fractional_helly_witness: plane only");
  std::vector<const ConvexBody*> originals;
  for (const auto& b : f.members) originals.push_back(&b);
  require_bounded(originals, msr);
  if (binomial(static_cast<unsigned>(n), static_cast<unsigned>(h)) > static_cast<unsigned long>(options.budget)) {
    throw BudgetExceeded("fractional_helly_witness: too many h-tuples");
  }

  // Qualifying h-tuples, on the original members.
  auto inter = [&](const Family& fam, const IndexSet& idx) {
    std::vector<ConvexBody> bodies;
    for (auto i : idx) bodies.push_back(fam[i]);
    return intersect(bodies);
  };
  std::vector<IndexSet> qualifying;
  std::vector<Point> anchor;
  for_each_subset(n, h, [&](const IndexSet& idx) {
    ConvexBody b = inter(f, idx);
    if (!b.is_empty() && at_least(msr, b, lambda)) {
      qualifying.push_back(idx);
      anchor.push_back(some_point(b));
    }
    return true;
  });
  if (qualifying.empty()) throw Infeasible("fractional_helly_witness: no h-tuple has f >= lambda");

  Family work = f;
  if (msr.kind() == MeasureKind::Nonempty) {
    std::vector<Point> pts = anchor;
    for (const auto& b : f.members) add_points(pts, b);
    const ConvexBody box = enclosing_box(pts);
    for (auto& b : work.members) b = intersect(b, box);
  }
  std::vector<const ConvexBody*> bodies;
  for (const auto& b : work.members) bodies.push_back(&b);
  Direction dir = v;
  if (msr.kind() == MeasureKind::Nonempty) dir = vertex_generic(bodies, v);
  if (msr.discrete()) {
    std::vector<Point> pts;
    for (const auto& b : work.members) add_points(pts, b);
    dir = generic_direction(convex_hull(pts), v, msr);
  }
  Shaper shaper{msr, lambda, eps, dir, options.directions ? *options.directions : default_directions(bodies, 2),
                options.floating};

  std::map<IndexSet, Halfspace> cuts;
  auto cut_of = [&](const IndexSet& b) -> const Halfspace& {
    auto it = cuts.find(b);
    if (it == cuts.end()) it = cuts.emplace(b, shaper.cut(inter(work, b))).first;
    return it->second;
  };
  std::map<IndexSet, std::size_t> count;
  for (const auto& a : qualifying) {
    std::optional<IndexSet> best;
    for (std::size_t drop = a.size(); drop-- > 0;) {
      IndexSet b;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != drop) b.push_back(a[i]);
      }
      if (!best) {
        best = b;
        continue;
      }
      const Scalar& ob = cut_of(b).offset();
      const Scalar& oc = cut_of(*best).offset();
      if (ob > oc || (ob == oc && b < *best)) best = b;
    }
    ++count[*best];
  }
  auto top = count.begin();
  for (auto it = count.begin(); it != count.end(); ++it) {
    if (it->second > top->second) top = it;
  }

  FractionalHellyResult r;
  r.tuple = top->first;
  r.assigned = top->second;
  r.qualifying = qualifying.size();
  r.cut = cut_of(r.tuple);
  r.witness = shaper.core(inter(work, r.tuple), r.cut);
  if (r.witness.is_empty()) throw Infeasible("fractional_helly_witness: the shrink is empty; use a smaller eps");
  r.achieved = evaluate(msr, r.witness);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_subset(r.witness, f[j])) r.members.push_back(j);
  }
  r.counting_floor = r.assigned + h - 1;
  return r;
}

ColorfulHellyResult colorful_helly(const std::vector<Family>& classes, const Measure& msr, const Scalar& lambda,
                                   const Scalar& eps, const Direction& v, const CutOptions& options) {
  const std::size_t h = classes.size();
  if (h < 2) throw InvalidArgument("colorful_helly: need at least two classes");
  if (eps < 0 || eps >= 1) throw InvalidArgument("colorful_helly: eps must lie in [0,1)");
  std::vector<const ConvexBody*> originals;
  for (const auto& c : classes) {
    if (c.size() == 0) throw InvalidArgument("colorful_helly: empty class");
    if (c.dim() != 2) throw Unsupported("colorful_helly: plane only");
    for (const auto& b : c.members) originals.push_back(&b);
  }
  require_bounded(originals, msr);

  // Walks the product of the given classes, calling fn with member indices.
  auto for_each_choice = [&](const std::vector<std::size_t>& cls, auto fn) {
    Integer product = 1;
    for (auto c : cls) product *= static_cast<unsigned long>(classes[c].size());
    if (product > static_cast<unsigned long>(options.budget)) {
      throw BudgetExceeded("colorful_helly: " + product.get_str() + " colorful choices exceed the budget");
    }
    std::vector<std::size_t> pick(cls.size(), 0);
    while (true) {
      fn(pick);
      std::size_t i = cls.size();
      while (i > 0) {
        --i;
        if (++pick[i] < classes[cls[i]].size()) break;
        pick[i] = 0;
        if (i == 0) return;
      }
      if (cls.empty()) return;
    }
  };
  auto inter = [&](const std::vector<std::vector<ConvexBody>>& fam, const std::vector<std::size_t>& cls,
                   const std::vector<std::size_t>& pick) {
    std::vector<ConvexBody> bodies;
    for (std::size_t i = 0; i < cls.size(); ++i) bodies.push_back(fam[cls[i]][pick[i]]);
    return intersect(bodies);
  };

  std::vector<std::vector<ConvexBody>> work(h);
  for (std::size_t c = 0; c < h; ++c) work[c] = classes[c].members;

  std::vector<std::size_t> all(h);
  for (std::size_t c = 0; c < h; ++c) all[c] = c;
  std::vector<Point> anchor;
  for_each_choice(all, [&](const std::vector<std::size_t>& pick) {
    ConvexBody b = inter(work, all, pick);
    if (b.is_empty() || !at_least(msr, b, lambda)) {
      std::vector<std::pair<std::size_t, std::size_t>> t;
      for (std::size_t c = 0; c < h; ++c) t.emplace_back(c, pick[c]);
      throw HypothesisViolated("colorful_helly: colorful choice " + pairs_text(t) + " has f < lambda");
    }
    anchor.push_back(some_point(b));
  });

  if (msr.kind() == MeasureKind::Nonempty) {
    std::vector<Point> pts = anchor;
    for (auto b : originals) add_points(pts, *b);
    const ConvexBody box = enclosing_box(pts);
    for (auto& c : work) {
      for (auto& b : c) b = intersect(b, box);
    }
  }
  std::vector<const ConvexBody*> bodies;
  for (const auto& c : work) {
    for (const auto& b : c) bodies.push_back(&b);
  }
  Direction dir = v;
  if (msr.kind() == MeasureKind::Nonempty) dir = vertex_generic(bodies, v);
  if (msr.discrete()) {
    std::vector<Point> pts;
    for (auto b : bodies) add_points(pts, *b);
    dir = generic_direction(convex_hull(pts), v, msr);
  }
  Shaper shaper{msr, lambda, eps, dir, options.directions ? *options.directions : default_directions(bodies, 2),
                options.floating};

  // Containment-maximal colorful (h-1)-tuple: largest cut offset, then the
  // lexicographically smallest (class, member) list.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> best;
  std::optional<Halfspace> best_cut;
  std::size_t best_missing = 0;
  for (std::size_t missing = 0; missing < h; ++missing) {
    std::vector<std::size_t> cls;
    for (std::size_t c = 0; c < h; ++c) {
      if (c != missing) cls.push_back(c);
    }
    for_each_choice(cls, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::pair<std::size_t, std::size_t>> t;
      for (std::size_t i = 0; i < cls.size(); ++i) t.emplace_back(cls[i], pick[i]);
      Halfspace hs = shaper.cut(inter(work, cls, pick));
      if (!best || hs.offset() > best_cut->offset() || (hs.offset() == best_cut->offset() && t < *best)) {
        best = t;
        best_cut = hs;
        best_missing = missing;
      }
    });
  }

  std::vector<ConvexBody> tuple_bodies;
  for (const auto& [c, m] : *best) tuple_bodies.push_back(work[c][m]);
  ColorfulHellyResult r;
  r.class_index = best_missing;
  r.tuple = *best;
  r.cut = *best_cut;
  r.witness = shaper.core(intersect(tuple_bodies), r.cut);
  if (r.witness.is_empty()) throw Infeasible("colorful_helly: the shrink is empty; use a smaller eps");
  r.achieved = evaluate(msr, r.witness);
  for (std::size_t m = 0; m < classes[best_missing].size(); ++m) {
    if (!is_subset(r.witness, classes[best_missing][m])) {
      throw VerificationFailed("colorful_helly: witness not contained in member " + std::to_string(m) + " of class " +
                               std::to_string(best_missing));
    }
  }
  return r;
}

}  // namespace quanthelly
