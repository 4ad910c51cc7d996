// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "quanthelly/combinatorial.hpp"
#include "quanthelly/error.hpp"
#include "quanthelly/floating_body.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/helly.hpp"
#include "quanthelly/piercing.hpp"

using namespace quanthelly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Point P(const Scalar& x, const Scalar& y) { return Point{x, y}; }

std::string str(const Scalar& s) { return s.get_str(); }

// inner ⊆ outer for bounded polygons, by vertex containment.
bool oracle_subset(const ConvexBody& inner, const std::vector<Point>& outer) {
  for (const auto& v : inner.vertex_list()) {
    if (!oracle::in_hull(outer, v)) return false;
  }
  return true;
}

std::vector<std::vector<Point>> oracle_polys(const Family& f, const IndexSet& idx) {
  std::vector<std::vector<Point>> out;
  for (std::size_t i : idx) out.push_back(oracle::brute_hull(f[i].vertex_list()));
  return out;
}

IndexSet all_of(std::size_t n) {
  IndexSet idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

Family generated(GeneratorKind kind, std::uint64_t seed, std::size_t count = 0) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  if (count) spec.count = count;
  return generate(spec);
}

// Criterion 1: exact LP duality with verified certificates.
Outcome lp_duality() {
  Outcome out;
  Rng rng(1001);
  const auto z2 = Measure::integer_lattice(2);
  PoolOptions opts;
  opts.max_pool = 40;
  int done[2] = {0, 0}, rejected = 0;
  while (done[0] + done[1] < 200 && out.pass) {
    const bool lattice = (done[0] + done[1]) % 2 == 1;
    Family f;
    const std::size_t n = rng.between(2, 10);
    for (std::size_t k = 0; k < n; ++k) f.members.push_back(gen::polygon(rng, 0, 6, lattice ? 1 : 2, 5));
    const Measure msr = lattice ? z2 : Measure::volume();
    const Scalar lambda = lattice ? Scalar(rng.between(1, 2)) : Scalar(rng.between(1, 4)) / 2;
    const Scalar eps = lattice ? Scalar(0) : Scalar(1, 4);
    try {
      const auto pool = build_pool(f, msr, lambda, eps, 2, opts);
      const auto tau = fractional_transversal(f, pool);
      const auto nu = fractional_packing(f, pool);
      if (tau.status != LPStatus::Optimal || nu.status != LPStatus::Optimal) {
        out.fail("non-optimal status");
        break;
      }
      if (tau.optimum != nu.optimum) out.fail("tau " + str(tau.optimum) + " != nu " + str(nu.optimum));
      if (!verify_certificate(transversal_lp(f, pool), tau)) out.fail("transversal certificate rejected");
      if (!verify_certificate(packing_lp(f, pool), nu)) out.fail("packing certificate rejected");
      // Weak duality on independently recomputed containments.
      const auto polys = oracle_polys(f, all_of(n));
      std::vector<std::vector<bool>> in(pool.size(), std::vector<bool>(n));
      for (std::size_t c = 0; c < pool.size(); ++c) {
        for (std::size_t j = 0; j < n; ++j) in[c][j] = oracle_subset(pool.candidates[c].body, polys[j]);
      }
      Scalar st = 0, sn = 0;
      for (std::size_t c = 0; c < pool.size(); ++c) st += tau.primal[c];
      for (std::size_t j = 0; j < n; ++j) sn += nu.primal[j];
      for (std::size_t j = 0; j < n; ++j) {
        Scalar cover = 0;
        for (std::size_t c = 0; c < pool.size(); ++c) {
          if (in[c][j]) cover += tau.primal[c];
        }
        if (cover < 1) out.fail("transversal infeasible at member " + std::to_string(j));
      }
      for (std::size_t c = 0; c < pool.size(); ++c) {
        Scalar load = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (in[c][j]) load += nu.primal[j];
        }
        if (load > 1) out.fail("packing infeasible at candidate " + std::to_string(c));
      }
      if (st != sn || st != tau.optimum) out.fail("objective mismatch");
      ++done[lattice ? 1 : 0];
    } catch (const BudgetExceeded&) {
      ++rejected;
    } catch (const Infeasible&) {
      ++rejected;
    }
  }
  out.detail = out.pass ? std::to_string(done[0]) + " volume + " + std::to_string(done[1]) +
                              " lattice instances, tau == nu exactly, certificates verified (" +
                              std::to_string(rejected) + " resampled)"
                        : out.detail;
  return out;
}

// Criterion 2: the Doignon witness and the lattice Helly number 4.
Outcome doignon() {
  Outcome out;
  const auto z2 = Measure::integer_lattice(2);
  const auto w = generated(GeneratorKind::DoignonWitness, 1);
  const auto wp = oracle_polys(w, all_of(w.size()));
  auto lattice_in = [&](const std::vector<std::vector<Point>>& polys, const IndexSet& idx, long lo, long hi) {
    return oracle::grid_scan(lo, hi, [&](const Point& p) {
      for (std::size_t i : idx) {
        if (!oracle::in_hull(polys[i], p)) return false;
      }
      return true;
    });
  };
  for (const auto& s : oracle::subsets(w.size(), 3)) {
    if (lattice_in(wp, s, -5, 5).empty()) out.fail("a 3-subfamily of the witness misses Z^2");
  }
  if (!lattice_in(wp, all_of(w.size()), -5, 5).empty()) out.fail("witness intersection contains a lattice point");
  const auto r3 = helly_check(w, 3, z2, Scalar(1), Scalar(0));
  if (!r3.hypothesis || r3.conclusion) out.fail("helly_check(h=3) on the witness disagrees");
  if (!out.pass) return out;

  GeneratorSpec spec;
  spec.kind = GeneratorKind::PlantedLatticeHelly;
  spec.count = 5;
  spec.extent = 4;
  spec.vertices = 2;
  spec.denominator = 3;
  int tight = 0;
  for (std::uint64_t seed = 1; seed <= 500 && out.pass; ++seed) {
    spec.seed = seed;
    const auto f = generate(spec);
    const auto polys = oracle_polys(f, all_of(f.size()));
    for (const auto& s : oracle::subsets(f.size(), 4)) {
      if (lattice_in(polys, s, 0, 4).empty()) out.fail("seed " + std::to_string(seed) + ": 4-subfamily misses Z^2");
    }
    const auto full = lattice_in(polys, all_of(f.size()), 0, 4);
    if (full.empty()) out.fail("seed " + std::to_string(seed) + ": full intersection misses Z^2");
    if (full.size() == 1) ++tight;
    const auto r = helly_check(f, 4, z2, Scalar(1), Scalar(0));
    if (!r.hypothesis || !r.conclusion) out.fail("seed " + std::to_string(seed) + ": helly_check disagrees");
    if (r.value != MeasureValue::exact(Scalar(static_cast<long>(full.size())))) {
      out.fail("seed " + std::to_string(seed) + ": lattice count mismatch");
    }
  }
  if (out.pass) {
    out.detail = "witness: 3-wise yes, 4-wise no; 500/500 families with lattice point in full intersection (" +
                 std::to_string(tight) + " with exactly one)";
  }
  return out;
}

// Criterion 3: volume Helly fails at h = 3 and holds with loss 1/16 at h = 4.
Outcome volume_helly() {
  Outcome out;
  const auto vol = Measure::volume();
  const auto bkp = generated(GeneratorKind::BkpCounterexample, 1);
  const auto r = helly_check(bkp, 3, vol, Scalar(1), Scalar(0));
  if (!r.hypothesis || r.conclusion || r.value != MeasureValue::exact(Scalar(1, 100))) {
    out.fail("bkp counterexample not reproduced");
    return out;
  }
  Rng rng(3003);
  const Scalar floor = Scalar(1, 16);
  Scalar min_full = -1;
  std::size_t accepted = 0, drawn = 0;
  while (accepted < 200 && out.pass) {
    ++drawn;
    Family f;
    for (int k = 0; k < 5; ++k) {
      Point c = gen::grid_point(rng, 1, 3, 2);
      std::vector<Point> pts;
      for (int v = 0; v < 5; ++v) pts.push_back(c + gen::grid_point(rng, -2, 2, 2));
      f.members.push_back(convex_hull(pts));
    }
    bool ok = true;
    for (const auto& m : f.members) ok = ok && m.affine_dim() == 2;
    if (!ok) continue;
    const auto polys = oracle_polys(f, all_of(5));
    for (const auto& s : oracle::subsets(5, 4)) {
      std::vector<std::vector<Point>> sub;
      for (std::size_t i : s) sub.push_back(polys[i]);
      const auto cut = oracle::clip_all(sub);
      ok = ok && cut.size() >= 3 && oracle::area(cut) >= 1;
    }
    if (!ok) continue;
    ++accepted;
    const auto full = oracle::clip_all(polys);
    const Scalar a = full.size() >= 3 ? oracle::area(full) : Scalar(0);
    if (min_full < 0 || a < min_full) min_full = a;
    if (a < floor) out.fail("full intersection area " + str(a) + " < 1/16");
    const auto lib = helly_check(f, 4, vol, Scalar(1), Scalar(15, 16));
    if (!lib.hypothesis || !lib.conclusion || lib.value != MeasureValue::exact(a)) {
      out.fail("library disagrees with clipper on draw " + std::to_string(drawn));
    }
  }
  if (out.pass) {
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.3f", static_cast<double>(accepted) / static_cast<double>(drawn));
    out.detail = "bkp: area 1/100; 200 rejection-sampled families (acceptance " + std::string(rate) +
                 "), min vol(∩F) = " + str(min_full) + " >= 1/16";
  }
  return out;
}

// Criterion 4: floating body of the square, monotonicity and decay exponent.
Outcome floating() {
  Outcome out;
  const auto vol = Measure::volume();
  const auto sq = ConvexBody::box(P(0, 0), P(1, 1));
  const auto q = floating_body(sq, vol, Scalar(1, 4), DirectionSet::axis(2));
  const auto expect = ConvexBody::box(P(Scalar(1, 4), Scalar(1, 4)), P(Scalar(3, 4), Scalar(3, 4)));
  if (!is_subset(q.body, expect) || !is_subset(expect, q.body) || q.delta != MeasureValue::exact(Scalar(3, 4))) {
    out.fail("square at eps = 1/4 is not [1/4,3/4]^2 with delta 3/4");
    return out;
  }
  const std::vector<Scalar> eps{Scalar(1, 2), Scalar(1, 4), Scalar(1, 8), Scalar(1, 16), Scalar(1, 32)};
  const std::vector<DirectionSet> dirs{DirectionSet::axis(2), DirectionSet::farey(2), DirectionSet::farey(4)};
  const auto tri = convex_hull({P(0, 0), P(3, 0), P(1, 2)});
  for (const auto& k : {sq, tri}) {
    std::vector<std::vector<ConvexBody>> grid;
    for (const auto& e : eps) {
      grid.emplace_back();
      for (const auto& d : dirs) grid.back().push_back(floating_body(k, vol, e, d).body);
    }
    for (std::size_t i = 0; i < eps.size(); ++i) {
      for (std::size_t j = 0; j < dirs.size(); ++j) {
        if (i + 1 < eps.size() && !oracle_subset(grid[i][j], grid[i + 1][j].vertex_list())) out.fail("not monotone in eps");
        if (j + 1 < dirs.size() && !oracle_subset(grid[i][j + 1], grid[i][j].vertex_list())) {
          out.fail("not monotone in directions");
        }
      }
    }
  }
  std::vector<double> xs, ys;
  Scalar e = 1;
  for (int i = 1; i <= 5; ++i) {
    e /= 4;
    const auto fb = floating_body(sq, vol, e, DirectionSet::farey(7));
    const Scalar gap = 1 - evaluate(vol, fb.body).value();
    xs.push_back(std::log(e.get_d()));
    ys.push_back(std::log(gap.get_d()));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / 5, my += ys[i] / 5;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
  const double slope = sxy / sxx;
  if (slope < 0.5 || slope > 0.9) out.fail("fitted exponent " + std::to_string(slope) + " outside [0.5, 0.9]");
  if (out.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "square eps=1/4 exact; 5x3 grids monotone; exponent %.4f in [0.5, 0.9]", slope);
    out.detail = buf;
  }
  return out;
}

// Criterion 5: classic Tverberg partitions.
Outcome tverberg() {
  Outcome out;
  Rng rng(5005);
  for (std::size_t m : {2u, 3u, 4u}) {
    for (int t = 0; t < 100 && out.pass; ++t) {
      const auto pts = gen::general_position(rng, 3 * (m - 1) + 1, 0, 20, 1);
      const auto r = classic_tverberg(pts, m);
      if (r.partition.size() != m) out.fail("wrong number of parts");
      std::vector<bool> seen(pts.size(), false);
      std::vector<std::vector<Point>> parts;
      std::vector<ConvexBody> hulls;
      for (const auto& part : r.partition) {
        parts.emplace_back();
        for (std::size_t i : part) {
          if (seen[i]) out.fail("index used twice");
          seen[i] = true;
          parts.back().push_back(pts[i]);
        }
        hulls.push_back(convex_hull(parts.back()));
      }
      for (bool s : seen) {
        if (!s) out.fail("partition misses a point");
      }
      const Point w = r.witness.vertex_list().front();
      for (const auto& part : parts) {
        if (!oracle::in_hull(part, w)) out.fail("witness outside a part hull");
      }
      if (!contains(intersect(hulls), w)) out.fail("library intersection misses the witness");
      if (!oracle::tverberg_point_exists(pts, m)) out.fail("candidate-point search finds no Tverberg point");
      if (m < 4 && !oracle::tverberg_exists(pts, m)) out.fail("partition search finds no partition");
    }
  }
  if (out.pass) out.detail = "m = 2, 3, 4: 300 partitions verified; candidate-point search agrees on all, partition search on m <= 3";
  return out;
}

// Criterion 6: colorful Carathéodory against exhaustive search.
Outcome caratheodory() {
  Outcome out;
  Rng rng(6006);
  auto run = [&](std::size_t k, int trials) {
    const std::size_t n = k == 1 ? 3 : 4;
    for (int t = 0; t < trials && out.pass; ++t) {
      std::vector<Point> targets;
      for (std::size_t i = 0; i < k; ++i) targets.push_back(gen::grid_point(rng, 2, 4, 2));
      std::vector<std::vector<Point>> classes(n);
      for (auto& c : classes) {
        bool ok;
        do {
          c = gen::grid_points(rng, k + 2, 0, 6, 1);
          ok = true;
          for (const auto& x : targets) ok = ok && oracle::in_hull(c, x);
        } while (!ok);
      }
      bool exists = false;
      std::vector<std::size_t> pick(n, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (exists) return;
        if (i == n) {
          std::vector<Point> sel;
          for (std::size_t j = 0; j < n; ++j) sel.push_back(classes[j][pick[j]]);
          bool all = true;
          for (const auto& x : targets) all = all && oracle::in_hull(sel, x);
          exists = all;
          return;
        }
        for (pick[i] = 0; pick[i] < classes[i].size(); ++pick[i]) rec(i + 1);
      };
      rec(0);
      try {
        const auto idx = colorful_caratheodory(targets, classes);
        std::vector<Point> sel;
        for (std::size_t j = 0; j < n; ++j) sel.push_back(classes[j][idx[j]]);
        for (const auto& x : targets) {
          if (!oracle::in_hull(sel, x)) out.fail("returned choice misses a target");
        }
        if (!exists) out.fail("exhaustive search found nothing but the library did");
      } catch (const Error&) {
        if (exists) out.fail("library failed where exhaustive search succeeds");
      }
    }
  };
  run(1, 200);
  run(2, 50);
  if (out.pass) out.detail = "200 k=1 and 50 k=2 instances, containment exact, exhaustive search agrees";
  return out;
}

bool oracle_net_ok(const std::vector<Point>& pts, const std::vector<ConvexBody>& net, std::size_t size) {
  for (const auto& s : oracle::subsets(pts.size(), size)) {
    std::vector<Point> sub;
    for (std::size_t i : s) sub.push_back(pts[i]);
    bool hit = false;
    for (const auto& x : net) hit = hit || oracle_subset(x, sub);
    if (!hit) return false;
  }
  return true;
}

// Criterion 7: weak nets, certified exhaustively.
Outcome nets() {
  Outcome out;
  const std::vector<Point> corners{P(0, 0), P(1, 0), P(1, 1), P(0, 1)};
  const auto sq = weak_net(Family::from_points(corners), Measure::nonempty(), Scalar(0), Scalar(3, 4));
  if (sq.net.size() != 1) out.fail("square corners: net of size " + std::to_string(sq.net.size()));
  if (!oracle_net_ok(corners, sq.net, 3)) out.fail("square corners: net misses a triangle");
  Rng rng(7007);
  std::size_t largest = 0;
  for (int t = 0; t < 50 && out.pass; ++t) {
    const auto pts = gen::general_position(rng, 12, 0, 30, 1);
    const auto r = weak_net(Family::from_points(pts), Measure::nonempty(), Scalar(0), Scalar(1, 2));
    largest = std::max(largest, r.net.size());
    if (!oracle_net_ok(pts, r.net, 6)) out.fail("instance " + std::to_string(t) + ": a 6-subset hull misses the net");
  }
  if (out.pass) {
    out.detail = "square corners: size-1 net; 50 twelve-point nets pass all C(12,6) subsets (largest net " +
                 std::to_string(largest) + ")";
  }
  return out;
}

// Criterion 8: the (p,q) pipeline end to end.
Outcome pipeline() {
  Outcome out;
  const auto vol = Measure::volume();
  Family f;
  f.members = {ConvexBody::box(P(0, 0), P(2, 2)), ConvexBody::box(P(1, 0), P(3, 2)), ConvexBody::box(P(2, 0), P(4, 2))};
  const auto cert = pq_pierce(f, 3, 2, vol, Scalar(1), Scalar(1, 8));
  if (cert.witnesses.size() > 2) out.fail("three squares: " + std::to_string(cert.witnesses.size()) + " witnesses");
  for (const auto& w : cert.witnesses) {
    if (oracle::area(oracle::brute_hull(w.vertex_list())) < Scalar(7, 8)) out.fail("three squares: witness below 7/8");
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!oracle_subset(cert.witnesses[cert.coverage[j]], f[j].vertex_list())) out.fail("three squares: coverage broken");
  }
  if (!verify_certificate(f, cert, vol, Scalar(1), Scalar(1, 8))) out.fail("three squares: certificate rejected");
  const auto z2 = Measure::integer_lattice(2);
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ClusteredLattice;
  spec.count = 12;
  spec.clusters = 3;
  for (std::uint64_t seed = 1; seed <= 10 && out.pass; ++seed) {
    spec.seed = seed;
    const auto g = generate(spec);
    const auto c = pq_pierce(g, 4, 2, z2, Scalar(1), Scalar(0));
    const std::string tag = "clustered seed " + std::to_string(seed) + ": ";
    if (c.witnesses.size() != 3) out.fail(tag + std::to_string(c.witnesses.size()) + " witnesses");
    for (const auto& w : c.witnesses) {
      const auto& v = w.vertex_list();
      if (v.size() != 1 || v[0][0].get_den() != 1 || v[0][1].get_den() != 1) {
        out.fail(tag + "witness is not a lattice point");
      }
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!oracle_subset(c.witnesses[c.coverage[j]], g[j].vertex_list())) out.fail(tag + "coverage broken");
    }
    if (!verify_certificate(g, c, z2, Scalar(1), Scalar(0))) out.fail(tag + "certificate rejected");
  }
  if (out.pass) {
    out.detail = "three squares: " + std::to_string(cert.witnesses.size()) +
                 " witnesses of area >= 7/8; 10 clustered-lattice families: 3 lattice-point witnesses each";
  }
  return out;
}

// Criterion 9: colorful Helly, classic and lattice.
Outcome colorful() {
  Outcome out;
  Rng rng(9009);
  const Direction up{Scalar(0), Scalar(1)};
  for (int t = 0; t < 50 && out.pass; ++t) {
    const Point q = gen::grid_point(rng, 0, 5, 2);
    std::vector<Family> classes(3);
    std::vector<std::vector<std::pair<Vector, Scalar>>> planes(3);
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t size = rng.between(2, 4);
      for (std::size_t k = 0; k < size; ++k) {
        Vector n{Scalar(rng.between(-3, 3)), Scalar(rng.between(1, 3))};
        if (rng.below(2)) n = {-n[0], -n[1]};
        const Scalar b = n[0] * q[0] + n[1] * q[1] + rng.grid(0, 2, 2);
        planes[c].emplace_back(n, b);
        classes[c].members.push_back(ConvexBody::from_halfspaces(2, {Halfspace(n, b)}));
      }
    }
    const auto r = colorful_helly(classes, Measure::nonempty(), Scalar(1), Scalar(0), up);
    if (r.class_index >= 3 || r.witness.is_empty()) {
      out.fail("classic instance " + std::to_string(t) + ": no witness");
      break;
    }
    for (const auto& [n, b] : planes[r.class_index]) {
      for (const auto& v : r.witness.vertex_list()) {
        if (n[0] * v[0] + n[1] * v[1] > b) out.fail("classic instance " + std::to_string(t) + ": witness outside a member");
      }
    }
  }
  const auto z2 = Measure::integer_lattice(2);
  for (int t = 0; t < 20 && out.pass; ++t) {
    std::vector<Family> classes(4);
    for (auto& c : classes) {
      const std::size_t size = rng.between(1, 3);
      for (std::size_t k = 0; k < size; ++k) {
        const Point lo = P(-rng.grid(0, 2, 3), -rng.grid(0, 2, 3));
        const Point hi = P(rng.grid(0, 2, 3), rng.grid(0, 2, 3));
        c.members.push_back(ConvexBody::box(lo, hi));
      }
    }
    const auto r = colorful_helly(classes, z2, Scalar(1), Scalar(0), up);
    const auto& cls = classes[r.class_index];
    const auto common = oracle::grid_scan(-3, 3, [&](const Point& p) {
      for (const auto& m : cls.members) {
        if (!oracle::in_hull(m.vertex_list(), p)) return false;
      }
      return true;
    });
    const auto got = oracle::grid_scan(-3, 3, [&](const Point& p) { return oracle::in_hull(r.witness.vertex_list(), p); });
    if (got.empty()) out.fail("lattice instance " + std::to_string(t) + ": witness holds no lattice point");
    for (const auto& p : got) {
      if (std::find(common.begin(), common.end(), p) == common.end()) {
        out.fail("lattice instance " + std::to_string(t) + ": witness point outside the class");
      }
    }
  }
  if (out.pass) out.detail = "50 classic and 20 lattice instances, witness inside every member of the returned class";
  return out;
}

// Criterion 10: fractional Helly witness on planted families.
Outcome fractional() {
  Outcome out;
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PlantedFractional;
  spec.count = 10;
  spec.planted = 6;
  std::size_t least = 10;
  for (std::uint64_t seed = 1; seed <= 50 && out.pass; ++seed) {
    spec.seed = seed;
    const auto f = generate(spec);
    const auto r = fractional_helly_witness(f, Measure::volume(), Scalar(2), Scalar(1, 4), 4, Direction{Scalar(0), Scalar(1)});
    std::size_t inside = 0;
    for (std::size_t j = 0; j < f.size(); ++j) inside += oracle_subset(r.witness, f[j].vertex_list()) ? 1 : 0;
    least = std::min(least, inside);
    if (inside < 6) out.fail("seed " + std::to_string(seed) + ": witness in " + std::to_string(inside) + "/10 members");
    if (inside != r.members.size()) out.fail("seed " + std::to_string(seed) + ": reported members disagree");
  }
  if (out.pass) out.detail = "50 planted families, witness in at least " + std::to_string(least) + "/10 members (planted 6)";
  return out;
}

struct Criterion {
  int id;
  double budget;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{{1, 30, lp_duality}, {2, 60, doignon},  {3, 120, volume_helly},
                                        {4, 60, floating},   {5, 120, tverberg}, {6, 60, caratheodory},
                                        {7, 120, nets},      {8, 60, pipeline}, {9, 60, colorful},
                                        {10, 60, fractional}};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget) o.fail("over budget");
    std::printf("%s criterion %d: %s [%.2fs / %.0fs]\n", o.pass ? "PASS" : "FAIL", c.id, o.detail.c_str(), secs, c.budget);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
