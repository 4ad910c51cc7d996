#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "quanthelly/combinatorial.hpp"
#include "quanthelly/error.hpp"
#include "quanthelly/random.hpp"

namespace quanthelly {

namespace {

constexpr std::size_t kMinimalSearchLimit = 2000000;

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int o = orient2d(a, b, c);
  if (o == 0) return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
  const int s1 = orient2d(a, b, p), s2 = orient2d(b, c, p), s3 = orient2d(c, a, p);
  return s1 * o >= 0 && s2 * o >= 0 && s3 * o >= 0;
}

// p ∈ conv{pts[i] : i ∈ idx} for at most three planar points.
bool small_hull_contains(const std::vector<Point>& pts, const IndexSet& idx, const Point& p) {
  switch (idx.size()) {
    case 1:
      return pts[idx[0]] == p;
    case 2:
      return on_segment(p, pts[idx[0]], pts[idx[1]]);
    case 3:
      return in_triangle(p, pts[idx[0]], pts[idx[1]], pts[idx[2]]);
    default: {
      std::vector<Point> sub;
      for (auto i : idx) sub.push_back(pts[i]);
      return contains(convex_hull(sub), p);
    }
  }
}

// Data points plus all intersections of lines through pairs of data points.
std::vector<Point> candidate_points(const std::vector<Point>& pts) {
  std::set<Point> out(pts.begin(), pts.end());
  std::vector<std::pair<Point, Point>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] != pts[j]) lines.emplace_back(pts[i], pts[j]);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Point& a = lines[i].first;
    const Point r = lines[i].second - a;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Point& b = lines[j].first;
      const Point s = lines[j].second - b;
      const Scalar den = r[0] * s[1] - r[1] * s[0];
      if (den == 0) continue;
      const Point ba = b - a;
      const Scalar t = (ba[0] * s[1] - ba[1] * s[0]) / den;
      out.insert(a + t * r);
    }
  }
  return {out.begin(), out.end()};
}

Point centroid(const std::vector<Point>& pts) {
  Vector c(pts.front().dim(), Scalar(0));
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  }
  for (auto& x : c) x /= static_cast<long>(pts.size());
  return Point(std::move(c));
}

void sort_by_distance(std::vector<Point>& cands, const Point& center) {
  std::vector<std::pair<Scalar, Point>> keyed;
  for (auto& p : cands) {
    Point d = p - center;
    keyed.emplace_back(dot(d.coords(), d.coords()), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end());
  cands.clear();
  for (auto& [k, p] : keyed) cands.push_back(std::move(p));
}

// Inclusion-minimal subsets of the points whose hull contains p, sorted by
// size then lexicographically.
std::vector<IndexSet> minimal_subsets(const std::vector<Point>& pts, const Point& p) {
  std::vector<IndexSet> out;
  std::vector<bool> single(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) {
      single[i] = true;
      out.push_back({i});
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (single[i]) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (single[j]) continue;
      if (on_segment(p, pts[i], pts[j])) {
        pairs.emplace(i, j);
        out.push_back({i, j});
      }
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (single[i]) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (single[j] || pairs.count({i, j})) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (single[k] || pairs.count({i, k}) || pairs.count({j, k})) continue;
        if (in_triangle(p, pts[i], pts[j], pts[k])) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

bool pack(const std::vector<IndexSet>& subsets, std::size_t start, std::size_t m, std::vector<bool>& used,
          std::vector<IndexSet>& chosen) {
  if (chosen.size() == m) return true;
  for (std::size_t s = start; s < subsets.size(); ++s) {
    const IndexSet& cand = subsets[s];
    if (std::any_of(cand.begin(), cand.end(), [&](std::size_t i) { return used[i]; })) continue;
    for (auto i : cand) used[i] = true;
    chosen.push_back(cand);
    if (pack(subsets, s + 1, m, used, chosen)) return true;
    chosen.pop_back();
    for (auto i : cand) used[i] = false;
  }
  return false;
}

Scalar min_level(const Family& t, const Measure& msr) {
  std::optional<Scalar> lambda;
  for (const auto& b : t.members) {
    MeasureValue v = evaluate(msr, b);
    if (v.is_infinite()) throw InvalidArgument("family member has infinite measure");
    if (!lambda || v.lo() < *lambda) lambda = v.lo();
  }
  return *lambda;
}

std::vector<Point> representative_points(const Family& t) {
  std::vector<Point> pts;
  for (const auto& b : t.members) {
    if (b.is_empty()) throw InvalidArgument("family member is empty");
    pts.push_back(b.vertex_list().front());
  }
  return pts;
}

bool all_points(const Family& t) {
  return std::all_of(t.members.begin(), t.members.end(), [](const ConvexBody& b) {
    return !b.is_empty() && b.bounded() && b.vertex_list().size() == 1;
  });
}

// Smallest (then lexicographically first) subset of `pool` whose hull-union
// contains p.
IndexSet minimal_cover(const Family& t, const IndexSet& pool, const Point& p) {
  const std::size_t d = static_cast<std::size_t>(t.dim());
  std::size_t work = 0;
  for (std::size_t s = 1; s <= std::min(d + 1, pool.size()); ++s) {
    std::optional<IndexSet> found;
    for_each_subset(pool.size(), s, [&](const IndexSet& idx) {
      if (++work > kMinimalSearchLimit) throw BudgetExceeded("tverberg: minimal part search exceeds budget");
      IndexSet members;
      for (auto i : idx) members.push_back(pool[i]);
      if (contains(hull_of_union(t, members), p)) {
        found = members;
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  throw VerificationFailed("tverberg: remaining members do not surround the witness point");
}

}  // namespace

TverbergResult classic_tverberg(const std::vector<Point>& points, std::size_t m) {
  if (points.empty()) throw InvalidArgument("tverberg: empty point set");
  if (m == 0) throw InvalidArgument("tverberg: need at least one part");
  if (points.front().dim() != 2) throw Unsupported("classic tverberg search is plane only");
  if (m > points.size()) throw HypothesisViolated("tverberg: more parts than points");
  std::vector<Point> cands = candidate_points(points);
  sort_by_distance(cands, centroid(points));
  for (const auto& p : cands) {
    const auto subsets = minimal_subsets(points, p);
    if (subsets.size() < m) continue;
    std::vector<bool> used(points.size(), false);
    std::vector<IndexSet> chosen;
    if (!pack(subsets, 0, m, used, chosen)) continue;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!used[i]) chosen.back().push_back(i);
    }
    for (auto& part : chosen) std::sort(part.begin(), part.end());
    TverbergResult r;
    r.partition = std::move(chosen);
    r.witness = ConvexBody::point(p);
    r.achieved = MeasureValue::exact(1);
    r.level = 1;
    return r;
  }
  throw Infeasible("tverberg: no partition into " + std::to_string(m) + " parts with a common point");
}

TverbergResult tverberg_partition(const Family& t, std::size_t m, const Measure& msr, const Scalar& eps1,
                                  const Scalar& eps2, const TverbergOptions& options) {
  if (t.size() == 0) throw InvalidArgument("tverberg: empty family");
  if (m == 0) throw InvalidArgument("tverberg: need at least one part");
  if (eps1 < 0 || eps1 >= 1 || eps2 < 0 || eps2 >= 1) throw InvalidArgument("tverberg: eps must lie in [0,1)");
  const int d = t.dim();
  for (const auto& b : t.members) {
    if (!b.bounded()) throw Unsupported("tverberg: members must be bounded");
  }

  if (msr.kind() == MeasureKind::Nonempty) {
    // Any common point of the representative hulls lies in every part's
    // hull-union.
    TverbergResult r = classic_tverberg(representative_points(t), m);
    return r;
  }

  const Scalar lambda = min_level(t, msr);
  if (lambda <= 0) throw InvalidArgument("tverberg: members must have positive measure");
  const HellyParameters params = options.params ? *options.params : default_helly_parameters(msr, d, lambda, eps2);
  const std::size_t n = t.size();
  const std::size_t dd = static_cast<std::size_t>(d);
  const std::size_t need = (m - 1) * dd * params.h * params.c + 1;
  if (n < need) {
    throw HypothesisViolated("tverberg: " + std::to_string(m) + " parts need at least " + std::to_string(need) +
                             " members, got " + std::to_string(n));
  }

  // T0 = ∩ conv(∪T') over all subfamilies T' missing (m-1)·d·c members.
  const std::size_t s = n - (m - 1) * dd * params.c;
  Integer count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(s));
  if (count > static_cast<unsigned long>(options.subset_budget)) {
    throw BudgetExceeded("tverberg: " + count.get_str() + " subfamilies of size " + std::to_string(s) +
                         " exceed the budget");
  }
  std::vector<ConvexBody> hulls;
  for_each_subset(n, s, [&](const IndexSet& idx) {
    hulls.push_back(hull_of_union(t, idx));
    return true;
  });
  const ConvexBody t0 = intersect(hulls);
  const Scalar floor1 = (1 - eps1) * lambda;
  if (!at_least(msr, t0, floor1)) {
    MeasureValue got = evaluate(msr, t0);
    throw Infeasible("tverberg: intersection T0 too small (f = " + format_decimal(got.lo()) + ", need " +
                     format_decimal(floor1) + ")");
  }

  InscribedOptions io;
  io.level = floor1;
  io.budget = params.c;
  Inscribed ins = inscribed_polytope(msr, t0, eps2, io);
  const std::vector<Point> targets = ins.body.vertex_list();

  IndexSet remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  TverbergResult r;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    IndexSet part;
    if (targets.size() == 1) {
      part = minimal_cover(t, remaining, targets.front());
    } else {
      std::vector<Point> pool;
      std::vector<std::size_t> owner;
      for (auto i : remaining) {
        for (const auto& v : t[i].vertex_list()) {
          pool.push_back(v);
          owner.push_back(i);
        }
      }
      const std::size_t classes_needed = std::max(targets.size() * dd, dd + 1);
      std::vector<std::vector<Point>> classes(classes_needed, pool);
      auto pick = colorful_caratheodory(targets, classes);
      std::set<std::size_t> owners;
      for (auto c : pick) owners.insert(owner[c]);
      part.assign(owners.begin(), owners.end());
    }
    IndexSet rest;
    std::set_difference(remaining.begin(), remaining.end(), part.begin(), part.end(), std::back_inserter(rest));
    remaining = std::move(rest);
    r.partition.push_back(std::move(part));
  }
  r.partition.push_back(remaining);
  for (const auto& part : r.partition) {
    if (!is_subset(ins.body, hull_of_union(t, part))) {
      throw VerificationFailed("tverberg: a part's hull does not contain the witness");
    }
  }
  r.witness = ins.body;
  r.achieved = ins.achieved;
  r.level = lambda;
  return r;
}

SelectionResult selection(const Family& t, const Measure& msr, const Scalar& eps, std::size_t m_parts,
                          const SelectionOptions& options) {
  if (eps < 0 || eps >= 1) throw InvalidArgument("selection: eps must lie in [0,1)");
  const TverbergResult tv = tverberg_partition(t, m_parts, msr, eps / 2, eps / 2, options.tverberg);
  const std::size_t d = static_cast<std::size_t>(t.dim());
  const std::vector<Point>& targets = tv.witness.vertex_list();
  const std::size_t r = std::max(d * targets.size(), d + 1);
  const std::size_t n = t.size();
  if (n < r) throw HypothesisViolated("selection: family smaller than the tuple size " + std::to_string(r));

  SelectionResult out;
  out.witness = tv.witness;
  out.r = r;
  std::set<IndexSet> tuples;
  const Integer total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(r));
  const bool points_only = all_points(t) && d == 2 && r == 3 && targets.size() == 1;
  auto qualifies = [&](const IndexSet& idx) {
    if (points_only) {
      std::vector<Point> pts;
      for (auto i : idx) pts.push_back(t[i].vertex_list().front());
      return in_triangle(targets.front(), pts[0], pts[1], pts[2]);
    }
    return is_subset(tv.witness, hull_of_union(t, idx));
  };
  if (total <= static_cast<unsigned long>(options.exhaustive_budget)) {
    out.exhaustive = true;
    for_each_subset(n, r, [&](const IndexSet& idx) {
      if (qualifies(idx)) tuples.insert(idx);
      return true;
    });
  } else {
    std::size_t done = 0;
    for_each_subset(tv.partition.size(), r, [&](const IndexSet& colors) {
      std::vector<std::vector<Point>> classes;
      std::vector<std::vector<std::size_t>> owners;
      for (auto c : colors) {
        classes.emplace_back();
        owners.emplace_back();
        for (auto i : tv.partition[c]) {
          for (const auto& v : t[i].vertex_list()) {
            classes.back().push_back(v);
            owners.back().push_back(i);
          }
        }
      }
      auto pick = colorful_caratheodory(targets, classes);
      IndexSet tuple;
      for (std::size_t k = 0; k < pick.size(); ++k) tuple.push_back(owners[k][pick[k]]);
      std::sort(tuple.begin(), tuple.end());
      if (!qualifies(tuple)) throw VerificationFailed("selection: rainbow tuple does not contain the witness");
      tuples.insert(std::move(tuple));
      return ++done < options.exhaustive_budget;
    });
  }
  out.tuples.assign(tuples.begin(), tuples.end());
  out.rho_achieved = Scalar(Integer(static_cast<unsigned long>(out.tuples.size())), total);
  out.rho_achieved.canonicalize();
  return out;
}

namespace {

bool covered(const Family& t, const IndexSet& idx, const std::vector<ConvexBody>& net) {
  if (net.empty()) return false;
  const ConvexBody hull = hull_of_union(t, idx);
  return std::any_of(net.begin(), net.end(), [&](const ConvexBody& b) { return is_subset(b, hull); });
}

IndexSet extend_uncovered(const Family& t, IndexSet idx, const std::vector<ConvexBody>& net) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::binary_search(idx.begin(), idx.end(), i)) continue;
    IndexSet bigger = idx;
    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), i), i);
    if (!covered(t, bigger, net)) idx = std::move(bigger);
  }
  return idx;
}

std::size_t subset_size(std::size_t n, const Scalar& eps_prime) {
  Integer k = ceil_of(eps_prime * static_cast<unsigned long>(n));
  return std::max<std::size_t>(1, std::min<std::size_t>(n, k.get_ui()));
}

}  // namespace

UncoveredResult find_uncovered_subset(const Family& t, const std::vector<ConvexBody>& net, const Scalar& eps_prime,
                                      const UncoveredOptions& options) {
  const std::size_t n = t.size();
  if (n == 0) return {std::nullopt, true};
  const std::size_t k = subset_size(n, eps_prime);
  for (IndexSet h : options.hints) {
    std::sort(h.begin(), h.end());
    if (h.size() >= k && !covered(t, h, net)) return {h, false};
  }
  if (options.hints_only) return {std::nullopt, false};
  const Integer total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (total <= static_cast<unsigned long>(options.exhaustive_budget)) {
    std::optional<IndexSet> found;
    for_each_subset(n, k, [&](const IndexSet& idx) {
      if (covered(t, idx, net)) return true;
      found = idx;
      return false;
    });
    if (found) return {extend_uncovered(t, *found, net), true};
    return {std::nullopt, true};
  }
  Rng rng(options.seed);
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    rng.shuffle(all);
    IndexSet idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(idx.begin(), idx.end());
    if (!covered(t, idx, net)) return {extend_uncovered(t, idx, net), false};
  }
  return {std::nullopt, false};
}

bool validate_net(const Family& t, const std::vector<ConvexBody>& net, const Scalar& eps_prime) {
  const std::size_t k = subset_size(t.size(), eps_prime);
  return for_each_subset(t.size(), k, [&](const IndexSet& idx) { return covered(t, idx, net); });
}

namespace {

// Classic point families: among line-intersection candidates inside
// conv(A), the point lying in the most r-tuples not yet covered by the net.
Point best_classic_witness(const Family& t, const IndexSet& a, const std::vector<ConvexBody>& net) {
  std::vector<Point> pts = representative_points(t);
  std::vector<IndexSet> open;
  for_each_subset(t.size(), 3, [&](const IndexSet& idx) {
    bool hit = std::any_of(net.begin(), net.end(), [&](const ConvexBody& b) {
      return small_hull_contains(pts, idx, b.vertex_list().front());
    });
    if (!hit) open.push_back(idx);
    return true;
  });
  const ConvexBody hull_a = hull_of_union(t, a);
  std::optional<Point> best;
  std::size_t best_count = 0;
  for (const auto& p : candidate_points(pts)) {
    if (!contains(hull_a, p)) continue;
    std::size_t count = 0;
    for (const auto& idx : open) count += small_hull_contains(pts, idx, p) ? 1 : 0;
    if (!best || count > best_count) {
      best = p;
      best_count = count;
    }
  }
  return *best;
}

}  // namespace

NetResult weak_net(const Family& t, const Measure& msr, const Scalar& eps, const Scalar& eps_prime,
                   const NetOptions& options) {
  if (eps_prime <= 0 || eps_prime >= 1) throw InvalidArgument("weak_net: eps' must lie in (0,1)");
  if (t.size() == 0) throw InvalidArgument("weak_net: empty family");
  const int d = t.dim();
  const bool classic = msr.kind() == MeasureKind::Nonempty;
  const Scalar lambda = classic ? Scalar(1) : min_level(t, msr);
  const HellyParameters params = options.selection.tverberg.params
                                     ? *options.selection.tverberg.params
                                     : default_helly_parameters(msr, d, lambda, eps / 2);
  const bool classic_points = classic && d == 2 && all_points(t);
  const std::size_t tuple_size = std::max(static_cast<std::size_t>(d) * (classic ? 1 : params.c), static_cast<std::size_t>(d) + 1);

  NetResult out;
  std::optional<Scalar> rho_min;
  std::optional<Integer> cap;
  while (true) {
    UncoveredResult u = find_uncovered_subset(t, out.net, eps_prime, options.search);
    if (!u.subset) {
      out.certified = u.exhaustive;
      break;
    }
    const IndexSet& a = *u.subset;
    const Family sub = t.subfamily(a);
    ConvexBody witness;
    if (a.size() < tuple_size) {
      // Too few members for a selection step: any large piece of the hull
      // of the union covers A.
      if (classic_points) {
        witness = ConvexBody::point(best_classic_witness(t, a, out.net));
      } else if (classic) {
        witness = ConvexBody::point(hull_of_union(t, a).vertex_list().front());
      } else {
        InscribedOptions io;
        io.level = lambda;
        witness = inscribed_polytope(msr, hull_of_union(t, a), eps, io).body;
      }
    } else {
      std::size_t parts = std::max<std::size_t>(1, max_tverberg_parts(a.size(), d, params));
      if (options.max_parts) parts = std::min(parts, std::max<std::size_t>(1, *options.max_parts));
      SelectionResult sel = selection(sub, msr, eps, parts, options.selection);
      witness = classic_points ? ConvexBody::point(best_classic_witness(t, a, out.net)) : sel.witness;
      if (!rho_min || sel.rho_achieved < *rho_min) rho_min = sel.rho_achieved;
      if (*rho_min > 0) {
        // ceil((ρ_min · ε'^r)^-1)
        Scalar base = *rho_min;
        for (std::size_t i = 0; i < sel.r; ++i) base *= eps_prime;
        cap = ceil_of(1 / base);
      }
    }
    out.achieved.push_back(evaluate(msr, witness));
    out.net.push_back(std::move(witness));
    ++out.iterations;
    if (cap && Integer(static_cast<unsigned long>(out.iterations)) > *cap) {
      throw BudgetExceeded("weak_net: iteration cap " + cap->get_str() + " exceeded (rho_min " +
                           format_scalar(*rho_min) + ", net size " + std::to_string(out.net.size()) + ")");
    }
  }
  out.rho_min = rho_min.value_or(Scalar(1));
  for (const auto& v : out.achieved) {
    if (!v.at_least((1 - eps) * lambda) &&
        !(msr.kind() == MeasureKind::Perimeter && v.hi() >= (1 - eps) * lambda)) {
      throw VerificationFailed("weak_net: a net element is below (1-eps)·lambda");
    }
  }
  return out;
}

}  // namespace quanthelly
