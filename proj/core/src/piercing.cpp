#include "quanthelly/piercing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quanthelly/error.hpp"
#include "quanthelly/random.hpp"

namespace quanthelly {

namespace {

constexpr std::size_t kCoresPerCandidate = 64;

std::string index_text(const IndexSet& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

ConvexBody intersection_of(const Family& f, const IndexSet& idx) {
  std::vector<ConvexBody> bodies;
  for (auto i : idx) bodies.push_back(f[i]);
  return intersect(bodies);
}

bool has_body(const std::vector<Candidate>& cands, const ConvexBody& b) {
  return std::any_of(cands.begin(), cands.end(), [&](const Candidate& c) { return c.body == b; });
}

// Shrinks of one bounded intersection.
std::vector<ConvexBody> shrinks_of(const ConvexBody& body, const Measure& msr, const Scalar& lambda,
                                   const Scalar& eps, const Scalar& threshold, const DirectionSet& dirs) {
  std::vector<ConvexBody> out;
  switch (msr.kind()) {
    case MeasureKind::Nonempty:
      out.push_back(ConvexBody::point(body.vertex_list().front()));
      break;
    case MeasureKind::LatticeCount:
      if (eps == 0) {
        const Integer k = ceil_of(lambda);
        if (k <= 1) {
          auto pts = lattice_points(body, msr);
          if (pts.size() > kCoresPerCandidate) pts.resize(kCoresPerCandidate);
          for (const auto& p : pts) out.push_back(ConvexBody::point(p));
        } else {
          InscribedOptions io;
          io.level = lambda;
          out.push_back(inscribed_polytope(msr, body, 0, io).body);
        }
        break;
      }
      [[fallthrough]];
    case MeasureKind::Volume:
    case MeasureKind::Perimeter: {
      if (body.dim() != 2) break;
      FloatingBodyResult fb = floating_body(body, msr, eps, dirs);
      if (!fb.body.is_empty() && at_least(msr, fb.body, threshold)) out.push_back(fb.body);
      break;
    }
  }
  return out;
}

}  // namespace

CandidatePool build_pool(const Family& f, const Measure& msr, const Scalar& lambda, const Scalar& eps,
                         std::size_t s_max, const PoolOptions& options) {
  if (s_max == 0) throw InvalidArgument("build_pool: s_max must be at least 1");
  if (f.size() == 0) throw InvalidArgument("build_pool: empty family");
  if (f.size() > options.max_members) {
    throw BudgetExceeded("build_pool: " + std::to_string(f.size()) + " members exceed the cap of " +
                         std::to_string(options.max_members));
  }
  const std::size_t n = f.size();
  CandidatePool pool;
  pool.threshold = options.shrink_threshold ? *options.shrink_threshold : (1 - eps) * lambda;
  auto add = [&](Candidate c) {
    if (has_body(pool.candidates, c.body)) return;
    if (pool.candidates.size() >= options.max_pool) {
      throw BudgetExceeded("build_pool: more than " + std::to_string(options.max_pool) + " candidates");
    }
    pool.candidates.push_back(std::move(c));
  };

  // Level-wise search; f is monotone, so only supersets of qualifying sets
  // can qualify.
  std::map<IndexSet, ConvexBody> level;
  for (std::size_t j = 0; j < n; ++j) {
    if (at_least(msr, f[j], lambda)) level.emplace(IndexSet{j}, f[j]);
  }
  for (std::size_t s = 1; s <= s_max && !level.empty(); ++s) {
    std::map<IndexSet, ConvexBody> next;
    for (const auto& [idx, body] : level) {
      add({body, idx, false, evaluate(msr, body)});
      if (s == s_max) continue;
      for (std::size_t j = idx.back() + 1; j < n; ++j) {
        ConvexBody b = intersect(body, f[j]);
        if (b.is_empty() || !at_least(msr, b, lambda)) continue;
        IndexSet bigger = idx;
        bigger.push_back(j);
        next.emplace(std::move(bigger), std::move(b));
      }
    }
    level = std::move(next);
  }

  if (options.shrink) {
    const DirectionSet dirs = options.directions ? *options.directions : DirectionSet::axis(f.dim());
    const std::size_t base = pool.candidates.size();
    for (std::size_t c = 0; c < base; ++c) {
      const Candidate parent = pool.candidates[c];
      if (!parent.body.bounded() || parent.body.is_empty()) continue;
      for (auto& b : shrinks_of(parent.body, msr, lambda, eps, pool.threshold, dirs)) {
        MeasureValue v = evaluate(msr, b);
        add({std::move(b), parent.source, true, v});
      }
    }
  }

  pool.contained.assign(pool.size(), std::vector<bool>(n, false));
  for (std::size_t c = 0; c < pool.size(); ++c) {
    for (std::size_t j = 0; j < n; ++j) pool.contained[c][j] = is_subset(pool.candidates[c].body, f[j]);
  }
  return pool;
}

LPInstance transversal_lp(const Family& f, const CandidatePool& pool) {
  const std::size_t n = f.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t c = 0; c < pool.size() && !any; ++c) any = pool.contained[c][j];
    if (!any) throw Infeasible("member " + std::to_string(j) + " contains no candidate; increase s_max");
  }
  LPInstance lp;
  lp.objective = ObjectiveSense::Minimize;
  lp.c.assign(pool.size(), Scalar(1));
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(pool.size(), Scalar(0));
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (pool.contained[c][j]) row[c] = 1;
    }
    lp.a.push_back(std::move(row));
    lp.senses.push_back(Sense::GreaterEqual);
    lp.b.push_back(1);
  }
  lp.upper.assign(pool.size(), Scalar(1));
  return lp;
}

LPSolution fractional_transversal(const Family& f, const CandidatePool& pool) {
  LPSolution sol = solve_lp(transversal_lp(f, pool));
  if (sol.status != LPStatus::Optimal) throw Infeasible("fractional transversal has no optimum");
  return sol;
}

LPInstance packing_lp(const Family& f, const CandidatePool& pool) {
  const std::size_t n = f.size();
  LPInstance lp;
  lp.objective = ObjectiveSense::Maximize;
  lp.c.assign(n, Scalar(1));
  for (std::size_t c = 0; c < pool.size(); ++c) {
    Vector row(n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (pool.contained[c][j]) row[j] = 1;
    }
    lp.a.push_back(std::move(row));
    lp.senses.push_back(Sense::LessEqual);
    lp.b.push_back(1);
  }
  lp.upper.assign(n, Scalar(1));
  return lp;
}

LPSolution fractional_packing(const Family& f, const CandidatePool& pool) {
  LPSolution sol = solve_lp(packing_lp(f, pool));
  if (sol.status != LPStatus::Optimal) throw Infeasible("fractional packing has no optimum");
  return sol;
}

PQCheck check_pq(const Family& f, std::size_t p, std::size_t q, const Measure& msr, const Scalar& lambda,
                 std::size_t budget, std::uint64_t seed) {
  if (q == 0 || q > p) throw InvalidArgument("check_pq: need p >= q >= 1");
  const std::size_t n = f.size();
  if (n < p) throw InvalidArgument("check_pq: family has fewer than p members");
  std::map<IndexSet, bool> memo;
  auto good = [&](const IndexSet& idx) {
    auto it = memo.find(idx);
    if (it != memo.end()) return it->second;
    bool ok = at_least(msr, intersection_of(f, idx), lambda);
    memo.emplace(idx, ok);
    return ok;
  };
  auto satisfied = [&](const IndexSet& ps) {
    return !for_each_subset(p, q, [&](const IndexSet& sub) {
      IndexSet idx;
      for (auto i : sub) idx.push_back(ps[i]);
      return !good(idx);
    });
  };
  PQCheck out;
  const Integer total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(p));
  if (total <= static_cast<unsigned long>(budget)) {
    for_each_subset(n, p, [&](const IndexSet& ps) {
      if (satisfied(ps)) return true;
      out.holds = false;
      out.violator = ps;
      return false;
    });
    return out;
  }
  out.exhaustive = false;
  Rng rng(seed);
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t t = 0; t < budget; ++t) {
    rng.shuffle(all);
    IndexSet ps(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p));
    std::sort(ps.begin(), ps.end());
    if (!satisfied(ps)) {
      out.holds = false;
      out.violator = ps;
      break;
    }
  }
  return out;
}

namespace {

// Assigns each member its first contained witness and drops unused ones.
PiercingCertificate assemble(const Family& f, const std::vector<ConvexBody>& bodies, const Measure& msr) {
  PiercingCertificate cert;
  std::vector<std::optional<std::size_t>> slot(bodies.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::optional<std::size_t> hit;
    for (std::size_t w = 0; w < bodies.size() && !hit; ++w) {
      if (is_subset(bodies[w], f[j])) hit = w;
    }
    if (!hit) throw VerificationFailed("member " + std::to_string(j) + " contains no witness");
    if (!slot[*hit]) {
      slot[*hit] = cert.witnesses.size();
      cert.witnesses.push_back(bodies[*hit]);
      cert.achieved.push_back(evaluate(msr, bodies[*hit]));
    }
    cert.coverage.push_back(*slot[*hit]);
  }
  return cert;
}

}  // namespace

PiercingCertificate replicate_and_round(const Family& f, const CandidatePool& pool, const LPSolution& tau,
                                        const Measure& msr, const Scalar& lambda, const Scalar& eps) {
  if (tau.status != LPStatus::Optimal || tau.primal.size() != pool.size()) {
    throw InvalidArgument("replicate_and_round: needs an optimal transversal over the pool");
  }
  (void)lambda;
  PipelineTranscript tr;
  tr.tau = tau.optimum;
  tr.pool_size = pool.size();
  const bool integral =
      std::all_of(tau.primal.begin(), tau.primal.end(), [](const Scalar& w) { return is_integral(w); });
  tr.integral = integral;

  std::vector<ConvexBody> bodies;
  if (integral) {
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (tau.primal[c] != 0) bodies.push_back(pool.candidates[c].body);
    }
    tr.replication = 1;
    tr.multiset_size = bodies.size();
    tr.notes.push_back("integral transversal: witnesses are its support");
    PiercingCertificate cert = assemble(f, bodies, msr);
    cert.transcript = std::move(tr);
    return cert;
  }

  // Round weights up to denominators at most 2^16 (feasibility is kept
  // since coverage constraints only get looser).
  const Integer cap_den = Integer(1) << 16;
  std::vector<Scalar> w(pool.size());
  Integer m = 1;
  Scalar total = 0;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    w[c] = tau.primal[c];
    if (w[c].get_den() > cap_den) {
      w[c] = Scalar(ceil_of(w[c] * Scalar(cap_den)), cap_den);
      w[c].canonicalize();
      if (w[c] > 1) w[c] = 1;
    }
    m = lcm_of(m, w[c].get_den());
    total += w[c];
  }
  if (m > 100000) throw BudgetExceeded("replicate_and_round: replication factor " + m.get_str() + " too large");

  Family multiset;
  std::vector<std::size_t> origin;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    const Integer copies = Integer(w[c] * Scalar(m));
    for (Integer i = 0; i < copies; ++i) {
      multiset.members.push_back(pool.candidates[c].body);
      origin.push_back(c);
    }
  }
  tr.replication = m;
  tr.multiset_size = multiset.size();
  const Scalar eps_prime = 1 / total;
  tr.eps_prime = eps_prime;

  if (eps_prime >= 1) {
    // Every member carries weight ≥ total, so it contains every copy.
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (w[c] != 0) {
        bodies.push_back(pool.candidates[c].body);
        break;
      }
    }
    tr.notes.push_back("total weight at most one: a single support candidate covers all members");
  } else {
    NetOptions no;
    no.search.hints_only = true;
    no.max_parts = 1;
    for (std::size_t j = 0; j < f.size(); ++j) {
      IndexSet hint;
      for (std::size_t i = 0; i < multiset.size(); ++i) {
        if (pool.contained[origin[i]][j]) hint.push_back(i);
      }
      no.search.hints.push_back(std::move(hint));
    }
    NetResult net = weak_net(multiset, msr, eps, eps_prime, no);
    tr.net_iterations = net.iterations;
    bodies = net.net;
    tr.notes.push_back("weak net over the replicated multiset, member hints only");
  }
  PiercingCertificate cert = assemble(f, bodies, msr);
  cert.transcript = std::move(tr);
  return cert;
}

bool verify_certificate(const Family& f, const PiercingCertificate& cert, const Measure& msr, const Scalar& lambda,
                        const Scalar& eps, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (cert.coverage.size() != f.size()) return fail("coverage map has wrong length");
  if (cert.achieved.size() != cert.witnesses.size()) return fail("achieved values do not match witnesses");
  for (std::size_t j = 0; j < f.size(); ++j) {
    const std::size_t w = cert.coverage[j];
    if (w >= cert.witnesses.size()) return fail("member " + std::to_string(j) + " maps to a missing witness");
    if (!is_subset(cert.witnesses[w], f[j])) {
      return fail("witness " + std::to_string(w) + " is not contained in member " + std::to_string(j));
    }
  }
  const Scalar floor = (1 - eps) * lambda;
  for (std::size_t w = 0; w < cert.witnesses.size(); ++w) {
    if (!(evaluate(msr, cert.witnesses[w]) == cert.achieved[w])) {
      return fail("witness " + std::to_string(w) + " has a stale measure value");
    }
    if (!at_least(msr, cert.witnesses[w], floor)) {
      return fail("witness " + std::to_string(w) + " is below (1-eps)*lambda");
    }
  }
  return true;
}

PiercingCertificate pq_pierce(const Family& f, std::size_t p, std::size_t q, const Measure& msr,
                              const Scalar& lambda, const Scalar& eps, const PierceOptions& options) {
  if (eps < 0 || eps >= 1) throw InvalidArgument("pq_pierce: eps must lie in [0,1)");
  if (options.gamma <= 0 || options.gamma >= 1) throw InvalidArgument("pq_pierce: gamma must lie in (0,1)");
  const PQCheck pq = check_pq(f, p, q, msr, lambda, options.pq_budget);
  if (!pq.holds) {
    throw HypothesisViolated("(p,q) condition fails on members " + index_text(*pq.violator));
  }
  const Scalar shrink_eps = options.gamma * eps;
  PoolOptions po = options.pool;
  if (!po.shrink_threshold) po.shrink_threshold = (1 - shrink_eps) * lambda;
  const CandidatePool pool = build_pool(f, msr, lambda, shrink_eps, options.s_max, po);
  const LPSolution tau = fractional_transversal(f, pool);
  const LPSolution nu = fractional_packing(f, pool);
  std::string why;
  if (!verify_certificate(transversal_lp(f, pool), tau, &why)) {
    throw VerificationFailed("transversal certificate: " + why);
  }
  if (!verify_certificate(packing_lp(f, pool), nu, &why)) throw VerificationFailed("packing certificate: " + why);
  if (tau.optimum != nu.optimum) {
    throw VerificationFailed("duality gap: tau* = " + format_scalar(tau.optimum) + ", nu* = " +
                             format_scalar(nu.optimum));
  }

  PiercingCertificate cert = replicate_and_round(f, pool, tau, msr, lambda, (1 - options.gamma) * eps);
  if (msr.discrete() && eps == 0) {
    // Reduce each witness to its lattice core.
    InscribedOptions io;
    io.level = lambda;
    std::vector<ConvexBody> cores;
    for (const auto& w : cert.witnesses) cores.push_back(inscribed_polytope(msr, w, 0, io).body);
    PipelineTranscript tr = cert.transcript;
    cert = assemble(f, cores, msr);
    cert.transcript = std::move(tr);
    cert.transcript.notes.push_back("witnesses reduced to lattice cores");
  }
  cert.transcript.nu = nu.optimum;
  cert.transcript.s_max = options.s_max;
  cert.transcript.notes.push_back("candidate pool restricted to intersections of at most " +
                                  std::to_string(options.s_max) + " members and their shrinks");
  if (!verify_certificate(f, cert, msr, lambda, eps, &why)) throw VerificationFailed("certificate: " + why);
  return cert;
}

}  // namespace quanthelly
