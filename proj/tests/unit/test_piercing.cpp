#include <algorithm>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "quanthelly/error.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/piercing.hpp"

using namespace quanthelly;

namespace {

Point P(const Scalar& x, const Scalar& y) { return Point{x, y}; }

Family three_squares() {
  Family f;
  f.members = {ConvexBody::box(P(0, 0), P(2, 2)), ConvexBody::box(P(1, 0), P(3, 2)), ConvexBody::box(P(2, 0), P(4, 2))};
  return f;
}

// Weak duality: a feasible transversal and a feasible packing with equal
// value are both optimal.
void expect_duality(const Family& f, const CandidatePool& pool, const LPSolution& tau, const LPSolution& nu) {
  ASSERT_EQ(tau.status, LPStatus::Optimal);
  ASSERT_EQ(nu.status, LPStatus::Optimal);
  for (std::size_t j = 0; j < f.size(); ++j) {
    Scalar cover = 0;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (pool.contained[c][j]) cover += tau.primal[c];
    }
    EXPECT_GE(cover, 1);
  }
  for (std::size_t c = 0; c < pool.size(); ++c) {
    Scalar load = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (pool.contained[c][j]) load += nu.primal[j];
    }
    EXPECT_LE(load, 1);
  }
  Scalar st = 0, sn = 0;
  for (const auto& x : tau.primal) st += x;
  for (const auto& x : nu.primal) sn += x;
  EXPECT_EQ(st, sn);
  EXPECT_EQ(tau.optimum, nu.optimum);
}

}  // namespace

TEST(Piercing, PoolContainmentIsExact) {
  const auto f = three_squares();
  const auto pool = build_pool(f, Measure::volume(), Scalar(1), Scalar(1, 8), 2);
  ASSERT_GT(pool.size(), 0u);
  for (std::size_t c = 0; c < pool.size(); ++c) {
    EXPECT_TRUE(pool.candidates[c].value.at_least(Scalar(7, 8)));
    for (std::size_t j = 0; j < f.size(); ++j) {
      bool inside = true;
      for (const auto& v : pool.candidates[c].body.vertex_list()) inside = inside && oracle::in_hull(f[j].vertex_list(), v);
      EXPECT_EQ(pool.contained[c][j], inside);
    }
  }
}

TEST(Piercing, DualityOnRandomFamilies) {
  Rng rng(97);
  int solved = 0;
  for (int t = 0; t < 25; ++t) {
    Family f;
    for (int k = 0; k < 6; ++k) f.members.push_back(gen::polygon(rng, 0, 6, 1, 5));
    const auto pool = build_pool(f, Measure::volume(), Scalar(1, 2), Scalar(1, 4), 2);
    try {
      const auto tau = fractional_transversal(f, pool);
      const auto nu = fractional_packing(f, pool);
      expect_duality(f, pool, tau, nu);
      EXPECT_TRUE(verify_certificate(transversal_lp(f, pool), tau));
      EXPECT_TRUE(verify_certificate(packing_lp(f, pool), nu));
      ++solved;
    } catch (const Infeasible&) {
      // A member contains no candidate.
      bool uncovered = false;
      for (std::size_t j = 0; j < f.size(); ++j) {
        bool any = false;
        for (std::size_t c = 0; c < pool.size(); ++c) any = any || pool.contained[c][j];
        uncovered = uncovered || !any;
      }
      EXPECT_TRUE(uncovered);
    }
  }
  EXPECT_GT(solved, 10);
}

TEST(Piercing, ThreeSquaresOptimaByVertexEnumeration) {
  const auto f = three_squares();
  PoolOptions opts;
  opts.shrink = false;
  const auto pool = build_pool(f, Measure::volume(), Scalar(1), Scalar(0), 2, opts);
  std::vector<IndexSet> sources;
  for (const auto& c : pool.candidates) sources.push_back(c.source);
  std::sort(sources.begin(), sources.end());
  EXPECT_EQ(sources, (std::vector<IndexSet>{{0}, {0, 1}, {1}, {1, 2}, {2}}));
  std::vector<std::vector<Scalar>> cover(f.size(), std::vector<Scalar>(pool.size()));
  std::vector<std::vector<Scalar>> load(pool.size(), std::vector<Scalar>(f.size()));
  for (std::size_t c = 0; c < pool.size(); ++c) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const bool in = is_subset(pool.candidates[c].body, f[j]);
      cover[j][c] = in ? 1 : 0;
      load[c][j] = in ? -1 : 0;
    }
  }
  const auto tau = oracle::vertex_enumeration_min(std::vector<Scalar>(pool.size(), Scalar(1)), cover,
                                                  std::vector<Scalar>(f.size(), Scalar(1)));
  const auto nu = oracle::vertex_enumeration_min(std::vector<Scalar>(f.size(), Scalar(-1)), load,
                                                 std::vector<Scalar>(pool.size(), Scalar(-1)));
  ASSERT_TRUE(tau && nu);
  EXPECT_EQ(*tau, 2);
  EXPECT_EQ(*nu, -2);
  EXPECT_EQ(fractional_transversal(f, pool).optimum, 2);
  EXPECT_EQ(fractional_packing(f, pool).optimum, 2);
}

TEST(Piercing, ThreeSquaresCertificate) {
  const auto f = three_squares();
  const auto cert = pq_pierce(f, 3, 2, Measure::volume(), Scalar(1), Scalar(1, 8));
  EXPECT_LE(cert.witnesses.size(), 2u);
  for (const auto& w : cert.witnesses) EXPECT_GE(oracle::area(w.vertex_list()), Scalar(7, 8));
  for (std::size_t j = 0; j < f.size(); ++j) EXPECT_TRUE(is_subset(cert.witnesses[cert.coverage[j]], f[j]));
  EXPECT_TRUE(verify_certificate(f, cert, Measure::volume(), Scalar(1), Scalar(1, 8)));
  EXPECT_EQ(cert.transcript.tau, cert.transcript.nu);
}

TEST(Piercing, PQViolationIsReported) {
  Family f;
  f.members = {ConvexBody::box(P(0, 0), P(1, 1)), ConvexBody::box(P(5, 0), P(6, 1)), ConvexBody::box(P(10, 0), P(11, 1))};
  const auto check = check_pq(f, 3, 2, Measure::volume(), Scalar(1, 2));
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.violator.has_value());
  EXPECT_THROW(pq_pierce(f, 3, 2, Measure::volume(), Scalar(1, 2), Scalar(1, 8)), HypothesisViolated);
}

TEST(Piercing, ClusteredLatticeSharpPath) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ClusteredLattice;
  spec.count = 12;
  spec.clusters = 3;
  spec.seed = 4;
  const auto f = generate(spec);
  const auto z2 = Measure::integer_lattice(2);
  const auto cert = pq_pierce(f, 4, 2, z2, Scalar(1), Scalar(0));
  EXPECT_EQ(cert.witnesses.size(), 3u);
  for (const auto& w : cert.witnesses) {
    ASSERT_EQ(w.vertex_list().size(), 1u);
    EXPECT_TRUE(z2.in_set(w.vertex_list().front()));
  }
  EXPECT_TRUE(verify_certificate(f, cert, z2, Scalar(1), Scalar(0)));
}

TEST(Piercing, VerifierRejectsForgedCoverage) {
  const auto f = three_squares();
  auto cert = pq_pierce(f, 3, 2, Measure::volume(), Scalar(1), Scalar(1, 8));
  cert.coverage[2] = cert.coverage[0];
  std::string why;
  EXPECT_FALSE(verify_certificate(f, cert, Measure::volume(), Scalar(1), Scalar(1, 8), &why));
  EXPECT_FALSE(why.empty());
}

TEST(Piercing, FractionalReplicationOnOddCycle) {
  // Five boxes around a pentagon: consecutive pairs overlap, so the pool
  // LP is fractional.
  const auto z2 = Measure::integer_lattice(2);
  Family f;
  const std::vector<Point> pts{P(0, 0), P(4, 0), P(6, 3), P(2, 6), P(-2, 3)};
  for (std::size_t i = 0; i < 5; ++i) f.members.push_back(convex_hull({pts[i], pts[(i + 1) % 5]}));
  const auto pool = build_pool(f, z2, Scalar(1), Scalar(0), 2);
  const auto tau = fractional_transversal(f, pool);
  EXPECT_EQ(tau.optimum, Scalar(5, 2));
  const auto cert = replicate_and_round(f, pool, tau, z2, Scalar(1), Scalar(0));
  EXPECT_TRUE(verify_certificate(f, cert, z2, Scalar(1), Scalar(0)));
  EXPECT_FALSE(cert.transcript.integral);
}
