#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quanthelly/lp.hpp"
#include "quanthelly/random.hpp"

using namespace quanthelly;

namespace {

LPInstance covering(const std::vector<Vector>& a, const Vector& c) {
  LPInstance lp;
  lp.c = c;
  lp.a = a;
  lp.senses.assign(a.size(), Sense::GreaterEqual);
  lp.b.assign(a.size(), Scalar(1));
  lp.upper.assign(c.size(), Scalar(1));
  return lp;
}

}  // namespace

TEST(LP, SmallKnownOptimum) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
  LPInstance lp;
  lp.objective = ObjectiveSense::Maximize;
  lp.c = {Scalar(1), Scalar(1)};
  lp.a = {{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(1)}};
  lp.senses = {Sense::LessEqual, Sense::LessEqual};
  lp.b = {Scalar(4), Scalar(6)};
  lp.upper = {std::nullopt, std::nullopt};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, Scalar(14, 5));
  EXPECT_EQ(sol.primal, (Vector{Scalar(8, 5), Scalar(6, 5)}));
  std::string why;
  EXPECT_TRUE(verify_certificate(lp, sol, &why)) << why;
}

TEST(LP, InfeasibleAndUnbounded) {
  LPInstance bad;
  bad.c = {Scalar(1)};
  bad.a = {{Scalar(1)}};
  bad.senses = {Sense::GreaterEqual};
  bad.b = {Scalar(2)};
  bad.upper = {Scalar(1)};
  EXPECT_EQ(solve_lp(bad).status, LPStatus::Infeasible);

  LPInstance open;
  open.objective = ObjectiveSense::Maximize;
  open.c = {Scalar(1), Scalar(0)};
  open.a = {{Scalar(-1), Scalar(1)}};
  open.senses = {Sense::LessEqual};
  open.b = {Scalar(1)};
  open.upper = {std::nullopt, std::nullopt};
  EXPECT_EQ(solve_lp(open).status, LPStatus::Unbounded);
}

TEST(LP, EqualityRows) {
  LPInstance lp;
  lp.c = {Scalar(2), Scalar(3), Scalar(1)};
  lp.a = {{Scalar(1), Scalar(1), Scalar(1)}};
  lp.senses = {Sense::Equal};
  lp.b = {Scalar(5, 2)};
  lp.upper = {std::nullopt, std::nullopt, Scalar(1)};
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, Scalar(4));
  EXPECT_TRUE(verify_certificate(lp, sol));
}

TEST(LP, CertificateRejectsTamperedSolution) {
  const auto lp = covering({{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(1)}},
                           {Scalar(1), Scalar(1), Scalar(1)});
  auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, Scalar(3, 2));
  EXPECT_TRUE(verify_certificate(lp, sol));
  sol.primal[0] += Scalar(1, 7);
  std::string why;
  EXPECT_FALSE(verify_certificate(lp, sol, &why));
  EXPECT_FALSE(why.empty());
}

TEST(LP, CoveringMatchesVertexEnumeration) {
  Rng rng(61);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng.below(4), m = 2 + rng.below(4);
    std::vector<Vector> a(m, Vector(n, Scalar(0)));
    for (auto& row : a) {
      for (auto& x : row) x = rng.below(3) == 0 ? Scalar(0) : Scalar(rng.between(1, 3));
      row[rng.below(n)] = Scalar(rng.between(1, 3));
    }
    Vector c(n);
    for (auto& x : c) x = rng.grid(1, 4, 3);
    const auto lp = covering(a, c);
    const auto sol = solve_lp(lp);
    const auto ref = oracle::vertex_enumeration_min(c, a, Vector(m, Scalar(1)));
    if (!ref) {
      EXPECT_EQ(sol.status, LPStatus::Infeasible);
      continue;
    }
    ASSERT_EQ(sol.status, LPStatus::Optimal);
    EXPECT_EQ(sol.optimum, *ref);
    std::string why;
    EXPECT_TRUE(verify_certificate(lp, sol, &why)) << why;
  }
}

TEST(LP, DegenerateCyclingCandidate) {
  // Beale's example; Bland's rule must terminate.
  LPInstance lp;
  lp.c = {Scalar(-3, 4), Scalar(150), Scalar(-1, 50), Scalar(6)};
  lp.a = {{Scalar(1, 4), Scalar(-60), Scalar(-1, 25), Scalar(9)},
          {Scalar(1, 2), Scalar(-90), Scalar(-1, 50), Scalar(3)},
          {Scalar(0), Scalar(0), Scalar(1), Scalar(0)}};
  lp.senses = {Sense::LessEqual, Sense::LessEqual, Sense::LessEqual};
  lp.b = {Scalar(0), Scalar(0), Scalar(1)};
  lp.upper.assign(4, std::nullopt);
  const auto sol = solve_lp(lp);
  ASSERT_EQ(sol.status, LPStatus::Optimal);
  EXPECT_EQ(sol.optimum, Scalar(-1, 20));
  EXPECT_TRUE(verify_certificate(lp, sol));
}
