#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quanthelly/geometry.hpp"

namespace quanthelly {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class ObjectiveSense { Minimize, Maximize };

/// optimize <c, x> subject to <a_i, x> (sense_i) b_i, 0 ≤ x ≤ upper.
/// Finite upper bounds become explicit rows appended after the constraint
/// rows (they get dual weights like any other row).
struct LPInstance {
  ObjectiveSense objective = ObjectiveSense::Minimize;
  Vector c;
  std::vector<Vector> a;
  std::vector<Sense> senses;
  Vector b;
  std::vector<std::optional<Scalar>> upper;

  std::size_t num_vars() const { return c.size(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Scalar optimum;
  Vector primal;
  // One weight per constraint row followed by one per finite upper bound.
  Vector dual;
  // Basic column indices of the final tableau (structural columns first,
  // then one slack/surplus column per row).
  std::vector<std::size_t> basis;
};

/// Exact dense two-phase simplex with Bland's rule.
LPSolution solve_lp(const LPInstance& lp);

/// Checks primal feasibility, dual feasibility, complementary slackness and
/// equality of primal and dual objectives, all exactly. On failure the
/// reason is written to `why` when given.
bool verify_certificate(const LPInstance& lp, const LPSolution& sol, std::string* why = nullptr);

}  // namespace quanthelly
