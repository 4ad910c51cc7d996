#include "quanthelly/lp.hpp"

#include "quanthelly/error.hpp"

namespace quanthelly {

namespace {

struct Row {
  Vector a;
  Sense sense;
  Scalar b;
};

std::vector<Row> all_rows(const LPInstance& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.a.size() != lp.senses.size() || lp.a.size() != lp.b.size()) {
    throw InvalidArgument("lp: constraint matrix, senses and right-hand side differ in length");
  }
  if (!lp.upper.empty() && lp.upper.size() != n) throw InvalidArgument("lp: upper bounds must match variables");
  std::vector<Row> rows;
  for (std::size_t i = 0; i < lp.a.size(); ++i) {
    if (lp.a[i].size() != n) throw DimensionError("lp: constraint row has wrong length");
    rows.push_back({lp.a[i], lp.senses[i], lp.b[i]});
  }
  for (std::size_t j = 0; j < lp.upper.size(); ++j) {
    if (!lp.upper[j]) continue;
    Vector e(n, Scalar(0));
    e[j] = 1;
    rows.push_back({std::move(e), Sense::LessEqual, *lp.upper[j]});
  }
  return rows;
}

Vector min_costs(const LPInstance& lp) {
  Vector c = lp.c;
  if (lp.objective == ObjectiveSense::Maximize) {
    for (auto& x : c) x = -x;
  }
  return c;
}

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, Vector(cols + 1, Scalar(0))), basis_(rows), cols_(cols) {}

  Scalar& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Scalar& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Runs Bland's rule for the given costs. Returns false when unbounded.
  bool optimize(const Vector& cost, const std::vector<bool>& barred) {
    Vector z = reduced(cost);
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!barred[j] && z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows();
      Scalar best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Scalar ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter, &z);
    }
  }

  void pivot(std::size_t r, std::size_t c, Vector* z = nullptr) {
    Scalar p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Scalar f = t_[i][c];
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (t_[r][k] != 0) t_[i][k] -= f * t_[r][k];
      }
    }
    if (z && (*z)[c] != 0) {
      Scalar f = (*z)[c];
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (t_[r][k] != 0) (*z)[k] -= f * t_[r][k];
      }
    }
    basis_[r] = c;
  }

  Vector reduced(const Vector& cost) const {
    Vector z(cols_ + 1, Scalar(0));
    for (std::size_t j = 0; j < cols_; ++j) z[j] = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Scalar& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (t_[i][k] != 0) z[k] -= cb * t_[i][k];
      }
    }
    return z;
  }

 private:
  std::vector<Vector> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LPSolution solve_lp(const LPInstance& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<Row> rows = all_rows(lp);
  const std::size_t m = rows.size();
  std::vector<bool> negated(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].b < 0) {
      negated[i] = true;
      for (auto& x : rows[i].a) x = -x;
      rows[i].b = -rows[i].b;
      if (rows[i].sense == Sense::LessEqual) {
        rows[i].sense = Sense::GreaterEqual;
      } else if (rows[i].sense == Sense::GreaterEqual) {
        rows[i].sense = Sense::LessEqual;
      }
    }
  }

  // Column layout: structural, one slack/surplus per inequality, one
  // artificial per ≥ or = row.
  std::vector<std::size_t> slack(m, SIZE_MAX), art(m, SIZE_MAX), home(m);
  std::size_t cols = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].sense != Sense::Equal) slack[i] = cols++;
  }
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].sense != Sense::LessEqual) art[i] = cols++;
  }

  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = rows[i].a[j];
    tab.rhs(i) = rows[i].b;
    if (rows[i].sense == Sense::LessEqual) {
      tab.at(i, slack[i]) = 1;
      home[i] = slack[i];
    } else {
      if (slack[i] != SIZE_MAX) tab.at(i, slack[i]) = -1;
      tab.at(i, art[i]) = 1;
      home[i] = art[i];
    }
    tab.basis()[i] = home[i];
  }

  LPSolution sol;
  std::vector<bool> barred(cols, false);
  if (first_art < cols) {
    Vector phase1(cols, Scalar(0));
    for (std::size_t j = first_art; j < cols; ++j) phase1[j] = 1;
    tab.optimize(phase1, barred);
    Scalar infeas = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] >= first_art) infeas += tab.rhs(i);
    }
    if (infeas > 0) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = first_art; j < cols; ++j) barred[j] = true;
  }

  const Vector cmin = min_costs(lp);
  Vector phase2(cols, Scalar(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = cmin[j];
  if (!tab.optimize(phase2, barred)) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  sol.status = LPStatus::Optimal;
  sol.primal.assign(n, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) sol.primal[tab.basis()[i]] = tab.rhs(i);
  }
  sol.optimum = dot(lp.c, sol.primal);
  sol.dual.assign(m, Scalar(0));
  const bool flip = lp.objective == ObjectiveSense::Maximize;
  for (std::size_t r = 0; r < m; ++r) {
    Scalar y = 0;
    for (std::size_t i = 0; i < m; ++i) y += phase2[tab.basis()[i]] * tab.at(i, home[r]);
    if (negated[r]) y = -y;
    if (flip) y = -y;
    sol.dual[r] = y;
  }
  sol.basis = tab.basis();
  return sol;
}

bool verify_certificate(const LPInstance& lp, const LPSolution& sol, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (sol.status != LPStatus::Optimal) return fail("solution is not optimal");
  const std::size_t n = lp.num_vars();
  const std::vector<Row> rows = all_rows(lp);
  if (sol.primal.size() != n || sol.dual.size() != rows.size()) return fail("certificate has wrong shape");
  const bool flip = lp.objective == ObjectiveSense::Maximize;
  const Vector cmin = min_costs(lp);

  for (std::size_t j = 0; j < n; ++j) {
    if (sol.primal[j] < 0) return fail("primal variable " + std::to_string(j) + " is negative");
  }
  Vector reduced = cmin;
  Scalar dual_obj = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    const Scalar lhs = dot(row.a, sol.primal);
    const Scalar slack = lhs - row.b;
    if ((row.sense == Sense::LessEqual && slack > 0) || (row.sense == Sense::GreaterEqual && slack < 0) ||
        (row.sense == Sense::Equal && slack != 0)) {
      return fail("primal row " + std::to_string(i) + " violated");
    }
    const Scalar y = flip ? Scalar(-sol.dual[i]) : sol.dual[i];
    if ((row.sense == Sense::LessEqual && y > 0) || (row.sense == Sense::GreaterEqual && y < 0)) {
      return fail("dual weight " + std::to_string(i) + " has the wrong sign");
    }
    if (y * slack != 0) return fail("complementary slackness fails on row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= y * row.a[j];
    dual_obj += y * row.b;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced[j] < 0) return fail("dual constraint " + std::to_string(j) + " violated");
    if (reduced[j] * sol.primal[j] != 0) return fail("complementary slackness fails on variable " + std::to_string(j));
  }
  const Scalar primal_obj = dot(cmin, sol.primal);
  if (primal_obj != dual_obj) return fail("primal and dual objectives differ");
  if (sol.optimum != dot(lp.c, sol.primal)) return fail("reported optimum does not match the primal weights");
  return true;
}

}  // namespace quanthelly
