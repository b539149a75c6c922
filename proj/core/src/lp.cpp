#include "cmsym/lp.hpp"

#include <optional>

#include "cmsym/errors.hpp"

namespace cmsym {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  const Rational& rhs(std::size_t r) const { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& reduced) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t k = 0; k <= cols_; ++k) at(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rational factor = at(i, c);
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (at(r, k) != 0) at(i, k) -= factor * at(r, k);
      }
    }
    if (reduced[c] != 0) {
      const Rational factor = reduced[c];
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (at(r, k) != 0) reduced[k] -= factor * at(r, k);
      }
    }
    basis_[r] = c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

// reduced[j] = c_j - c_B B^{-1} A_j; reduced[cols] = -(c_B B^{-1} b).
std::vector<Rational> reduced_costs(const Tableau& t, const std::vector<Rational>& cost) {
  std::vector<Rational> reduced(t.cols() + 1);
  for (std::size_t j = 0; j < t.cols(); ++j) reduced[j] = cost[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const Rational& cb = cost[t.basis()[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= t.cols(); ++j) reduced[j] -= cb * t.at(i, j);
  }
  return reduced;
}

enum class Outcome { Optimal, Unbounded };

Outcome run_simplex(Tableau& t, const std::vector<Rational>& cost, std::size_t enterable, std::size_t& pivots) {
  std::vector<Rational> reduced = reduced_costs(t, cost);
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < enterable; ++j) {
      if (reduced[j] > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) return Outcome::Optimal;
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.at(i, *entering) <= 0) continue;
      Rational ratio = t.rhs(i) / t.at(i, *entering);
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && t.basis()[i] < t.basis()[*leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) return Outcome::Unbounded;
    t.pivot(*leaving, *entering, reduced);
    ++pivots;
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t n = problem.variables;
  const std::size_t m = problem.rows.size();
  if (problem.objective.size() != n) throw InputError("objective length does not match variable count");
  for (const auto& row : problem.rows) {
    if (row.coefficients.size() != n) throw InputError("row length does not match variable count");
  }

  // Normalise to b ≥ 0, then lay out columns:
  // [originals | slack or surplus per inequality row | artificials].
  std::vector<int> sign(m, 1);
  std::vector<RowSense> sense(m);
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = problem.rows[i].sense;
    if (problem.rows[i].rhs < 0) {
      sign[i] = -1;
      if (sense[i] == RowSense::LessEqual) {
        sense[i] = RowSense::GreaterEqual;
      } else if (sense[i] == RowSense::GreaterEqual) {
        sense[i] = RowSense::LessEqual;
      }
    }
  }
  std::vector<std::optional<std::size_t>> slack_col(m);
  std::size_t cols = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != RowSense::Equal) slack_col[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  std::vector<std::size_t> identity_col(m);
  for (std::size_t i = 0; i < m; ++i) {
    identity_col[i] = sense[i] == RowSense::LessEqual ? *slack_col[i] : cols++;
  }

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign[i] * row.coefficients[j];
    t.rhs(i) = sign[i] * row.rhs;
    if (slack_col[i]) t.at(i, *slack_col[i]) = sense[i] == RowSense::LessEqual ? 1 : -1;
    t.at(i, identity_col[i]) = 1;
    t.basis()[i] = identity_col[i];
  }

  LpSolution solution;
  // Phase 1: maximise -Σ artificials.
  std::vector<Rational> phase1(cols);
  for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
  run_simplex(t, phase1, first_artificial, solution.pivots);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] >= first_artificial && t.rhs(i) != 0) {
      solution.status = LpStatus::Infeasible;
      return solution;
    }
  }
  // Drive zero-level artificials out of the basis where possible; a row
  // with no usable column is redundant and keeps its artificial at zero.
  std::vector<Rational> zero(cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < first_artificial) continue;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (t.at(i, j) != 0) {
        t.pivot(i, j, zero);
        ++solution.pivots;
        break;
      }
    }
  }

  // Phase 2.
  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  if (run_simplex(t, cost, first_artificial, solution.pivots) == Outcome::Unbounded) {
    solution.status = LpStatus::Unbounded;
    return solution;
  }

  solution.status = LpStatus::Optimal;
  solution.primal.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < n) solution.primal[t.basis()[i]] = t.rhs(i);
  }
  solution.objective = 0;
  for (std::size_t j = 0; j < n; ++j) solution.objective += problem.objective[j] * solution.primal[j];
  solution.dual.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    Rational y = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& cb = cost[t.basis()[k]];
      if (cb != 0) y += cb * t.at(k, identity_col[r]);
    }
    solution.dual[r] = sign[r] * y;
  }
  return solution;
}

bool satisfies_rows(const LpProblem& problem, std::span<const Rational> x) {
  if (x.size() != problem.variables) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : problem.rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coefficients[j] * x[j];
    const bool ok = row.sense == RowSense::LessEqual      ? lhs <= row.rhs
                    : row.sense == RowSense::GreaterEqual ? lhs >= row.rhs
                                                          : lhs == row.rhs;
    if (!ok) return false;
  }
  return true;
}

bool certifies_optimality(const LpProblem& problem, const LpSolution& solution) {
  if (solution.status != LpStatus::Optimal || solution.dual.size() != problem.rows.size()) return false;
  Rational bound = 0;
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    const Rational& y = solution.dual[i];
    if (problem.rows[i].sense == RowSense::LessEqual && y < 0) return false;
    if (problem.rows[i].sense == RowSense::GreaterEqual && y > 0) return false;
    bound += y * problem.rows[i].rhs;
  }
  for (std::size_t j = 0; j < problem.variables; ++j) {
    Rational column = 0;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) column += solution.dual[i] * problem.rows[i].coefficients[j];
    if (column < problem.objective[j]) return false;
  }
  return bound == solution.objective;
}

}  // namespace cmsym
