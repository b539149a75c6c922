#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cmsym/rational.hpp"

namespace cmsym {

enum class RowSense { LessEqual, GreaterEqual, Equal };

struct LpRow {
  std::vector<Rational> coefficients;
  RowSense sense = RowSense::LessEqual;
  Rational rhs;
};

/// maximize objective·x subject to rows, x ≥ 0.
struct LpProblem {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> primal;
  /// One multiplier per row: ≥ 0 on ≤ rows, ≤ 0 on ≥ rows, free on = rows.
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

/// Dense two-phase primal simplex over exact rationals. Bland's rule
/// (smallest eligible index enters and leaves), so it terminates on any
/// input. Duals are read from the final tableau as c_B B^{-1}.
LpSolution solve_lp(const LpProblem& problem);

/// Exact re-substitution: x ≥ 0 and every row holds.
bool satisfies_rows(const LpProblem& problem, std::span<const Rational> x);

/// Dual feasibility (sign pattern, Aᵀy ≥ c) and zero duality gap.
bool certifies_optimality(const LpProblem& problem, const LpSolution& solution);

}  // namespace cmsym
