#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bicrit/rational.hpp"

namespace bicrit {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  // Sparse row: (variable index, coefficient). Repeated indices are summed.
  std::vector<std::pair<std::size_t, Rational>> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// nullopt on either side means unbounded in that direction.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

// maximize objective . x subject to the constraints and per-variable bounds.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  // Empty means every variable is [0, +inf).
  std::vector<VariableBounds> bounds;

  std::size_t num_vars() const noexcept { return objective.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective_value;
  std::size_t iterations = 0;
};

struct LpOptions {
  // Total pivot cap across both phases; exceeding it throws Error(kIterationLimit).
  std::optional<std::size_t> iteration_cap;
};

// Two-phase revised simplex over exact rationals with Bland's rule. The
// optimum returned is a basic feasible solution of the standard-form
// problem. Throws Error(kDimension) on malformed input.
LpSolution lp_solve(const LpProblem& problem, const LpOptions& options = {});

// Exact feasibility check used by tests and callers that want to assert.
bool lp_is_feasible_point(const LpProblem& problem, const std::vector<Rational>& x);

}  // namespace bicrit
