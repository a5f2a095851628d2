#include "bicrit/lp.hpp"

#include <map>
#include <string>

#include "bicrit/error.hpp"

namespace bicrit {

namespace {

using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;

// How an original variable is expressed through standard-form columns:
// x = offset + sum sign * x_col, with every x_col >= 0.
struct VariableMap {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> parts;
};

struct StandardForm {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
  std::vector<Rational> cost;
  std::vector<bool> artificial;
  std::vector<Rational> rhs;
  std::vector<std::size_t> initial_basis;
  std::vector<VariableMap> vars;
};

void validate(const LpProblem& p) {
  const std::size_t n = p.num_vars();
  if (!p.bounds.empty() && p.bounds.size() != n) {
    throw Error(ErrorCode::kDimension, "bounds has " + std::to_string(p.bounds.size()) +
                                           " entries for " + std::to_string(n) + " variables");
  }
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    for (const auto& [k, a] : p.constraints[r].terms) {
      if (k >= n) {
        throw Error(ErrorCode::kDimension, "constraint " + std::to_string(r) + " references variable " +
                                               std::to_string(k));
      }
    }
  }
  for (std::size_t k = 0; k < p.bounds.size(); ++k) {
    const auto& b = p.bounds[k];
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw Error(ErrorCode::kDimension, "variable " + std::to_string(k) + " has lower > upper");
    }
  }
}

StandardForm to_standard_form(const LpProblem& p) {
  StandardForm sf;
  const std::size_t n = p.num_vars();
  std::vector<std::map<std::size_t, Rational>> rows;
  std::vector<Relation> rel;
  std::vector<Rational> rhs;
  std::size_t next_col = 0;

  sf.vars.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const VariableBounds b = p.bounds.empty() ? VariableBounds{} : p.bounds[k];
    auto& vm = sf.vars[k];
    if (b.lower) {
      vm.offset = *b.lower;
      vm.parts.push_back({next_col, 1});
      if (b.upper) {
        rows.push_back({{next_col, Rational(1)}});
        rel.push_back(Relation::kLessEqual);
        rhs.push_back(*b.upper - *b.lower);
      }
      ++next_col;
    } else if (b.upper) {
      vm.offset = *b.upper;
      vm.parts.push_back({next_col++, -1});
    } else {
      vm.offset = 0;
      vm.parts.push_back({next_col++, 1});
      vm.parts.push_back({next_col++, -1});
    }
  }
  const std::size_t structural = next_col;

  for (const auto& c : p.constraints) {
    std::map<std::size_t, Rational> row;
    Rational b = c.rhs;
    for (const auto& [k, a] : c.terms) {
      if (a == 0) continue;
      for (const auto& [col, sign] : sf.vars[k].parts) row[col] += sign > 0 ? a : Rational(-a);
      b -= a * sf.vars[k].offset;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    rows.push_back(std::move(row));
    rel.push_back(c.relation);
    rhs.push_back(std::move(b));
  }

  sf.rows = rows.size();
  sf.columns.assign(structural, {});
  sf.cost.assign(structural, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [col, sign] : sf.vars[k].parts) {
      sf.cost[col] = sign > 0 ? p.objective[k] : Rational(-p.objective[k]);
    }
  }
  sf.artificial.assign(structural, false);
  sf.rhs.resize(sf.rows);
  sf.initial_basis.resize(sf.rows);

  for (std::size_t r = 0; r < sf.rows; ++r) {
    const bool flip = rhs[r] < 0;
    const int s = flip ? -1 : 1;
    sf.rhs[r] = flip ? Rational(-rhs[r]) : rhs[r];
    for (const auto& [col, a] : rows[r]) sf.columns[col].push_back({r, s > 0 ? a : Rational(-a)});
    int slack_sign = 0;
    if (rel[r] == Relation::kLessEqual) slack_sign = s;
    if (rel[r] == Relation::kGreaterEqual) slack_sign = -s;
    if (slack_sign != 0) {
      sf.columns.push_back({{r, Rational(slack_sign)}});
      sf.cost.emplace_back(0);
      sf.artificial.push_back(false);
    }
    if (slack_sign == 1) {
      sf.initial_basis[r] = sf.columns.size() - 1;
    } else {
      sf.columns.push_back({{r, Rational(1)}});
      sf.cost.emplace_back(0);
      sf.artificial.push_back(true);
      sf.initial_basis[r] = sf.columns.size() - 1;
    }
  }
  return sf;
}

// Revised simplex with an explicit dense basis inverse.
class Simplex {
 public:
  Simplex(const StandardForm& sf, const LpOptions& options)
      : sf_(sf), options_(options), rows_(sf.rows), basis_(sf.initial_basis), x_basic_(sf.rhs),
        in_basis_(sf.columns.size(), false), binv_(rows_, std::vector<Rational>(rows_, Rational(0))) {
    for (std::size_t r = 0; r < rows_; ++r) {
      binv_[r][r] = 1;
      in_basis_[basis_[r]] = true;
    }
  }

  enum class Outcome { kOptimal, kUnbounded };

  Outcome optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    std::vector<Rational> y(rows_);
    std::vector<Rational> u(rows_);
    Rational reduced;
    while (true) {
      for (std::size_t c = 0; c < rows_; ++c) y[c] = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (cb == 0) continue;
        for (std::size_t c = 0; c < rows_; ++c) {
          if (binv_[i][c] != 0) y[c] += cb * binv_[i][c];
        }
      }
      // Bland: lowest-index column with positive reduced cost enters.
      std::size_t entering = sf_.columns.size();
      for (std::size_t j = 0; j < sf_.columns.size(); ++j) {
        if (in_basis_[j] || (!allow_artificial && sf_.artificial[j])) continue;
        reduced = cost[j];
        for (const auto& [r, a] : sf_.columns[j]) {
          if (y[r] == 0) continue;
          if (a == 1) {
            reduced -= y[r];
          } else {
            reduced -= a * y[r];
          }
        }
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (entering == sf_.columns.size()) return Outcome::kOptimal;

      direction(entering, u);
      // Bland: among minimum ratios, the row whose basic variable has lowest index leaves.
      std::size_t leaving = rows_;
      Rational best_ratio;
      Rational ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (u[i] <= 0) continue;
        ratio = x_basic_[i] / u[i];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) return Outcome::kUnbounded;
      pivot(leaving, entering, u);
    }
  }

  // Replace basic artificials at level zero with structural columns where possible.
  void drive_out_artificials() {
    std::vector<Rational> u(rows_);
    for (std::size_t p = 0; p < rows_; ++p) {
      if (!sf_.artificial[basis_[p]]) continue;
      for (std::size_t j = 0; j < sf_.columns.size(); ++j) {
        if (in_basis_[j] || sf_.artificial[j]) continue;
        direction(j, u);
        if (u[p] != 0) {
          pivot(p, j, u);
          break;
        }
      }
    }
  }

  Rational value_of(const std::vector<Rational>& cost) const {
    Rational v(0);
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * x_basic_[i];
    return v;
  }

  std::vector<Rational> column_values() const {
    std::vector<Rational> x(sf_.columns.size(), Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) x[basis_[i]] = x_basic_[i];
    return x;
  }

  std::size_t iterations() const noexcept { return iterations_; }

 private:
  void direction(std::size_t col, std::vector<Rational>& u) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      u[i] = 0;
      for (const auto& [r, a] : sf_.columns[col]) {
        if (binv_[i][r] == 0) continue;
        if (a == 1) {
          u[i] += binv_[i][r];
        } else {
          u[i] += binv_[i][r] * a;
        }
      }
    }
  }

  void pivot(std::size_t p, std::size_t q, const std::vector<Rational>& u) {
    if (options_.iteration_cap && iterations_ >= *options_.iteration_cap) {
      throw Error(ErrorCode::kIterationLimit,
                  "simplex exceeded " + std::to_string(*options_.iteration_cap) + " pivots");
    }
    ++iterations_;
    const Rational pivot_value = u[p];
    auto& prow = binv_[p];
    for (auto& v : prow) {
      if (v != 0) v /= pivot_value;
    }
    x_basic_[p] /= pivot_value;
    Rational factor;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == p || u[i] == 0) continue;
      factor = u[i];
      for (std::size_t c = 0; c < rows_; ++c) {
        if (prow[c] != 0) binv_[i][c] -= factor * prow[c];
      }
      x_basic_[i] -= factor * x_basic_[p];
    }
    in_basis_[basis_[p]] = false;
    basis_[p] = q;
    in_basis_[q] = true;
  }

  const StandardForm& sf_;
  const LpOptions& options_;
  std::size_t rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> x_basic_;
  std::vector<bool> in_basis_;
  std::vector<std::vector<Rational>> binv_;
  std::size_t iterations_ = 0;
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem, const LpOptions& options) {
  validate(problem);
  const StandardForm sf = to_standard_form(problem);
  Simplex simplex(sf, options);
  LpSolution out;

  std::vector<Rational> phase1(sf.columns.size(), Rational(0));
  bool any_artificial = false;
  for (std::size_t j = 0; j < sf.columns.size(); ++j) {
    if (sf.artificial[j]) {
      phase1[j] = -1;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    simplex.optimize(phase1, true);
    if (simplex.value_of(phase1) != 0) {
      out.status = LpStatus::kInfeasible;
      out.iterations = simplex.iterations();
      return out;
    }
    simplex.drive_out_artificials();
  }

  const auto outcome = simplex.optimize(sf.cost, false);
  out.iterations = simplex.iterations();
  if (outcome == Simplex::Outcome::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  const auto cols = simplex.column_values();
  out.status = LpStatus::kOptimal;
  out.values.resize(problem.num_vars());
  out.objective_value = 0;
  for (std::size_t k = 0; k < problem.num_vars(); ++k) {
    Rational v = sf.vars[k].offset;
    for (const auto& [col, sign] : sf.vars[k].parts) {
      if (sign > 0) {
        v += cols[col];
      } else {
        v -= cols[col];
      }
    }
    out.objective_value += problem.objective[k] * v;
    out.values[k] = std::move(v);
  }
  return out;
}

bool lp_is_feasible_point(const LpProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.num_vars()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const VariableBounds b = problem.bounds.empty() ? VariableBounds{} : problem.bounds[k];
    if (b.lower && x[k] < *b.lower) return false;
    if (b.upper && x[k] > *b.upper) return false;
  }
  for (const auto& c : problem.constraints) {
    Rational lhs(0);
    for (const auto& [k, a] : c.terms) lhs += a * x[k];
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace bicrit
