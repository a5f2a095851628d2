// Independent reference routines shared by the test binaries.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bicrit/lp.hpp"
#include "bicrit/rational.hpp"

namespace bicrit::testing {

struct Halfspace {
  std::vector<Rational> a;  // a . x <= b
  Rational b;
};

// Every constraint and bound of the problem as a <= row.
inline std::vector<Halfspace> as_halfspaces(const LpProblem& p) {
  const std::size_t n = p.num_vars();
  std::vector<Halfspace> rows;
  for (const auto& c : p.constraints) {
    std::vector<Rational> a(n, Rational(0));
    for (const auto& [k, v] : c.terms) a[k] += v;
    std::vector<Rational> neg(n);
    for (std::size_t k = 0; k < n; ++k) neg[k] = -a[k];
    if (c.relation != Relation::kGreaterEqual) rows.push_back({a, c.rhs});
    if (c.relation != Relation::kLessEqual) rows.push_back({neg, -c.rhs});
  }
  for (std::size_t k = 0; k < n; ++k) {
    VariableBounds b = p.bounds.empty() ? VariableBounds{} : p.bounds[k];
    std::vector<Rational> e(n, Rational(0));
    if (b.upper) {
      e[k] = 1;
      rows.push_back({e, *b.upper});
    }
    if (b.lower) {
      e[k] = -1;
      rows.push_back({e, -*b.lower});
    }
  }
  return rows;
}

// Solves the square system, nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = rhs[k] / m[k][k];
  return x;
}

// Best objective over the vertices of {x : rows}, nullopt if there are none.
inline std::optional<Rational> best_vertex(const std::vector<Rational>& objective,
                                           const std::vector<Halfspace>& rows) {
  const std::size_t n = objective.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  auto visit = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      std::vector<std::vector<Rational>> m;
      std::vector<Rational> rhs;
      for (std::size_t r : pick) {
        m.push_back(rows[r].a);
        rhs.push_back(rows[r].b);
      }
      auto x = solve_square(m, rhs);
      if (!x) return;
      for (const auto& h : rows) {
        Rational lhs(0);
        for (std::size_t k = 0; k < n; ++k) lhs += h.a[k] * (*x)[k];
        if (lhs > h.b) return;
      }
      Rational val(0);
      for (std::size_t k = 0; k < n; ++k) val += objective[k] * (*x)[k];
      if (!best || val > *best) best = val;
      return;
    }
    for (std::size_t r = start; r < rows.size(); ++r) {
      pick[depth] = r;
      self(self, depth + 1, r + 1);
    }
  };
  visit(visit, 0, 0);
  return best;
}

enum class OracleStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOracle {
  OracleStatus status;
  Rational value;
};

// Vertex enumeration; valid for pointed feasible regions (every variable has
// a finite lower bound).
inline LpOracle brute_lp(const LpProblem& p) {
  auto rows = as_halfspaces(p);
  const auto best = best_vertex(p.objective, rows);
  if (!best) return {OracleStatus::kInfeasible, Rational(0)};
  std::vector<Rational> neg(p.objective.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -p.objective[k];
  rows.push_back({neg, -(*best + 1)});
  if (best_vertex(p.objective, rows)) return {OracleStatus::kUnbounded, Rational(0)};
  return {OracleStatus::kOptimal, *best};
}

}  // namespace bicrit::testing

#include "bicrit/flow.hpp"

namespace bicrit::testing {

// Largest value of any integral feasible flow, by enumerating every per-arc
// flow vector. Only for tiny networks.
inline std::int64_t brute_flow_value(const FlowNetwork& net) {
  std::vector<std::int64_t> f(net.arcs.size(), 0);
  std::int64_t best = 0;
  while (true) {
    std::vector<std::int64_t> excess(net.nodes, 0);
    for (std::size_t a = 0; a < f.size(); ++a) {
      excess[net.arcs[a].from] -= f[a];
      excess[net.arcs[a].to] += f[a];
    }
    bool ok = true;
    for (std::size_t v = 0; v < net.nodes; ++v) {
      if (v != net.source && v != net.sink && excess[v] != 0) ok = false;
    }
    if (ok) best = std::max(best, excess[net.sink]);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] > net.arcs[k].capacity) f[k++] = 0;
    if (k == f.size()) break;
  }
  return best;
}

}  // namespace bicrit::testing
