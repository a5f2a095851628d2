#include "bicrit/suites.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "bicrit/error.hpp"
#include "bicrit/generators.hpp"
#include "bicrit/io.hpp"
#include "bicrit/makespan.hpp"
#include "bicrit/oracles.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

namespace {

nlohmann::json instance_json(const AnyInstance& inst) { return nlohmann::json::parse(emit_instance(inst)); }

std::size_t overlap(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void fail(SuiteResult& r, nlohmann::json detail) {
  r.passed = false;
  r.counterexample = std::move(detail);
}

}  // namespace

SuiteResult makespan_family_suite(std::size_t max_jobs, unsigned checks) {
  SuiteResult r;
  r.name = "makespan-family";
  constexpr std::size_t kMachines = 2;
  constexpr std::size_t kValues = 5;  // 1, 2, 3, 4, inf
  std::uint64_t skipped = 0;
  for (std::size_t n = 1; n <= max_jobs && r.passed; ++n) {
    const std::size_t cells = kMachines * n;
    const std::uint64_t total = ipow(kValues, cells);
    for (std::uint64_t code = 0; code < total && r.passed; ++code) {
      std::vector<std::vector<ProcTime>> proc(kMachines, std::vector<ProcTime>(n));
      std::uint64_t rest = code;
      for (std::size_t c = 0; c < cells; ++c) {
        const auto v = rest % kValues;
        rest /= kValues;
        if (v < 4) proc[c % kMachines][c / kMachines] = Rational(static_cast<long>(v + 1));
      }
      bool coverable = true;
      for (JobId j = 0; j < n; ++j) coverable = coverable && (proc[0][j] || proc[1][j]);
      if (!coverable) {
        ++skipped;
        continue;
      }
      const auto opt = brute_makespan_opt(MakespanInstance(proc, Rational(1))).opt_makespan;
      const MakespanInstance inst(std::move(proc), *opt);
      ++r.cases;

      const std::size_t m_star = alg1_match_large(inst).size();
      const auto greedy = alg3_greedy(inst);
      std::size_t listed = 0;
      for (const auto& l : greedy.trace.lists) listed += l.size();
      const std::size_t kept = greedy.schedule.size();
      const auto eval = evaluate_schedule(inst, greedy.schedule);
      const std::size_t small_opt =
          (checks & (kCheckLemma22 | kCheckProp25))
              ? brute_makespan_opt(inst, EdgeFilter::kSmallOnly).max_jobs_within_target
              : 0;

      std::string broken;
      if ((checks & kCheckLemma22) && small_opt + m_star < n) broken = "small-edge optimum < n - m*";
      if ((checks & kCheckProp25) && 2 * listed < small_opt) broken = "sum |l_i| < OPT_small / 2";
      if ((checks & kCheckLemma26) && 3 * kept < listed) broken = "kept < sum |l_i| / 3";
      if ((checks & kCheckLemma24) && (6 * kept + m_star < n || eval.makespan * 2 > inst.target())) {
        broken = "alg3 count < (n - m*)/6 or makespan > T/2";
      }
      if (!broken.empty()) {
        fail(r, {{"violation", broken},
                 {"instance", instance_json(inst)},
                 {"m_star", m_star},
                 {"small_opt", small_opt},
                 {"listed", listed},
                 {"kept", kept}});
      }
    }
  }
  r.stats = {{"max_jobs", max_jobs}, {"skipped_uncoverable", skipped}};
  return r;
}

SuiteResult lemma42_suite(std::size_t max_universe, std::size_t max_sets) {
  SuiteResult r;
  r.name = "lemma42";
  if (max_universe > 16) throw Error(ErrorCode::kTooLarge, "universe limited to 16 elements");
  std::vector<std::uint32_t> family;
  for (std::size_t u = 1; u <= max_universe && r.passed; ++u) {
    const std::uint32_t masks = std::uint32_t{1} << u;
    // multisets as non-decreasing mask sequences
    auto visit = [&](auto&& self, std::uint32_t from) -> void {
      if (!r.passed) return;
      ++r.cases;
      if (auto bad = two_phase_violation(family, u)) {
        fail(r, {{"universe_size", u}, {"sets", family}, {"removed", *bad}});
        return;
      }
      if (family.size() == max_sets) return;
      for (std::uint32_t m = from; m < masks; ++m) {
        family.push_back(m);
        self(self, m);
        family.pop_back();
      }
    };
    visit(visit, 0);
  }
  r.stats = {{"max_universe", max_universe}, {"max_sets", max_sets}};
  return r;
}

SuiteResult gadget_suite(std::size_t sigma, std::size_t d) {
  SuiteResult r;
  r.name = "gadget";
  if (ipow(d, sigma) > 1'000'000) throw Error(ErrorCode::kTooLarge, "gadget block above 10^6 points");
  const HypercubeGadget g(1, sigma, d, 0);
  const std::size_t edge_size = ipow(d, sigma - 1);
  const std::size_t cross = ipow(d, sigma - 2);
  for (std::size_t i = 1; i <= sigma && r.passed; ++i) {
    std::vector<int> hits(g.block_size(), 0);
    for (std::size_t j = 1; j <= d; ++j) {
      ++r.cases;
      if (g.edge(i, j).size() != edge_size) fail(r, {{"edge", {i, j}}, {"size", g.edge(i, j).size()}});
      for (ElementId p : g.edge(i, j)) ++hits[p];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      fail(r, {{"matching", i}, {"violation", "not a partition of the block"}});
    }
    for (std::size_t i2 = i + 1; i2 <= sigma && r.passed; ++i2) {
      for (std::size_t j = 1; j <= d && r.passed; ++j) {
        for (std::size_t j2 = 1; j2 <= d && r.passed; ++j2) {
          ++r.cases;
          const auto o = overlap(g.edge(i, j), g.edge(i2, j2));
          if (o != cross) fail(r, {{"edges", {{i, j}, {i2, j2}}}, {"intersection", o}});
        }
      }
    }
  }
  r.stats = {{"sigma", sigma}, {"d", d}, {"edge_size", edge_size}, {"cross_intersection", cross}};
  return r;
}

SuiteResult parameter_table_suite(std::size_t vars, std::size_t q, std::size_t d, std::uint64_t seed) {
  SuiteResult r;
  r.name = "parameter-table";
  const auto phi = gen_cnf_regular(vars, q, d, seed);
  const auto red = reduce_cnf_to_setpacking(phi);
  const std::size_t m = phi.clauses.size();
  const std::size_t k = q * d;
  const std::size_t eta = (std::size_t{1} << q) - 1;
  r.stats = {{"clauses", m},          {"sets", red.instance.size()},
             {"universe", red.instance.universe_size()},
             {"set_size", k},         {"eta", red.params.eta},
             {"gamma", format_rational(red.params.gamma)},
             {"eps_bound", format_rational(red.params.eps_bound)}};
  ++r.cases;
  if (red.instance.size() != eta * m) fail(r, {{"violation", "set count != eta * m"}});
  ++r.cases;
  if (red.instance.universe_size() != k * m) fail(r, {{"violation", "universe != k * m"}});
  for (SetIndex s = 0; s < red.instance.size() && r.passed; ++s) {
    ++r.cases;
    if (red.instance.set(s).size() != k) fail(r, {{"violation", "set size != q d"}, {"set", s}});
  }
  for (const auto& g : red.gadgets) {
    for (std::size_t j = 1; j <= d && r.passed; ++j) {
      for (std::size_t j2 = 1; j2 <= d && r.passed; ++j2) {
        ++r.cases;
        const auto o = overlap(g.edge(1, j), g.edge(2, j2));
        if (o != 1) fail(r, {{"variable", g.variable()}, {"edges", {{1, j}, {2, j2}}}, {"intersection", o}});
      }
    }
  }
  return r;
}

SuiteResult soundness_formula_suite(const CnfFormula& phi) {
  SuiteResult r;
  r.name = "soundness";
  const auto exact = verify_reduction_soundness(phi, Rational(0));
  ++r.cases;
  if (exact.max_almost_disjoint != exact.max_satisfied) {
    fail(r, {{"violation", "eps = 0 maximum differs from max satisfiable"},
             {"formula", instance_json(phi)},
             {"max_almost_disjoint", exact.max_almost_disjoint},
             {"max_satisfied", exact.max_satisfied}});
    return r;
  }
  const Rational milli(1, 1000);
  const std::vector<Rational> below{milli, Rational(1, 60), Rational(1, 30) - milli, exact.eps_bound - milli};
  for (const Rational& eps : below) {
    const auto rep = verify_reduction_soundness(phi, eps);
    ++r.cases;
    if (!rep.applicable || !rep.holds) {
      fail(r, {{"violation", "soundness inequality"},
               {"formula", instance_json(phi)},
               {"eps", format_rational(eps)},
               {"max_almost_disjoint", rep.max_almost_disjoint},
               {"max_satisfied", rep.max_satisfied}});
      return r;
    }
  }
  r.stats = {{"sets", exact.sets}, {"max_satisfied", exact.max_satisfied}, {"eps_bound", format_rational(exact.eps_bound)}};
  return r;
}

SuiteResult soundness_suite(std::size_t formulas, std::size_t max_clauses, std::uint64_t seed) {
  SuiteResult r;
  r.name = "soundness";
  Rng rng(seed);
  std::size_t unsatisfiable = 0;
  for (std::size_t f = 0; f < formulas && r.passed; ++f) {
    const std::size_t vars = 3 + rng.below(3);
    const std::size_t clauses = 1 + rng.below(max_clauses);
    CnfFormula phi{vars, {}};
    for (std::size_t c = 0; c < clauses; ++c) {
      std::vector<Literal> pool;
      for (std::size_t v = 1; v <= vars; ++v) pool.push_back(static_cast<Literal>(v));
      std::vector<Literal> clause;
      for (int k = 0; k < 3; ++k) {
        const auto pick = rng.below(pool.size());
        const Literal v = pool[pick];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        clause.push_back(rng.below(2) == 0 ? v : -v);
      }
      phi.clauses.push_back(std::move(clause));
    }
    if (brute_max_satisfiable(phi) < phi.clauses.size()) ++unsatisfiable;
    auto one = soundness_formula_suite(phi);
    r.cases += one.cases;
    if (!one.passed) fail(r, one.counterexample);
  }
  r.stats = {{"formulas", formulas}, {"max_clauses", max_clauses}, {"unsatisfiable", unsatisfiable}};
  return r;
}

SuiteResult oracle_equivalence_suite(std::size_t max_jobs, std::uint64_t seeds) {
  SuiteResult r;
  r.name = "oracle-eq";
  for (std::size_t m = 1; m <= 3 && r.passed; ++m) {
    for (std::size_t n = 1; n <= max_jobs && r.passed; ++n) {
      for (double density : {0.25, 0.5, 1.0}) {
        for (std::uint64_t seed = 0; seed < seeds && r.passed; ++seed) {
          const auto inst = gen_planted_makespan({m, n, density, 12}, seed);
          const auto opt = brute_makespan_opt(inst).opt_makespan;
          ++r.cases;
          if (!opt || *opt != inst.target()) {
            fail(r, {{"violation", "planted makespan optimum differs from T"}, {"instance", instance_json(inst)}});
          }
        }
      }
    }
  }
  for (std::size_t m = 1; m <= 3 && r.passed; ++m) {
    for (std::size_t extra = 0; extra <= 3 && r.passed; ++extra) {
      for (std::uint64_t seed = 0; seed < seeds && r.passed; ++seed) {
        const auto inst = gen_planted_setpacking({m, extra, 1, 3}, seed);
        ++r.cases;
        if (brute_setpacking_opt(inst) < m) {
          fail(r, {{"violation", "planted set packing optimum below witness"}, {"instance", instance_json(inst)}});
        }
      }
    }
  }
  return r;
}

SuiteResult santaclaus_completeness_suite(const Rational& target) {
  SuiteResult r;
  r.name = "santaclaus-completeness";
  std::vector<std::uint32_t> masks;
  for (std::size_t u = 1; u <= 4 && r.passed; ++u) {
    const std::uint32_t full = (std::uint32_t{1} << u) - 1;
    auto visit = [&](auto&& self) -> void {
      if (!r.passed) return;
      const std::size_t n = masks.size();
      for (std::uint32_t pick = 1; n > 0 && pick < (std::uint32_t{1} << n) && r.passed; ++pick) {
        std::uint32_t uni = 0;
        bool disjoint = true;
        for (std::size_t k = 0; k < n; ++k) {
          if (!((pick >> k) & 1U)) continue;
          disjoint = disjoint && (uni & masks[k]) == 0;
          uni |= masks[k];
        }
        const std::size_t m = static_cast<std::size_t>(std::popcount(pick));
        if (!disjoint || uni != full || u + n - m > 6) continue;
        std::vector<std::vector<ElementId>> sets;
        for (auto mask : masks) {
          std::vector<ElementId> s;
          for (ElementId e = 0; e < u; ++e) {
            if ((mask >> e) & 1U) s.push_back(e);
          }
          sets.push_back(std::move(s));
        }
        std::vector<SetIndex> planted;
        for (std::size_t k = 0; k < n; ++k) {
          if ((pick >> k) & 1U) planted.push_back(k);
        }
        const SetPackingInstance inst(u, std::move(sets), planted);
        const auto red = reduce_setpacking_to_santaclaus(inst, target);
        ++r.cases;
        const auto values = agent_values(red.instance, red.witness);
        const bool exact = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == target; });
        const auto opt = brute_santaclaus_opt(red.instance).opt_min_value;
        if (!exact || opt != target) {
          fail(r, {{"violation", exact ? "brute-force optimum differs from T" : "witness value differs from T"},
                   {"instance", instance_json(inst)},
                   {"optimum", format_rational(opt)}});
        }
      }
      if (n == 3) return;
      for (std::uint32_t mask = masks.empty() ? 1 : masks.back(); mask <= full; ++mask) {
        masks.push_back(mask);
        self(self);
        masks.pop_back();
      }
    };
    visit(visit);
  }
  r.stats = {{"T", format_rational(target)}};
  return r;
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j = {{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"stats", r.stats}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace bicrit
