#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "bicrit/instances.hpp"

namespace bicrit {

// Outcome of an exhaustive or randomized property suite. `counterexample`
// holds the first violating case and stays null on success.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  nlohmann::json counterexample;
  nlohmann::json stats = nlohmann::json::object();
};

enum MakespanCheck : unsigned {
  kCheckLemma22 = 1,      // brute E_S optimum >= n - m*
  kCheckProp25 = 2,       // sum |l_i| >= OPT_small / 2
  kCheckLemma26 = 4,      // kept >= sum |l_i| / 3
  kCheckLemma24 = 8,      // alg3 count >= (n - m*) / 6 and makespan <= T/2
  kCheckAll = 15,
};

// Two machines, 1..max_jobs jobs, every entry in {1, 2, 3, 4, inf}, T set to
// the brute-force optimum. Instances with a job unschedulable everywhere are
// skipped.
SuiteResult makespan_family_suite(std::size_t max_jobs, unsigned checks);

// |U'| + OPT(U \ U') >= OPT(U) for every multiset of at most max_sets subsets
// of a universe of size 1..max_universe and every U'.
SuiteResult lemma42_suite(std::size_t max_universe, std::size_t max_sets);

// Matching partition, edge size d^(sigma-1) and cross intersections
// d^(sigma-2) of one gadget.
SuiteResult gadget_suite(std::size_t sigma, std::size_t d);

// Sizes, counts and cross-matching intersections of the CNF reduction on a
// regular formula.
SuiteResult parameter_table_suite(std::size_t vars, std::size_t q, std::size_t d, std::uint64_t seed);

// On random formulas with at most max_clauses clauses of length 3: the
// eps = 0 almost-disjoint maximum equals the best satisfiable count, and the
// soundness inequality holds for several eps below the bound.
SuiteResult soundness_suite(std::size_t formulas, std::size_t max_clauses, std::uint64_t seed);

// Same checks on one given formula.
SuiteResult soundness_formula_suite(const CnfFormula& phi);

// Planted generators against the oracles: makespan optimum is T for m <= 3,
// n <= max_jobs; planted set packing optimum reaches the witness size.
SuiteResult oracle_equivalence_suite(std::size_t max_jobs, std::uint64_t seeds);

// Every tiny planted set packing instance (universe <= 4, <= 3 sets, <= 6
// items after reduction): the witness gives each agent exactly T and the
// brute-force optimum equals T.
SuiteResult santaclaus_completeness_suite(const Rational& target);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace bicrit
