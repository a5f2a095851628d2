#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bicrit/error.hpp"
#include "bicrit/oracles.hpp"
#include "bicrit/suites.hpp"

using namespace bicrit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kMismatch;
}

}  // namespace

TEST_CASE("size guards") {
  const MakespanInstance wide(std::vector<std::vector<ProcTime>>(3, std::vector<ProcTime>(12, Rational(1))),
                              Rational(4));
  CHECK(code_of([&] { brute_makespan_opt(wide); }) == ErrorCode::kTooLarge);
  std::vector<std::vector<ElementId>> many(24, std::vector<ElementId>{0});
  CHECK(code_of([&] { brute_setpacking_opt(SetPackingInstance(1, many)); }) == ErrorCode::kTooLarge);
  CHECK(code_of([] { brute_max_satisfiable(CnfFormula{30, {{1}}}); }) == ErrorCode::kTooLarge);
  const SantaClausInstance sc(std::vector<std::vector<Rational>>(3, std::vector<Rational>(12, Rational(1))), 12,
                              Rational(1));
  CHECK(code_of([&] { brute_santaclaus_opt(sc); }) == ErrorCode::kTooLarge);
  CHECK(code_of([] { two_phase_violation(std::vector<std::uint32_t>{1}, 17); }) == ErrorCode::kTooLarge);
}

TEST_CASE("max satisfiable") {
  CHECK(brute_max_satisfiable(CnfFormula{1, {{1}, {-1}}}) == 1);
  CHECK(brute_max_satisfiable(CnfFormula{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}}) == 3);
}

TEST_CASE("makespan oracle rejection") {
  // two jobs of size 3 on one machine, T = 4: only one fits
  const MakespanInstance inst({{Rational(3), Rational(3)}}, Rational(4));
  const auto r = brute_makespan_opt(inst);
  CHECK(r.opt_makespan == Rational(6));
  CHECK(r.max_jobs_within_target == 1);
  CHECK(brute_makespan_opt(inst, EdgeFilter::kSmallOnly).max_jobs_within_target == 0);
  const MakespanInstance stuck({{kUnschedulable}}, Rational(1));
  CHECK_FALSE(brute_makespan_opt(stuck).opt_makespan.has_value());
}

TEST_CASE("suites at small scale") {
  CHECK(makespan_family_suite(2, kCheckAll).passed);
  CHECK(lemma42_suite(3, 3).passed);
  CHECK(gadget_suite(3, 3).passed);
  CHECK(parameter_table_suite(6, 3, 2, 1).passed);
  CHECK(oracle_equivalence_suite(4, 2).passed);
  CHECK(soundness_formula_suite(CnfFormula{3, {{1, 2, 3}, {-1, 2, -3}}}).passed);
  const auto sc = santaclaus_completeness_suite(Rational(1));
  CHECK(sc.passed);
  CHECK(sc.cases > 100);
}
