#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bicrit/error.hpp"
#include "bicrit/generators.hpp"
#include "bicrit/instances.hpp"
#include "bicrit/io.hpp"
#include "bicrit/oracles.hpp"

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

TEST_CASE("makespan instance invariants") {
  CHECK(code_of([] { MakespanInstance({{Rational(1)}}, Rational(0)); }) == ErrorCode::kInvariant);
  CHECK(code_of([] { MakespanInstance({{Rational(-1)}}, Rational(1)); }) == ErrorCode::kInvariant);
  CHECK(code_of([] { MakespanInstance({{Rational(1)}, {}}, Rational(1)); }) == ErrorCode::kInvariant);
  MakespanInstance inst({{Rational(2), kUnschedulable, Rational(5)}}, Rational(2));
  CHECK(inst.machines() == 1);
  CHECK(inst.jobs() == 3);
  const std::vector<JobId> keep{2, 0};
  const auto sub = inst.restrict_jobs(keep);
  CHECK(sub.jobs() == 2);
  CHECK(*sub.proc(0, 0) == 5);
  CHECK(*sub.proc(0, 1) == 2);
}

TEST_CASE("schedule rejects a job twice") {
  Schedule s;
  s.add(1, 0);
  s.add(0, 1);
  CHECK(s.pairs().front().machine == 0);
  CHECK(s.contains_job(0));
  CHECK_FALSE(s.contains_job(2));
  CHECK(code_of([&] { s.add(0, 0); }) == ErrorCode::kInvariant);
}

TEST_CASE("set packing instance invariants") {
  SetPackingInstance inst(4, {{1, 0}, {3, 2}, {2, 1}}, std::vector<SetIndex>{0, 1});
  CHECK(inst.set(0) == std::vector<ElementId>{0, 1});
  CHECK(code_of([] { SetPackingInstance(2, {{0, 2}}); }) == ErrorCode::kInvariant);
  CHECK(code_of([] { SetPackingInstance(2, {{0, 0}}); }) == ErrorCode::kInvariant);
  // overlapping planted sets
  CHECK(code_of([] { SetPackingInstance(3, {{0, 1}, {1, 2}}, std::vector<SetIndex>{0, 1}); }) ==
        ErrorCode::kInvariant);
  // planted sets missing an element
  CHECK(code_of([] { SetPackingInstance(3, {{0, 1}, {2}}, std::vector<SetIndex>{0}); }) ==
        ErrorCode::kInvariant);
}

TEST_CASE("santa claus instance invariants and agent values") {
  CHECK(code_of([] { SantaClausInstance({{Rational(-1)}}, 1, Rational(1)); }) == ErrorCode::kInvariant);
  SantaClausInstance inst({{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}}, 2, Rational(1));
  Allocation alloc{{0, 1}, {1, 0}};
  const auto v = agent_values(inst, alloc);
  CHECK(v[0] == Rational(1, 2));
  CHECK(v[1] == 1);
}

TEST_CASE("cnf validation and counting") {
  CnfFormula bad{2, {{1, -1}}};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::kInvariant);
  CnfFormula range{2, {{3}}};
  CHECK(code_of([&] { range.validate(); }) == ErrorCode::kInvariant);
  CnfFormula f{3, {{1, 2, 3}, {-1, 2, -3}}};
  f.validate();
  CHECK(f.occurrences() == std::vector<std::size_t>{2, 2, 2});
  CHECK(f.satisfied_count(0b000) == 1);
  CHECK(f.satisfied_count(0b101) == 1);
  CHECK(f.satisfied_count(0b010) == 2);
}

TEST_CASE("planted makespan generator") {
  SUBCASE("single job fills T") {
    const auto inst = gen_planted_makespan({1, 1, 1.0, 12}, 5);
    CHECK(*inst.proc(0, 0) == inst.target());
  }
  SUBCASE("2x3 example has optimum T") {
    const auto inst = gen_planted_makespan({2, 3, 0.5, 12}, 7);
    CHECK(brute_makespan_opt(inst).opt_makespan == inst.target());
  }
  SUBCASE("determinism") {
    const auto a = gen_planted_makespan({3, 5, 0.5, 12}, 11);
    const auto b = gen_planted_makespan({3, 5, 0.5, 12}, 11);
    CHECK(a == b);
    CHECK(emit_instance(a) == emit_instance(b));
  }
  SUBCASE("oracle equivalence for m <= 3, n <= 6") {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t n = 1; n <= 6; ++n) {
        for (double density : {0.3, 1.0}) {
          for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto inst = gen_planted_makespan({m, n, density, 12}, seed);
            const auto opt = brute_makespan_opt(inst).opt_makespan;
            REQUIRE(opt.has_value());
            CHECK(*opt == inst.target());
          }
        }
      }
    }
  }
  CHECK(code_of([] { gen_planted_makespan({0, 1, 0.5, 12}, 1); }) == ErrorCode::kBadParams);
  CHECK(code_of([] { gen_planted_makespan({1, 1, 0.0, 12}, 1); }) == ErrorCode::kBadParams);
  CHECK(code_of([] { gen_planted_makespan({1, 1, 1.5, 12}, 1); }) == ErrorCode::kBadParams);
}

TEST_CASE("planted set packing generator") {
  const auto two = gen_planted_setpacking({2, 0, 2, 2}, 1);
  CHECK(two.universe_size() == 4);
  CHECK(two.size() == 2);
  CHECK(brute_setpacking_opt(two) == 2);

  const auto mixed = gen_planted_setpacking({3, 5, 3, 6}, 9);
  REQUIRE(mixed.planted().has_value());
  CHECK(is_partition(mixed.universe_size(), mixed.sets(), *mixed.planted()));
  CHECK(mixed.size() == 8);
  for (const auto& s : mixed.sets()) {
    CHECK(s.size() >= 3);
    CHECK(s.size() <= 6);
  }

  CHECK(brute_setpacking_opt(gen_planted_setpacking({2, 1, 2, 2}, 3)) >= 2);
  CHECK(gen_planted_setpacking({3, 5, 3, 6}, 9) == mixed);
  CHECK(code_of([] { gen_planted_setpacking({1, 0, 3, 2}, 1); }) == ErrorCode::kBadParams);
  CHECK(code_of([] { gen_planted_setpacking({0, 0, 1, 2}, 1); }) == ErrorCode::kBadParams);
}

TEST_CASE("regular cnf generator") {
  const auto one = gen_cnf_regular(3, 3, 1, 2);
  REQUIRE(one.clauses.size() == 1);
  std::set<Literal> vars;
  for (Literal l : one.clauses[0]) vars.insert(l < 0 ? -l : l);
  CHECK(vars == std::set<Literal>{1, 2, 3});

  CHECK(gen_cnf_regular(5, 3, 3, 4).clauses.size() == 5);
  CHECK(gen_cnf_regular(3, 3, 2, 6).occurrences() == std::vector<std::size_t>{2, 2, 2});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = gen_cnf_regular(15, 3, 5, seed);
    f.validate();
    CHECK(f.clauses.size() == 25);
    for (auto c : f.occurrences()) CHECK(c == 5);
    for (const auto& c : f.clauses) CHECK(c.size() == 3);
  }
  CHECK(code_of([] { gen_cnf_regular(4, 3, 2, 1); }) == ErrorCode::kBadParams);
  CHECK(gen_cnf_regular(6, 3, 4, 8) == gen_cnf_regular(6, 3, 4, 8));
}
