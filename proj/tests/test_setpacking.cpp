#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bicrit/error.hpp"
#include "bicrit/generators.hpp"
#include "bicrit/oracles.hpp"
#include "bicrit/rng.hpp"
#include "bicrit/setpacking.hpp"

using namespace bicrit;

namespace {

// A={1,2}, B={3,4}, C={2,3} with elements renumbered from 0
SetPackingInstance three_sets(std::optional<std::vector<SetIndex>> planted = std::nullopt) {
  return SetPackingInstance(4, {{0, 1}, {2, 3}, {1, 2}}, std::move(planted));
}

std::vector<SetIndex> all_indices(const SetPackingInstance& inst) {
  std::vector<SetIndex> v(inst.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Most sets that can each be handed one private element (exhaustive).
std::size_t brute_private_elements(const SetPackingInstance& inst) {
  std::size_t best = 0;
  std::vector<bool> used(inst.universe_size(), false);
  auto go = [&](auto&& self, std::size_t s, std::size_t count) -> void {
    if (count + (inst.size() - s) <= best) return;
    if (s == inst.size()) {
      best = std::max(best, count);
      return;
    }
    self(self, s + 1, count);
    for (ElementId e : inst.set(s)) {
      if (used[e]) continue;
      used[e] = true;
      self(self, s + 1, count + 1);
      used[e] = false;
    }
  };
  go(go, 0, 0);
  return best;
}

// Whether disjoint A_i exist, by trying every element -> set-or-nobody map.
bool brute_almost_disjoint(const std::vector<std::vector<ElementId>>& sets, std::size_t universe,
                           const Rational& eps) {
  std::vector<std::size_t> owner(universe, 0);  // 0 = nobody, k = set k-1
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < sets.size() && ok; ++k) {
      std::size_t got = 0;
      for (ElementId e : sets[k]) got += owner[e] == k + 1 ? 1 : 0;
      ok = Rational(static_cast<unsigned long>(got)) >= (1 - eps) * static_cast<unsigned long>(sets[k].size());
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < universe && ++owner[i] > sets.size()) owner[i++] = 0;
    if (i == universe) return false;
  }
}

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

TEST_CASE("parameters from delta") {
  const auto p = SpParams::from_delta(Rational(1, 2));
  CHECK(p.coverage_cap == 80);
  CHECK(p.size_cutoff == 1600);
  CHECK(p.eps == Rational(1, 3200));
  for (long d = 1; d < 20; ++d) {
    const auto q = SpParams::from_delta(make_rational(d, 20));
    CHECK(q.eps < Rational(1, q.size_cutoff));
  }
  CHECK(code_of([] { SpParams::from_delta(Rational(1)); }) == ErrorCode::kBadParams);
  CHECK(code_of([] { SpParams::from_delta(Rational(0)); }) == ErrorCode::kBadParams);
}

TEST_CASE("small phase") {
  SetPackingInstance singles(3, {{0}, {1}, {2}});
  auto r = sp_small_phase(singles, all_indices(singles));
  CHECK(r.solution.picks.size() == 3);

  const auto ex = three_sets();
  r = sp_small_phase(ex, all_indices(ex));
  CHECK(r.solution.picks.size() == 3);
  CHECK(r.flow_value == 3);
  CHECK(r.cut_capacity == 3);
  CHECK(is_valid_packing(ex, r.solution));
  for (const auto& p : r.solution.picks) CHECK(p.kept.size() == 1);

  SetPackingInstance twins(1, {{0}, {0}});
  CHECK(sp_small_phase(twins, all_indices(twins)).solution.picks.size() == 1);

  Rng rng(17);
  for (int c = 0; c < 200; ++c) {
    const std::size_t u = 1 + rng.below(6);
    std::vector<std::vector<ElementId>> sets;
    const std::size_t n = rng.below(6);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<ElementId> set;
      for (ElementId e = 0; e < u; ++e) {
        if (rng.below(3) == 0) set.push_back(e);
      }
      sets.push_back(set);
    }
    SetPackingInstance inst(u, sets);
    const auto res = sp_small_phase(inst, all_indices(inst));
    CHECK(res.solution.picks.size() == brute_private_elements(inst));
    CHECK(res.flow_value == res.cut_capacity);
    CHECK(is_valid_packing(inst, res.solution));
  }
}

TEST_CASE("large phase") {
  const auto planted = gen_planted_setpacking({5, 0, 30, 30}, 2);
  const auto params = SpParams::from_delta(Rational(1, 2));
  const std::vector<bool> everything(planted.universe_size(), true);
  const auto r = sp_large_phase(planted, all_indices(planted), everything, params, 3, LpMode::kPlanted);
  CHECK(r.solution.picks.size() == 5);
  CHECK(r.heavy_elements == 0);
  for (const auto& p : r.solution.picks) CHECK(p.kept == planted.set(p.set));

  CHECK(code_of([&] {
          const auto ex = three_sets();
          sp_large_phase(ex, all_indices(ex), std::vector<bool>(4, true), params, 1, LpMode::kPlanted);
        }) == ErrorCode::kNoPlantedWitness);

  const auto noisy = gen_planted_setpacking({6, 6, 20, 40}, 5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto rule : {CollectRule::kOutsideHeavy, CollectRule::kInsideHeavy}) {
      const auto res = sp_large_phase(noisy, all_indices(noisy), std::vector<bool>(noisy.universe_size(), true),
                                      params, seed, LpMode::kSolve, rule);
      CHECK(is_valid_packing(noisy, res.solution));
      const auto again = sp_large_phase(noisy, all_indices(noisy), std::vector<bool>(noisy.universe_size(), true),
                                        params, seed, LpMode::kSolve, rule);
      CHECK(again.sampled == res.sampled);
    }
  }

  // sets reaching outside the available universe never take part
  const auto ex = three_sets(std::vector<SetIndex>{0, 1});
  std::vector<bool> avail{true, true, false, false};
  const auto part = sp_large_phase(ex, all_indices(ex), avail, params, 1, LpMode::kPlanted);
  CHECK(part.eligible == std::vector<SetIndex>{0});
}

TEST_CASE("combined driver") {
  const auto ex = three_sets();
  const auto params = SpParams::from_delta(Rational(1, 2));
  const auto r = sp_combined(ex, params, 1, LpMode::kSolve);
  CHECK(r.small_count == 3);
  CHECK(r.large_count == 0);
  CHECK(is_valid_packing(ex, r.solution));

  // every set above the cutoff: pure rounding
  const auto big = gen_planted_setpacking({3, 0, 20, 20}, 8);
  const auto loose = SpParams::from_delta(Rational(19, 20));  // C = 444
  auto tight = loose;
  tight.size_cutoff = 10;
  const auto b = sp_combined(big, tight, 2, LpMode::kSolve);
  CHECK(b.small_count == 0);
  CHECK(b.large_count == 3);
  CHECK(is_valid_packing(big, b.solution));
  const auto s = sp_combined(big, loose, 2, LpMode::kSolve);
  CHECK(s.small_count == 3);
}

TEST_CASE("almost disjoint checker") {
  std::vector<ElementId> ten(10);
  std::iota(ten.begin(), ten.end(), 0);
  const std::vector<std::vector<ElementId>> twins{ten, ten};
  CHECK_FALSE(check_almost_disjoint(twins, Rational(2, 5)).feasible);
  const auto half = check_almost_disjoint(twins, Rational(1, 2));
  REQUIRE(half.feasible);
  CHECK(half.witness[0].size() == 5);
  CHECK(half.witness[1].size() == 5);
  const auto all = check_almost_disjoint(twins, Rational(1));
  CHECK(all.feasible);
  CHECK(all.demands == std::vector<std::int64_t>{0, 0});
  const auto no = check_almost_disjoint(twins, Rational(2, 5));
  CHECK(no.cut_capacity == no.flow_value);
  CHECK(no.flow_value < 12);
  CHECK(code_of([&] { check_almost_disjoint(twins, Rational(-1, 2)); }) == ErrorCode::kBadParams);
  CHECK(code_of([&] { check_almost_disjoint(twins, Rational(3, 2)); }) == ErrorCode::kBadParams);

  Rng rng(31);
  for (int c = 0; c < 150; ++c) {
    const std::size_t u = 1 + rng.below(7);
    const std::size_t n = 1 + rng.below(3);
    std::vector<std::vector<ElementId>> sets;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<ElementId> set;
      for (ElementId e = 0; e < u; ++e) {
        if (rng.below(2) == 0) set.push_back(e);
      }
      sets.push_back(set);
    }
    const Rational eps = make_rational(static_cast<long>(rng.below(5)), 4);
    const auto res = check_almost_disjoint(sets, eps);
    CAPTURE(c);
    CHECK(res.feasible == brute_almost_disjoint(sets, u, eps));
    if (res.feasible) {
      std::vector<bool> seen(u, false);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(res.witness[k].size() >= static_cast<std::size_t>(res.demands[k]));
        for (ElementId e : res.witness[k]) {
          CHECK(std::binary_search(sets[k].begin(), sets[k].end(), e));
          CHECK_FALSE(seen[e]);
          seen[e] = true;
        }
      }
    }
  }
}

TEST_CASE("Two-phase bound on random instances up to |U| = 8, 6 sets") {
  Rng rng(8);
  for (int c = 0; c < 20000; ++c) {
    const std::size_t u = 1 + rng.below(8);
    const std::size_t n = rng.below(7);
    std::vector<std::uint32_t> masks;
    for (std::size_t s = 0; s < n; ++s) masks.push_back(static_cast<std::uint32_t>(rng.below(1U << u)));
    CHECK_FALSE(two_phase_violation(masks, u).has_value());
  }
}

TEST_CASE("bitmask and generic packing oracles agree") {
  Rng rng(12);
  for (int c = 0; c < 300; ++c) {
    const std::size_t u = 1 + rng.below(5);
    const std::size_t n = rng.below(5);
    std::vector<std::vector<ElementId>> sets;
    std::vector<std::uint32_t> masks;
    for (std::size_t s = 0; s < n; ++s) {
      const auto m = static_cast<std::uint32_t>(rng.below(1U << u));
      masks.push_back(m);
      std::vector<ElementId> set;
      for (ElementId e = 0; e < u; ++e) {
        if ((m >> e) & 1U) set.push_back(e);
      }
      sets.push_back(set);
    }
    SetPackingInstance inst(u, sets);
    const std::size_t opt = brute_setpacking_opt(inst);
    for (std::uint32_t removed = 0; removed < (1U << u); ++removed) {
      std::vector<ElementId> allowed;
      for (ElementId e = 0; e < u; ++e) {
        if (!((removed >> e) & 1U)) allowed.push_back(e);
      }
      const std::size_t rest = brute_setpacking_opt(inst, allowed);
      CHECK(std::popcount(removed) + rest >= opt);
    }
    CHECK_FALSE(two_phase_violation(masks, u).has_value());
  }
  CHECK_FALSE(two_phase_violation(std::vector<std::uint32_t>{}, 3).has_value());
}

TEST_CASE("packing oracle examples") {
  CHECK(brute_setpacking_opt(SetPackingInstance(2, {{0}, {1}})) == 2);
  CHECK(brute_setpacking_opt(three_sets()) == 2);
  CHECK(brute_setpacking_opt(three_sets(), std::vector<ElementId>{0, 1, 3}) == 1);
  std::vector<ElementId> ten(10);
  std::iota(ten.begin(), ten.end(), 0);
  const std::vector<std::vector<ElementId>> twins{ten, ten};
  CHECK(brute_almost_disjoint_max(twins, Rational(2, 5)) == 1);
  const std::vector<std::vector<ElementId>> apart{{0}, {1}};
  CHECK(brute_almost_disjoint_max(apart, Rational(0)) == 2);
  CHECK(brute_almost_disjoint_max(std::vector<std::vector<ElementId>>{}, Rational(0)) == 0);
}
