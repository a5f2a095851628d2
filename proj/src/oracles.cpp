#include "bicrit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bicrit/error.hpp"
#include "bicrit/makespan.hpp"
#include "bicrit/setpacking.hpp"

namespace bicrit {

namespace {

// base^exp, or throws TooLarge once it passes the oracle limit.
std::uint64_t guarded_space(std::uint64_t base, std::size_t exp, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && r > kOracleLimit / base) {
      throw Error(ErrorCode::kTooLarge, std::string(what) + " search space exceeds the oracle limit");
    }
    r *= base;
  }
  if (r > kOracleLimit) throw Error(ErrorCode::kTooLarge, std::string(what) + " search space exceeds the oracle limit");
  return r;
}

}  // namespace

MakespanOracleResult brute_makespan_opt(const MakespanInstance& inst, EdgeFilter filter) {
  const std::size_t m = inst.machines();
  const std::size_t n = inst.jobs();
  guarded_space(m + 1, n, "makespan");

  std::vector<std::vector<const Rational*>> usable(m, std::vector<const Rational*>(n, nullptr));
  for (MachineId i = 0; i < m; ++i) {
    for (JobId j = 0; j < n; ++j) {
      const auto& p = inst.proc(i, j);
      if (!p) continue;
      if (filter == EdgeFilter::kSmallOnly && classify_edge(p, inst.target()) != EdgeClass::kSmall) continue;
      usable[i][j] = &*p;
    }
  }

  MakespanOracleResult out;
  // digit m means "rejected"
  std::vector<std::size_t> digit(n, 0);
  std::vector<Rational> load(m);
  while (true) {
    bool valid = true;
    bool complete = true;
    std::size_t placed = 0;
    for (auto& l : load) l = 0;
    for (JobId j = 0; j < n && valid; ++j) {
      if (digit[j] == m) {
        complete = false;
        continue;
      }
      const Rational* p = usable[digit[j]][j];
      if (p == nullptr) {
        valid = false;
      } else {
        load[digit[j]] += *p;
        ++placed;
      }
    }
    if (valid) {
      Rational span(0);
      for (const auto& l : load) span = std::max(span, l);
      if (complete && (!out.opt_makespan || span < *out.opt_makespan)) out.opt_makespan = span;
      if (span <= inst.target()) out.max_jobs_within_target = std::max(out.max_jobs_within_target, placed);
    }
    std::size_t k = 0;
    while (k < n && ++digit[k] > m) digit[k++] = 0;
    if (k == n) break;
  }
  return out;
}

namespace {

void best_packing(const std::vector<const std::vector<ElementId>*>& sets, std::size_t start,
                  std::vector<bool>& used, std::size_t depth, std::size_t& best) {
  best = std::max(best, depth);
  for (std::size_t k = start; k < sets.size(); ++k) {
    const auto& s = *sets[k];
    if (std::any_of(s.begin(), s.end(), [&](ElementId e) { return used[e]; })) continue;
    for (ElementId e : s) used[e] = true;
    best_packing(sets, k + 1, used, depth + 1, best);
    for (ElementId e : s) used[e] = false;
  }
}

}  // namespace

std::size_t brute_setpacking_opt(const SetPackingInstance& inst,
                                 const std::optional<std::vector<ElementId>>& allowed) {
  guarded_space(2, inst.size(), "set packing");
  std::vector<bool> ok(inst.universe_size(), !allowed.has_value());
  if (allowed) {
    for (ElementId e : *allowed) {
      if (e < ok.size()) ok[e] = true;
    }
  }
  std::vector<const std::vector<ElementId>*> usable;
  for (const auto& s : inst.sets()) {
    if (std::all_of(s.begin(), s.end(), [&](ElementId e) { return ok[e]; })) usable.push_back(&s);
  }
  std::vector<bool> used(inst.universe_size(), false);
  std::size_t best = 0;
  best_packing(usable, 0, used, 0, best);
  return best;
}

SantaClausOracleResult brute_santaclaus_opt(const SantaClausInstance& inst,
                                            const std::optional<Rational>& threshold) {
  const std::size_t agents = inst.agents();
  const std::size_t items = inst.items();
  guarded_space(agents + 1, items, "santa claus");
  SantaClausOracleResult out;
  out.opt_min_value = 0;
  if (threshold) out.agents_at_threshold = 0;
  if (agents == 0) return out;

  std::vector<std::size_t> digit(items, 0);  // digit == agents: unassigned
  std::vector<Rational> total(agents);
  bool first = true;
  while (true) {
    for (auto& t : total) t = 0;
    for (ItemId k = 0; k < items; ++k) {
      if (digit[k] < agents) total[digit[k]] += inst.value(digit[k], k);
    }
    const Rational worst = *std::min_element(total.begin(), total.end());
    if (first || worst > out.opt_min_value) out.opt_min_value = worst;
    first = false;
    if (threshold) {
      const auto happy = static_cast<std::size_t>(
          std::count_if(total.begin(), total.end(), [&](const Rational& t) { return t >= *threshold; }));
      out.agents_at_threshold = std::max(*out.agents_at_threshold, happy);
    }
    std::size_t k = 0;
    while (k < items && ++digit[k] > agents) digit[k++] = 0;
    if (k == items) break;
  }
  return out;
}

namespace {

void best_almost_disjoint(std::span<const std::vector<ElementId>> sets, const Rational& eps,
                          std::size_t start, std::vector<std::vector<ElementId>>& family,
                          std::size_t& best) {
  best = std::max(best, family.size());
  for (std::size_t k = start; k < sets.size(); ++k) {
    if (family.size() + (sets.size() - k) <= best) return;
    family.push_back(sets[k]);
    if (check_almost_disjoint(family, eps).feasible) best_almost_disjoint(sets, eps, k + 1, family, best);
    family.pop_back();
  }
}

}  // namespace

std::size_t brute_almost_disjoint_max(std::span<const std::vector<ElementId>> sets, const Rational& eps) {
  if (sets.size() > 40) throw Error(ErrorCode::kTooLarge, "too many sets for exhaustive search");
  std::vector<std::vector<ElementId>> family;
  std::size_t best = 0;
  best_almost_disjoint(sets, eps, 0, family, best);
  return best;
}

std::size_t brute_max_satisfiable(const CnfFormula& phi) {
  guarded_space(2, phi.num_vars, "assignment");
  std::size_t best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.num_vars); ++a) {
    best = std::max(best, phi.satisfied_count(a));
  }
  return best;
}

std::optional<std::uint32_t> two_phase_violation(std::span<const std::uint32_t> sets,
                                                 std::size_t universe_size) {
  if (universe_size > 16) throw Error(ErrorCode::kTooLarge, "bitmask universe limited to 16 elements");
  guarded_space(2, sets.size(), "set packing");
  const std::uint32_t full = (std::uint32_t{1} << universe_size) - 1;
  thread_local std::vector<std::uint8_t> best;
  best.assign(std::size_t{1} << universe_size, 0);
  // best[W]: most pairwise-disjoint sets whose union is exactly W ...
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << sets.size()); ++pick) {
    std::uint32_t uni = 0;
    bool disjoint = true;
    for (std::size_t k = 0; k < sets.size() && disjoint; ++k) {
      if (!((pick >> k) & 1U)) continue;
      disjoint = (uni & sets[k]) == 0;
      uni |= sets[k];
    }
    if (disjoint) {
      best[uni] = std::max<std::uint8_t>(best[uni], static_cast<std::uint8_t>(std::popcount(pick)));
    }
  }
  // ... then fully contained in W.
  for (std::size_t b = 0; b < universe_size; ++b) {
    for (std::uint32_t w = 0; w <= full; ++w) {
      if ((w >> b) & 1U) best[w] = std::max(best[w], best[w ^ (std::uint32_t{1} << b)]);
    }
  }
  const int opt = best[full];
  for (std::uint32_t removed = 0; removed <= full; ++removed) {
    if (std::popcount(removed) + best[full ^ removed] < opt) return removed;
  }
  return std::nullopt;
}

}  // namespace bicrit
