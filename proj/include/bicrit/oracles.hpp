#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bicrit/instances.hpp"

namespace bicrit {

// Upper bound on enumerated assignments / subsets for every brute-force oracle.
inline constexpr std::uint64_t kOracleLimit = 10'000'000;

enum class EdgeFilter { kAll, kSmallOnly };

struct MakespanOracleResult {
  // Best makespan over schedules of all jobs; nullopt when some job has no
  // usable machine.
  std::optional<Rational> opt_makespan;
  // Most jobs schedulable with makespan <= T when rejection is allowed.
  std::size_t max_jobs_within_target = 0;
};

MakespanOracleResult brute_makespan_opt(const MakespanInstance& inst,
                                        EdgeFilter filter = EdgeFilter::kAll);

// Maximum number of pairwise-disjoint sets fully contained in `allowed`
// (the whole universe when absent).
std::size_t brute_setpacking_opt(const SetPackingInstance& inst,
                                 const std::optional<std::vector<ElementId>>& allowed = std::nullopt);

struct SantaClausOracleResult {
  Rational opt_min_value;
  // Most agents reaching the threshold, when one was given.
  std::optional<std::size_t> agents_at_threshold;
};

SantaClausOracleResult brute_santaclaus_opt(const SantaClausInstance& inst,
                                            const std::optional<Rational>& threshold = std::nullopt);

// Largest sub-collection that is eps-almost disjoint. Exhaustive over
// sub-collections, skipping supersets of failing ones (the property is
// closed under taking subsets).
std::size_t brute_almost_disjoint_max(std::span<const std::vector<ElementId>> sets,
                                      const Rational& eps);

// Most clauses any assignment satisfies.
std::size_t brute_max_satisfiable(const CnfFormula& phi);

// For a family of sets given as bitmasks over a universe of at most 16
// elements, returns a U' violating |U'| + OPT(U \ U') >= OPT(U), if any.
std::optional<std::uint32_t> two_phase_violation(std::span<const std::uint32_t> sets,
                                                 std::size_t universe_size);

}  // namespace bicrit
