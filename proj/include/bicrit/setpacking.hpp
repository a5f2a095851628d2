#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bicrit/instances.hpp"
#include "bicrit/lp.hpp"

namespace bicrit {

// Constants derived from the loss parameter delta.
struct SpParams {
  Rational delta;
  std::int64_t coverage_cap;  // D = ceil(40 / delta)
  std::int64_t size_cutoff;   // C = ceil(400 / delta^2)
  Rational eps;               // delta^2 / 800

  // Throws Error(kBadParams) unless 0 < delta < 1.
  static SpParams from_delta(const Rational& delta);
};

struct PackingPick {
  SetIndex set;
  std::vector<ElementId> kept;  // sorted
};

struct PackingSolution {
  std::vector<PackingPick> picks;
};

// Kept lists are pairwise disjoint and each is a subset of its set.
bool is_valid_packing(const SetPackingInstance& inst, const PackingSolution& solution);

struct SmallPhaseResult {
  PackingSolution solution;
  std::vector<ElementId> used;  // sorted
  std::int64_t flow_value = 0;
  std::int64_t cut_capacity = 0;
};

// Max-flow phase: source->set, set->element, element->sink, all unit. Every
// set whose source arc is saturated keeps the single element it routes to.
SmallPhaseResult sp_small_phase(const SetPackingInstance& inst, std::span<const SetIndex> sets);

enum class LpMode { kSolve, kPlanted };

// Which quantity a surviving set must collect an eps fraction of. The
// default follows the analysis (elements outside the heavy set).
enum class CollectRule { kOutsideHeavy, kInsideHeavy };

// Packing LP: maximize sum x_S s.t. sum_{S ni u} x_S <= 1, 0 <= x_S <= 1,
// over the given sets (variable k is sets[k]).
LpProblem packing_lp(const SetPackingInstance& inst, std::span<const SetIndex> sets);

struct LargePhaseResult {
  PackingSolution solution;
  std::vector<SetIndex> eligible;    // sets fully inside the available universe
  std::vector<Rational> x;           // LP point, parallel to eligible
  std::vector<SetIndex> sampled;     // A
  std::size_t heavy_elements = 0;    // |T|
  std::vector<SetIndex> survivors;   // B
};

// Sample, discard heavily covered sets, allocate light elements at random,
// keep sets that collected enough. Only sets fully contained in the available
// universe take part. Throws Error(kNoPlantedWitness) in planted mode without
// a witness.
LargePhaseResult sp_large_phase(const SetPackingInstance& inst, std::span<const SetIndex> sets,
                                const std::vector<bool>& available, const SpParams& params,
                                std::uint64_t seed, LpMode mode,
                                CollectRule rule = CollectRule::kOutsideHeavy);

struct SpResult {
  PackingSolution solution;
  std::size_t small_count = 0;
  std::size_t large_count = 0;
};

// Small sets (size <= C) through the flow phase on U, then large sets through
// the rounding phase on U minus the elements the flow phase used. Throws
// Error(kNoPlantedWitness) in planted mode without a witness.
SpResult sp_combined(const SetPackingInstance& inst, const SpParams& params, std::uint64_t seed,
                     LpMode mode, CollectRule rule = CollectRule::kOutsideHeavy);

struct AlmostDisjointResult {
  bool feasible = false;
  std::vector<std::vector<ElementId>> witness;  // A_i when feasible
  std::vector<std::int64_t> demands;            // ceil((1 - eps) |S_i|)
  std::int64_t flow_value = 0;
  // Min cut (set nodes, then element nodes; source/sink excluded). Its
  // capacity equals flow_value, which is below the total demand when
  // infeasible.
  std::vector<bool> cut_source_side;
  std::int64_t cut_capacity = 0;
};

// Decides whether disjoint A_i subset of S_i with |A_i| >= ceil((1-eps)|S_i|)
// exist. Throws Error(kBadParams) unless 0 <= eps <= 1.
AlmostDisjointResult check_almost_disjoint(std::span<const std::vector<ElementId>> sets,
                                           const Rational& eps);

}  // namespace bicrit
