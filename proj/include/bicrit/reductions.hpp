#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bicrit/instances.hpp"

namespace bicrit {

// Hypercube partition system on [d]^alphabet for one variable. Points are
// vectors a with entries in 1..d; point a has id offset + sum_k (a_k - 1) d^k.
// Edge e(i, j) (1-based i in alphabet, j in 1..d) holds the points with a_i = j.
class HypercubeGadget {
 public:
  // Throws Error(kBadParams) unless alphabet >= 2 and degree >= 2.
  HypercubeGadget(std::size_t variable, std::size_t alphabet, std::size_t degree,
                  ElementId id_offset);

  std::size_t variable() const noexcept { return variable_; }
  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t degree() const noexcept { return degree_; }
  ElementId offset() const noexcept { return offset_; }
  std::size_t block_size() const noexcept { return block_size_; }

  // Sorted element ids of e(i, j).
  const std::vector<ElementId>& edge(std::size_t i, std::size_t j) const;

 private:
  std::size_t variable_;
  std::size_t alphabet_;
  std::size_t degree_;
  ElementId offset_;
  std::size_t block_size_;
  std::vector<std::vector<ElementId>> edges_;
};

HypercubeGadget hypercube_gadget(std::size_t variable, std::size_t alphabet, std::size_t degree,
                                 ElementId id_offset);

struct ReductionParams {
  std::size_t q = 3;
  std::size_t alphabet = 2;
  std::size_t d = 5;
  std::size_t eta = 7;
  Rational gamma;      // 1/d
  Rational eps_bound;  // gamma / (2q)
};

ReductionParams make_reduction_params(std::size_t q, std::size_t alphabet, std::size_t d);

// Matching index used for a boolean value.
constexpr std::size_t matching_for(bool value) noexcept { return value ? 1 : 2; }

struct CnfReduction {
  SetPackingInstance instance;
  ReductionParams params;
  std::vector<HypercubeGadget> gadgets;         // gadgets[v - 1] for variable v
  std::vector<std::size_t> set_clause;          // clause index of each set
  std::vector<std::vector<bool>> set_values;    // value of each clause variable
  // One set per clause chosen by the supplied assignment (if any); pairwise
  // disjoint. Also stored as the planted witness when it partitions U.
  std::vector<SetIndex> witness;
};

// One gadget per variable; for every clause and every satisfying assignment
// of its variables, the union of the matching edges those values select at
// the clause's occurrence index. `assignment` bit v-1 is the value of v.
// Throws Error(kBadParams) for mixed clause lengths or an empty formula.
CnfReduction reduce_cnf_to_setpacking(const CnfFormula& phi, std::size_t alphabet = 2,
                                      std::optional<std::uint64_t> assignment = std::nullopt);

struct SantaClausReduction {
  SantaClausInstance instance;
  std::vector<SetIndex> agent_set;                  // agent -> set
  std::vector<std::optional<ElementId>> item_element;  // nullopt for dummy items
  Allocation witness;
};

// Agents are sets, items are elements plus (1 - alpha) n dummies worth T to
// everyone, where alpha n is the planted witness size. Throws
// Error(kMissingWitness) / Error(kNonIntegralDummyCount).
SantaClausReduction reduce_setpacking_to_santaclaus(const SetPackingInstance& inst,
                                                    const Rational& target = Rational(1));

struct SoundnessReport {
  std::size_t clauses = 0;
  std::size_t sets = 0;
  Rational eps;
  Rational eps_bound;
  bool applicable = false;  // eps < eps_bound
  std::size_t max_almost_disjoint = 0;
  std::size_t max_satisfied = 0;
  bool holds = true;  // max_almost_disjoint <= max_satisfied (vacuous if !applicable)
};

// Exhaustive comparison of eps-almost-disjoint packings in the reduction
// against the best assignment. Throws Error(kTooLarge) for big inputs.
SoundnessReport verify_reduction_soundness(const CnfFormula& phi, const Rational& eps);

}  // namespace bicrit
