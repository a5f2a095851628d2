#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bicrit/rational.hpp"

namespace bicrit {

using MachineId = std::size_t;
using JobId = std::size_t;
using AgentId = std::size_t;
using ItemId = std::size_t;
using ElementId = std::size_t;
using SetIndex = std::size_t;

// Unrelated-machines instance with a promised optimal makespan target.
// Machines and jobs are the dense ranges [0, m) and [0, n).
class MakespanInstance {
 public:
  // proc[i][j] is the time of job j on machine i. Throws Error(kInvariant).
  MakespanInstance(std::vector<std::vector<ProcTime>> proc, Rational target);

  std::size_t machines() const noexcept { return proc_.size(); }
  std::size_t jobs() const noexcept { return jobs_; }
  const Rational& target() const noexcept { return target_; }
  const ProcTime& proc(MachineId i, JobId j) const { return proc_[i][j]; }
  const std::vector<std::vector<ProcTime>>& table() const noexcept { return proc_; }

  // Sub-instance on the given jobs (renumbered 0..k-1 in the given order).
  MakespanInstance restrict_jobs(std::span<const JobId> jobs) const;

  friend bool operator==(const MakespanInstance&, const MakespanInstance&) = default;

 private:
  std::vector<std::vector<ProcTime>> proc_;
  std::size_t jobs_ = 0;
  Rational target_;
};

struct Assignment {
  MachineId machine;
  JobId job;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

// A set of (machine, job) pairs with each job used at most once. Kept sorted
// by (machine, job).
class Schedule {
 public:
  Schedule() = default;

  // Throws Error(kInvariant) if the job is already scheduled.
  void add(MachineId machine, JobId job);
  bool contains_job(JobId job) const;
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<Assignment>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Assignment> pairs_;
};

// Collection of subsets of [0, universe_size). Elements of each set are kept
// sorted; the order of the sets themselves is significant (indices).
class SetPackingInstance {
 public:
  // Throws Error(kInvariant) on out-of-range / duplicate elements or a planted
  // witness that does not partition the universe.
  SetPackingInstance(std::size_t universe_size, std::vector<std::vector<ElementId>> sets,
                     std::optional<std::vector<SetIndex>> planted = std::nullopt);

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<ElementId>& set(SetIndex s) const { return sets_[s]; }
  const std::vector<std::vector<ElementId>>& sets() const noexcept { return sets_; }
  const std::optional<std::vector<SetIndex>>& planted() const noexcept { return planted_; }

  friend bool operator==(const SetPackingInstance&, const SetPackingInstance&) = default;

 private:
  std::size_t universe_size_;
  std::vector<std::vector<ElementId>> sets_;
  std::optional<std::vector<SetIndex>> planted_;
};

// True iff the listed sets are pairwise disjoint and cover [0, universe_size).
bool is_partition(std::size_t universe_size, const std::vector<std::vector<ElementId>>& sets,
                  std::span<const SetIndex> chosen);

class SantaClausInstance {
 public:
  // value[a][k] is the value of item k to agent a. Throws Error(kInvariant).
  SantaClausInstance(std::vector<std::vector<Rational>> value, std::size_t items, Rational target);

  std::size_t agents() const noexcept { return value_.size(); }
  std::size_t items() const noexcept { return items_; }
  const Rational& target() const noexcept { return target_; }
  const Rational& value(AgentId a, ItemId k) const { return value_[a][k]; }
  const std::vector<std::vector<Rational>>& table() const noexcept { return value_; }

  friend bool operator==(const SantaClausInstance&, const SantaClausInstance&) = default;

 private:
  std::vector<std::vector<Rational>> value_;
  std::size_t items_;
  Rational target_;
};

// Partial map item -> agent.
using Allocation = std::map<ItemId, AgentId>;

// Total value each agent receives under the allocation.
std::vector<Rational> agent_values(const SantaClausInstance& inst, const Allocation& alloc);

// Signed DIMACS-style literal: +v / -v for variable v in [1, num_vars].
using Literal = std::int64_t;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  // Throws Error(kInvariant) on out-of-range literals or repeated variables.
  void validate() const;

  // Occurrence count of each variable (index 0 is variable 1).
  std::vector<std::size_t> occurrences() const;

  // Number of clauses satisfied by the assignment (bit v-1 = value of v).
  std::size_t satisfied_count(std::uint64_t assignment) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

enum class ProblemKind { kMakespan, kSetPacking, kSantaClaus, kCnf };

using AnyInstance = std::variant<MakespanInstance, SetPackingInstance, SantaClausInstance, CnfFormula>;

}  // namespace bicrit
