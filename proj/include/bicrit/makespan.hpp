#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bicrit/instances.hpp"
#include "bicrit/lp.hpp"

namespace bicrit {

inline constexpr std::size_t kDefaultColumnCap = 2'000'000;

enum class EdgeClass { kLarge, kSmall, kUnusable };

// Large: T/2 < p <= T. Small: 0 <= p <= T/2. Everything else is unusable.
EdgeClass classify_edge(const ProcTime& p, const Rational& target);

struct EdgePartition {
  std::vector<Assignment> large;
  std::vector<Assignment> small;
};

EdgePartition partition_edges(const MakespanInstance& inst);

// Maximum matching on the large-edge graph; each machine receives at most one
// job, so the load stays within T.
Schedule alg1_match_large(const MakespanInstance& inst);

// One LP column: the configuration `jobs` (sorted) on `machine`.
struct ConfigColumn {
  MachineId machine;
  std::vector<JobId> jobs;
};

struct ConfigurationLp {
  LpProblem lp;
  // Column k of the LP is columns[k]; ordered by machine, then
  // lexicographically by the sorted job list (the empty configuration first).
  std::vector<ConfigColumn> columns;
};

// Enumerates every configuration of total time <= T per machine and writes
// the configuration LP over them: one convexity row per machine, one covering
// row per job, y >= 0. Throws Error(kConfigExplosion) past `column_cap`.
ConfigurationLp build_configuration_lp(const MakespanInstance& inst,
                                       std::size_t column_cap = kDefaultColumnCap);

struct WeightedConfig {
  std::vector<JobId> jobs;
  Rational weight;
};

// Per machine, the configurations with positive weight in canonical order.
struct ClpSolution {
  std::vector<std::vector<WeightedConfig>> machines;
};

// Exact check of the configuration LP constraints for `clp` on `inst`.
bool clp_is_feasible(const MakespanInstance& inst, const ClpSolution& clp);

// Throws Error(kInfeasibleClp) if the jobs cannot all be covered within T.
ClpSolution solve_clp(const MakespanInstance& inst, std::size_t column_cap = kDefaultColumnCap);

// Each machine samples one configuration by inverse CDF over its canonical
// column order using its own stream hash(seed, machine); jobs go to the first
// machine (by id) that sampled them.
Schedule alg2_round(const ClpSolution& clp, const MakespanInstance& inst, std::uint64_t seed);

struct GreedyTrace {
  std::vector<std::vector<JobId>> lists;  // in insertion order
  std::vector<Rational> fill;             // load after the while-loop
  std::vector<std::vector<JobId>> kept;   // prefix retained after truncation
};

struct GreedyResult {
  Schedule schedule;
  GreedyTrace trace;
};

// Smallest-processing-time-first greedy on small edges up to T, then per
// machine the shortest jobs are kept while their total stays <= T/2.
GreedyResult alg3_greedy(const MakespanInstance& inst);

// max(m*, (n-m*)/6 + (1-1/e)(n - (n-m*)/6)).
double combined_floor(std::size_t jobs, std::size_t m_star);

// (6e-5)/(6e+1).
double balance_ratio();

struct CombinedReport {
  std::size_t m_star = 0;
  std::size_t s1_count = 0;
  std::size_t alg3_count = 0;
  std::size_t rounded_count = 0;
  int chosen = 1;
  double floor = 0.0;
  Rational makespan;
};

struct CombinedResult {
  Schedule schedule;
  CombinedReport report;
};

// Holds the seed-independent parts of the combined algorithm (matching,
// greedy, and the configuration LP over the jobs greedy left behind) so many
// seeds can be run against one instance.
class CombinedScheduler {
 public:
  explicit CombinedScheduler(const MakespanInstance& inst,
                             std::size_t column_cap = kDefaultColumnCap);

  CombinedResult run(std::uint64_t seed) const;

  const Schedule& matching() const noexcept { return s1_; }
  const GreedyResult& greedy() const noexcept { return greedy_; }
  const std::vector<JobId>& remaining_jobs() const noexcept { return remaining_; }

 private:
  MakespanInstance inst_;
  Schedule s1_;
  GreedyResult greedy_;
  std::vector<JobId> remaining_;
  std::optional<MakespanInstance> remaining_inst_;
  ClpSolution remaining_clp_;
};

// Better of (S1) matching and (S2) greedy-then-rounding; ties go to (S1).
CombinedResult combined_schedule(const MakespanInstance& inst, std::uint64_t seed,
                                 std::size_t column_cap = kDefaultColumnCap);

struct ScheduleEvaluation {
  std::size_t jobs_scheduled = 0;
  Rational makespan;
  std::vector<Rational> loads;
};

// Throws Error(kInvalidAssignment) for pairs that are out of range or
// unschedulable.
ScheduleEvaluation evaluate_schedule(const MakespanInstance& inst, const Schedule& schedule);

}  // namespace bicrit
