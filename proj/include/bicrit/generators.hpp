#pragma once

#include <cstddef>
#include <cstdint>

#include "bicrit/instances.hpp"

namespace bicrit {

struct PlantedMakespanParams {
  std::size_t machines = 1;
  std::size_t jobs = 1;
  double density = 1.0;
  // Integer makespan target; raised to the job count when smaller so every
  // planted job gets a positive integer time.
  std::int64_t target = 12;
};

// Plants a schedule of all jobs with makespan exactly T and hides it: every
// machine that receives a planted job is filled to exactly T (or, with fewer
// jobs than machines, each job alone takes T), and every extra finite entry
// (added with probability `density`) is drawn from [planted time of that
// job, T]. Throws Error(kBadParams).
MakespanInstance gen_planted_makespan(const PlantedMakespanParams& params, std::uint64_t seed);

struct PlantedSetPackingParams {
  std::size_t partition_sets = 1;
  std::size_t decoys = 0;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
};

// The first `partition_sets` sets partition the universe (recorded as the
// planted witness); decoys are uniform samples of distinct elements.
SetPackingInstance gen_planted_setpacking(const PlantedSetPackingParams& params, std::uint64_t seed);

// Random formula in which every clause has `clause_len` distinct variables and
// every variable occurs exactly `occurrences` times; polarities are uniform.
// Throws Error(kBadParams) unless num_vars * occurrences is divisible by
// clause_len and num_vars >= clause_len.
CnfFormula gen_cnf_regular(std::size_t num_vars, std::size_t clause_len, std::size_t occurrences,
                           std::uint64_t seed);

}  // namespace bicrit
