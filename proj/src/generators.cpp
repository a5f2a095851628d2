#include "bicrit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bicrit/error.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// k positive integers summing to total (k <= total), uniform over compositions.
std::vector<std::int64_t> random_composition(std::int64_t total, std::size_t k, Rng& rng) {
  std::vector<std::int64_t> cuts(static_cast<std::size_t>(total - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::swap(cuts[i], cuts[i + rng.below(cuts.size() - i)]);
  }
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> parts;
  std::int64_t prev = 0;
  for (auto c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(total - prev);
  return parts;
}

}  // namespace

MakespanInstance gen_planted_makespan(const PlantedMakespanParams& params, std::uint64_t seed) {
  const std::size_t m = params.machines;
  const std::size_t n = params.jobs;
  if (m < 1 || n < 1 || !(params.density > 0.0 && params.density <= 1.0) || params.target < 1) {
    throw Error(ErrorCode::kBadParams, "need machines >= 1, jobs >= 1, 0 < density <= 1, target >= 1");
  }
  Rng rng(seed);
  const std::int64_t target = std::max<std::int64_t>(params.target, static_cast<std::int64_t>(n));

  std::vector<JobId> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  // Planted owner of every job; with n >= m each machine gets at least one job.
  std::vector<std::vector<JobId>> planted(m);
  for (std::size_t k = 0; k < n; ++k) {
    const MachineId owner = k < m ? k : rng.below(m);
    planted[owner].push_back(order[k]);
  }

  std::vector<std::vector<ProcTime>> proc(m, std::vector<ProcTime>(n, kUnschedulable));
  std::vector<std::int64_t> planted_time(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (planted[i].empty()) continue;
    const auto parts = random_composition(target, planted[i].size(), rng);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      planted_time[planted[i][k]] = parts[k];
      proc[i][planted[i][k]] = Rational(parts[k]);
    }
  }

  // Decoys never undercut the planted time, so total work (or, with n < m,
  // each single job) still forces makespan >= T.
  const Rational density_q(params.density);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (proc[i][j]) continue;
      if (!rng.bernoulli(density_q)) continue;
      proc[i][j] = Rational(rng.between(planted_time[j], target));
    }
  }
  return MakespanInstance(std::move(proc), Rational(target));
}

SetPackingInstance gen_planted_setpacking(const PlantedSetPackingParams& params, std::uint64_t seed) {
  if (params.partition_sets < 1 || params.min_size < 1 || params.min_size > params.max_size) {
    throw Error(ErrorCode::kBadParams, "need partition_sets >= 1 and 1 <= min_size <= max_size");
  }
  Rng rng(seed);
  const auto draw_size = [&] {
    return static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(params.min_size),
                                                static_cast<std::int64_t>(params.max_size)));
  };
  std::vector<std::size_t> sizes(params.partition_sets);
  for (auto& s : sizes) s = draw_size();
  const std::size_t universe = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});

  std::vector<ElementId> perm(universe);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);

  std::vector<std::vector<ElementId>> sets;
  std::size_t pos = 0;
  for (auto size : sizes) {
    sets.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                      perm.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
  }
  std::vector<ElementId> pool(universe);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t d = 0; d < params.decoys; ++d) {
    const std::size_t size = std::min(draw_size(), universe);
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
    sets.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  std::vector<SetIndex> planted(params.partition_sets);
  std::iota(planted.begin(), planted.end(), 0);
  return SetPackingInstance(universe, std::move(sets), std::move(planted));
}

CnfFormula gen_cnf_regular(std::size_t num_vars, std::size_t clause_len, std::size_t occurrences,
                           std::uint64_t seed) {
  if (clause_len < 1 || occurrences < 1 || num_vars < clause_len ||
      (num_vars * occurrences) % clause_len != 0) {
    throw Error(ErrorCode::kBadParams,
                "need num_vars >= clause_len and num_vars * occurrences divisible by clause_len");
  }
  Rng rng(seed);
  std::vector<std::size_t> slots;
  for (std::size_t v = 1; v <= num_vars; ++v) slots.insert(slots.end(), occurrences, v);
  shuffle(slots, rng);
  const std::size_t clauses = slots.size() / clause_len;

  const auto clause_has_dup = [&](std::size_t c) {
    for (std::size_t a = c * clause_len; a < (c + 1) * clause_len; ++a) {
      for (std::size_t b = a + 1; b < (c + 1) * clause_len; ++b) {
        if (slots[a] == slots[b]) return true;
      }
    }
    return false;
  };

  // Repair repeated variables by random swaps that keep both clauses clean.
  std::size_t budget = 1000 * slots.size() + 10000;
  for (std::size_t c = 0; c < clauses; ++c) {
    while (clause_has_dup(c)) {
      if (budget-- == 0) throw Error(ErrorCode::kBadParams, "could not build a regular formula");
      const std::size_t a = c * clause_len + rng.below(clause_len);
      const std::size_t b = rng.below(slots.size());
      const std::size_t cb = b / clause_len;
      if (cb == c) continue;
      std::swap(slots[a], slots[b]);
      if (clause_has_dup(cb) && cb < c) std::swap(slots[a], slots[b]);
    }
  }

  CnfFormula f;
  f.num_vars = num_vars;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> clause;
    for (std::size_t k = 0; k < clause_len; ++k) {
      const auto v = static_cast<Literal>(slots[c * clause_len + k]);
      clause.push_back((rng() & 1U) ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  f.validate();
  return f;
}

}  // namespace bicrit
