#include "bicrit/makespan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "bicrit/error.hpp"
#include "bicrit/flow.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

EdgeClass classify_edge(const ProcTime& p, const Rational& target) {
  if (!p || *p > target) return EdgeClass::kUnusable;
  if (2 * *p > target) return EdgeClass::kLarge;
  return EdgeClass::kSmall;
}

EdgePartition partition_edges(const MakespanInstance& inst) {
  EdgePartition out;
  for (MachineId i = 0; i < inst.machines(); ++i) {
    for (JobId j = 0; j < inst.jobs(); ++j) {
      switch (classify_edge(inst.proc(i, j), inst.target())) {
        case EdgeClass::kLarge: out.large.push_back({i, j}); break;
        case EdgeClass::kSmall: out.small.push_back({i, j}); break;
        case EdgeClass::kUnusable: break;
      }
    }
  }
  return out;
}

Schedule alg1_match_large(const MakespanInstance& inst) {
  std::vector<BipartiteEdge> edges;
  for (const auto& a : partition_edges(inst).large) edges.emplace_back(a.machine, a.job);
  Schedule s;
  for (const auto& [machine, job] : max_bipartite_matching(inst.machines(), inst.jobs(), edges)) {
    s.add(machine, job);
  }
  return s;
}

namespace {

void enumerate_configurations(const MakespanInstance& inst, MachineId machine,
                              const std::vector<JobId>& eligible, std::size_t start,
                              std::vector<JobId>& current, const Rational& load,
                              std::vector<ConfigColumn>& out, std::size_t cap) {
  if (out.size() >= cap) {
    throw Error(ErrorCode::kConfigExplosion,
                "more than " + std::to_string(cap) + " configuration columns");
  }
  out.push_back({machine, current});
  for (std::size_t k = start; k < eligible.size(); ++k) {
    const JobId j = eligible[k];
    Rational next = load + *inst.proc(machine, j);
    if (next > inst.target()) continue;
    current.push_back(j);
    enumerate_configurations(inst, machine, eligible, k + 1, current, next, out, cap);
    current.pop_back();
  }
}

}  // namespace

ConfigurationLp build_configuration_lp(const MakespanInstance& inst, std::size_t column_cap) {
  ConfigurationLp out;
  for (MachineId i = 0; i < inst.machines(); ++i) {
    std::vector<JobId> eligible;
    for (JobId j = 0; j < inst.jobs(); ++j) {
      if (classify_edge(inst.proc(i, j), inst.target()) != EdgeClass::kUnusable) eligible.push_back(j);
    }
    std::vector<JobId> current;
    enumerate_configurations(inst, i, eligible, 0, current, Rational(0), out.columns, column_cap);
  }

  const std::size_t m = inst.machines();
  auto& lp = out.lp;
  lp.objective.assign(out.columns.size(), Rational(0));
  lp.constraints.resize(m + inst.jobs());
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    lp.constraints[r].relation = Relation::kEqual;
    lp.constraints[r].rhs = 1;
  }
  for (std::size_t k = 0; k < out.columns.size(); ++k) {
    const auto& col = out.columns[k];
    lp.constraints[col.machine].terms.emplace_back(k, Rational(1));
    for (JobId j : col.jobs) lp.constraints[m + j].terms.emplace_back(k, Rational(1));
  }
  return out;
}

bool clp_is_feasible(const MakespanInstance& inst, const ClpSolution& clp) {
  if (clp.machines.size() != inst.machines()) return false;
  std::vector<Rational> cover(inst.jobs(), Rational(0));
  for (MachineId i = 0; i < inst.machines(); ++i) {
    Rational total(0);
    for (const auto& cfg : clp.machines[i]) {
      if (cfg.weight < 0 || cfg.weight > 1) return false;
      Rational load(0);
      for (JobId j : cfg.jobs) {
        if (j >= inst.jobs() || !inst.proc(i, j)) return false;
        load += *inst.proc(i, j);
        cover[j] += cfg.weight;
      }
      if (load > inst.target()) return false;
      total += cfg.weight;
    }
    if (total != 1) return false;
  }
  return std::all_of(cover.begin(), cover.end(), [](const Rational& c) { return c == 1; });
}

ClpSolution solve_clp(const MakespanInstance& inst, std::size_t column_cap) {
  for (JobId j = 0; j < inst.jobs(); ++j) {
    bool usable = false;
    for (MachineId i = 0; i < inst.machines() && !usable; ++i) {
      usable = classify_edge(inst.proc(i, j), inst.target()) != EdgeClass::kUnusable;
    }
    if (!usable) {
      throw Error(ErrorCode::kInfeasibleClp, "job " + std::to_string(j) + " fits on no machine within T");
    }
  }
  const auto clp_lp = build_configuration_lp(inst, column_cap);
  const auto sol = lp_solve(clp_lp.lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasibleClp, "configuration LP has no feasible point");
  }
  ClpSolution out;
  out.machines.resize(inst.machines());
  for (std::size_t k = 0; k < clp_lp.columns.size(); ++k) {
    if (sol.values[k] == 0) continue;
    const auto& col = clp_lp.columns[k];
    out.machines[col.machine].push_back({col.jobs, sol.values[k]});
  }
  return out;
}

Schedule alg2_round(const ClpSolution& clp, const MakespanInstance& inst, std::uint64_t seed) {
  Schedule out;
  std::vector<bool> taken(inst.jobs(), false);
  for (MachineId i = 0; i < clp.machines.size(); ++i) {
    Rng rng(hash_combine(seed, i));
    const Rational u = rng.unit();
    Rational cumulative(0);
    for (const auto& cfg : clp.machines[i]) {
      cumulative += cfg.weight;
      if (cumulative <= u) continue;
      for (JobId j : cfg.jobs) {
        if (!taken[j]) {
          taken[j] = true;
          out.add(i, j);
        }
      }
      break;
    }
  }
  return out;
}

GreedyResult alg3_greedy(const MakespanInstance& inst) {
  const std::size_t m = inst.machines();
  const Rational& target = inst.target();
  const Rational half = target / 2;

  // Small edges per machine sorted by (p, job).
  std::vector<std::vector<std::pair<Rational, JobId>>> small(m);
  for (const auto& a : partition_edges(inst).small) {
    small[a.machine].emplace_back(*inst.proc(a.machine, a.job), a.job);
  }
  for (auto& row : small) std::sort(row.begin(), row.end());

  GreedyResult out;
  auto& trace = out.trace;
  trace.lists.assign(m, {});
  trace.fill.assign(m, Rational(0));
  trace.kept.assign(m, {});
  std::vector<bool> remaining(inst.jobs(), true);
  std::vector<std::size_t> cursor(m, 0);

  while (true) {
    // Per machine the first remaining job in (p, job) order is its cheapest;
    // if that one does not fit, nothing on the machine does.
    std::optional<std::tuple<Rational, MachineId, std::size_t>> best;
    for (MachineId i = 0; i < m; ++i) {
      auto& k = cursor[i];
      while (k < small[i].size() && !remaining[small[i][k].second]) ++k;
      if (k == small[i].size()) continue;
      const Rational& p = small[i][k].first;
      if (trace.fill[i] + p > target) continue;
      if (!best || p < std::get<0>(*best)) best.emplace(p, i, k);
    }
    if (!best) break;
    const auto& [p, i, k] = *best;
    const JobId j = small[i][k].second;
    trace.lists[i].push_back(j);
    trace.fill[i] += p;
    remaining[j] = false;
  }

  for (MachineId i = 0; i < m; ++i) {
    std::vector<JobId> sorted = trace.lists[i];
    std::stable_sort(sorted.begin(), sorted.end(), [&](JobId a, JobId b) {
      return std::tie(*inst.proc(i, a), a) < std::tie(*inst.proc(i, b), b);
    });
    Rational used(0);
    for (JobId j : sorted) {
      if (used + *inst.proc(i, j) > half) break;
      used += *inst.proc(i, j);
      trace.kept[i].push_back(j);
      out.schedule.add(i, j);
    }
  }
  return out;
}

double combined_floor(std::size_t jobs, std::size_t m_star) {
  const double n = static_cast<double>(jobs);
  const double ms = static_cast<double>(m_star);
  const double greedy = (n - ms) / 6.0;
  return std::max(ms, greedy + (1.0 - std::exp(-1.0)) * (n - greedy));
}

double balance_ratio() {
  const double e = std::exp(1.0);
  return (6.0 * e - 5.0) / (6.0 * e + 1.0);
}

CombinedScheduler::CombinedScheduler(const MakespanInstance& inst, std::size_t column_cap)
    : inst_(inst), s1_(alg1_match_large(inst)), greedy_(alg3_greedy(inst)) {
  for (JobId j = 0; j < inst.jobs(); ++j) {
    if (!greedy_.schedule.contains_job(j)) remaining_.push_back(j);
  }
  if (!remaining_.empty()) {
    remaining_inst_.emplace(inst.restrict_jobs(remaining_));
    remaining_clp_ = solve_clp(*remaining_inst_, column_cap);
  }
}

CombinedResult CombinedScheduler::run(std::uint64_t seed) const {
  CombinedResult out;
  auto& report = out.report;
  Schedule s2 = greedy_.schedule;
  if (remaining_inst_) {
    const Schedule rounded = alg2_round(remaining_clp_, *remaining_inst_, seed);
    for (const auto& a : rounded.pairs()) s2.add(a.machine, remaining_[a.job]);
    report.rounded_count = rounded.size();
  }
  report.m_star = s1_.size();
  report.s1_count = s1_.size();
  report.alg3_count = greedy_.schedule.size();
  report.floor = combined_floor(inst_.jobs(), report.m_star);
  if (s2.size() > s1_.size()) {
    report.chosen = 2;
    out.schedule = std::move(s2);
  } else {
    report.chosen = 1;
    out.schedule = s1_;
  }
  report.makespan = evaluate_schedule(inst_, out.schedule).makespan;
  return out;
}

CombinedResult combined_schedule(const MakespanInstance& inst, std::uint64_t seed,
                                 std::size_t column_cap) {
  return CombinedScheduler(inst, column_cap).run(seed);
}

ScheduleEvaluation evaluate_schedule(const MakespanInstance& inst, const Schedule& schedule) {
  ScheduleEvaluation out;
  out.loads.assign(inst.machines(), Rational(0));
  for (const auto& a : schedule.pairs()) {
    if (a.machine >= inst.machines() || a.job >= inst.jobs() || !inst.proc(a.machine, a.job)) {
      throw Error(ErrorCode::kInvalidAssignment, "pair (" + std::to_string(a.machine) + ", " +
                                                     std::to_string(a.job) + ") is not schedulable");
    }
    out.loads[a.machine] += *inst.proc(a.machine, a.job);
  }
  out.jobs_scheduled = schedule.size();
  out.makespan = 0;
  for (const auto& l : out.loads) out.makespan = std::max(out.makespan, l);
  return out;
}

}  // namespace bicrit
