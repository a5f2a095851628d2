#include "bicrit/instances.hpp"

#include <algorithm>
#include <string>

#include "bicrit/error.hpp"

namespace bicrit {

MakespanInstance::MakespanInstance(std::vector<std::vector<ProcTime>> proc, Rational target)
    : proc_(std::move(proc)), target_(std::move(target)) {
  if (target_ <= 0) throw Error(ErrorCode::kInvariant, "target T must be positive");
  if (proc_.empty()) throw Error(ErrorCode::kInvariant, "need at least one machine");
  jobs_ = proc_.front().size();
  for (std::size_t i = 0; i < proc_.size(); ++i) {
    if (proc_[i].size() != jobs_) {
      throw Error(ErrorCode::kInvariant, "proc row " + std::to_string(i) + " has " +
                                             std::to_string(proc_[i].size()) + " entries, expected " +
                                             std::to_string(jobs_));
    }
    for (std::size_t j = 0; j < jobs_; ++j) {
      if (proc_[i][j] && *proc_[i][j] < 0) {
        throw Error(ErrorCode::kInvariant, "proc[" + std::to_string(i) + "][" + std::to_string(j) +
                                               "] is negative");
      }
    }
  }
}

MakespanInstance MakespanInstance::restrict_jobs(std::span<const JobId> jobs) const {
  std::vector<std::vector<ProcTime>> proc(machines());
  for (std::size_t i = 0; i < machines(); ++i) {
    proc[i].reserve(jobs.size());
    for (JobId j : jobs) proc[i].push_back(proc_.at(i).at(j));
  }
  return MakespanInstance(std::move(proc), target_);
}

void Schedule::add(MachineId machine, JobId job) {
  if (contains_job(job)) {
    throw Error(ErrorCode::kInvariant, "job " + std::to_string(job) + " scheduled twice");
  }
  const Assignment a{machine, job};
  pairs_.insert(std::upper_bound(pairs_.begin(), pairs_.end(), a), a);
}

bool Schedule::contains_job(JobId job) const {
  return std::any_of(pairs_.begin(), pairs_.end(), [job](const Assignment& a) { return a.job == job; });
}

bool is_partition(std::size_t universe_size, const std::vector<std::vector<ElementId>>& sets,
                  std::span<const SetIndex> chosen) {
  std::vector<bool> seen(universe_size, false);
  std::size_t covered = 0;
  for (SetIndex s : chosen) {
    if (s >= sets.size()) return false;
    for (ElementId e : sets[s]) {
      if (e >= universe_size || seen[e]) return false;
      seen[e] = true;
      ++covered;
    }
  }
  return covered == universe_size;
}

SetPackingInstance::SetPackingInstance(std::size_t universe_size,
                                       std::vector<std::vector<ElementId>> sets,
                                       std::optional<std::vector<SetIndex>> planted)
    : universe_size_(universe_size), sets_(std::move(sets)), planted_(std::move(planted)) {
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    auto& set = sets_[s];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw Error(ErrorCode::kInvariant, "sets[" + std::to_string(s) + "] repeats an element");
    }
    if (!set.empty() && set.back() >= universe_size_) {
      throw Error(ErrorCode::kInvariant, "sets[" + std::to_string(s) + "] has element " +
                                             std::to_string(set.back()) + " outside the universe");
    }
  }
  if (planted_) {
    std::sort(planted_->begin(), planted_->end());
    if (!is_partition(universe_size_, sets_, *planted_)) {
      throw Error(ErrorCode::kInvariant, "planted sets do not partition the universe");
    }
  }
}

SantaClausInstance::SantaClausInstance(std::vector<std::vector<Rational>> value, std::size_t items,
                                       Rational target)
    : value_(std::move(value)), items_(items), target_(std::move(target)) {
  if (target_ <= 0) throw Error(ErrorCode::kInvariant, "target T must be positive");
  for (std::size_t a = 0; a < value_.size(); ++a) {
    if (value_[a].size() != items_) {
      throw Error(ErrorCode::kInvariant, "value row " + std::to_string(a) + " has wrong length");
    }
    for (std::size_t k = 0; k < items_; ++k) {
      if (value_[a][k] < 0) {
        throw Error(ErrorCode::kInvariant,
                    "value[" + std::to_string(a) + "][" + std::to_string(k) + "] is negative");
      }
    }
  }
}

std::vector<Rational> agent_values(const SantaClausInstance& inst, const Allocation& alloc) {
  std::vector<Rational> total(inst.agents(), Rational(0));
  for (const auto& [item, agent] : alloc) total.at(agent) += inst.value(agent, item);
  return total;
}

void CnfFormula::validate() const {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    std::vector<std::size_t> vars;
    for (Literal lit : clauses[c]) {
      const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (lit == 0 || v > num_vars) {
        throw Error(ErrorCode::kInvariant, "clause " + std::to_string(c) + " has literal " +
                                               std::to_string(lit) + " out of range");
      }
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw Error(ErrorCode::kInvariant, "clause " + std::to_string(c) + " repeats a variable");
    }
  }
}

std::vector<std::size_t> CnfFormula::occurrences() const {
  std::vector<std::size_t> occ(num_vars, 0);
  for (const auto& clause : clauses) {
    for (Literal lit : clause) ++occ[static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1];
  }
  return occ;
}

std::size_t CnfFormula::satisfied_count(std::uint64_t assignment) const {
  std::size_t count = 0;
  for (const auto& clause : clauses) {
    for (Literal lit : clause) {
      const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
      const bool value = (assignment >> v) & 1U;
      if (value == (lit > 0)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace bicrit
