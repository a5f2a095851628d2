#include "bicrit/setpacking.hpp"

#include <algorithm>
#include <string>

#include "bicrit/error.hpp"
#include "bicrit/flow.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

SpParams SpParams::from_delta(const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw Error(ErrorCode::kBadParams, "delta must lie in (0, 1)");
  SpParams p;
  p.delta = delta;
  p.coverage_cap = ceil(Rational(40) / delta).get_si();
  p.size_cutoff = ceil(Rational(400) / (delta * delta)).get_si();
  p.eps = delta * delta / 800;
  return p;
}

bool is_valid_packing(const SetPackingInstance& inst, const PackingSolution& solution) {
  std::vector<bool> used(inst.universe_size(), false);
  std::vector<bool> picked(inst.size(), false);
  for (const auto& pick : solution.picks) {
    if (pick.set >= inst.size() || picked[pick.set]) return false;
    picked[pick.set] = true;
    const auto& s = inst.set(pick.set);
    for (ElementId e : pick.kept) {
      if (!std::binary_search(s.begin(), s.end(), e) || used[e]) return false;
      used[e] = true;
    }
  }
  return true;
}

SmallPhaseResult sp_small_phase(const SetPackingInstance& inst, std::span<const SetIndex> sets) {
  // Nodes: source 0, sink 1, sets, then elements that occur in some set.
  std::vector<std::size_t> element_node(inst.universe_size(), 0);
  std::vector<ElementId> node_element;
  FlowNetwork net;
  net.source = 0;
  net.sink = 1;
  const std::size_t first_element = 2 + sets.size();
  for (SetIndex s : sets) {
    for (ElementId e : inst.set(s)) {
      if (element_node[e] == 0) {
        element_node[e] = first_element + node_element.size();
        node_element.push_back(e);
      }
    }
  }
  net.nodes = first_element + node_element.size();
  for (std::size_t k = 0; k < sets.size(); ++k) net.add_arc(0, 2 + k, 1);
  for (std::size_t k = 0; k < node_element.size(); ++k) net.add_arc(first_element + k, 1, 1);
  std::vector<std::pair<std::size_t, ElementId>> member_arcs;  // (set position, element)
  const std::size_t first_member = net.arcs.size();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (ElementId e : inst.set(sets[k])) {
      net.add_arc(2 + k, element_node[e], 1);
      member_arcs.emplace_back(k, e);
    }
  }
  const auto flow = max_flow(net);

  SmallPhaseResult out;
  out.flow_value = flow.value;
  out.cut_capacity = flow.cut_capacity;
  std::vector<std::optional<ElementId>> routed(sets.size());
  for (std::size_t a = 0; a < member_arcs.size(); ++a) {
    if (flow.flow[first_member + a] > 0) routed[member_arcs[a].first] = member_arcs[a].second;
  }
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (flow.flow[k] > 0 && routed[k]) {
      out.solution.picks.push_back({sets[k], {*routed[k]}});
      out.used.push_back(*routed[k]);
    }
  }
  std::sort(out.used.begin(), out.used.end());
  return out;
}

LpProblem packing_lp(const SetPackingInstance& inst, std::span<const SetIndex> sets) {
  LpProblem lp;
  lp.objective.assign(sets.size(), Rational(1));
  lp.bounds.assign(sets.size(), VariableBounds{Rational(0), Rational(1)});
  std::vector<std::vector<std::size_t>> containing(inst.universe_size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (ElementId e : inst.set(sets[k])) containing[e].push_back(k);
  }
  for (const auto& vars : containing) {
    if (vars.size() < 2) continue;  // implied by the upper bound
    LpConstraint c;
    for (auto k : vars) c.terms.emplace_back(k, Rational(1));
    c.relation = Relation::kLessEqual;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

LargePhaseResult sp_large_phase(const SetPackingInstance& inst, std::span<const SetIndex> sets,
                                const std::vector<bool>& available, const SpParams& params,
                                std::uint64_t seed, LpMode mode, CollectRule rule) {
  LargePhaseResult out;
  if (mode == LpMode::kPlanted && !inst.planted()) {
    throw Error(ErrorCode::kNoPlantedWitness, "planted LP mode needs a planted witness");
  }
  for (SetIndex s : sets) {
    const auto& set = inst.set(s);
    if (std::all_of(set.begin(), set.end(), [&](ElementId e) { return available[e]; })) {
      out.eligible.push_back(s);
    }
  }

  if (mode == LpMode::kSolve) {
    const auto sol = lp_solve(packing_lp(inst, out.eligible));
    out.x = sol.values;
  } else {
    const auto& planted = *inst.planted();
    for (SetIndex s : out.eligible) {
      out.x.emplace_back(std::binary_search(planted.begin(), planted.end(), s) ? 1 : 0);
    }
  }

  const Rng base(seed);
  Rng coins = base.split(1);
  Rng allocator = base.split(2);

  std::vector<std::size_t> coverage(inst.universe_size(), 0);
  for (std::size_t k = 0; k < out.eligible.size(); ++k) {
    if (!coins.bernoulli(out.x[k])) continue;
    out.sampled.push_back(out.eligible[k]);
    for (ElementId e : inst.set(out.eligible[k])) ++coverage[e];
  }
  const auto cap = static_cast<std::size_t>(params.coverage_cap);
  std::vector<bool> heavy(inst.universe_size(), false);
  for (ElementId e = 0; e < inst.universe_size(); ++e) {
    heavy[e] = coverage[e] >= cap;
    out.heavy_elements += heavy[e] ? 1 : 0;
  }

  std::vector<std::size_t> heavy_count;
  for (SetIndex s : out.sampled) {
    const auto& set = inst.set(s);
    const auto h = static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [&](ElementId e) { return heavy[e]; }));
    if (10 * h < set.size()) {
      out.survivors.push_back(s);
      heavy_count.push_back(h);
    }
  }

  // Each light element goes to a uniformly random surviving set containing it.
  std::vector<std::vector<std::size_t>> containing(inst.universe_size());
  for (std::size_t b = 0; b < out.survivors.size(); ++b) {
    for (ElementId e : inst.set(out.survivors[b])) {
      if (!heavy[e]) containing[e].push_back(b);
    }
  }
  std::vector<std::vector<ElementId>> collected(out.survivors.size());
  for (ElementId e = 0; e < inst.universe_size(); ++e) {
    const auto& owners = containing[e];
    if (owners.empty()) continue;
    collected[owners[allocator.below(owners.size())]].push_back(e);
  }

  for (std::size_t b = 0; b < out.survivors.size(); ++b) {
    const std::size_t size = inst.set(out.survivors[b]).size();
    const std::size_t basis = rule == CollectRule::kOutsideHeavy ? size - heavy_count[b] : heavy_count[b];
    if (Rational(collected[b].size()) >= params.eps * basis) {
      out.solution.picks.push_back({out.survivors[b], std::move(collected[b])});
    }
  }
  return out;
}

SpResult sp_combined(const SetPackingInstance& inst, const SpParams& params, std::uint64_t seed,
                     LpMode mode, CollectRule rule) {
  if (mode == LpMode::kPlanted && !inst.planted()) {
    throw Error(ErrorCode::kNoPlantedWitness, "planted LP mode needs a planted witness");
  }
  std::vector<SetIndex> small;
  std::vector<SetIndex> large;
  const auto cutoff = static_cast<std::size_t>(params.size_cutoff);
  for (SetIndex s = 0; s < inst.size(); ++s) {
    (inst.set(s).size() <= cutoff ? small : large).push_back(s);
  }
  SpResult out;
  auto small_phase = sp_small_phase(inst, small);
  std::vector<bool> available(inst.universe_size(), true);
  for (ElementId e : small_phase.used) available[e] = false;
  out.small_count = small_phase.solution.picks.size();
  out.solution = std::move(small_phase.solution);
  if (!large.empty()) {
    auto large_phase = sp_large_phase(inst, large, available, params, seed, mode, rule);
    out.large_count = large_phase.solution.picks.size();
    for (auto& pick : large_phase.solution.picks) out.solution.picks.push_back(std::move(pick));
  }
  return out;
}

AlmostDisjointResult check_almost_disjoint(std::span<const std::vector<ElementId>> sets,
                                           const Rational& eps) {
  if (eps < 0 || eps > 1) throw Error(ErrorCode::kBadParams, "eps must lie in [0, 1]");
  std::vector<ElementId> elements;
  for (const auto& s : sets) elements.insert(elements.end(), s.begin(), s.end());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto node_of = [&](ElementId e) {
    return 2 + sets.size() +
           static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), e) - elements.begin());
  };

  AlmostDisjointResult out;
  FlowNetwork net;
  net.nodes = 2 + sets.size() + elements.size();
  net.source = 0;
  net.sink = 1;
  std::int64_t total_demand = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Rational need = (1 - eps) * static_cast<unsigned long>(sets[i].size());
    out.demands.push_back(ceil(need).get_si());
    total_demand += out.demands.back();
    net.add_arc(0, 2 + i, out.demands.back());
  }
  std::vector<std::pair<std::size_t, ElementId>> members;
  const std::size_t first_member = net.arcs.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (ElementId e : sets[i]) {
      net.add_arc(2 + i, node_of(e), 1);
      members.emplace_back(i, e);
    }
  }
  for (std::size_t k = 0; k < elements.size(); ++k) net.add_arc(2 + sets.size() + k, 1, 1);

  const auto flow = max_flow(net);
  out.flow_value = flow.value;
  out.cut_capacity = flow.cut_capacity;
  out.cut_source_side.assign(flow.source_side.begin() + 2, flow.source_side.end());
  out.feasible = flow.value == total_demand;
  if (out.feasible) {
    out.witness.resize(sets.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (flow.flow[first_member + a] > 0) out.witness[members[a].first].push_back(members[a].second);
    }
  }
  return out;
}

}  // namespace bicrit
