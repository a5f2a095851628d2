#include "bicrit/reductions.hpp"

#include <algorithm>
#include <string>

#include "bicrit/error.hpp"
#include "bicrit/oracles.hpp"

namespace bicrit {

namespace {

constexpr std::size_t kMaxGadgetPoints = 10'000'000;
constexpr std::size_t kSoundnessMaxSets = 32;

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (r > kMaxGadgetPoints / base) throw Error(ErrorCode::kTooLarge, "gadget block too large");
    r *= base;
  }
  return r;
}

}  // namespace

HypercubeGadget::HypercubeGadget(std::size_t variable, std::size_t alphabet, std::size_t degree,
                                 ElementId id_offset)
    : variable_(variable), alphabet_(alphabet), degree_(degree), offset_(id_offset) {
  if (alphabet < 2 || degree < 2) throw Error(ErrorCode::kBadParams, "gadget needs alphabet >= 2 and d >= 2");
  block_size_ = checked_power(degree, alphabet);
  edges_.assign(alphabet * degree, {});
  for (std::size_t p = 0; p < block_size_; ++p) {
    std::size_t rest = p;
    for (std::size_t i = 0; i < alphabet; ++i) {
      const std::size_t coord = rest % degree;  // a_{i+1} - 1
      rest /= degree;
      edges_[i * degree + coord].push_back(offset_ + p);
    }
  }
}

const std::vector<ElementId>& HypercubeGadget::edge(std::size_t i, std::size_t j) const {
  if (i < 1 || i > alphabet_ || j < 1 || j > degree_) {
    throw Error(ErrorCode::kBadParams, "edge index out of range");
  }
  return edges_[(i - 1) * degree_ + (j - 1)];
}

HypercubeGadget hypercube_gadget(std::size_t variable, std::size_t alphabet, std::size_t degree,
                                 ElementId id_offset) {
  return HypercubeGadget(variable, alphabet, degree, id_offset);
}

ReductionParams make_reduction_params(std::size_t q, std::size_t alphabet, std::size_t d) {
  if (q < 1 || q > 62 || d < 2 || alphabet < 2) throw Error(ErrorCode::kBadParams, "bad reduction parameters");
  ReductionParams p;
  p.q = q;
  p.alphabet = alphabet;
  p.d = d;
  p.eta = (std::size_t{1} << q) - 1;
  p.gamma = Rational(1, static_cast<unsigned long>(d));
  p.eps_bound = p.gamma / static_cast<unsigned long>(2 * q);
  return p;
}

CnfReduction reduce_cnf_to_setpacking(const CnfFormula& phi, std::size_t alphabet,
                                      std::optional<std::uint64_t> assignment) {
  phi.validate();
  if (phi.clauses.empty()) throw Error(ErrorCode::kBadParams, "formula has no clauses");
  const std::size_t q = phi.clauses.front().size();
  for (const auto& c : phi.clauses) {
    if (c.size() != q) throw Error(ErrorCode::kBadParams, "clauses must all have the same length");
  }
  const auto occ = phi.occurrences();
  const std::size_t d = std::max<std::size_t>(2, *std::max_element(occ.begin(), occ.end()));
  const ReductionParams params = make_reduction_params(q, alphabet, d);

  std::vector<HypercubeGadget> gadgets;
  ElementId offset = 0;
  for (std::size_t v = 1; v <= phi.num_vars; ++v) {
    gadgets.emplace_back(v, alphabet, d, offset);
    offset += gadgets.back().block_size();
  }

  std::vector<std::vector<ElementId>> sets;
  std::vector<std::size_t> set_clause;
  std::vector<std::vector<bool>> set_values;
  std::vector<SetIndex> witness;
  std::vector<std::size_t> seen(phi.num_vars, 0);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const auto& clause = phi.clauses[c];
    std::vector<std::size_t> vars;
    std::vector<std::size_t> occurrence;  // 1-based occurrence index of this clause per variable
    for (Literal lit : clause) {
      const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      vars.push_back(v);
      occurrence.push_back(++seen[v - 1]);
    }
    std::optional<std::uint64_t> chosen;
    if (assignment) {
      chosen = 0;
      for (std::size_t k = 0; k < q; ++k) *chosen |= ((*assignment >> (vars[k] - 1)) & 1U) << k;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
      bool satisfied = false;
      for (std::size_t k = 0; k < q; ++k) satisfied |= (((mask >> k) & 1U) != 0) == (clause[k] > 0);
      if (!satisfied) continue;
      std::vector<ElementId> set;
      std::vector<bool> values;
      for (std::size_t k = 0; k < q; ++k) {
        const bool value = (mask >> k) & 1U;
        values.push_back(value);
        const auto& e = gadgets[vars[k] - 1].edge(matching_for(value), occurrence[k]);
        set.insert(set.end(), e.begin(), e.end());
      }
      if (chosen && *chosen == mask) witness.push_back(sets.size());
      sets.push_back(std::move(set));
      set_clause.push_back(c);
      set_values.push_back(std::move(values));
    }
  }

  std::optional<std::vector<SetIndex>> planted;
  if (!witness.empty() && is_partition(offset, sets, witness)) planted = witness;
  return CnfReduction{SetPackingInstance(offset, std::move(sets), std::move(planted)),
                      params,
                      std::move(gadgets),
                      std::move(set_clause),
                      std::move(set_values),
                      std::move(witness)};
}

SantaClausReduction reduce_setpacking_to_santaclaus(const SetPackingInstance& inst,
                                                    const Rational& target) {
  if (!inst.planted()) throw Error(ErrorCode::kMissingWitness, "reduction needs a planted partition");
  if (target <= 0) throw Error(ErrorCode::kBadParams, "T must be positive");
  const std::size_t n = inst.size();
  const auto& planted = *inst.planted();
  const Rational alpha = make_rational(static_cast<long>(planted.size()), static_cast<long>(n));
  const Rational dummies = (1 - alpha) * static_cast<unsigned long>(n);
  if (dummies.get_den() != 1) {
    throw Error(ErrorCode::kNonIntegralDummyCount, "(1 - alpha) n = " + format_rational(dummies));
  }
  const std::size_t dummy_count = dummies.get_num().get_ui();
  const std::size_t items = inst.universe_size() + dummy_count;

  std::vector<SetIndex> agent_set;
  std::vector<std::optional<ElementId>> item_element;
  Allocation witness;
  std::vector<std::vector<Rational>> value(n, std::vector<Rational>(items, Rational(0)));
  for (SetIndex s = 0; s < n; ++s) {
    const auto& set = inst.set(s);
    if (set.empty()) throw Error(ErrorCode::kBadParams, "set " + std::to_string(s) + " is empty");
    const Rational share = target / static_cast<unsigned long>(set.size());
    for (ElementId e : set) value[s][e] = share;
    for (std::size_t k = 0; k < dummy_count; ++k) value[s][inst.universe_size() + k] = target;
    agent_set.push_back(s);
  }
  for (ElementId e = 0; e < inst.universe_size(); ++e) item_element.emplace_back(e);
  item_element.resize(items);

  std::size_t next_dummy = inst.universe_size();
  for (SetIndex s = 0; s < n; ++s) {
    if (std::binary_search(planted.begin(), planted.end(), s)) {
      for (ElementId e : inst.set(s)) witness[e] = s;
    } else {
      witness[next_dummy++] = s;
    }
  }
  return SantaClausReduction{SantaClausInstance(std::move(value), items, target), std::move(agent_set),
                             std::move(item_element), std::move(witness)};
}

SoundnessReport verify_reduction_soundness(const CnfFormula& phi, const Rational& eps) {
  const auto red = reduce_cnf_to_setpacking(phi);
  if (red.instance.size() > kSoundnessMaxSets) {
    throw Error(ErrorCode::kTooLarge, std::to_string(red.instance.size()) + " sets exceed the exhaustive limit");
  }
  SoundnessReport r;
  r.clauses = phi.clauses.size();
  r.sets = red.instance.size();
  r.eps = eps;
  r.eps_bound = red.params.eps_bound;
  r.applicable = eps < r.eps_bound;
  r.max_satisfied = brute_max_satisfiable(phi);
  r.max_almost_disjoint = brute_almost_disjoint_max(red.instance.sets(), eps);
  r.holds = !r.applicable || r.max_almost_disjoint <= r.max_satisfied;
  return r;
}

}  // namespace bicrit
