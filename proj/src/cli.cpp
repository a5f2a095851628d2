#include "bicrit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicrit/error.hpp"
#include "bicrit/generators.hpp"
#include "bicrit/io.hpp"
#include "bicrit/makespan.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/setpacking.hpp"
#include "bicrit/suites.hpp"

namespace bicrit {

using nlohmann::json;

SampleStats summarize(std::span<const double> values) {
  SampleStats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / (n - 1));
  }
  s.se = s.std / std::sqrt(n);
  return s;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

enum class Algorithm { kAlg1, kAlg2, kAlg3, kCombined, kSpSmall, kSpLarge, kSpAll };

Algorithm parse_algorithm(const std::string& name) {
  static const std::pair<const char*, Algorithm> kNames[] = {
      {"alg1", Algorithm::kAlg1},         {"alg2", Algorithm::kAlg2},         {"alg3", Algorithm::kAlg3},
      {"combined", Algorithm::kCombined}, {"sp_small", Algorithm::kSpSmall}, {"sp_large", Algorithm::kSpLarge},
      {"sp_all", Algorithm::kSpAll}};
  for (const auto& [n, a] : kNames) {
    if (name == n) return a;
  }
  throw Error(ErrorCode::kBadParams, "unknown algorithm '" + name + "'");
}

bool is_makespan_algorithm(Algorithm a) { return a <= Algorithm::kCombined; }

// Flags shared by solve and bench.
struct RunOptions {
  std::string kind;
  std::string algorithm;
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string delta = "1/2";
  std::size_t column_cap = kDefaultColumnCap;
  std::string lp_mode = "solve";
  std::string collect = "outside";
  std::string out;
};

struct LoadedInstance {
  AnyInstance instance;
  std::string text;
  Algorithm algorithm;
};

LoadedInstance load_for(const RunOptions& o) {
  const Algorithm alg = parse_algorithm(o.algorithm);
  std::string text = read_file(o.instance);
  AnyInstance inst = o.kind.empty() ? parse_instance(text) : parse_instance(text, parse_kind(o.kind));
  const bool makespan = std::holds_alternative<MakespanInstance>(inst);
  const bool packing = std::holds_alternative<SetPackingInstance>(inst);
  if ((is_makespan_algorithm(alg) && !makespan) || (!is_makespan_algorithm(alg) && !packing)) {
    throw Error(ErrorCode::kMismatch, "algorithm '" + o.algorithm + "' does not apply to this instance kind");
  }
  return {std::move(inst), std::move(text), alg};
}

LpMode parse_lp_mode(const std::string& s) {
  if (s == "solve") return LpMode::kSolve;
  if (s == "planted") return LpMode::kPlanted;
  throw Error(ErrorCode::kBadParams, "lp mode must be 'solve' or 'planted'");
}

CollectRule parse_collect(const std::string& s) {
  if (s == "outside") return CollectRule::kOutsideHeavy;
  if (s == "inside") return CollectRule::kInsideHeavy;
  throw Error(ErrorCode::kBadParams, "collect rule must be 'outside' or 'inside'");
}

json schedule_json(const Schedule& s) {
  json pairs = json::array();
  for (const auto& a : s.pairs()) pairs.push_back({a.machine, a.job});
  return {{"kind", "schedule"}, {"assignments", pairs}};
}

json packing_json(const PackingSolution& s) {
  json picks = json::array();
  for (const auto& p : s.picks) picks.push_back({{"set_index", p.set}, {"kept_elements", p.kept}});
  return {{"kind", "packing"}, {"picks", picks}};
}

// One run of an algorithm: the solution, the metric bench averages, and a
// structural verdict that must hold on every run.
struct RunOutcome {
  json solution;
  json report;
  double metric = 0.0;
  double floor = 0.0;
  bool structural = true;
};

// Seed-independent state, built once per instance.
class Runner {
 public:
  Runner(const LoadedInstance& loaded, const RunOptions& o) : loaded_(loaded), opts_(o) {
    if (const auto* inst = std::get_if<MakespanInstance>(&loaded.instance)) {
      switch (loaded.algorithm) {
        case Algorithm::kAlg2: clp_ = solve_clp(*inst, o.column_cap); break;
        case Algorithm::kCombined: combined_.emplace(*inst, o.column_cap); break;
        default: break;
      }
    } else {
      params_ = SpParams::from_delta(parse_rational(o.delta));
      mode_ = parse_lp_mode(o.lp_mode);
      rule_ = parse_collect(o.collect);
    }
  }

  RunOutcome run(std::uint64_t seed) const {
    if (const auto* inst = std::get_if<MakespanInstance>(&loaded_.instance)) return run_makespan(*inst, seed);
    return run_packing(std::get<SetPackingInstance>(loaded_.instance), seed);
  }

  std::string metric_name() const {
    switch (loaded_.algorithm) {
      case Algorithm::kAlg2: return "scheduled_fraction";
      case Algorithm::kAlg1:
      case Algorithm::kAlg3:
      case Algorithm::kCombined: return "scheduled_count";
      default: return "packed_sets";
    }
  }

 private:
  RunOutcome run_makespan(const MakespanInstance& inst, std::uint64_t seed) const {
    RunOutcome r;
    const Rational& T = inst.target();
    const double n = static_cast<double>(inst.jobs());
    switch (loaded_.algorithm) {
      case Algorithm::kAlg1: {
        const auto s = alg1_match_large(inst);
        const auto ev = evaluate_schedule(inst, s);
        r.solution = schedule_json(s);
        r.metric = static_cast<double>(s.size());
        r.floor = r.metric;
        r.structural = ev.makespan <= T;
        r.report = {{"m_star", s.size()}, {"count", ev.jobs_scheduled}, {"makespan", rational_to_json(ev.makespan)}};
        break;
      }
      case Algorithm::kAlg2: {
        const auto s = alg2_round(*clp_, inst, seed);
        const auto ev = evaluate_schedule(inst, s);
        r.solution = schedule_json(s);
        r.metric = n == 0 ? 1.0 : static_cast<double>(ev.jobs_scheduled) / n;
        r.floor = 1.0 - std::exp(-1.0);
        r.structural = ev.makespan <= T;
        r.report = {{"count", ev.jobs_scheduled},
                    {"fraction", r.metric},
                    {"makespan", rational_to_json(ev.makespan)}};
        break;
      }
      case Algorithm::kAlg3: {
        const auto g = alg3_greedy(inst);
        const auto ev = evaluate_schedule(inst, g.schedule);
        const std::size_t m_star = alg1_match_large(inst).size();
        std::size_t listed = 0;
        for (const auto& l : g.trace.lists) listed += l.size();
        r.solution = schedule_json(g.schedule);
        r.metric = static_cast<double>(ev.jobs_scheduled);
        r.floor = (n - static_cast<double>(m_star)) / 6.0;
        r.structural = 6 * ev.jobs_scheduled + m_star >= inst.jobs() && ev.makespan * 2 <= T &&
                       3 * ev.jobs_scheduled >= listed;
        r.report = {{"m_star", m_star},
                    {"count", ev.jobs_scheduled},
                    {"listed", listed},
                    {"makespan", rational_to_json(ev.makespan)}};
        break;
      }
      case Algorithm::kCombined: {
        const auto res = combined_->run(seed);
        const auto& rep = res.report;
        r.solution = schedule_json(res.schedule);
        r.metric = static_cast<double>(res.schedule.size());
        r.floor = rep.floor;
        r.structural = rep.makespan * 2 <= T * 3;
        r.report = {{"m_star", rep.m_star},
                    {"s1_count", rep.s1_count},
                    {"alg3_count", rep.alg3_count},
                    {"rounded_count", rep.rounded_count},
                    {"chosen", rep.chosen == 1 ? "S1" : "S2"},
                    {"floor", rep.floor},
                    {"makespan", rational_to_json(rep.makespan)},
                    {"count", res.schedule.size()}};
        break;
      }
      default: break;
    }
    r.report["T"] = rational_to_json(T);
    return r;
  }

  RunOutcome run_packing(const SetPackingInstance& inst, std::uint64_t seed) const {
    RunOutcome r;
    const auto cutoff = static_cast<std::size_t>(params_.size_cutoff);
    std::vector<SetIndex> small, large;
    for (SetIndex s = 0; s < inst.size(); ++s) (inst.set(s).size() <= cutoff ? small : large).push_back(s);
    PackingSolution sol;
    json extra = json::object();
    switch (loaded_.algorithm) {
      case Algorithm::kSpSmall: {
        auto res = sp_small_phase(inst, small);
        extra = {{"flow_value", res.flow_value}, {"cut_capacity", res.cut_capacity}};
        r.structural = res.flow_value == res.cut_capacity;
        sol = std::move(res.solution);
        break;
      }
      case Algorithm::kSpLarge: {
        auto res = sp_large_phase(inst, large, std::vector<bool>(inst.universe_size(), true), params_, seed, mode_, rule_);
        extra = {{"sampled", res.sampled.size()}, {"heavy_elements", res.heavy_elements},
                 {"survivors", res.survivors.size()}};
        sol = std::move(res.solution);
        break;
      }
      default: {
        auto res = sp_combined(inst, params_, seed, mode_, rule_);
        extra = {{"small_count", res.small_count}, {"large_count", res.large_count}};
        sol = std::move(res.solution);
        break;
      }
    }
    r.structural = r.structural && is_valid_packing(inst, sol);
    // large picks keep at least 0.9 eps |S| elements under the default rule
    std::size_t thin = 0;
    if (rule_ == CollectRule::kOutsideHeavy) {
      for (const auto& p : sol.picks) {
        const auto size = static_cast<unsigned long>(inst.set(p.set).size());
        if (size > cutoff && Rational(static_cast<unsigned long>(p.kept.size())) < Rational(9, 10) * params_.eps * size) {
          ++thin;
        }
      }
    }
    r.structural = r.structural && thin == 0;
    const std::size_t planted = inst.planted() ? inst.planted()->size() : 0;
    r.metric = static_cast<double>(sol.picks.size());
    r.floor = to_double((1 - params_.delta) * static_cast<unsigned long>(planted));
    r.solution = packing_json(sol);
    r.report = extra;
    r.report["count"] = sol.picks.size();
    r.report["D"] = params_.coverage_cap;
    r.report["C"] = params_.size_cutoff;
    r.report["eps"] = format_rational(params_.eps);
    return r;
  }

  const LoadedInstance& loaded_;
  RunOptions opts_;
  std::optional<ClpSolution> clp_;
  std::optional<CombinedScheduler> combined_;
  SpParams params_{};
  LpMode mode_ = LpMode::kSolve;
  CollectRule rule_ = CollectRule::kOutsideHeavy;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_solve(const RunOptions& o, std::ostream& out) {
  const auto loaded = load_for(o);
  const Runner runner(loaded, o);
  auto r = runner.run(o.seed);
  r.report["algorithm"] = o.algorithm;
  r.report["seed"] = o.seed;
  r.report["instance_digest"] = digest(loaded.text);
  r.report["verdict"] = r.structural ? "pass" : "fail";
  const json doc = {{"report", r.report}, {"solution", r.solution}};
  emit(o.out, doc.dump(2) + "\n", out);
  return r.structural ? kExitPass : kExitVerdictFail;
}

int cmd_bench(const RunOptions& o, std::ostream& out) {
  if (o.trials < 30) throw Error(ErrorCode::kBadParams, "bench needs at least 30 trials");
  const auto loaded = load_for(o);
  const Runner runner(loaded, o);
  std::vector<double> values;
  json per_seed = json::array();
  bool structural = true;
  double floor = 0.0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = o.seed + t;
    const auto r = runner.run(seed);
    values.push_back(r.metric);
    floor = r.floor;
    structural = structural && r.structural;
    per_seed.push_back({{"seed", seed}, {"value", r.metric}, {"structural", r.structural}});
  }
  const auto stats = summarize(values);
  const bool mean_ok = stats.mean >= floor - 3.0 * stats.se;
  const json report = {{"kind", std::string(to_string(static_cast<ProblemKind>(loaded.instance.index())))},
                       {"algorithm", o.algorithm},
                       {"instance_digest", digest(loaded.text)},
                       {"seed_start", o.seed},
                       {"trials", o.trials},
                       {"metric", runner.metric_name()},
                       {"per_seed", per_seed},
                       {"mean", stats.mean},
                       {"std", stats.std},
                       {"se", stats.se},
                       {"floor", floor},
                       {"verdicts", {{"structural_every_run", structural}, {"mean_at_least_floor_minus_3se", mean_ok}}},
                       {"passed", structural && mean_ok}};
  emit(o.out, report.dump(2) + "\n", out);
  return structural && mean_ok ? kExitPass : kExitVerdictFail;
}

struct GenOptions {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t m = 1;
  std::size_t n = 1;
  double density = 0.5;
  std::int64_t target = 12;
  std::size_t extra = 0;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
  std::size_t vars = 3;
  std::size_t q = 3;
  std::size_t d = 1;
  std::string format;
  std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const ProblemKind kind = parse_kind(o.kind);
  std::string text;
  switch (kind) {
    case ProblemKind::kMakespan:
      text = emit_instance(gen_planted_makespan({o.m, o.n, o.density, o.target}, o.seed));
      break;
    case ProblemKind::kSetPacking:
      text = emit_instance(gen_planted_setpacking({o.m, o.extra, o.min_size, o.max_size}, o.seed));
      break;
    case ProblemKind::kCnf: {
      const auto f = gen_cnf_regular(o.vars, o.q, o.d, o.seed);
      text = o.format == "json" ? emit_instance(f) : emit_dimacs(f);
      break;
    }
    case ProblemKind::kSantaClaus:
      throw Error(ErrorCode::kBadParams, "santaclaus instances come from 'reduce --from sp-sc'");
  }
  emit(o.out, text, out);
  return kExitPass;
}

CnfFormula read_formula(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return std::get<CnfFormula>(parse_instance(text, ProblemKind::kCnf));
  }
  return parse_dimacs(text);
}

struct VerifyOptions {
  std::string suite;
  std::optional<std::size_t> scale;
  std::size_t max_sets = 5;
  std::size_t sigma = 2;
  std::size_t d = 5;
  std::size_t vars = 15;
  std::size_t q = 3;
  std::uint64_t seed = 0;
  std::string in;
  std::string target = "1";
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (o.suite == "lemma22" || o.suite == "prop25") {
    const std::size_t jobs = o.scale.value_or(4);
    if (jobs > 5) throw Error(ErrorCode::kTooLarge, "makespan family limited to 5 jobs");
    results.push_back(makespan_family_suite(
        jobs, o.suite == "lemma22" ? (kCheckLemma22 | kCheckLemma24) : (kCheckProp25 | kCheckLemma26)));
  } else if (o.suite == "lemma42") {
    const std::size_t u = o.scale.value_or(6);
    // multisets of max_sets masks over 2^u subsets
    double families = 1.0;
    for (std::size_t k = 1; k <= o.max_sets; ++k) {
      families = families * (std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(u, 60))) + double(k) - 1) / double(k);
    }
    if (u > 16 || families > 1e8) throw Error(ErrorCode::kTooLarge, "lemma42 family above 10^8 instances");
    results.push_back(lemma42_suite(u, o.max_sets));
  } else if (o.suite == "gadget") {
    results.push_back(gadget_suite(o.sigma, o.d));
    if (o.sigma == 2) results.push_back(parameter_table_suite(o.vars, o.q, o.d, o.seed));
  } else if (o.suite == "soundness") {
    if (!o.in.empty()) {
      results.push_back(soundness_formula_suite(read_formula(o.in)));
    } else {
      results.push_back(soundness_suite(o.scale.value_or(20), 4, o.seed));
    }
  } else if (o.suite == "oracle-eq") {
    const std::size_t jobs = o.scale.value_or(6);
    if (jobs > 10) throw Error(ErrorCode::kTooLarge, "oracle-eq limited to 10 jobs");
    results.push_back(oracle_equivalence_suite(jobs, 5));
  } else if (o.suite == "santaclaus") {
    results.push_back(santaclaus_completeness_suite(parse_rational(o.target)));
  } else {
    throw Error(ErrorCode::kBadParams, "unknown suite '" + o.suite + "'");
  }
  json doc = json::array();
  bool passed = true;
  for (const auto& r : results) {
    doc.push_back(to_json(r));
    passed = passed && r.passed;
  }
  emit(o.out, doc.dump(2) + "\n", out);
  return passed ? kExitPass : kExitVerdictFail;
}

struct ReduceOptions {
  std::string from;
  std::string in;
  std::string out;
  std::string target = "1";
  std::size_t alphabet = 2;
  std::string assignment;
};

int cmd_reduce(const ReduceOptions& o, std::ostream& out) {
  const std::string from = o.from;
  json meta;
  std::string text;
  if (from == "cnf-sp" || from == "cnf->sp" || from == "cnf→sp") {
    const auto phi = read_formula(o.in);
    std::optional<std::uint64_t> assignment;
    if (!o.assignment.empty()) {
      if (o.assignment.size() != phi.num_vars || o.assignment.size() > 64 ||
          o.assignment.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorCode::kBadParams, "assignment must be one 0/1 digit per variable");
      }
      assignment = 0;
      for (std::size_t v = 0; v < o.assignment.size(); ++v) {
        if (o.assignment[v] == '1') *assignment |= std::uint64_t{1} << v;
      }
    }
    const auto red = reduce_cnf_to_setpacking(phi, o.alphabet, assignment);
    text = emit_instance(red.instance);
    json sets = json::array();
    for (SetIndex s = 0; s < red.instance.size(); ++s) {
      sets.push_back({{"set_index", s}, {"clause", red.set_clause[s]}, {"values", red.set_values[s]}});
    }
    json gadgets = json::array();
    for (const auto& g : red.gadgets) {
      gadgets.push_back({{"variable", g.variable()}, {"offset", g.offset()}, {"block_size", g.block_size()}});
    }
    meta = {{"kind", "cnf-sp"},
            {"params",
             {{"q", red.params.q},
              {"alphabet", red.params.alphabet},
              {"d", red.params.d},
              {"eta", red.params.eta},
              {"gamma", rational_to_json(red.params.gamma)},
              {"eps_bound", rational_to_json(red.params.eps_bound)}}},
            {"sets", sets},
            {"gadgets", gadgets},
            {"witness", red.witness}};
  } else if (from == "sp-sc" || from == "sp->sc" || from == "sp→sc") {
    const auto inst = std::get<SetPackingInstance>(parse_instance(read_file(o.in), ProblemKind::kSetPacking));
    const auto red = reduce_setpacking_to_santaclaus(inst, parse_rational(o.target));
    text = emit_instance(red.instance);
    json items = json::array();
    std::size_t dummies = 0;
    for (const auto& e : red.item_element) {
      if (e) {
        items.push_back(*e);
      } else {
        items.push_back(nullptr);
        ++dummies;
      }
    }
    json witness = json::array();
    for (const auto& [item, agent] : red.witness) witness.push_back({item, agent});
    meta = {{"kind", "sp-sc"},
            {"T", rational_to_json(red.instance.target())},
            {"agents", red.instance.agents()},
            {"items", red.instance.items()},
            {"dummy_items", dummies},
            {"agent_set", red.agent_set},
            {"item_element", items},
            {"witness", witness}};
  } else {
    throw Error(ErrorCode::kBadParams, "--from must be cnf-sp or sp-sc");
  }
  if (o.out.empty()) {
    out << json{{"instance", json::parse(text)}, {"metadata", meta}}.dump(2) << "\n";
  } else {
    write_file(o.out, text);
    write_file(o.out + ".meta.json", meta.dump(2) + "\n");
  }
  return kExitPass;
}

void add_run_options(CLI::App* app, RunOptions& o, bool bench) {
  app->add_option("instance,--in", o.instance, "instance file")->required();
  app->add_option("--kind", o.kind, "expected instance kind");
  app->add_option("--algorithm", o.algorithm, "alg1|alg2|alg3|combined|sp_small|sp_large|sp_all")->required();
  app->add_option("--seed", o.seed, bench ? "first seed of the range" : "seed");
  if (bench) app->add_option("--trials", o.trials, "number of seeds (>= 30)")->required();
  app->add_option("--delta", o.delta, "set packing loss parameter (rational)");
  app->add_option("--column-cap", o.column_cap, "configuration LP column cap");
  app->add_option("--lp-mode", o.lp_mode, "solve|planted");
  app->add_option("--collect", o.collect, "outside|inside: quantity survivors must collect");
  app->add_option("--out", o.out, "output file (stdout when absent)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicriteria makespan, set packing and Santa Claus toolkit", "bicrit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate an instance");
  g->add_option("--kind", gen.kind, "makespan|setpacking|cnf")->required();
  g->add_option("--seed", gen.seed);
  g->add_option("--m", gen.m, "machines, or planted partition sets");
  g->add_option("--n", gen.n, "jobs");
  g->add_option("--density", gen.density, "probability of an extra finite entry");
  g->add_option("--T", gen.target, "integer makespan target, raised to n when smaller");
  g->add_option("--extra", gen.extra, "decoy sets");
  g->add_option("--min-size", gen.min_size);
  g->add_option("--max-size", gen.max_size);
  g->add_option("--vars", gen.vars);
  g->add_option("--q", gen.q, "clause length");
  g->add_option("--d", gen.d, "occurrences per variable");
  g->add_option("--format", gen.format, "dimacs|json (cnf only)");
  g->add_option("--out", gen.out);

  RunOptions solve;
  add_run_options(app.add_subcommand("solve", "run one algorithm once"), solve, false);
  RunOptions bench;
  add_run_options(app.add_subcommand("bench", "run an algorithm over a seed range"), bench, true);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run an exhaustive property suite");
  v->add_option("suite", verify.suite, "lemma22|prop25|lemma42|gadget|soundness|oracle-eq|santaclaus")->required();
  v->add_option("--scale", verify.scale, "suite size (jobs, universe size, or formula count)");
  v->add_option("--max-sets", verify.max_sets);
  v->add_option("--sigma", verify.sigma);
  v->add_option("--d", verify.d);
  v->add_option("--vars", verify.vars);
  v->add_option("--q", verify.q);
  v->add_option("--seed", verify.seed);
  v->add_option("--in", verify.in, "formula for the soundness suite");
  v->add_option("--T", verify.target);
  v->add_option("--out", verify.out);

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "build a reduction instance");
  r->add_option("--from", reduce.from, "cnf-sp|sp-sc")->required();
  r->add_option("input,--in", reduce.in)->required();
  r->add_option("--out", reduce.out, "instance file; metadata goes to <out>.meta.json");
  r->add_option("--T", reduce.target);
  r->add_option("--alphabet", reduce.alphabet);
  r->add_option("--assignment", reduce.assignment, "0/1 per variable, x1 first");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitPass;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (app.got_subcommand("solve")) return cmd_solve(solve, out);
    if (app.got_subcommand("bench")) return cmd_bench(bench, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (r->parsed()) return cmd_reduce(reduce, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bicrit
