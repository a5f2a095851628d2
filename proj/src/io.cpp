#include "bicrit/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "bicrit/error.hpp"

namespace bicrit {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMakespan: return "makespan";
    case ProblemKind::kSetPacking: return "setpacking";
    case ProblemKind::kSantaClaus: return "santaclaus";
    case ProblemKind::kCnf: return "cnf";
  }
  return "unknown";
}

ProblemKind parse_kind(std::string_view name) {
  for (auto kind : {ProblemKind::kMakespan, ProblemKind::kSetPacking, ProblemKind::kSantaClaus,
                    ProblemKind::kCnf}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kParse, "unknown problem kind '" + std::string(name) + "'");
}

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return format_rational(r);
}

Rational rational_from_json(const json& j, std::string_view field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<std::uint64_t>()));
    return make_rational(j.get<long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "field '" + std::string(field) + "': " + e.what());
    }
  }
  throw Error(ErrorCode::kParse,
              "field '" + std::string(field) + "' must be an integer or a \"p/q\" string");
}

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t require_count(const json& doc, const char* key) {
  const json& j = require(doc, key);
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

const json& require_array(const json& doc, const char* key) {
  const json& j = require(doc, key);
  if (!j.is_array()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be an array");
  return j;
}

std::string field_name(const char* base, std::size_t i, std::size_t j) {
  return std::string(base) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

MakespanInstance makespan_from_json(const json& doc) {
  const auto m = require_count(doc, "machines");
  const auto n = require_count(doc, "jobs");
  const Rational target = rational_from_json(require(doc, "T"), "T");
  const json& rows = require_array(doc, "proc");
  if (rows.size() != m) throw Error(ErrorCode::kParse, "field 'proc' must have one row per machine");
  std::vector<std::vector<ProcTime>> proc(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw Error(ErrorCode::kParse, "proc[" + std::to_string(i) + "] must have one entry per job");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& cell = rows[i][j];
      if (cell.is_string() && cell.get<std::string>() == "inf") {
        proc[i].push_back(kUnschedulable);
      } else {
        proc[i].push_back(rational_from_json(cell, field_name("proc", i, j)));
      }
    }
  }
  if (m == 0) throw Error(ErrorCode::kInvariant, "field 'machines' must be at least 1");
  return MakespanInstance(std::move(proc), target);
}

std::vector<std::size_t> index_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "field '" + field + "' must be an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_unsigned() && !(j[k].is_number_integer() && j[k].get<long long>() >= 0)) {
      throw Error(ErrorCode::kParse,
                  "field '" + field + "[" + std::to_string(k) + "]' must be a non-negative integer");
    }
    out.push_back(j[k].get<std::size_t>());
  }
  return out;
}

SetPackingInstance setpacking_from_json(const json& doc) {
  const auto universe = require_count(doc, "universe_size");
  const json& sets_json = require_array(doc, "sets");
  std::vector<std::vector<ElementId>> sets;
  for (std::size_t s = 0; s < sets_json.size(); ++s) {
    sets.push_back(index_list(sets_json[s], "sets[" + std::to_string(s) + "]"));
  }
  std::optional<std::vector<SetIndex>> planted;
  if (doc.contains("planted")) {
    planted = index_list(doc.at("planted"), "planted");
    for (SetIndex s : *planted) {
      if (s >= sets.size()) {
        throw Error(ErrorCode::kInvariant, "planted index " + std::to_string(s) + " out of range");
      }
    }
  }
  return SetPackingInstance(universe, std::move(sets), std::move(planted));
}

SantaClausInstance santaclaus_from_json(const json& doc) {
  const auto agents = require_count(doc, "agents");
  const auto items = require_count(doc, "items");
  const Rational target = rational_from_json(require(doc, "T"), "T");
  const json& rows = require_array(doc, "value");
  if (rows.size() != agents) throw Error(ErrorCode::kParse, "field 'value' must have one row per agent");
  std::vector<std::vector<Rational>> value(agents);
  for (std::size_t a = 0; a < agents; ++a) {
    if (!rows[a].is_array() || rows[a].size() != items) {
      throw Error(ErrorCode::kParse, "value[" + std::to_string(a) + "] must have one entry per item");
    }
    for (std::size_t k = 0; k < items; ++k) {
      value[a].push_back(rational_from_json(rows[a][k], field_name("value", a, k)));
    }
  }
  return SantaClausInstance(std::move(value), items, target);
}

CnfFormula cnf_from_json(const json& doc) {
  CnfFormula f;
  f.num_vars = require_count(doc, "num_vars");
  const json& clauses = require_array(doc, "clauses");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (!clauses[c].is_array()) {
      throw Error(ErrorCode::kParse, "clauses[" + std::to_string(c) + "] must be an array");
    }
    std::vector<Literal> clause;
    for (const json& lit : clauses[c]) {
      if (!lit.is_number_integer()) {
        throw Error(ErrorCode::kParse, "clauses[" + std::to_string(c) + "] holds a non-integer literal");
      }
      clause.push_back(lit.get<Literal>());
    }
    f.clauses.push_back(std::move(clause));
  }
  f.validate();
  return f;
}

json to_json(const MakespanInstance& inst) {
  json rows = json::array();
  for (const auto& row : inst.table()) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p ? rational_to_json(*p) : json("inf"));
    rows.push_back(std::move(r));
  }
  return {{"kind", "makespan"}, {"machines", inst.machines()}, {"jobs", inst.jobs()},
          {"T", rational_to_json(inst.target())}, {"proc", std::move(rows)}};
}

json to_json(const SetPackingInstance& inst) {
  json doc = {{"kind", "setpacking"}, {"universe_size", inst.universe_size()}, {"sets", inst.sets()}};
  if (inst.planted()) doc["planted"] = *inst.planted();
  return doc;
}

json to_json(const SantaClausInstance& inst) {
  json rows = json::array();
  for (const auto& row : inst.table()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    rows.push_back(std::move(r));
  }
  return {{"kind", "santaclaus"}, {"agents", inst.agents()}, {"items", inst.items()},
          {"T", rational_to_json(inst.target())}, {"value", std::move(rows)}};
}

json to_json(const CnfFormula& f) {
  return {{"kind", "cnf"}, {"num_vars", f.num_vars}, {"clauses", f.clauses}};
}

// Top-level keys one per line, nested arrays one row per line.
std::string pretty(const json& doc) {
  std::ostringstream out;
  out << "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out << "  " << json(key).dump() << ": ";
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      out << "[\n";
      for (std::size_t r = 0; r < value.size(); ++r) {
        out << "    " << value[r].dump() << (r + 1 < value.size() ? ",\n" : "\n");
      }
      out << "  ]";
    } else {
      out << value.dump();
    }
    out << (++k < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "document must be an object");
  const json& kind = require(doc, "kind");
  if (!kind.is_string()) throw Error(ErrorCode::kParse, "field 'kind' must be a string");
  try {
    switch (parse_kind(kind.get<std::string>())) {
      case ProblemKind::kMakespan: return makespan_from_json(doc);
      case ProblemKind::kSetPacking: return setpacking_from_json(doc);
      case ProblemKind::kSantaClaus: return santaclaus_from_json(doc);
      case ProblemKind::kCnf: return cnf_from_json(doc);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  throw Error(ErrorCode::kParse, "unreachable kind");
}

AnyInstance parse_instance(std::string_view text, ProblemKind kind) {
  AnyInstance inst = parse_instance(text);
  if (inst.index() != static_cast<std::size_t>(kind)) {
    throw Error(ErrorCode::kMismatch, "document is not a " + std::string(to_string(kind)) + " instance");
  }
  return inst;
}

std::string emit_instance(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return pretty(to_json(inst)); }, instance);
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf") {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad problem line");
      }
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": clause before 'p cnf'");
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      Literal lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!header) throw Error(ErrorCode::kParse, "missing 'p cnf' line");
  if (!current.empty()) throw Error(ErrorCode::kParse, "last clause is not terminated by 0");
  if (f.clauses.size() != declared) {
    throw Error(ErrorCode::kParse, "header declares " + std::to_string(declared) + " clauses, found " +
                                       std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

std::string emit_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (Literal lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace bicrit
