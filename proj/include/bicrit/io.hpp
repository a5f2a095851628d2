#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "bicrit/instances.hpp"

namespace bicrit {

std::string_view to_string(ProblemKind kind);
// Throws Error(kParse) for unknown names.
ProblemKind parse_kind(std::string_view name);

// Reads an instance document. The document's "kind" must equal `kind`.
// Throws Error(kParse) for malformed text and Error(kInvariant) when the
// decoded instance breaks a type invariant; messages name the offending field.
AnyInstance parse_instance(std::string_view text, ProblemKind kind);

// Same, taking the kind from the document itself.
AnyInstance parse_instance(std::string_view text);

// Canonical document (sorted keys, sorted element lists, trailing newline).
std::string emit_instance(const AnyInstance& instance);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, std::string_view field);

CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& formula);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bicrit
