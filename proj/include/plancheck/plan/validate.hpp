#pragma once

#include <string>
#include <vector>

#include "plancheck/plan/api_table.hpp"
#include "plancheck/plan/ast.hpp"

namespace plancheck::plan {

enum class DiagnosticKind {
  unknown_api,
  recursion,
  arity_mismatch,
  action_in_condition,
  function_in_condition,
  duplicate_parameter,
  entry_has_parameters,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string subject;  // offending name (API, function, parameter)
  std::string message;
  SourcePos pos;

  bool operator==(const Diagnostic&) const = default;
};

/// Empty result iff every call resolves (declared API, defined function or
/// built-in sleep) with matching arity, conditions only call boolean APIs,
/// parameters are unique and the call graph is acyclic.
std::vector<Diagnostic> validate_plan(const PlanAst& ast, const ApiTable& apis);

/// Cycle in the helper call graph, as a path f -> g -> ... -> f; empty if none.
std::vector<std::string> find_call_cycle(const PlanAst& ast);

}  // namespace plancheck::plan
