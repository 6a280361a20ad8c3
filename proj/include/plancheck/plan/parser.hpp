#pragma once

#include <string>
#include <string_view>

#include "plancheck/plan/ast.hpp"

namespace plancheck::plan {

/// Parses PlanScript source. Throws Error with kind SyntaxError,
/// UnknownConstruct (valid Python-ish syntax outside the closed grammar) or
/// RecursionError (cycle in the helper call graph).
PlanAst parse_plan(std::string_view source);

/// Canonical rendering: 4-space indentation, one statement per line.
/// parse_plan(pretty_print(ast)) == ast for every parsed ast.
std::string pretty_print(const PlanAst& ast);

std::string to_string(const CondExpr& cond);
std::string to_string(const Call& call);

}  // namespace plancheck::plan
