#pragma once

#include <string>
#include <vector>

#include "plancheck/automata/structures.hpp"
#include "plancheck/l2a/mapping.hpp"
#include "plancheck/plan/ast.hpp"

namespace plancheck::l2a {

struct CompileOptions {
  bool permissive = false;  // unmapped action calls become empty-labeled states
  int max_inline_depth = 64;
};

/// Compiles the entry function into a plan automaton over the propositions
/// the plan actually uses. Sequencing joins states with True edges; if and
/// while follow the keyword rules (∅ branching state, σ / ¬σ edges); for
/// loops unroll; helper calls inline. A plan whose entry body ends with an
/// if statement is reactive and loops back to its initial state; any other
/// plan ends in an ∅ state with a True self-loop.
automata::Fsa compile(const plan::PlanAst& ast, const PropositionMapping& map, const CompileOptions& opts = {});

struct MappedCall {
  plan::Call call;
  std::string kind;  // "action", "sensor", "builtin", "function", "unmapped"
  std::vector<std::string> props;
};

/// One entry per call in source order, including calls inside conditions.
std::vector<MappedCall> explain_mapping(const plan::PlanAst& ast, const PropositionMapping& map);

}  // namespace plancheck::l2a
