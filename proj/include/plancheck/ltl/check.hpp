#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plancheck/automata/structures.hpp"
#include "plancheck/ltl/formula.hpp"

namespace plancheck::ltl {

struct TraceStep {
  int state = 0;  // product state index
  int p = 0;      // automaton state
  int q = 0;      // transition-system state
  std::vector<std::string> label;
};

struct Lasso {
  std::vector<TraceStep> prefix;
  std::vector<TraceStep> cycle;  // non-empty; cycle.back() steps to cycle.front()
};

struct Verdict {
  bool holds = true;
  std::optional<Lasso> counterexample;
};

/// A ⊗ TS ⊨ φ, where product states without successors stutter forever on
/// their own label. Decided by nested depth-first search over the product
/// with the Büchi automaton of ¬φ; successors are explored in ascending index
/// order so counterexamples are deterministic.
Verdict model_check(const automata::Fsa& a, const automata::TransitionSystem& ts, const Formula& phi);

/// Same check on an already-built product.
Verdict model_check(const automata::ProductAutomaton& product, const Formula& phi);

/// Truth of φ at position 0 of the infinite word prefix·cycle^ω.
bool holds_on_lasso(const Formula& phi, const std::vector<std::set<std::string>>& prefix,
                    const std::vector<std::set<std::string>>& cycle);

nlohmann::json to_json(const Verdict& v);

}  // namespace plancheck::ltl
