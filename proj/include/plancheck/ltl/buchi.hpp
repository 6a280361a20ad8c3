#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "plancheck/ltl/formula.hpp"

namespace plancheck::ltl {

/// State-labeled Büchi automaton. A state reads a letter (set of true
/// propositions) iff every name in `pos` is in the letter and none in `neg`.
struct BuchiAutomaton {
  struct State {
    std::vector<std::string> pos;
    std::vector<std::string> neg;
    bool accepting = false;
  };
  std::vector<State> states;
  std::vector<int> initial;
  std::vector<std::vector<int>> succ;

  bool reads(int state, const std::set<std::string>& letter) const;

  /// Whether the lasso word prefix·cycle^ω is accepted; cycle non-empty.
  bool accepts_lasso(const std::vector<std::set<std::string>>& prefix,
                     const std::vector<std::set<std::string>>& cycle) const;
};

/// Maximum number of atom, X and U subformulas (after rewriting F and G) the
/// tableau accepts; beyond it FormulaTooLarge is raised.
inline constexpr std::size_t kMaxTableauBase = 12;

BuchiAutomaton to_buchi(const Formula& phi);

}  // namespace plancheck::ltl
