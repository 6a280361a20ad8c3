#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plancheck/automata/guard.hpp"
#include "plancheck/automata/props.hpp"

namespace plancheck::automata {

struct FsaState {
  std::string name;
  LabelSet label = 0;
};

struct FsaEdge {
  int from = 0;
  Guard guard;
  int to = 0;
};

/// Moore-style plan automaton: labels on states, guards on transitions.
struct Fsa {
  PropSet ap;
  std::vector<FsaState> states;
  int initial = 0;
  std::vector<FsaEdge> edges;

  /// Throws InvalidArgument when endpoints or the initial state are out of
  /// range, or a guard mentions a proposition outside `ap`.
  void validate() const;
  std::vector<const FsaEdge*> out_edges(int state) const;
};

struct TsState {
  std::string name;
  LabelSet label = 0;
};

struct TransitionSystem {
  PropSet ap;
  std::vector<TsState> states;
  std::vector<std::pair<int, int>> edges;

  /// Throws InvalidArgument on bad endpoints or a state without successors.
  void validate() const;
  std::vector<std::vector<int>> successors() const;
};

struct ProductState {
  int p = 0;  // automaton state
  int q = 0;  // transition-system state
  LabelSet label = 0;
};

struct ProductAutomaton {
  PropSet ap;
  std::vector<ProductState> states;  // ordered by (p, q)
  std::vector<int> initial;          // ascending
  std::vector<std::vector<int>> succ;  // ascending per state

  std::size_t edge_count() const;
};

}  // namespace plancheck::automata
