#pragma once

#include <string>
#include <vector>

#include "plancheck/automata/structures.hpp"

namespace plancheck::automata {

/// A ⊗ TS restricted to states reachable from {p0} × Q_s. A transition
/// ((p,q),(p',q')) exists iff some edge p -g-> p' has L_s(q) ⊨ g and
/// (q,q') ∈ T_s.
ProductAutomaton product(const Fsa& a, const TransitionSystem& ts);

/// Complete environment over `env_props`: one state per subset, every state
/// connected to every state including itself.
TransitionSystem universal_ts(const PropSet& ap, const std::vector<std::string>& env_props);

/// Label- and guard-preserving isomorphism mapping initial to initial.
/// Guards between a state pair are compared semantically after merging
/// parallel edges.
bool iso_check(const Fsa& a, const Fsa& b);

/// Same automaton over a larger proposition set.
Fsa rebase(const Fsa& a, const PropSet& ap);
TransitionSystem rebase(const TransitionSystem& ts, const PropSet& ap);

}  // namespace plancheck::automata
