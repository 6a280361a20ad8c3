#include "plancheck/automata/structures.hpp"

#include <algorithm>

#include "plancheck/error.hpp"

namespace plancheck::automata {

namespace {
[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_argument, msg); }

void check_label(LabelSet label, const PropSet& ap, const std::string& where) {
  if (ap.size() < 32 && (label >> ap.size()) != 0) invalid(where + " label uses undeclared propositions");
}
}  // namespace

void Fsa::validate() const {
  const int n = static_cast<int>(states.size());
  if (n == 0) invalid("automaton has no states");
  if (initial < 0 || initial >= n) invalid("initial state out of range");
  for (const auto& s : states) check_label(s.label, ap, "state '" + s.name + "'");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) invalid("transition endpoint out of range");
    for (const auto& a : e.guard.atoms()) {
      if (!ap.contains(a)) {
        throw Error(ErrorKind::proposition_mismatch, "guard mentions undeclared proposition '" + a + "'");
      }
    }
  }
}

std::vector<const FsaEdge*> Fsa::out_edges(int state) const {
  std::vector<const FsaEdge*> out;
  for (const auto& e : edges) {
    if (e.from == state) out.push_back(&e);
  }
  return out;
}

void TransitionSystem::validate() const {
  const int n = static_cast<int>(states.size());
  if (n == 0) invalid("transition system has no states");
  std::vector<bool> has_succ(states.size(), false);
  for (const auto& s : states) check_label(s.label, ap, "state '" + s.name + "'");
  for (const auto& [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n) invalid("transition endpoint out of range");
    has_succ[static_cast<std::size_t>(from)] = true;
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!has_succ[i]) invalid("transition system state '" + states[i].name + "' has no successor");
  }
}

std::vector<std::vector<int>> TransitionSystem::successors() const {
  std::vector<std::vector<int>> out(states.size());
  for (const auto& [from, to] : edges) out[static_cast<std::size_t>(from)].push_back(to);
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

std::size_t ProductAutomaton::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

}  // namespace plancheck::automata
