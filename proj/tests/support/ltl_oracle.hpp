#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "plancheck/automata/ops.hpp"
#include "plancheck/ltl/formula.hpp"

namespace oracle {

using plancheck::ltl::Formula;
using Word = std::vector<std::set<std::string>>;

// Direct semantics on prefix·cycle^ω by unrolling: from any position, every
// position the word can still visit appears within the next |word| steps.
inline bool eval_at(const Formula& f, std::size_t i, const Word& word, std::size_t loop) {
  using Op = Formula::Op;
  const std::size_t n = word.size();
  auto pos = [&](std::size_t k) { return k < n ? k : loop + (k - loop) % (n - loop); };
  const std::size_t horizon = i + n + 1;
  switch (f.op()) {
    case Op::truth: return true;
    case Op::falsity: return false;
    case Op::atom: return word[pos(i)].count(f.name()) > 0;
    case Op::negation: return !eval_at(f.lhs(), i, word, loop);
    case Op::conjunction: return eval_at(f.lhs(), i, word, loop) && eval_at(f.rhs(), i, word, loop);
    case Op::disjunction: return eval_at(f.lhs(), i, word, loop) || eval_at(f.rhs(), i, word, loop);
    case Op::implies: return !eval_at(f.lhs(), i, word, loop) || eval_at(f.rhs(), i, word, loop);
    case Op::next: return eval_at(f.lhs(), i + 1, word, loop);
    case Op::eventually:
      for (std::size_t k = i; k < horizon; ++k) {
        if (eval_at(f.lhs(), k, word, loop)) return true;
      }
      return false;
    case Op::always:
      for (std::size_t k = i; k < horizon; ++k) {
        if (!eval_at(f.lhs(), k, word, loop)) return false;
      }
      return true;
    case Op::until:
      for (std::size_t k = i; k < horizon; ++k) {
        if (eval_at(f.rhs(), k, word, loop)) return true;
        if (!eval_at(f.lhs(), k, word, loop)) return false;
      }
      return false;
    case Op::release:
      for (std::size_t k = i; k < horizon; ++k) {
        if (!eval_at(f.rhs(), k, word, loop)) return false;
        if (eval_at(f.lhs(), k, word, loop)) return true;
      }
      return true;
  }
  return false;
}

inline bool eval_lasso(const Formula& f, const Word& prefix, const Word& cycle) {
  Word word = prefix;
  word.insert(word.end(), cycle.begin(), cycle.end());
  return eval_at(f, 0, word, prefix.size());
}

struct BruteResult {
  bool holds = true;
  std::size_t lassos = 0;
};

// Enumerates every lasso s0 … s(k-1) with k ≤ max_len in the product (dead
// ends stutter) whose last state steps back to some s(l), and evaluates φ.
inline BruteResult brute_force_check(const plancheck::automata::ProductAutomaton& p, const Formula& phi,
                                     std::size_t max_len = 8) {
  std::vector<std::vector<int>> succ = p.succ;
  for (std::size_t s = 0; s < succ.size(); ++s) {
    if (succ[s].empty()) succ[s].push_back(static_cast<int>(s));
  }
  std::vector<std::set<std::string>> labels;
  for (const auto& st : p.states) {
    auto names = p.ap.names_in(st.label);
    labels.emplace_back(names.begin(), names.end());
  }
  BruteResult res;
  std::vector<int> path;
  std::function<void()> extend = [&] {
    if (!res.holds) return;
    const int last = path.back();
    for (std::size_t l = 0; l < path.size(); ++l) {
      const auto& out = succ[static_cast<std::size_t>(last)];
      if (std::find(out.begin(), out.end(), path[l]) == out.end()) continue;
      Word prefix, cycle;
      for (std::size_t k = 0; k < path.size(); ++k) (k < l ? prefix : cycle).push_back(labels[static_cast<std::size_t>(path[k])]);
      ++res.lassos;
      if (!eval_lasso(phi, prefix, cycle)) {
        res.holds = false;
        return;
      }
    }
    if (path.size() == max_len) return;
    for (int t : succ[static_cast<std::size_t>(last)]) {
      path.push_back(t);
      extend();
      path.pop_back();
      if (!res.holds) return;
    }
  };
  for (int s0 : p.initial) {
    path = {s0};
    extend();
    if (!res.holds) break;
  }
  return res;
}

inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int temporal_budget,
                              int depth = 0) {
  using plancheck::ltl::Formula;
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth >= 4 || (depth > 0 && pick(3) == 0)) {
    if (pick(10) == 0) return pick(2) ? Formula::truth() : Formula::falsity();
    return Formula::atom(atoms[static_cast<std::size_t>(pick(static_cast<int>(atoms.size())))]);
  }
  const int choice = temporal_budget > 0 ? pick(9) : pick(4);
  switch (choice) {
    case 0: return !random_formula(rng, atoms, temporal_budget, depth + 1);
    case 1:
    case 2:
    case 3: {
      int left_budget = temporal_budget > 0 ? pick(temporal_budget + 1) : 0;
      Formula a = random_formula(rng, atoms, left_budget, depth + 1);
      Formula b = random_formula(rng, atoms, temporal_budget - left_budget, depth + 1);
      if (choice == 1) return a && b;
      if (choice == 2) return a || b;
      return plancheck::ltl::implies(a, b);
    }
    case 4: return plancheck::ltl::X(random_formula(rng, atoms, temporal_budget - 1, depth + 1));
    case 5: return plancheck::ltl::F(random_formula(rng, atoms, temporal_budget - 1, depth + 1));
    case 6: return plancheck::ltl::G(random_formula(rng, atoms, temporal_budget - 1, depth + 1));
    default: {
      int left_budget = pick(temporal_budget);
      Formula a = random_formula(rng, atoms, left_budget, depth + 1);
      Formula b = random_formula(rng, atoms, temporal_budget - 1 - left_budget, depth + 1);
      return plancheck::ltl::U(a, b);
    }
  }
}

// Random plan automaton and environment over {a, b, c} whose product has at
// most max_states states.
struct RandomCase {
  plancheck::automata::Fsa fsa;
  plancheck::automata::TransitionSystem ts;
  plancheck::automata::ProductAutomaton product;
  Formula phi = Formula::truth();
};

inline RandomCase random_case(std::mt19937& rng, std::size_t max_states = 12) {
  using namespace plancheck::automata;
  const PropSet ap({"a", "b", "c"});
  const std::vector<std::string> guards{"true", "true", "a", "!a", "b", "!b", "a & !b", "a | b"};
  while (true) {
    RandomCase rc;
    const int na = 1 + static_cast<int>(rng() % 4);
    const int nq = 1 + static_cast<int>(rng() % 3);
    rc.fsa.ap = ap;
    for (int i = 0; i < na; ++i) {
      // plan states carry action propositions b and c
      rc.fsa.states.push_back({"p" + std::to_string(i), static_cast<LabelSet>((rng() % 4) << 1)});
      const int out = 1 + static_cast<int>(rng() % 2);
      for (int e = 0; e < out; ++e) {
        rc.fsa.edges.push_back({i, parse_guard(guards[rng() % guards.size()]), static_cast<int>(rng() % static_cast<unsigned>(na))});
      }
    }
    rc.ts.ap = ap;
    for (int i = 0; i < nq; ++i) {
      rc.ts.states.push_back({"q" + std::to_string(i), static_cast<LabelSet>(rng() % 8)});
      rc.ts.edges.emplace_back(i, static_cast<int>(rng() % static_cast<unsigned>(nq)));
      if (rng() % 2) rc.ts.edges.emplace_back(i, static_cast<int>(rng() % static_cast<unsigned>(nq)));
    }
    rc.product = product(rc.fsa, rc.ts);
    if (rc.product.states.size() > max_states) continue;
    rc.phi = random_formula(rng, {"a", "b", "c"}, 1 + static_cast<int>(rng() % 3));
    return rc;
  }
}

}  // namespace oracle
