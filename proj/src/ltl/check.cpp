#include "plancheck/ltl/check.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "plancheck/automata/ops.hpp"
#include "plancheck/error.hpp"
#include "plancheck/ltl/buchi.hpp"

namespace plancheck::ltl {

using automata::LabelSet;
using automata::ProductAutomaton;

namespace {

struct Search {
  const ProductAutomaton& prod;
  const BuchiAutomaton& buchi;
  std::size_t nb;
  std::vector<std::vector<int>> psucc;  // with stutter loops on dead ends
  std::vector<LabelSet> bpos, bneg;

  Search(const ProductAutomaton& p, const BuchiAutomaton& b) : prod(p), buchi(b), nb(b.states.size()) {
    psucc = p.succ;
    for (std::size_t s = 0; s < psucc.size(); ++s) {
      if (psucc[s].empty()) psucc[s].push_back(static_cast<int>(s));
    }
    for (const auto& st : b.states) {
      bpos.push_back(p.ap.mask_of(st.pos));
      bneg.push_back(p.ap.mask_of(st.neg));
    }
  }

  bool compat(std::size_t s, std::size_t b) const {
    const LabelSet l = prod.states[s].label;
    return (l & bpos[b]) == bpos[b] && (l & bneg[b]) == 0;
  }

  std::vector<std::size_t> successors(std::size_t v) const {
    const std::size_t s = v / nb;
    const std::size_t b = v % nb;
    std::vector<std::size_t> out;
    for (int s2 : psucc[s]) {
      for (int b2 : buchi.succ[b]) {
        if (compat(static_cast<std::size_t>(s2), static_cast<std::size_t>(b2))) {
          out.push_back(static_cast<std::size_t>(s2) * nb + static_cast<std::size_t>(b2));
        }
      }
    }
    return out;  // ascending: psucc and buchi.succ are sorted
  }

  bool accepting(std::size_t v) const { return buchi.states[v % nb].accepting; }

  struct Frame {
    std::size_t node;
    std::vector<std::size_t> succ;
    std::size_t next = 0;
  };

  // Searches for a path from seed back to seed through nodes not yet seen
  // by an earlier inner search. Returns the path (seed first, excluding the
  // return to seed) or empty.
  std::vector<std::size_t> inner(std::size_t seed, std::vector<char>& visited2) const {
    std::vector<Frame> stack;
    stack.push_back({seed, successors(seed)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.succ.size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t w = f.succ[f.next++];
      if (w == seed) {
        std::vector<std::size_t> path;
        for (const auto& fr : stack) path.push_back(fr.node);
        return path;
      }
      if (visited2[w]) continue;
      visited2[w] = 1;
      stack.push_back({w, successors(w)});
    }
    return {};
  }

  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> run() const {
    const std::size_t total = prod.states.size() * nb;
    std::vector<char> visited1(total, 0);
    std::vector<char> visited2(total, 0);
    std::vector<std::size_t> roots;
    for (int s : prod.initial) {
      for (int b : buchi.initial) {
        if (compat(static_cast<std::size_t>(s), static_cast<std::size_t>(b))) {
          roots.push_back(static_cast<std::size_t>(s) * nb + static_cast<std::size_t>(b));
        }
      }
    }
    std::sort(roots.begin(), roots.end());
    for (std::size_t root : roots) {
      if (visited1[root]) continue;
      visited1[root] = 1;
      std::vector<Frame> stack;
      stack.push_back({root, successors(root)});
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < f.succ.size()) {
          const std::size_t w = f.succ[f.next++];
          if (!visited1[w]) {
            visited1[w] = 1;
            stack.push_back({w, successors(w)});
          }
          continue;
        }
        const std::size_t v = f.node;
        if (accepting(v)) {
          auto cycle = inner(v, visited2);
          if (!cycle.empty()) {
            std::vector<std::size_t> prefix;
            for (std::size_t i = 0; i + 1 < stack.size(); ++i) prefix.push_back(stack[i].node);
            return std::make_pair(std::move(prefix), std::move(cycle));
          }
        }
        stack.pop_back();
      }
    }
    return std::nullopt;
  }

  TraceStep step(std::size_t v) const {
    const std::size_t s = v / nb;
    const auto& st = prod.states[s];
    return {static_cast<int>(s), st.p, st.q, prod.ap.names_in(st.label)};
  }
};

void check_atoms(const Formula& phi, const automata::PropSet& ap) {
  for (const auto& a : phi.atoms()) {
    if (!ap.contains(a)) {
      throw Error(ErrorKind::proposition_mismatch, "specification mentions undeclared proposition '" + a + "'");
    }
  }
}

}  // namespace

Verdict model_check(const ProductAutomaton& product, const Formula& phi) {
  check_atoms(phi, product.ap);
  const BuchiAutomaton neg = to_buchi(!phi);
  Search search(product, neg);
  auto found = search.run();
  Verdict v;
  if (!found) return v;
  v.holds = false;
  Lasso lasso;
  for (std::size_t n : found->first) lasso.prefix.push_back(search.step(n));
  for (std::size_t n : found->second) lasso.cycle.push_back(search.step(n));
  v.counterexample = std::move(lasso);
  return v;
}

Verdict model_check(const automata::Fsa& a, const automata::TransitionSystem& ts, const Formula& phi) {
  check_atoms(phi, a.ap);
  return model_check(automata::product(a, ts), phi);
}

namespace {

using Op = Formula::Op;

// Truth values at every lasso position; positions wrap from the last back to
// the first cycle position. Until is a least fixpoint, release and always
// greatest fixpoints.
std::vector<bool> positions(const Formula& f, const std::vector<std::set<std::string>>& word, std::size_t loop) {
  const std::size_t n = word.size();
  auto next = [&](std::size_t i) { return i + 1 < n ? i + 1 : loop; };
  std::vector<bool> out(n, false);
  auto fixpoint = [&](const std::vector<bool>& a, const std::vector<bool>& b, bool least) {
    // least: v = b | (a & X v); greatest: v = b & (a | X v)
    std::vector<bool> v(n, !least);
    for (std::size_t round = 0; round <= n; ++round) {
      for (std::size_t k = n; k-- > 0;) {
        v[k] = least ? (b[k] || (a[k] && v[next(k)])) : (b[k] && (a[k] || v[next(k)]));
      }
    }
    return v;
  };
  switch (f.op()) {
    case Op::truth: out.assign(n, true); break;
    case Op::falsity: break;
    case Op::atom:
      for (std::size_t i = 0; i < n; ++i) out[i] = word[i].count(f.name()) > 0;
      break;
    case Op::negation: {
      auto a = positions(f.lhs(), word, loop);
      for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
      break;
    }
    case Op::conjunction:
    case Op::disjunction:
    case Op::implies: {
      auto a = positions(f.lhs(), word, loop);
      auto b = positions(f.rhs(), word, loop);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = f.op() == Op::conjunction ? (a[i] && b[i]) : f.op() == Op::disjunction ? (a[i] || b[i]) : (!a[i] || b[i]);
      }
      break;
    }
    case Op::next: {
      auto a = positions(f.lhs(), word, loop);
      for (std::size_t i = 0; i < n; ++i) out[i] = a[next(i)];
      break;
    }
    case Op::eventually: out = fixpoint(std::vector<bool>(n, true), positions(f.lhs(), word, loop), true); break;
    case Op::always: out = fixpoint(std::vector<bool>(n, false), positions(f.lhs(), word, loop), false); break;
    case Op::until: out = fixpoint(positions(f.lhs(), word, loop), positions(f.rhs(), word, loop), true); break;
    case Op::release: out = fixpoint(positions(f.lhs(), word, loop), positions(f.rhs(), word, loop), false); break;
  }
  return out;
}

}  // namespace

bool holds_on_lasso(const Formula& phi, const std::vector<std::set<std::string>>& prefix,
                    const std::vector<std::set<std::string>>& cycle) {
  if (cycle.empty()) throw Error(ErrorKind::invalid_argument, "lasso cycle must be non-empty");
  std::vector<std::set<std::string>> word = prefix;
  word.insert(word.end(), cycle.begin(), cycle.end());
  return positions(phi, word, prefix.size())[0];
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out{{"holds", v.holds}};
  if (!v.counterexample) {
    out["counterexample"] = nullptr;
    return out;
  }
  auto steps = [](const std::vector<TraceStep>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : xs) arr.push_back({{"state", s.state}, {"p", s.p}, {"q", s.q}, {"label", s.label}});
    return arr;
  };
  out["counterexample"] = {{"prefix", steps(v.counterexample->prefix)}, {"cycle", steps(v.counterexample->cycle)}};
  return out;
}

}  // namespace plancheck::ltl
