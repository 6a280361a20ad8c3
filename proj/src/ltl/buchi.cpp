#include "plancheck/ltl/buchi.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "plancheck/error.hpp"

namespace plancheck::ltl {

namespace {

using Op = Formula::Op;

// Rewrites into true, false, atoms, !, &, |, X, U.
Formula core(const Formula& f) {
  switch (f.op()) {
    case Op::truth:
    case Op::falsity:
    case Op::atom: return f;
    case Op::negation: return !core(f.lhs());
    case Op::conjunction: return core(f.lhs()) && core(f.rhs());
    case Op::disjunction: return core(f.lhs()) || core(f.rhs());
    case Op::implies: return !core(f.lhs()) || core(f.rhs());
    case Op::next: return X(core(f.lhs()));
    case Op::eventually: return U(Formula::truth(), core(f.lhs()));
    case Op::always: return !U(Formula::truth(), !core(f.lhs()));
    case Op::until: return U(core(f.lhs()), core(f.rhs()));
    case Op::release: return !U(!core(f.lhs()), !core(f.rhs()));
  }
  return f;
}

// An elementary set is a truth assignment to the base formulas (atoms, X and
// U subformulas); every other subformula's value follows from it.
class Tableau {
 public:
  explicit Tableau(const Formula& phi) : root_(core(phi)) {
    collect(root_);
    if (base_.size() > kMaxTableauBase) {
      throw Error(ErrorKind::formula_too_large,
                  "formula needs " + std::to_string(base_.size()) + " tableau base formulas (limit " +
                      std::to_string(kMaxTableauBase) + ")");
    }
  }

  BuchiAutomaton build() const {
    const std::size_t k = base_.size();
    const std::uint32_t n = std::uint32_t{1} << k;
    std::vector<std::uint32_t> sets;
    for (std::uint32_t m = 0; m < n; ++m) {
      if (consistent(m)) sets.push_back(m);
    }
    std::vector<std::size_t> untils;
    std::vector<std::size_t> nexts;
    for (std::size_t i = 0; i < k; ++i) {
      if (base_[i].op() == Op::until) untils.push_back(i);
      if (base_[i].op() == Op::next) nexts.push_back(i);
    }

    // Generalized automaton over the elementary sets.
    const std::size_t ns = sets.size();
    std::vector<std::vector<int>> gsucc(ns);
    for (std::size_t a = 0; a < ns; ++a) {
      const std::uint32_t B = sets[a];
      for (std::size_t b = 0; b < ns; ++b) {
        const std::uint32_t B2 = sets[b];
        bool ok = true;
        for (std::size_t i : nexts) {
          if (has(B, i) != eval(base_[i].lhs(), B2)) {
            ok = false;
            break;
          }
        }
        for (std::size_t j = 0; ok && j < untils.size(); ++j) {
          const Formula& u = base_[untils[j]];
          const bool expect = eval(u.rhs(), B) || (eval(u.lhs(), B) && has(B2, untils[j]));
          if (has(B, untils[j]) != expect) ok = false;
        }
        if (ok) gsucc[a].push_back(static_cast<int>(b));
      }
    }
    auto in_accepting_set = [&](std::size_t s, std::size_t j) {
      const Formula& u = base_[untils[j]];
      return !has(sets[s], untils[j]) || eval(u.rhs(), sets[s]);
    };

    // Degeneralize with a counter over the acceptance sets, then keep what
    // is reachable from the initial states.
    const std::size_t layers = std::max<std::size_t>(untils.size(), 1);
    auto id = [&](std::size_t s, std::size_t layer) { return s * layers + layer; };
    auto next_layer = [&](std::size_t s, std::size_t layer) {
      if (untils.empty()) return layer;
      return in_accepting_set(s, layer) ? (layer + 1) % layers : layer;
    };
    auto accepting = [&](std::size_t s, std::size_t layer) {
      return untils.empty() || (layer == 0 && in_accepting_set(s, 0));
    };

    std::map<std::size_t, int> index;
    std::deque<std::pair<std::size_t, std::size_t>> work;
    BuchiAutomaton out;
    auto visit = [&](std::size_t s, std::size_t layer) {
      auto [it, fresh] = index.emplace(id(s, layer), static_cast<int>(out.states.size()));
      if (fresh) {
        BuchiAutomaton::State st;
        for (std::size_t i = 0; i < k; ++i) {
          if (base_[i].op() != Op::atom) continue;
          (has(sets[s], i) ? st.pos : st.neg).push_back(base_[i].name());
        }
        st.accepting = accepting(s, layer);
        out.states.push_back(std::move(st));
        out.succ.emplace_back();
        work.emplace_back(s, layer);
      }
      return it->second;
    };
    for (std::size_t s = 0; s < ns; ++s) {
      if (eval(root_, sets[s])) out.initial.push_back(visit(s, 0));
    }
    while (!work.empty()) {
      auto [s, layer] = work.front();
      work.pop_front();
      const int from = index.at(id(s, layer));
      const std::size_t nl = next_layer(s, layer);
      std::vector<int> succ;
      for (int t : gsucc[s]) succ.push_back(visit(static_cast<std::size_t>(t), nl));
      std::sort(succ.begin(), succ.end());
      out.succ[static_cast<std::size_t>(from)] = std::move(succ);
    }
    return out;
  }

 private:
  void collect(const Formula& f) {
    switch (f.op()) {
      case Op::atom:
      case Op::next:
      case Op::until:
        if (std::find(base_.begin(), base_.end(), f) == base_.end()) base_.push_back(f);
        break;
      default: break;
    }
    if (f.is_unary()) collect(f.lhs());
    if (f.is_binary()) {
      collect(f.lhs());
      collect(f.rhs());
    }
  }

  std::size_t base_index(const Formula& f) const {
    return static_cast<std::size_t>(std::find(base_.begin(), base_.end(), f) - base_.begin());
  }

  static bool has(std::uint32_t set, std::size_t i) { return (set >> i) & 1U; }

  bool eval(const Formula& f, std::uint32_t set) const {
    switch (f.op()) {
      case Op::truth: return true;
      case Op::falsity: return false;
      case Op::negation: return !eval(f.lhs(), set);
      case Op::conjunction: return eval(f.lhs(), set) && eval(f.rhs(), set);
      case Op::disjunction: return eval(f.lhs(), set) || eval(f.rhs(), set);
      default: return has(set, base_index(f));
    }
  }

  bool consistent(std::uint32_t set) const {
    for (std::size_t i = 0; i < base_.size(); ++i) {
      const Formula& f = base_[i];
      if (f.op() != Op::until) continue;
      const bool b = eval(f.rhs(), set);
      if (b && !has(set, i)) return false;
      if (has(set, i) && !b && !eval(f.lhs(), set)) return false;
    }
    return true;
  }

  Formula root_;
  std::vector<Formula> base_;
};

}  // namespace

bool BuchiAutomaton::reads(int state, const std::set<std::string>& letter) const {
  const State& s = states[static_cast<std::size_t>(state)];
  for (const auto& p : s.pos) {
    if (letter.count(p) == 0) return false;
  }
  for (const auto& p : s.neg) {
    if (letter.count(p) != 0) return false;
  }
  return true;
}

// Runs over a lasso word correspond to lassos in the finite graph of
// (automaton state, word position) pairs; acceptance is an accepting state
// on a cycle reachable from an initial pair.
bool BuchiAutomaton::accepts_lasso(const std::vector<std::set<std::string>>& prefix,
                                   const std::vector<std::set<std::string>>& cycle) const {
  if (cycle.empty()) throw Error(ErrorKind::invalid_argument, "lasso cycle must be non-empty");
  const std::size_t len = prefix.size() + cycle.size();
  auto letter = [&](std::size_t pos) -> const std::set<std::string>& {
    return pos < prefix.size() ? prefix[pos] : cycle[pos - prefix.size()];
  };
  auto next_pos = [&](std::size_t pos) { return pos + 1 < len ? pos + 1 : prefix.size(); };
  const std::size_t n = states.size() * len;
  auto node = [&](std::size_t s, std::size_t pos) { return s * len + pos; };
  auto succ_of = [&](std::size_t v) {
    std::vector<std::size_t> out;
    const std::size_t s = v / len;
    const std::size_t pos = v % len;
    const std::size_t np = next_pos(pos);
    for (int t : succ[s]) {
      if (reads(t, letter(np))) out.push_back(node(static_cast<std::size_t>(t), np));
    }
    return out;
  };
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> stack;
  for (int s : initial) {
    if (reads(s, letter(0))) {
      reach[node(static_cast<std::size_t>(s), 0)] = true;
      stack.push_back(node(static_cast<std::size_t>(s), 0));
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : succ_of(v)) {
      if (!reach[w]) {
        reach[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!reach[v] || !states[v / len].accepting) continue;
    // accepting node on a cycle?
    std::vector<bool> seen(n, false);
    stack = succ_of(v);
    while (!stack.empty()) {
      std::size_t w = stack.back();
      stack.pop_back();
      if (w == v) return true;
      if (seen[w]) continue;
      seen[w] = true;
      for (std::size_t x : succ_of(w)) stack.push_back(x);
    }
  }
  return false;
}

BuchiAutomaton to_buchi(const Formula& phi) { return Tableau(phi).build(); }

}  // namespace plancheck::ltl
