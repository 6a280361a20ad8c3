#include "plancheck/automata/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "plancheck/error.hpp"

namespace plancheck::automata {

ProductAutomaton product(const Fsa& a, const TransitionSystem& ts) {
  if (!(a.ap == ts.ap)) {
    throw Error(ErrorKind::proposition_mismatch, "automaton and transition system use different propositions");
  }
  a.validate();
  ts.validate();
  const auto ts_succ = ts.successors();
  const int nq = static_cast<int>(ts.states.size());
  auto key = [nq](int p, int q) { return static_cast<long>(p) * nq + q; };

  // Successors of each (p, q) in the full product, computed on demand.
  std::vector<std::vector<const FsaEdge*>> out(a.states.size());
  for (const auto& e : a.edges) out[static_cast<std::size_t>(e.from)].push_back(&e);
  auto successors = [&](int p, int q) {
    std::vector<std::pair<int, int>> res;
    for (const FsaEdge* e : out[static_cast<std::size_t>(p)]) {
      if (!e->guard.eval(ts.ap, ts.states[static_cast<std::size_t>(q)].label)) continue;
      for (int q2 : ts_succ[static_cast<std::size_t>(q)]) res.emplace_back(e->to, q2);
    }
    return res;
  };

  std::map<long, std::pair<int, int>> reached;
  std::deque<std::pair<int, int>> work;
  for (int q = 0; q < nq; ++q) {
    reached.emplace(key(a.initial, q), std::make_pair(a.initial, q));
    work.emplace_back(a.initial, q);
  }
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    for (auto [p2, q2] : successors(p, q)) {
      if (reached.emplace(key(p2, q2), std::make_pair(p2, q2)).second) work.emplace_back(p2, q2);
    }
  }

  ProductAutomaton prod;
  prod.ap = a.ap;
  std::map<long, int> index;
  for (const auto& [k, pq] : reached) {  // map order is (p, q) lexicographic
    index[k] = static_cast<int>(prod.states.size());
    const LabelSet label = a.states[static_cast<std::size_t>(pq.first)].label |
                           ts.states[static_cast<std::size_t>(pq.second)].label;
    prod.states.push_back({pq.first, pq.second, label});
  }
  prod.succ.resize(prod.states.size());
  for (std::size_t i = 0; i < prod.states.size(); ++i) {
    auto& s = prod.succ[i];
    for (auto [p2, q2] : successors(prod.states[i].p, prod.states[i].q)) s.push_back(index.at(key(p2, q2)));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (int q = 0; q < nq; ++q) prod.initial.push_back(index.at(key(a.initial, q)));
  std::sort(prod.initial.begin(), prod.initial.end());
  return prod;
}

TransitionSystem universal_ts(const PropSet& ap, const std::vector<std::string>& env_props) {
  std::vector<std::size_t> idx;
  for (const auto& name : env_props) {
    auto i = ap.index(name);
    if (!i) throw Error(ErrorKind::proposition_mismatch, "environment proposition '" + name + "' is not declared");
    if (std::find(idx.begin(), idx.end(), *i) == idx.end()) idx.push_back(*i);
  }
  if (idx.size() > 10) {
    throw Error(ErrorKind::too_many_env_props,
                std::to_string(idx.size()) + " environment propositions exceed the limit of 10");
  }
  std::sort(idx.begin(), idx.end());
  TransitionSystem ts;
  ts.ap = ap;
  const std::size_t n = std::size_t{1} << idx.size();
  for (std::size_t m = 0; m < n; ++m) {
    LabelSet label = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (m & (std::size_t{1} << b)) label |= LabelSet{1} << idx[b];
    }
    ts.states.push_back({ap.format(label), label});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ts.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return ts;
}

namespace {

struct IsoView {
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::optional<Guard>>> guard;  // merged guard per ordered pair
  std::vector<int> out_degree;
  std::vector<int> in_degree;
};

IsoView view_of(const Fsa& a) {
  const std::size_t n = a.states.size();
  IsoView v;
  v.guard.assign(n, std::vector<std::optional<Guard>>(n));
  v.out_degree.assign(n, 0);
  v.in_degree.assign(n, 0);
  for (const auto& s : a.states) v.labels.push_back(a.ap.names_in(s.label));
  for (const auto& e : a.edges) {
    auto& g = v.guard[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)];
    g = g ? (*g || e.guard) : e.guard;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& g = v.guard[i][j];
      if (g && !g->satisfiable()) g.reset();
      if (g) {
        ++v.out_degree[i];
        ++v.in_degree[j];
      }
    }
  }
  return v;
}

bool same_guard(const std::optional<Guard>& a, const std::optional<Guard>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || equivalent(*a, *b);
}

}  // namespace

bool iso_check(const Fsa& a, const Fsa& b) {
  if (a.states.size() != b.states.size()) return false;
  const std::size_t n = a.states.size();
  if (n == 0) return true;
  const IsoView va = view_of(a);
  const IsoView vb = view_of(b);

  // Visit a's states breadth-first from the initial state so that most
  // candidates are constrained by an already-mapped neighbour.
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  auto enqueue_from = [&](int start) {
    std::deque<int> q{start};
    queued[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      order.push_back(u);
      for (std::size_t w = 0; w < n; ++w) {
        if (!queued[w] && (va.guard[static_cast<std::size_t>(u)][w] || va.guard[w][static_cast<std::size_t>(u)])) {
          queued[w] = true;
          q.push_back(static_cast<int>(w));
        }
      }
    }
  };
  enqueue_from(a.initial);
  for (std::size_t s = 0; s < n; ++s) {
    if (!queued[s]) enqueue_from(static_cast<int>(s));
  }

  std::vector<int> fwd(n, -1);
  std::vector<bool> used(n, false);
  auto compatible = [&](std::size_t u, std::size_t w) {
    if (va.labels[u] != vb.labels[w]) return false;
    if (va.out_degree[u] != vb.out_degree[w] || va.in_degree[u] != vb.in_degree[w]) return false;
    if ((static_cast<int>(u) == a.initial) != (static_cast<int>(w) == b.initial)) return false;
    if (!same_guard(va.guard[u][u], vb.guard[w][w])) return false;
    for (std::size_t x = 0; x < n; ++x) {
      if (fwd[x] < 0) continue;
      const auto fx = static_cast<std::size_t>(fwd[x]);
      if (!same_guard(va.guard[u][x], vb.guard[w][fx])) return false;
      if (!same_guard(va.guard[x][u], vb.guard[fx][w])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const auto u = static_cast<std::size_t>(order[k]);
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || !compatible(u, w)) continue;
      fwd[u] = static_cast<int>(w);
      used[w] = true;
      if (self(self, k + 1)) return true;
      fwd[u] = -1;
      used[w] = false;
    }
    return false;
  };
  return search(search, 0);
}

Fsa rebase(const Fsa& a, const PropSet& ap) {
  Fsa out = a;
  out.ap = ap;
  for (auto& s : out.states) s.label = remap(s.label, a.ap, ap);
  out.validate();
  return out;
}

TransitionSystem rebase(const TransitionSystem& ts, const PropSet& ap) {
  TransitionSystem out = ts;
  out.ap = ap;
  for (auto& s : out.states) s.label = remap(s.label, ts.ap, ap);
  return out;
}

}  // namespace plancheck::automata
