#include "plancheck/l2a/compile.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "plancheck/error.hpp"
#include "plancheck/plan/parser.hpp"

namespace plancheck::l2a {

using automata::Guard;
using plan::Block;
using plan::Call;
using plan::CondExpr;
using plan::Stmt;

namespace {

constexpr int kStart = -1;

// A pending exit: control leaves `state` under `guard` towards whatever
// comes next.
struct End {
  int state;
  Guard guard;
};
using Ends = std::vector<End>;

struct RawEdge {
  int from;
  Guard guard;
  int to;
};

class Builder {
 public:
  Builder(const plan::PlanAst& ast, const PropositionMapping& map, const CompileOptions& opts)
      : ast_(ast), map_(map), opts_(opts) {}

  automata::Fsa run() {
    const plan::FunctionDef& entry = ast_.entry_function();
    if (!entry.params.empty()) {
      throw Error(ErrorKind::invalid_argument, "entry function '" + entry.name + "' must not take parameters");
    }
    returns_.emplace_back();
    Ends ends = block(entry.body, {{kStart, Guard::truth()}}, 0);
    ends.insert(ends.end(), returns_.back().begin(), returns_.back().end());
    returns_.pop_back();

    if (ends_in_if(entry.body) && initial_ >= 0) {
      connect(ends, initial_);
    } else {
      const int terminal = add_state({}, {});
      connect(ends, terminal);
      edges_.push_back({terminal, Guard::truth(), terminal});
    }
    return finish();
  }

 private:
  static bool ends_in_if(const Block& body) {
    for (auto it = body.rbegin(); it != body.rend(); ++it) {
      if (std::holds_alternative<plan::AssignStmt>(it->node) || std::holds_alternative<plan::PassStmt>(it->node)) continue;
      return std::holds_alternative<plan::IfStmt>(it->node);
    }
    return false;
  }

  int add_state(std::vector<std::string> props, const std::vector<std::string>& clears) {
    std::set<std::string> label(props.begin(), props.end());
    for (const auto& d : map_.defaults()) {
      if (std::find(clears.begin(), clears.end(), d) == clears.end()) label.insert(d);
    }
    labels_.push_back(std::move(label));
    return static_cast<int>(labels_.size()) - 1;
  }

  void connect(const Ends& ends, int target) {
    for (const auto& e : ends) {
      if (e.state == kStart) {
        if (initial_ < 0) initial_ = target;
        continue;
      }
      if (e.state <= kLoopMarkerBase) {
        marker_edges_.push_back({e.state, e.guard, target});
        continue;
      }
      edges_.push_back({e.state, e.guard, target});
    }
  }

  Guard guard_of(const CondExpr& c) {
    switch (c.kind) {
      case CondExpr::Kind::literal: return c.value ? Guard::truth() : Guard::falsity();
      case CondExpr::Kind::negation: return !guard_of(c.operands.front());
      case CondExpr::Kind::conjunction:
      case CondExpr::Kind::disjunction: {
        std::vector<Guard> gs;
        for (const auto& o : c.operands) gs.push_back(guard_of(o));
        return c.kind == CondExpr::Kind::conjunction ? Guard::all_of(gs) : Guard::any_of(gs);
      }
      case CondExpr::Kind::call: break;
    }
    const MappingRule* rule = map_.match(c.call);
    if (rule == nullptr || rule->props.empty()) {
      throw Error(ErrorKind::unmapped_api, "condition call '" + plan::to_string(c.call) + "' has no proposition",
                  c.call.pos);
    }
    std::vector<Guard> atoms;
    for (const auto& p : rule->props) atoms.push_back(Guard::atom(p));
    return Guard::all_of(atoms);
  }

  Ends call(const Call& c, Ends ends, int depth) {
    if (const plan::FunctionDef* fn = ast_.find(c.target); fn != nullptr) {
      if (depth + 1 > opts_.max_inline_depth) {
        throw Error(ErrorKind::inline_depth_exceeded,
                    "inlining '" + c.target + "' exceeds depth " + std::to_string(opts_.max_inline_depth), c.pos);
      }
      returns_.emplace_back();
      Ends out = block(fn->body, std::move(ends), depth + 1);
      out.insert(out.end(), returns_.back().begin(), returns_.back().end());
      returns_.pop_back();
      return out;
    }
    int s;
    if (const MappingRule* rule = map_.match(c); rule != nullptr) {
      s = add_state(rule->props, rule->clears);
    } else if (c.target == "sleep" || opts_.permissive) {
      s = add_state({}, {});
    } else {
      throw Error(ErrorKind::unmapped_api, "call '" + plan::to_string(c) + "' matches no mapping rule", c.pos);
    }
    connect(ends, s);
    return {{s, Guard::truth()}};
  }

  Ends stmt(const Stmt& s, Ends ends, int depth) {
    return std::visit(
        [&](const auto& node) -> Ends {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, plan::CallStmt>) {
            return call(node.call, std::move(ends), depth);
          } else if constexpr (std::is_same_v<T, plan::IfStmt>) {
            const Guard g = guard_of(node.cond);
            const int hub = add_state({}, {});
            connect(ends, hub);
            Ends out = block(node.then_body, {{hub, g}}, depth);
            Ends other = block(node.else_body, {{hub, !g}}, depth);
            out.insert(out.end(), other.begin(), other.end());
            return out;
          } else if constexpr (std::is_same_v<T, plan::WhileStmt>) {
            return loop(node, std::move(ends), depth);
          } else if constexpr (std::is_same_v<T, plan::ForStmt>) {
            for (long i = 0; i < node.count; ++i) ends = block(node.body, std::move(ends), depth);
            return ends;
          } else if constexpr (std::is_same_v<T, plan::ReturnStmt>) {
            auto& r = returns_.back();
            r.insert(r.end(), ends.begin(), ends.end());
            return {};
          } else {
            return ends;  // assignments and pass are inert
          }
        },
        s.node);
  }

  // while σ: entry E -σ-> body; body exits -σ-> body entry, -¬σ-> onwards;
  // E -¬σ-> onwards skips the loop.
  Ends loop(const plan::WhileStmt& w, Ends ends, int depth) {
    const Guard sigma = guard_of(w.cond);
    const int entry = add_state({}, {});
    connect(ends, entry);
    const int marker = kLoopMarkerBase - static_cast<int>(marker_count_++);
    const std::size_t first_marker_edge = marker_edges_.size();
    Ends body = block(w.body, {{marker, Guard::truth()}}, depth);

    std::vector<RawEdge> entries;
    for (std::size_t i = first_marker_edge; i < marker_edges_.size(); ++i) {
      if (marker_edges_[i].from == marker) entries.push_back(marker_edges_[i]);
    }
    for (const auto& e : entries) edges_.push_back({entry, sigma && e.guard, e.to});

    Ends out{{entry, !sigma}};
    for (const auto& end : body) {
      if (end.state == marker) {
        // nothing happened on this path: re-test the condition
        edges_.push_back({entry, sigma && end.guard, entry});
        continue;
      }
      for (const auto& e : entries) {
        if (end.state <= kLoopMarkerBase) {
          marker_edges_.push_back({end.state, end.guard && sigma && e.guard, e.to});
        } else {
          edges_.push_back({end.state, end.guard && sigma && e.guard, e.to});
        }
      }
      out.push_back({end.state, end.guard && !sigma});
    }
    // a return before the body emits anything leaves from wherever the
    // condition was last tested
    Ends& rets = returns_.back();
    Ends resolved;
    for (auto& r : rets) {
      if (r.state != marker) {
        resolved.push_back(r);
        continue;
      }
      resolved.push_back({entry, sigma && r.guard});
      for (const auto& end : body) {
        if (end.state != marker) resolved.push_back({end.state, end.guard && sigma && r.guard});
      }
    }
    rets = std::move(resolved);
    return out;
  }

  Ends block(const Block& b, Ends ends, int depth) {
    for (const auto& s : b) ends = stmt(s, std::move(ends), depth);
    return ends;
  }

  automata::Fsa finish() {
    if (initial_ < 0) initial_ = add_state({}, {});
    // merge parallel edges, drop unsatisfiable ones
    std::map<std::pair<int, int>, Guard> merged;
    std::vector<std::pair<int, int>> order;
    for (const auto& e : edges_) {
      auto key = std::make_pair(e.from, e.to);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, e.guard);
        order.push_back(key);
      } else {
        it->second = it->second || e.guard;
      }
    }
    std::vector<std::vector<std::pair<int, Guard>>> out(labels_.size());
    for (const auto& key : order) {
      const Guard& g = merged.at(key);
      if (!g.satisfiable()) continue;
      out[static_cast<std::size_t>(key.first)].emplace_back(key.second, g.tautology() ? Guard::truth() : g);
    }

    // breadth-first renumbering from the initial state drops unreachable states
    std::vector<int> id(labels_.size(), -1);
    std::vector<int> order_bfs{initial_};
    id[static_cast<std::size_t>(initial_)] = 0;
    for (std::size_t k = 0; k < order_bfs.size(); ++k) {
      for (const auto& [to, g] : out[static_cast<std::size_t>(order_bfs[k])]) {
        if (id[static_cast<std::size_t>(to)] < 0) {
          id[static_cast<std::size_t>(to)] = static_cast<int>(order_bfs.size());
          order_bfs.push_back(to);
        }
      }
    }
    std::set<std::string> props;
    for (int s : order_bfs) props.insert(labels_[static_cast<std::size_t>(s)].begin(), labels_[static_cast<std::size_t>(s)].end());
    for (int s : order_bfs) {
      for (const auto& [to, g] : out[static_cast<std::size_t>(s)]) {
        auto atoms = g.atoms();
        props.insert(atoms.begin(), atoms.end());
      }
    }
    automata::Fsa a;
    a.ap = automata::PropSet(std::vector<std::string>(props.begin(), props.end()));
    for (std::size_t k = 0; k < order_bfs.size(); ++k) {
      const auto& l = labels_[static_cast<std::size_t>(order_bfs[k])];
      a.states.push_back({"q" + std::to_string(k), a.ap.mask_of(std::vector<std::string>(l.begin(), l.end()))});
    }
    a.initial = 0;
    for (int s : order_bfs) {
      for (const auto& [to, g] : out[static_cast<std::size_t>(s)]) {
        a.edges.push_back({id[static_cast<std::size_t>(s)], g, id[static_cast<std::size_t>(to)]});
      }
    }
    a.validate();
    return a;
  }

  static constexpr int kLoopMarkerBase = -2;

  const plan::PlanAst& ast_;
  const PropositionMapping& map_;
  CompileOptions opts_;
  std::vector<std::set<std::string>> labels_;
  std::vector<RawEdge> edges_;
  std::vector<RawEdge> marker_edges_;  // edges leaving a loop-body marker
  std::size_t marker_count_ = 0;
  std::vector<Ends> returns_;
  int initial_ = -1;
};

void collect_calls(const Block& b, std::vector<std::pair<Call, bool>>& out) {
  auto cond_calls = [&](const CondExpr& c, auto&& self) -> void {
    if (c.kind == CondExpr::Kind::call) out.emplace_back(c.call, true);
    for (const auto& o : c.operands) self(o, self);
  };
  for (const auto& s : b) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, plan::CallStmt>) {
            out.emplace_back(node.call, false);
          } else if constexpr (std::is_same_v<T, plan::IfStmt>) {
            cond_calls(node.cond, cond_calls);
            collect_calls(node.then_body, out);
            collect_calls(node.else_body, out);
          } else if constexpr (std::is_same_v<T, plan::WhileStmt>) {
            cond_calls(node.cond, cond_calls);
            collect_calls(node.body, out);
          } else if constexpr (std::is_same_v<T, plan::ForStmt>) {
            collect_calls(node.body, out);
          }
        },
        s.node);
  }
}

}  // namespace

automata::Fsa compile(const plan::PlanAst& ast, const PropositionMapping& map, const CompileOptions& opts) {
  return Builder(ast, map, opts).run();
}

std::vector<MappedCall> explain_mapping(const plan::PlanAst& ast, const PropositionMapping& map) {
  std::vector<std::pair<Call, bool>> calls;
  for (const auto& fn : ast.functions) collect_calls(fn.body, calls);
  std::stable_sort(calls.begin(), calls.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.pos.line, a.first.pos.column) < std::make_pair(b.first.pos.line, b.first.pos.column);
  });
  std::vector<MappedCall> out;
  for (auto& [c, in_condition] : calls) {
    MappedCall m{c, "unmapped", {}};
    if (ast.find(c.target) != nullptr) {
      m.kind = "function";
    } else if (const MappingRule* r = map.match(c); r != nullptr) {
      m.kind = in_condition ? "sensor" : "action";
      m.props = r->props;
    } else if (c.target == "sleep") {
      m.kind = "builtin";
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace plancheck::l2a
