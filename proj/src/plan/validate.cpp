#include "plancheck/plan/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plancheck::plan {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::unknown_api: return "UnknownApi";
    case DiagnosticKind::recursion: return "Recursion";
    case DiagnosticKind::arity_mismatch: return "ArityMismatch";
    case DiagnosticKind::action_in_condition: return "ActionInCondition";
    case DiagnosticKind::function_in_condition: return "FunctionInCondition";
    case DiagnosticKind::duplicate_parameter: return "DuplicateParameter";
    case DiagnosticKind::entry_has_parameters: return "EntryHasParameters";
  }
  return "Diagnostic";
}

namespace {

template <typename F>
void for_each_cond_call(const CondExpr& e, F&& f) {
  if (e.kind == CondExpr::Kind::call) {
    f(e.call);
    return;
  }
  for (const auto& op : e.operands) for_each_cond_call(op, f);
}

// Visits every call in source order; `in_condition` tells the two uses apart.
template <typename F>
void for_each_call(const Block& block, F&& f) {
  for (const auto& s : block) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, CallStmt>) {
            f(node.call, false);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            for_each_cond_call(node.cond, [&](const Call& c) { f(c, true); });
            for_each_call(node.then_body, f);
            for_each_call(node.else_body, f);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            for_each_cond_call(node.cond, [&](const Call& c) { f(c, true); });
            for_each_call(node.body, f);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            for_each_call(node.body, f);
          }
        },
        s.node);
  }
}

}  // namespace

std::vector<std::string> find_call_cycle(const PlanAst& ast) {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& fn : ast.functions) {
    auto& out = edges[fn.name];
    for_each_call(fn.body, [&](const Call& c, bool) {
      if (ast.find(c.target) != nullptr && std::find(out.begin(), out.end(), c.target) == out.end()) {
        out.push_back(c.target);
      }
    });
  }
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::string, int> color;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  auto dfs = [&](auto&& self, const std::string& u) -> bool {
    color[u] = 1;
    stack.push_back(u);
    for (const auto& v : edges[u]) {
      if (color[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle.assign(it, stack.end());
        cycle.push_back(v);
        return true;
      }
      if (color[v] == 0 && self(self, v)) return true;
    }
    stack.pop_back();
    color[u] = 2;
    return false;
  };
  for (const auto& fn : ast.functions) {
    if (color[fn.name] == 0 && dfs(dfs, fn.name)) return cycle;
  }
  return {};
}

std::vector<Diagnostic> validate_plan(const PlanAst& ast, const ApiTable& apis) {
  std::vector<Diagnostic> out;
  for (const auto& fn : ast.functions) {
    std::set<std::string> seen;
    for (const auto& p : fn.params) {
      if (!seen.insert(p).second) {
        out.push_back({DiagnosticKind::duplicate_parameter, p,
                       "parameter '" + p + "' repeated in '" + fn.name + "'", fn.pos});
      }
    }
    if (fn.name == ast.entry && !fn.params.empty()) {
      out.push_back({DiagnosticKind::entry_has_parameters, fn.name,
                     "entry function '" + fn.name + "' must not take parameters", fn.pos});
    }
    for_each_call(fn.body, [&](const Call& c, bool in_condition) {
      const std::size_t argc = c.args.size();
      if (const FunctionDef* callee = ast.find(c.target); callee != nullptr) {
        if (in_condition) {
          out.push_back({DiagnosticKind::function_in_condition, c.target,
                         "condition calls plan function '" + c.target + "'", c.pos});
        } else if (callee->params.size() != argc) {
          out.push_back({DiagnosticKind::arity_mismatch, c.target,
                         "'" + c.target + "' takes " + std::to_string(callee->params.size()) +
                             " argument(s), got " + std::to_string(argc),
                         c.pos});
        }
        return;
      }
      const ApiDecl* api = apis.find(c.target);
      if (api == nullptr) {
        out.push_back({DiagnosticKind::unknown_api, c.target, "undeclared API '" + c.target + "'", c.pos});
        return;
      }
      if (api->arity && *api->arity != static_cast<int>(argc)) {
        out.push_back({DiagnosticKind::arity_mismatch, c.target,
                       "'" + c.target + "' takes " + std::to_string(*api->arity) + " argument(s), got " +
                           std::to_string(argc),
                       c.pos});
      }
      if (in_condition && api->kind != ApiKind::boolean) {
        out.push_back({DiagnosticKind::action_in_condition, c.target,
                       "condition calls action API '" + c.target + "'", c.pos});
      }
    });
  }
  std::vector<std::string> cycle = find_call_cycle(ast);
  if (!cycle.empty()) {
    std::string path;
    for (const auto& n : cycle) path += (path.empty() ? "" : " -> ") + n;
    const FunctionDef* f = ast.find(cycle.front());
    out.push_back({DiagnosticKind::recursion, cycle.front(), "recursive call cycle: " + path,
                   f != nullptr ? f->pos : SourcePos{}});
  }
  return out;
}

}  // namespace plancheck::plan
