#include "plancheck/plan/ast.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include <nlohmann/json.hpp>

#include "plancheck/plan/parser.hpp"

namespace plancheck::plan {

CondExpr CondExpr::literal(bool v) {
  CondExpr e;
  e.kind = Kind::literal;
  e.value = v;
  return e;
}

CondExpr CondExpr::of_call(Call c) {
  CondExpr e;
  e.kind = Kind::call;
  e.call = std::move(c);
  return e;
}

CondExpr CondExpr::negate(CondExpr inner) {
  CondExpr e;
  e.kind = Kind::negation;
  e.operands.push_back(std::move(inner));
  return e;
}

CondExpr CondExpr::all_of(std::vector<CondExpr> es) {
  if (es.size() == 1) return std::move(es.front());
  CondExpr e;
  e.kind = Kind::conjunction;
  e.operands = std::move(es);
  return e;
}

CondExpr CondExpr::any_of(std::vector<CondExpr> es) {
  if (es.size() == 1) return std::move(es.front());
  CondExpr e;
  e.kind = Kind::disjunction;
  e.operands = std::move(es);
  return e;
}

const FunctionDef* PlanAst::find(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const FunctionDef& PlanAst::entry_function() const {
  const FunctionDef* f = find(entry);
  if (f == nullptr) {
    throw Error(ErrorKind::invalid_argument, "entry function '" + entry + "' is not defined");
  }
  return *f;
}

Sign classify_literal(const std::string& text, std::optional<double>* value) {
  static const std::regex numeric(R"(^\s*([+-]?)\s*((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, numeric)) return Sign::unknown;
  double v = std::strtod(m[2].str().c_str(), nullptr);
  if (m[1].str() == "-") v = -v;
  if (!std::isfinite(v)) return Sign::unknown;
  if (value != nullptr) *value = v;
  if (v == 0.0) return Sign::zero;
  return v > 0.0 ? Sign::positive : Sign::negative;
}

namespace {

using nlohmann::json;

json call_json(const Call& c) {
  json args = json::array();
  for (const auto& a : c.args) {
    json j{{"text", a.text}};
    if (!a.keyword.empty()) j["keyword"] = a.keyword;
    if (a.value) j["value"] = *a.value;
    args.push_back(std::move(j));
  }
  return json{{"target", c.target}, {"args", std::move(args)}, {"line", c.pos.line}};
}

json cond_json(const CondExpr& e) {
  switch (e.kind) {
    case CondExpr::Kind::literal: return json{{"literal", e.value}};
    case CondExpr::Kind::call: return json{{"call", call_json(e.call)}};
    case CondExpr::Kind::negation: return json{{"not", cond_json(e.operands.front())}};
    case CondExpr::Kind::conjunction:
    case CondExpr::Kind::disjunction: {
      json ops = json::array();
      for (const auto& o : e.operands) ops.push_back(cond_json(o));
      return json{{e.kind == CondExpr::Kind::conjunction ? "and" : "or", std::move(ops)}};
    }
  }
  return nullptr;
}

json block_json(const Block& block);

struct StmtJson {
  json operator()(const CallStmt& s) const { return json{{"call", call_json(s.call)}}; }
  json operator()(const IfStmt& s) const {
    return json{{"if", json{{"cond", cond_json(s.cond)},
                            {"then", block_json(s.then_body)},
                            {"else", block_json(s.else_body)}}}};
  }
  json operator()(const WhileStmt& s) const {
    return json{{"while", json{{"cond", cond_json(s.cond)}, {"body", block_json(s.body)}}}};
  }
  json operator()(const ForStmt& s) const {
    return json{{"for", json{{"var", s.var}, {"count", s.count}, {"body", block_json(s.body)}}}};
  }
  json operator()(const AssignStmt& s) const {
    return json{{"assign", json{{"name", s.name}, {"op", s.op}, {"expr", s.expr}}}};
  }
  json operator()(const ReturnStmt& s) const { return json{{"return", s.expr}}; }
  json operator()(const PassStmt&) const { return json{{"pass", nullptr}}; }
};

json block_json(const Block& block) {
  json out = json::array();
  for (const auto& s : block) out.push_back(std::visit(StmtJson{}, s.node));
  return out;
}

}  // namespace

nlohmann::json to_json(const PlanAst& ast) {
  json fns = json::array();
  for (const auto& f : ast.functions) {
    fns.push_back(json{{"name", f.name}, {"params", f.params}, {"body", block_json(f.body)}});
  }
  return json{{"schema", "plancheck.ast/1"}, {"entry", ast.entry}, {"functions", std::move(fns)}};
}

}  // namespace plancheck::plan
