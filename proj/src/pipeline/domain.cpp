#include "plancheck/pipeline/domain.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plancheck/automata/io.hpp"
#include "plancheck/automata/ops.hpp"
#include "plancheck/error.hpp"
#include "plancheck/plan/parser.hpp"
#include "plancheck/plan/validate.hpp"

namespace plancheck::pipeline {

namespace {
constexpr const char* kRulesSchema = "plancheck.rules/1";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::format_error, path.string() + ": " + e.what());
  }
}

const SpecEntry& RuleSet::spec(const std::string& id) const {
  for (const auto& s : specs)
    if (s.id == id) return s;
  throw Error(ErrorKind::invalid_argument, "unknown specification '" + id + "'");
}

const RuleEntry& RuleSet::rule(const std::string& id) const {
  for (const auto& r : rules)
    if (r.id == id) return r;
  throw Error(ErrorKind::invalid_argument, "unknown rule '" + id + "'");
}

std::vector<RuleEntry> RuleSet::in_split(const std::string& split) const {
  std::vector<RuleEntry> out;
  for (const auto& r : rules)
    if (r.split == split) out.push_back(r);
  return out;
}

RuleSet RuleSet::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kRulesSchema) {
    throw Error(ErrorKind::format_error, std::string("rules file must declare schema ") + kRulesSchema);
  }
  RuleSet rs;
  try {
    for (const auto& s : doc.at("specs")) {
      std::string text = s.at("formula").get<std::string>();
      rs.specs.push_back({s.at("id").get<std::string>(), s.value("variant", std::string("literal")), text, ltl::parse_ltl(text)});
    }
    for (const auto& r : doc.at("rules")) {
      rs.rules.push_back({r.at("id").get<std::string>(), r.at("text").get<std::string>(), r.at("spec").get<std::string>(),
                          r.value("split", std::string("train"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed rules file: ") + e.what());
  }
  std::set<std::string> ids;
  for (const auto& s : rs.specs)
    if (!ids.insert(s.id).second) throw Error(ErrorKind::format_error, "duplicate specification '" + s.id + "'");
  for (const auto& r : rs.rules) {
    if (!ids.insert(r.id).second) throw Error(ErrorKind::format_error, "duplicate id '" + r.id + "'");
    rs.spec(r.spec);
  }
  return rs;
}

nlohmann::json RuleSet::to_json() const {
  nlohmann::json specs_j = nlohmann::json::array(), rules_j = nlohmann::json::array();
  for (const auto& s : specs) specs_j.push_back({{"id", s.id}, {"variant", s.variant}, {"formula", s.text}});
  for (const auto& r : rules) rules_j.push_back({{"id", r.id}, {"split", r.split}, {"spec", r.spec}, {"text", r.text}});
  return {{"schema", kRulesSchema}, {"specs", specs_j}, {"rules", rules_j}};
}

Domain::Domain(std::string name, plan::ApiTable apis, l2a::PropositionMapping mapping, RuleSet rules,
               std::optional<automata::TransitionSystem> ts)
    : name_(std::move(name)), apis_(std::move(apis)), mapping_(std::move(mapping)), rules_(std::move(rules)) {
  env_props_ = mapping_.sensor_props(apis_);
  std::set<std::string> all(env_props_.begin(), env_props_.end());
  for (const auto& p : mapping_.action_props(apis_)) all.insert(p);
  if (ts) {
    for (const auto& p : ts->ap.names()) all.insert(p);
  }
  ap_ = automata::PropSet(std::vector<std::string>(all.begin(), all.end()));
  env_ = ts ? automata::rebase(*ts, ap_) : automata::universal_ts(ap_, env_props_);
}

Domain Domain::load(const std::filesystem::path& dir) {
  auto apis = plan::ApiTable::from_json(read_json(dir / "api_table.json"));
  auto mapping = l2a::PropositionMapping::from_json(read_json(dir / "mapping.json"));
  auto rules = RuleSet::from_json(read_json(dir / "rules.json"));
  std::optional<automata::TransitionSystem> ts;
  if (std::filesystem::exists(dir / "ts.json")) ts = automata::ts_from_json(read_json(dir / "ts.json"));
  auto problems = mapping.audit(apis);
  if (!problems.empty()) throw Error(ErrorKind::format_error, dir.string() + ": " + problems.front());
  std::string name = std::filesystem::absolute(dir).lexically_normal().filename().string();
  if (name.empty()) name = std::filesystem::absolute(dir).lexically_normal().parent_path().filename().string();
  return Domain(name, std::move(apis), std::move(mapping), std::move(rules), std::move(ts));
}

plan::PlanAst Domain::parse(const std::string& source) const {
  plan::PlanAst ast = plan::parse_plan(source);
  auto diags = plan::validate_plan(ast, apis_);
  if (!diags.empty()) {
    const auto& d = diags.front();
    ErrorKind kind = d.kind == plan::DiagnosticKind::recursion      ? ErrorKind::recursion_error
                     : d.kind == plan::DiagnosticKind::unknown_api ? ErrorKind::unmapped_api
                                                                   : ErrorKind::invalid_argument;
    throw Error(kind, d.message, d.pos);
  }
  return ast;
}

automata::Fsa Domain::automaton(const plan::PlanAst& ast, const l2a::CompileOptions& opts) const {
  return automata::rebase(l2a::compile(ast, mapping_, opts), ap_);
}

ltl::Verdict Domain::check(const plan::PlanAst& ast, const ltl::Formula& phi) const {
  return ltl::model_check(automaton(ast), env_, phi);
}

}  // namespace plancheck::pipeline
