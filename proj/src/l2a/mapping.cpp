#include "plancheck/l2a/mapping.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"

namespace plancheck::l2a {

namespace {
constexpr const char* kSchema = "plancheck.mapping/1";
}

ArgPattern ArgPattern::parse(const std::string& text) {
  ArgPattern p;
  p.text_ = text;
  if (text == "*") return p;
  if (text == "+") p.kind_ = Kind::positive;
  else if (text == "-") p.kind_ = Kind::negative;
  else if (text == "0") p.kind_ = Kind::zero;
  else if (text == "!0") p.kind_ = Kind::nonzero;
  else {
    static const std::vector<std::pair<std::string, Kind>> ops{
        {"<=", Kind::less_eq}, {">=", Kind::greater_eq}, {"==", Kind::equal}, {"<", Kind::less}, {">", Kind::greater}};
    p.kind_ = Kind::exact;
    for (const auto& [op, kind] : ops) {
      if (text.rfind(op, 0) != 0) continue;
      std::optional<double> v;
      if (plan::classify_literal(text.substr(op.size()), &v) == plan::Sign::unknown) {
        throw Error(ErrorKind::format_error, "bad numeric bound in argument pattern '" + text + "'");
      }
      p.kind_ = kind;
      p.bound_ = *v;
      break;
    }
  }
  return p;
}

bool ArgPattern::matches(const plan::Arg& arg) const {
  switch (kind_) {
    case Kind::any: return true;
    case Kind::positive: return arg.sign == plan::Sign::positive;
    case Kind::negative: return arg.sign == plan::Sign::negative;
    case Kind::zero: return arg.sign == plan::Sign::zero;
    case Kind::nonzero: return arg.sign == plan::Sign::positive || arg.sign == plan::Sign::negative;
    case Kind::exact: return arg.text == text_;
    default: break;
  }
  if (!arg.value) return false;
  const double v = *arg.value;
  switch (kind_) {
    case Kind::less: return v < bound_;
    case Kind::less_eq: return v <= bound_;
    case Kind::greater: return v > bound_;
    case Kind::greater_eq: return v >= bound_;
    case Kind::equal: return v == bound_;
    default: return false;
  }
}

PropositionMapping::PropositionMapping(std::vector<MappingRule> rules, std::vector<std::string> defaults,
                                       std::map<std::string, std::vector<std::string>> signatures)
    : rules_(std::move(rules)), defaults_(std::move(defaults)), signatures_(std::move(signatures)) {}

std::vector<const plan::Arg*> PropositionMapping::ordered_args(const plan::Call& call) const {
  std::vector<const plan::Arg*> out;
  auto sig = signatures_.find(call.target);
  for (const auto& a : call.args) {
    if (a.keyword.empty() || sig == signatures_.end()) out.push_back(&a);
  }
  if (sig == signatures_.end()) return out;
  // keyword arguments fill the remaining declared parameters by name
  const auto& params = sig->second;
  std::vector<const plan::Arg*> placed(params.size(), nullptr);
  std::size_t next = 0;
  for (const plan::Arg* a : out) {
    if (next < placed.size()) placed[next++] = a;
  }
  for (const auto& a : call.args) {
    if (a.keyword.empty()) continue;
    auto it = std::find(params.begin(), params.end(), a.keyword);
    if (it == params.end()) continue;
    placed[static_cast<std::size_t>(it - params.begin())] = &a;
  }
  return placed;
}

const MappingRule* PropositionMapping::match(const plan::Call& call) const {
  const auto args = ordered_args(call);
  for (const auto& r : rules_) {
    if (r.api != call.target) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r.args.size() && ok; ++i) {
      if (r.args[i].text() == "*") continue;
      ok = i < args.size() && args[i] != nullptr && r.args[i].matches(*args[i]);
    }
    if (ok) return &r;
  }
  return nullptr;
}

bool PropositionMapping::mentions(const std::string& api) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const MappingRule& r) { return r.api == api; });
}

std::vector<std::string> PropositionMapping::sensor_props(const plan::ApiTable& apis) const {
  std::set<std::string> out;
  for (const auto& r : rules_) {
    const plan::ApiDecl* d = apis.find(r.api);
    if (d != nullptr && d->kind == plan::ApiKind::boolean) out.insert(r.props.begin(), r.props.end());
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> PropositionMapping::action_props(const plan::ApiTable& apis) const {
  std::set<std::string> out(defaults_.begin(), defaults_.end());
  for (const auto& r : rules_) {
    const plan::ApiDecl* d = apis.find(r.api);
    if (d == nullptr || d->kind == plan::ApiKind::action) out.insert(r.props.begin(), r.props.end());
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> PropositionMapping::audit(const plan::ApiTable& apis) const {
  std::vector<std::string> problems;
  for (const auto& r : rules_) {
    if (apis.find(r.api) == nullptr) problems.push_back("rule for undeclared API '" + r.api + "'");
    for (const auto& c : r.clears) {
      if (std::find(defaults_.begin(), defaults_.end(), c) == defaults_.end()) {
        problems.push_back("rule for '" + r.api + "' clears '" + c + "', which is not a default");
      }
    }
  }
  for (const auto& d : apis.apis()) {
    if (d.kind == plan::ApiKind::action && !mentions(d.name)) problems.push_back("action API '" + d.name + "' has no rule");
    if (d.kind == plan::ApiKind::boolean && !mentions(d.name)) problems.push_back("sensor API '" + d.name + "' has no rule");
  }
  return problems;
}

PropositionMapping PropositionMapping::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kSchema) {
    throw Error(ErrorKind::format_error, std::string("mapping must declare schema ") + kSchema);
  }
  try {
    std::vector<MappingRule> rules;
    for (const auto& item : doc.at("rules")) {
      MappingRule r;
      r.api = item.at("api").get<std::string>();
      for (const auto& p : item.value("args", std::vector<std::string>{})) r.args.push_back(ArgPattern::parse(p));
      r.props = item.value("props", std::vector<std::string>{});
      r.clears = item.value("clears", std::vector<std::string>{});
      rules.push_back(std::move(r));
    }
    return PropositionMapping(std::move(rules), doc.value("defaults", std::vector<std::string>{}),
                              doc.value("signatures", std::map<std::string, std::vector<std::string>>{}));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed mapping: ") + e.what());
  }
}

nlohmann::json PropositionMapping::to_json() const {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : rules_) {
    std::vector<std::string> args;
    for (const auto& a : r.args) args.push_back(a.text());
    nlohmann::json item{{"api", r.api}, {"args", args}, {"props", r.props}};
    if (!r.clears.empty()) item["clears"] = r.clears;
    rules.push_back(std::move(item));
  }
  return {{"schema", kSchema}, {"defaults", defaults_}, {"signatures", signatures_}, {"rules", std::move(rules)}};
}

}  // namespace plancheck::l2a
