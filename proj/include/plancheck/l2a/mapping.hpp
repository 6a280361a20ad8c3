#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plancheck/plan/api_table.hpp"
#include "plancheck/plan/ast.hpp"

namespace plancheck::l2a {

/// One argument constraint: "*" (anything), "+", "-", "0", "!0" (sign
/// classes of numeric literals), "<x", "<=x", ">x", ">=x", "==x" (numeric
/// comparisons), or any other text for an exact match.
class ArgPattern {
 public:
  static ArgPattern parse(const std::string& text);
  bool matches(const plan::Arg& arg) const;
  const std::string& text() const { return text_; }

  bool operator==(const ArgPattern&) const = default;

 private:
  enum class Kind { any, positive, negative, zero, nonzero, less, less_eq, greater, greater_eq, equal, exact };
  Kind kind_ = Kind::any;
  double bound_ = 0.0;
  std::string text_ = "*";
};

struct MappingRule {
  std::string api;
  std::vector<ArgPattern> args;       // missing trailing patterns match anything
  std::vector<std::string> props;     // state labels (actions) or guard atoms (sensors)
  std::vector<std::string> clears;    // default propositions removed for this state

  bool operator==(const MappingRule&) const = default;
};

/// API-to-proposition correspondence. Rules are tried in order; the first
/// whose patterns match a call wins.
class PropositionMapping {
 public:
  PropositionMapping() = default;
  PropositionMapping(std::vector<MappingRule> rules, std::vector<std::string> defaults = {},
                     std::map<std::string, std::vector<std::string>> signatures = {});

  const MappingRule* match(const plan::Call& call) const;
  bool mentions(const std::string& api) const;

  const std::vector<MappingRule>& rules() const { return rules_; }
  const std::vector<std::string>& defaults() const { return defaults_; }
  const std::map<std::string, std::vector<std::string>>& signatures() const { return signatures_; }

  /// Propositions a rule for `kind` APIs can emit (defaults count as action
  /// propositions).
  std::vector<std::string> sensor_props(const plan::ApiTable& apis) const;
  std::vector<std::string> action_props(const plan::ApiTable& apis) const;

  /// Problems with the mapping against an API table: rules for undeclared
  /// APIs, and declared action APIs no rule mentions.
  std::vector<std::string> audit(const plan::ApiTable& apis) const;

  static PropositionMapping from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

 private:
  // Arguments in declared parameter order when keywords name parameters.
  std::vector<const plan::Arg*> ordered_args(const plan::Call& call) const;

  std::vector<MappingRule> rules_;
  std::vector<std::string> defaults_;
  std::map<std::string, std::vector<std::string>> signatures_;
};

}  // namespace plancheck::l2a
