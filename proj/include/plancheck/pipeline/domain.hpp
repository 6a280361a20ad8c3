#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plancheck/automata/structures.hpp"
#include "plancheck/l2a/compile.hpp"
#include "plancheck/l2a/mapping.hpp"
#include "plancheck/ltl/check.hpp"
#include "plancheck/ltl/formula.hpp"
#include "plancheck/plan/api_table.hpp"
#include "plancheck/plan/ast.hpp"

namespace plancheck::pipeline {

struct SpecEntry {
  std::string id;
  std::string variant;  // "literal" parses the formula text as written
  std::string text;
  ltl::Formula formula;
};

struct RuleEntry {
  std::string id;
  std::string text;
  std::string spec;
  std::string split;  // "train" rules feed training and calibration, "test" rules are held out
};

/// Natural-language rules paired with their specifications.
struct RuleSet {
  std::vector<SpecEntry> specs;
  std::vector<RuleEntry> rules;

  const SpecEntry& spec(const std::string& id) const;
  const RuleEntry& rule(const std::string& id) const;
  std::vector<RuleEntry> in_split(const std::string& split) const;

  static RuleSet from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

/// A plan vocabulary: API table, proposition mapping, rules and an
/// environment model. Loaded from a directory holding api_table.json,
/// mapping.json, rules.json and optionally ts.json.
class Domain {
 public:
  static Domain load(const std::filesystem::path& dir);
  Domain(std::string name, plan::ApiTable apis, l2a::PropositionMapping mapping, RuleSet rules,
         std::optional<automata::TransitionSystem> ts = std::nullopt);

  const std::string& name() const { return name_; }
  const plan::ApiTable& apis() const { return apis_; }
  const l2a::PropositionMapping& mapping() const { return mapping_; }
  const RuleSet& rules() const { return rules_; }

  /// Every proposition plans or the environment can produce.
  const automata::PropSet& ap() const { return ap_; }
  const std::vector<std::string>& env_props() const { return env_props_; }
  const automata::TransitionSystem& environment() const { return env_; }

  /// Parses, validates and compiles; validation problems raise the kind of
  /// the first diagnostic.
  plan::PlanAst parse(const std::string& source) const;
  automata::Fsa automaton(const plan::PlanAst& ast, const l2a::CompileOptions& opts = {}) const;
  ltl::Verdict check(const plan::PlanAst& ast, const ltl::Formula& phi) const;

 private:
  std::string name_;
  plan::ApiTable apis_;
  l2a::PropositionMapping mapping_;
  RuleSet rules_;
  automata::PropSet ap_;
  std::vector<std::string> env_props_;
  automata::TransitionSystem env_;
};

std::string read_text(const std::filesystem::path& path);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace plancheck::pipeline
