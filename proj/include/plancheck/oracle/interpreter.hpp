#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace plancheck::oracle {

struct InterpreterOutput {
  int y = 0;  // 1 = complies
  std::string rationale;
  std::string raw;

  bool operator==(const InterpreterOutput&) const = default;
};

class Interpreter {
 public:
  virtual ~Interpreter() = default;
  virtual InterpreterOutput interpret(const std::string& plan, const std::string& rule) = 0;
};

/// The first standalone Y or N token (case-insensitive) decides; the text
/// after it, minus leading punctuation, is the rationale.
InterpreterOutput parse_answer(const std::string& raw);

extern const char* const kDefaultPrompt;

/// Substitutes {plan} and {rule}.
std::string render_prompt(const std::string& tmpl, const std::string& plan, const std::string& rule);

/// Keyword table driving the mock interpreter. The first topic with a
/// keyword in the rule text decides; its checks run over the plan text.
struct Heuristics {
  struct Topic {
    std::string name;
    std::vector<std::string> keywords;
    std::vector<std::string> guards;     // a condition line mentioning one of these ...
    std::vector<std::string> responses;  // ... followed by a line with one of these
    std::vector<std::string> require_any;
    std::vector<std::string> forbid_any;
    std::vector<std::string> avoid_guards;  // a condition line with one of these ...
    std::vector<std::string> avoid_responses;  // ... followed by one of these means "no"
    std::string yes, no;  // evidence sentences
  };
  std::vector<Topic> topics;
  std::string fallback_yes = "The plan does not appear to conflict with the rule.";
  std::string fallback_no = "The plan does not show how it satisfies the rule.";

  const Topic* topic_for(const std::string& rule) const;
  int judge(const Topic& t, const std::string& plan) const;

  static Heuristics from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

/// Offline interpreter: heuristic verdict, then a seeded flip with
/// probability `error_rate`. Flipped answers usually come with a hedged
/// rationale, correct ones rarely.
class MockInterpreter : public Interpreter {
 public:
  MockInterpreter(Heuristics h, std::uint64_t seed, double error_rate = 0.2);

  InterpreterOutput interpret(const std::string& plan, const std::string& rule) override;
  int heuristic_label(const std::string& plan, const std::string& rule) const;

  double error_rate() const { return error_rate_; }

 private:
  Heuristics h_;
  std::uint64_t seed_;
  double error_rate_;
};

}  // namespace plancheck::oracle
