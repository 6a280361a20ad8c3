#pragma once

#include <string>
#include <vector>

namespace plancheck::refine {

/// A plan with its verification outcome.
struct Candidate {
  std::string task;  // task prompt given to the planner
  std::string rule;
  std::string plan;
  double p_hat = 0.0;
  bool complies = false;
};

struct SftRecord {
  std::string task;
  std::string rule;
  std::string plan;
  double p_hat = 0.0;
  bool complies = false;

  bool operator==(const SftRecord&) const = default;
};

struct DpoRecord {
  std::string task;
  std::string rule;
  std::string preferred;
  std::string rejected;
  double p_hat_preferred = 0.0;  // ranking scores, see score()
  double p_hat_rejected = 0.0;

  bool operator==(const DpoRecord&) const = default;
};

/// Two candidates for one task, produced under different planner seeds.
struct TaskPair {
  std::string id;
  std::vector<Candidate> candidates;
};

inline constexpr double kDefaultTau = 0.8;

/// Guarantee of compliance: p̂ for a complying verdict, 1 − p̂ otherwise.
double score(const Candidate& c);

/// Candidates that comply with p̂ ≥ tau, in source order.
std::vector<SftRecord> build_sft(const std::vector<Candidate>& verdicts, double tau = kDefaultTau);

/// One record per task whose candidates score differently. Tasks with equal
/// scores are dropped; their ids are appended to `dropped` when given.
std::vector<DpoRecord> build_dpo(const std::vector<TaskPair>& tasks, std::vector<std::string>* dropped = nullptr);

std::string user_prompt(const std::string& task, const std::string& rule);

/// One JSON object per line in the chat fine-tuning layout.
std::string sft_jsonl(const std::vector<SftRecord>& records);
std::string dpo_jsonl(const std::vector<DpoRecord>& records);

}  // namespace plancheck::refine
