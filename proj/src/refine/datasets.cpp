#include "plancheck/refine/datasets.hpp"

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "plancheck/error.hpp"

namespace plancheck::refine {

using nlohmann::json;

double score(const Candidate& c) { return c.complies ? c.p_hat : 1.0 - c.p_hat; }

std::vector<SftRecord> build_sft(const std::vector<Candidate>& verdicts, double tau) {
  if (!(tau > 0.5 && tau <= 1.0)) throw Error(ErrorKind::invalid_argument, "tau must lie in (0.5, 1]");
  std::vector<SftRecord> out;
  for (const auto& v : verdicts) {
    if (v.complies && v.p_hat >= tau) out.push_back({v.task, v.rule, v.plan, v.p_hat, v.complies});
  }
  return out;
}

std::vector<DpoRecord> build_dpo(const std::vector<TaskPair>& tasks, std::vector<std::string>* dropped) {
  std::vector<DpoRecord> out;
  for (const auto& t : tasks) {
    if (t.candidates.size() != 2) {
      throw Error(ErrorKind::missing_pair,
                  "task " + t.id + " has " + std::to_string(t.candidates.size()) + " candidates, expected 2");
    }
    const Candidate& a = t.candidates[0];
    const Candidate& b = t.candidates[1];
    const double sa = score(a), sb = score(b);
    if (sa == sb || a.plan == b.plan) {
      spdlog::warn("task {}: candidates tie (score {}), pair dropped", t.id, sa);
      if (dropped) dropped->push_back(t.id);
      continue;
    }
    const Candidate& hi = sa > sb ? a : b;
    const Candidate& lo = sa > sb ? b : a;
    out.push_back({hi.task, hi.rule, hi.plan, lo.plan, std::max(sa, sb), std::min(sa, sb)});
  }
  return out;
}

std::string user_prompt(const std::string& task, const std::string& rule) {
  return task + "\nThe plan must follow this rule: " + rule;
}

namespace {

json message(const char* role, const std::string& content) { return {{"role", role}, {"content", content}}; }

}  // namespace

std::string sft_jsonl(const std::vector<SftRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    json line = {{"messages", json::array({message("user", user_prompt(r.task, r.rule)), message("assistant", r.plan)})}};
    out += line.dump() + "\n";
  }
  return out;
}

std::string dpo_jsonl(const std::vector<DpoRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    json line = {
        {"input", {{"messages", json::array({message("user", user_prompt(r.task, r.rule))})}}},
        {"preferred_output", json::array({message("assistant", r.preferred)})},
        {"non_preferred_output", json::array({message("assistant", r.rejected)})},
    };
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace plancheck::refine
