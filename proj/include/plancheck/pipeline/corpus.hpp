#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "plancheck/oracle/embedder.hpp"
#include "plancheck/oracle/interpreter.hpp"
#include "plancheck/pipeline/domain.hpp"

namespace plancheck::pipeline {

struct PlanFile {
  std::string id;    // file stem
  std::string task;  // from a leading "# task: ..." line, else empty
  std::string text;
};

/// Every *.py file in `dir`, sorted by name.
std::vector<PlanFile> load_plans(const std::filesystem::path& dir);
std::string task_of(const std::string& source);

/// One (plan, rule) pair run through the interpreter, the embedder and the
/// model checker.
struct Record {
  std::string plan_id;
  std::string rule_id;
  int y = 0;       // interpreter
  int y_star = 0;  // model checker
  int y_safe = 0;  // y == y_star
  std::string rationale;
  std::vector<double> embedding;
};

/// One rule per plan drawn from `rules`, keyed by seed and plan id so the
/// draw does not depend on the other plans.
std::vector<std::string> assign_rules(const std::vector<PlanFile>& plans, const std::vector<RuleEntry>& rules,
                                      std::uint64_t seed);

/// Runs fn(0..n-1) on up to `workers` threads. The first exception (by
/// index) is rethrown after all workers stop.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

/// The embedded text is the plan followed by the interpreter's rationale.
std::string embedding_text(const std::string& plan, const std::string& rationale);

/// Samples whose plan does not compile or whose answer cannot be parsed are
/// logged and skipped; backend and I/O failures propagate.
std::vector<Record> collect(const Domain& domain, const std::vector<PlanFile>& plans,
                            const std::vector<std::string>& rule_ids, oracle::Interpreter& interp,
                            oracle::Embedder& embedder, int workers = 4);

}  // namespace plancheck::pipeline
