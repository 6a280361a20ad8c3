#include "plancheck/pipeline/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include <spdlog/spdlog.h>

#include "plancheck/error.hpp"
#include "plancheck/random.hpp"

namespace plancheck::pipeline {

namespace fs = std::filesystem;

std::string task_of(const std::string& source) {
  const auto eol = source.find('\n');
  std::string first = source.substr(0, eol);
  const std::string tag = "# task:";
  if (first.rfind(tag, 0) != 0) return {};
  first = first.substr(tag.size());
  const auto b = first.find_first_not_of(" \t");
  const auto e = first.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : first.substr(b, e - b + 1);
}

std::vector<PlanFile> load_plans(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::io_error, "plan directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".py") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PlanFile> out;
  for (const auto& f : files) {
    PlanFile p{f.stem().string(), {}, read_text(f)};
    p.task = task_of(p.text);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> assign_rules(const std::vector<PlanFile>& plans, const std::vector<RuleEntry>& rules,
                                      std::uint64_t seed) {
  if (rules.empty()) throw Error(ErrorKind::invalid_argument, "no rules to assign");
  std::vector<std::string> out;
  out.reserve(plans.size());
  for (const auto& p : plans) {
    std::mt19937_64 rng(fnv1a64(p.id) ^ (seed * 0x9e3779b97f4a7c15ULL));
    out.push_back(rules[below(rng, rules.size())].id);
  }
  return out;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  const std::size_t w = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (w == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < w; ++t) pool.emplace_back(run);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string embedding_text(const std::string& plan, const std::string& rationale) { return plan + "\n" + rationale; }

std::vector<Record> collect(const Domain& domain, const std::vector<PlanFile>& plans,
                            const std::vector<std::string>& rule_ids, oracle::Interpreter& interp,
                            oracle::Embedder& embedder, int workers) {
  if (plans.size() != rule_ids.size()) throw Error(ErrorKind::invalid_argument, "one rule per plan expected");
  std::vector<std::optional<Record>> slots(plans.size());
  parallel_for(plans.size(), workers, [&](std::size_t i) {
    const RuleEntry& rule = domain.rules().rule(rule_ids[i]);
    const SpecEntry& spec = domain.rules().spec(rule.spec);
    Record r;
    r.plan_id = plans[i].id;
    r.rule_id = rule.id;
    try {
      const auto ast = domain.parse(plans[i].text);
      r.y_star = domain.check(ast, spec.formula).holds ? 1 : 0;
      const auto answer = interp.interpret(plans[i].text, rule.text);
      r.y = answer.y;
      r.rationale = answer.rationale;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::backend_unavailable || e.kind() == ErrorKind::io_error) throw;
      spdlog::warn("skipping {} with rule {}: {}", r.plan_id, r.rule_id, e.what());
      return;
    }
    r.y_safe = r.y == r.y_star ? 1 : 0;
    r.embedding = embedder.embed(embedding_text(plans[i].text, r.rationale));
    slots[i] = std::move(r);
  });
  std::vector<Record> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace plancheck::pipeline
