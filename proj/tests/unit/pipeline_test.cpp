#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"
#include "plancheck/pipeline/run.hpp"

using namespace plancheck;
using namespace plancheck::pipeline;
using nlohmann::json;

namespace {

const std::filesystem::path kData = PLANCHECK_DATA_DIR;

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::io_error;
}

VerdictRow row(const std::string& rule, int y, int y_star, int y_hat, double p) {
  VerdictRow r;
  r.plan_id = "p";
  r.rule_id = rule;
  r.y = y;
  r.y_star = y_star;
  r.y_hat_safe = y_hat;
  r.complies = calib::complies(y, y_hat);
  r.p_hat = p;
  return r;
}

}  // namespace

TEST(RunConfig, RoundTrip) {
  RunConfig c;
  c.backend = "remote";
  c.seed = 99;
  c.tau = 0.9;
  c.projector.lr = 2e-3;
  c.remote.base_url = "http://localhost:8080/v1";
  c.remote.cache_dir = "cache";
  c.paths.out = "elsewhere";
  EXPECT_EQ(RunConfig::from_json(c.to_json()), c);
  EXPECT_EQ(RunConfig::from_json(json::parse(c.to_json().dump())).to_json(), c.to_json());

  const auto path = std::filesystem::temp_directory_path() / "plancheck_cfg" / "run.json";
  c.save(path);
  const auto loaded = RunConfig::load(path);
  EXPECT_EQ(loaded, c);
  EXPECT_EQ(loaded.base, path.parent_path());
  EXPECT_EQ(loaded.resolve("x"), path.parent_path() / "x");
  EXPECT_EQ(loaded.resolve("/abs"), std::filesystem::path("/abs"));
  std::filesystem::remove_all(path.parent_path());
}

TEST(RunConfig, DefaultsAndStrictKeys) {
  const auto c = RunConfig::from_json(json::object());
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(c.tau, 0.8);
  EXPECT_EQ(c.hyper().input_dim, 1536u);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"sead", 1}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"projector", {{"epoch", 3}}}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"paths", {{"plans", "x"}}}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"remote", {{"key", "x"}}}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"schema", "plancheck.config/9"}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"seed", "seven"}}); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"backend", "gpu"}}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { RunConfig::from_json({{"tau", 0.5}}); }), ErrorKind::invalid_argument);
}

TEST(Metrics, Recounts) {
  // all correct
  auto m = metrics({row("a", 1, 1, 1, 0.9), row("a", 0, 0, 1, 0.95), row("b", 0, 1, 0, 0.5)});
  EXPECT_DOUBLE_EQ(m.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(m.interpreter_accuracy, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.compliance_rate, 2.0 / 3.0);
  // half correct of four
  m = metrics({row("a", 1, 1, 1, 0.0), row("a", 1, 0, 1, 0.05), row("b", 0, 0, 1, 0.99), row("b", 0, 1, 1, 1.0)});
  EXPECT_DOUBLE_EQ(m.accuracy, 0.5);
  EXPECT_EQ(m.per_rule.at("a").n, 2u);
  EXPECT_DOUBLE_EQ(m.per_rule.at("a").accuracy, 0.5);
  EXPECT_EQ(m.histogram, (std::vector<std::size_t>{2, 0, 0, 0, 0, 0, 0, 0, 0, 2}));
  EXPECT_EQ(kind_of([] { metrics({}); }), ErrorKind::empty_stream);
}

TEST(Metrics, VerdictStreamRoundTrip) {
  const std::vector<VerdictRow> rows = {row("a", 1, 1, 1, 0.125), row("b", 0, 1, 0, 0.3333333333333333)};
  const auto text = verdicts_jsonl(rows);
  const auto back = parse_verdicts_jsonl(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(verdicts_jsonl(back), text);
  EXPECT_EQ(kind_of([] { parse_verdicts_jsonl("{\"plan\": 1}\n"); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([] { parse_verdicts_jsonl("not json\n"); }), ErrorKind::format_error);
  EXPECT_TRUE(parse_verdicts_jsonl("\n\n").empty());
}

TEST(Corpus, ParallelForKeepsIndexOrder) {
  std::vector<int> out(500, -1);
  std::atomic<int> calls{0};
  parallel_for(out.size(), 8, [&](std::size_t i) {
    if (i % 7 == 0) std::this_thread::yield();
    out[i] = static_cast<int>(i * i % 97);
    ++calls;
  });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i % 97));
  EXPECT_EQ(calls.load(), 500);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 4) throw Error(ErrorKind::io_error, "boom");
               }),
               Error);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Corpus, PlansAndRuleAssignment) {
  const auto plans = load_plans(kData / "carla/plans/train");
  ASSERT_EQ(plans.size(), 400u);
  EXPECT_EQ(plans.front().id, "p0000");
  EXPECT_FALSE(plans.front().task.empty());
  EXPECT_EQ(task_of("# task: park the car \nstop()"), "park the car");
  EXPECT_EQ(task_of("stop()"), "");

  const auto domain = Domain::load(kData / "carla");
  const auto rules = domain.rules().in_split("train");
  const auto a = assign_rules(plans, rules, 7);
  EXPECT_EQ(a, assign_rules(plans, rules, 7));
  EXPECT_NE(a, assign_rules(plans, rules, 8));
  std::set<std::string> used(a.begin(), a.end());
  EXPECT_EQ(used.size(), 15u);
  // a plan's rule does not depend on its neighbours
  const std::vector<PlanFile> one = {plans[17]};
  EXPECT_EQ(assign_rules(one, rules, 7)[0], a[17]);
}

TEST(Corpus, CollectLabelsAgainstChecker) {
  const auto domain = Domain::load(kData / "carla");
  auto plans = load_plans(kData / "carla/plans/calib");
  plans.resize(24);
  const auto ids = assign_rules(plans, domain.rules().in_split("train"), 3);
  oracle::MockInterpreter interp(oracle::Heuristics::from_json(read_json(kData / "carla/heuristics.json")), 3, 0.2);
  oracle::MockEmbedder emb;
  const auto serial = collect(domain, plans, ids, interp, emb, 1);
  const auto par = collect(domain, plans, ids, interp, emb, 6);
  ASSERT_EQ(serial.size(), 24u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    const auto& r = serial[i];
    EXPECT_EQ(r.plan_id, plans[i].id);
    EXPECT_EQ(r.embedding, par[i].embedding);
    EXPECT_EQ(r.y_safe, r.y == r.y_star ? 1 : 0);
    const auto& spec = domain.rules().spec(domain.rules().rule(r.rule_id).spec);
    EXPECT_EQ(r.y_star, domain.check(domain.parse(plans[i].text), spec.formula).holds ? 1 : 0);
    EXPECT_EQ(r.embedding, emb.embed(plans[i].text + "\n" + r.rationale));
  }

  // broken plans are skipped, not fatal
  plans[3].text = "def broken(:\n";
  plans[5].text = "def f():\n    launch_rocket()\n";
  const auto kept = collect(domain, plans, ids, interp, emb, 4);
  EXPECT_EQ(kept.size(), 22u);
  EXPECT_EQ(kept[3].plan_id, plans[4].id);
}

TEST(Pipeline, EndToEndRecounts) {
  RunConfig cfg;
  cfg.base = kData.parent_path();
  cfg.paths.out = std::filesystem::temp_directory_path() / "plancheck_pipeline_test";
  std::filesystem::remove_all(cfg.paths.out);
  const auto train = cmd_train(cfg);
  EXPECT_EQ(train.at("samples"), 400);
  EXPECT_EQ(train.at("parameters"), 201216);
  EXPECT_GE(train.at("train_accuracy").get<double>(), 0.9);
  const auto cal = cmd_calibrate(cfg);
  EXPECT_EQ(cal.at("samples"), 400);
  const auto ver = cmd_verify(cfg);

  const auto out = cfg.paths.out;
  std::ifstream in(out / artifacts::kVerdicts);
  std::string line;
  std::size_t n = 0, ok = 0, interp_ok = 0;
  while (std::getline(in, line)) {
    const auto j = json::parse(line);
    const int y = j.at("y"), y_star = j.at("y_star"), y_hat = j.at("y_hat_safe");
    const bool c = j.at("complies");
    EXPECT_EQ(c, (y_hat == 1 && y == 1) || (y_hat == 0 && y == 0));
    ok += (c ? 1 : 0) == y_star;
    interp_ok += y == y_star;
    ++n;
  }
  EXPECT_EQ(n, 200u);
  EXPECT_DOUBLE_EQ(ver.at("accuracy").get<double>(), static_cast<double>(ok) / n);
  EXPECT_DOUBLE_EQ(ver.at("interpreter_accuracy").get<double>(), static_cast<double>(interp_ok) / n);
  EXPECT_DOUBLE_EQ(cmd_report(out / artifacts::kVerdicts).accuracy, static_cast<double>(ok) / n);

  const auto ref = cmd_refine(cfg);
  const auto rows = parse_verdicts_jsonl(read_text(out / artifacts::kRefineVerdicts));
  ASSERT_EQ(rows.size(), 100u);
  std::size_t sft = 0, dpo = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sft += rows[i].complies && rows[i].p_hat >= cfg.tau;
    if (i % 2 == 1) {
      auto score = [](const VerdictRow& r) { return r.complies ? r.p_hat : 1.0 - r.p_hat; };
      dpo += score(rows[i - 1]) != score(rows[i]);
    }
  }
  EXPECT_EQ(ref.at("sft"), sft);
  EXPECT_EQ(ref.at("dpo"), dpo);
  auto lines = [](const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); };
  EXPECT_EQ(lines(read_text(out / artifacts::kSft)), sft);
  EXPECT_EQ(lines(read_text(out / artifacts::kDpo)), dpo);
  std::filesystem::remove_all(out);
}
