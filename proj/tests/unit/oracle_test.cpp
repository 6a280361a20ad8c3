#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"
#include "plancheck/oracle/embedder.hpp"
#include "plancheck/oracle/interpreter.hpp"
#include "plancheck/oracle/remote.hpp"
#include "plancheck/pipeline/corpus.hpp"

using namespace plancheck;
using namespace plancheck::oracle;
using nlohmann::json;

namespace {

const std::filesystem::path kData = PLANCHECK_DATA_DIR;

Heuristics carla_heuristics() { return Heuristics::from_json(pipeline::read_json(kData / "carla/heuristics.json")); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::io_error;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

const char* kYieldPlan = R"(def drive():
    while True:
        if pedestrian_observed():
            stop()
        else:
            velocity_publisher(10, 0)
)";

const char* kIgnorePlan = R"(def drive():
    while True:
        velocity_publisher(10, 0)
)";

}  // namespace

TEST(ParseAnswer, StrictYesNo) {
  auto a = parse_answer("Y\nThe plan stops for pedestrians.");
  EXPECT_EQ(a.y, 1);
  EXPECT_EQ(a.rationale, "The plan stops for pedestrians.");
  a = parse_answer("N: the plan ignores the stop sign");
  EXPECT_EQ(a.y, 0);
  EXPECT_EQ(a.rationale, "the plan ignores the stop sign");
  EXPECT_EQ(a.raw, "N: the plan ignores the stop sign");
  EXPECT_EQ(parse_answer("  y. fine").y, 1);
  EXPECT_EQ(parse_answer("I'd say N here").y, 0);
  EXPECT_EQ(parse_answer("Y").rationale, "Y");
  EXPECT_EQ(kind_of([] { parse_answer("Yes, it does"); }), ErrorKind::unparseable_answer);
  EXPECT_EQ(kind_of([] { parse_answer("Nope"); }), ErrorKind::unparseable_answer);
  EXPECT_EQ(kind_of([] { parse_answer(""); }), ErrorKind::unparseable_answer);
}

TEST(Prompt, DefaultTemplate) {
  const auto p = render_prompt(kDefaultPrompt, "stop()", "Always stop.");
  EXPECT_NE(p.find("Please analyze whether the code meets the rule"), std::string::npos);
  EXPECT_NE(p.find("stop()"), std::string::npos);
  EXPECT_NE(p.find("Always stop."), std::string::npos);
  EXPECT_EQ(p.find("{plan}"), std::string::npos);
  EXPECT_EQ(pipeline::read_text(kData / "prompts/interpreter.txt"), kDefaultPrompt);
}

TEST(MockInterpreter, HeuristicWithoutNoise) {
  MockInterpreter m(carla_heuristics(), 1, 0.0);
  EXPECT_EQ(m.interpret(kYieldPlan, "Let pedestrians pass first.").y, 1);
  EXPECT_EQ(m.interpret(kIgnorePlan, "Let pedestrians pass first.").y, 0);
  EXPECT_EQ(m.interpret(kYieldPlan, "Keep moving when it is safe to do so.").y, 1);
}

TEST(MockInterpreter, FullErrorRateAlwaysFlips) {
  MockInterpreter clean(carla_heuristics(), 3, 0.0), noisy(carla_heuristics(), 3, 1.0);
  const auto rules = pipeline::RuleSet::from_json(pipeline::read_json(kData / "carla/rules.json")).rules;
  const auto plans = pipeline::load_plans(kData / "carla/plans/test");
  for (std::size_t i = 0; i < 60; ++i) {
    const auto& plan = plans[i].text;
    const auto& rule = rules[i % rules.size()].text;
    EXPECT_EQ(noisy.interpret(plan, rule).y, 1 - clean.heuristic_label(plan, rule));
    EXPECT_EQ(clean.interpret(plan, rule).y, clean.heuristic_label(plan, rule));
  }
}

TEST(MockInterpreter, ErrorRateAndDeterminism) {
  MockInterpreter a(carla_heuristics(), 7, 0.2), b(carla_heuristics(), 7, 0.2), c(carla_heuristics(), 8, 0.2);
  const auto rules = pipeline::RuleSet::from_json(pipeline::read_json(kData / "carla/rules.json")).rules;
  const auto plans = pipeline::load_plans(kData / "carla/plans/train");
  std::size_t flips = 0, differ = 0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const auto& rule = rules[i % rules.size()].text;
    const auto out = a.interpret(plans[i].text, rule);
    EXPECT_EQ(out, b.interpret(plans[i].text, rule));
    differ += !(out == c.interpret(plans[i].text, rule));
    flips += out.y != a.heuristic_label(plans[i].text, rule);
    const auto reparsed = parse_answer(out.raw);
    EXPECT_EQ(reparsed.y, out.y);
    EXPECT_EQ(reparsed.rationale, out.rationale);
    EXPECT_FALSE(out.rationale.empty());
  }
  const double rate = static_cast<double>(flips) / static_cast<double>(plans.size());
  EXPECT_GT(rate, 0.14);
  EXPECT_LT(rate, 0.26);
  EXPECT_GT(differ, 0u);
  EXPECT_EQ(kind_of([&] { a.interpret("", "rule"); }), ErrorKind::invalid_argument);
  EXPECT_THROW(MockInterpreter(carla_heuristics(), 0, 1.5), Error);
}

TEST(Heuristics, JsonRoundTrip) {
  const auto h = carla_heuristics();
  const auto again = Heuristics::from_json(h.to_json());
  EXPECT_EQ(again.to_json(), h.to_json());
  ASSERT_NE(h.topic_for("Always stop at a red light."), nullptr);
  EXPECT_EQ(h.topic_for("Always stop at a red light.")->name, "red light");
  EXPECT_EQ(h.topic_for("Juggle three oranges."), nullptr);
}

TEST(MockEmbedder, UnitNormAndDeterministic) {
  MockEmbedder e;
  for (const char* t : {"stop", "velocity_publisher(10, 0)", "The plan stops at the red light. Therefore it complies."}) {
    const auto v = e.embed(t);
    ASSERT_EQ(v.size(), 1536u);
    EXPECT_NEAR(std::sqrt(dot(v, v)), 1.0, 1e-9);
    EXPECT_EQ(v, e.embed(t));
  }
  EXPECT_NE(MockEmbedder(1536, 1).embed("stop now"), e.embed("stop now"));
  EXPECT_EQ(MockEmbedder(64).embed("x").size(), 64u);
}

TEST(MockEmbedder, DisjointTextsNearlyOrthogonal) {
  MockEmbedder e;
  const auto a = e.embed("the vehicle stops for every pedestrian at the crossing");
  const auto b = e.embed("green light means keep driving forward quickly");
  EXPECT_LT(std::abs(dot(a, b)), 0.1);
  const auto c = e.embed("the vehicle stops for every pedestrian at a crossing");
  EXPECT_GT(dot(a, c), 0.5);
  EXPECT_EQ(kind_of([&] { e.embed(""); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([&] { e.embed("  ... "); }), ErrorKind::invalid_argument);
}

namespace {

// Minimal chat/embedding endpoint on a loopback port.
struct FakeServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> hits{0}, in_flight{0}, peak{0};
  std::atomic<int> delay_ms{0};
  std::string answer = "N: the plan ignores the stop sign";
  std::size_t dim = 4;
  std::string last_auth;
  std::mutex mu;

  FakeServer() {
    auto guard = [this](auto body) {
      return [this, body](const httplib::Request& req, httplib::Response& res) {
        ++hits;
        const int now = ++in_flight;
        int p = peak.load();
        while (now > p && !peak.compare_exchange_weak(p, now)) {
        }
        {
          std::lock_guard lock(mu);
          last_auth = req.get_header_value("Authorization");
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms.load()));
        body(req, res);
        --in_flight;
      };
    };
    server.Post("/v1/chat/completions", guard([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = json::parse(req.body);
      if (body.at("messages").at(0).at("content").get<std::string>().find("Please analyze") == std::string::npos) {
        res.status = 400;
        return;
      }
      res.set_content(json{{"choices", {{{"message", {{"role", "assistant"}, {"content", answer}}}}}}}.dump(),
                      "application/json");
    }));
    server.Post("/v1/embeddings", guard([this](const httplib::Request&, httplib::Response& res) {
      std::vector<double> v(dim, 0.5);
      res.set_content(json{{"data", {{{"embedding", v}}}}}.dump(), "application/json");
    }));
    server.Post("/broken/chat/completions",
                guard([](const httplib::Request&, httplib::Response& res) { res.status = 500; }));
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FakeServer() {
    server.stop();
    thread.join();
  }

  RemoteConfig config(const std::string& prefix = "/v1") const {
    RemoteConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port) + prefix;
    c.dim = 4;
    c.timeout_s = 5.0;
    c.api_key_env = "PLANCHECK_TEST_KEY";
    return c;
  }
};

}  // namespace

TEST(RemoteClient, ChatAndEmbeddings) {
  FakeServer fake;
  ::setenv("PLANCHECK_TEST_KEY", "secret", 1);
  RemoteClient client(fake.config());
  const auto out = client.interpret("stop()", "Always stop.");
  EXPECT_EQ(out.y, 0);
  EXPECT_EQ(out.rationale, "the plan ignores the stop sign");
  EXPECT_EQ(fake.last_auth, "Bearer secret");
  EXPECT_EQ(client.embed("hello"), std::vector<double>(4, 0.5));
  ::unsetenv("PLANCHECK_TEST_KEY");
}

TEST(RemoteClient, ProtocolErrors) {
  FakeServer fake;
  fake.answer = "It depends.";
  RemoteClient client(fake.config());
  EXPECT_EQ(kind_of([&] { client.interpret("stop()", "Always stop."); }), ErrorKind::unparseable_answer);
  auto cfg = fake.config();
  cfg.dim = 8;
  RemoteClient wrong_dim(cfg);
  EXPECT_EQ(kind_of([&] { wrong_dim.embed("hello"); }), ErrorKind::dimension_mismatch);
  RemoteClient broken(fake.config("/broken"));
  EXPECT_EQ(kind_of([&] { broken.interpret("stop()", "Always stop."); }), ErrorKind::backend_unavailable);
  auto closed = fake.config();
  closed.base_url = "http://127.0.0.1:1/v1";
  closed.timeout_s = 1.0;
  EXPECT_EQ(kind_of([&] { RemoteClient(closed).embed("hello"); }), ErrorKind::backend_unavailable);
  EXPECT_EQ(kind_of([&] { client.embed(""); }), ErrorKind::invalid_argument);
}

TEST(RemoteClient, TimeoutIsBackendUnavailable) {
  FakeServer fake;
  fake.delay_ms = 800;
  auto cfg = fake.config();
  cfg.timeout_s = 0.2;
  RemoteClient client(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  EXPECT_EQ(kind_of([&] { client.interpret("stop()", "Always stop."); }), ErrorKind::backend_unavailable);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 0.7);
}

TEST(RemoteClient, BoundedInFlight) {
  FakeServer fake;
  fake.delay_ms = 50;
  auto cfg = fake.config();
  cfg.max_in_flight = 2;
  RemoteClient client(cfg);
  std::vector<std::thread> callers;
  for (int i = 0; i < 8; ++i) callers.emplace_back([&, i] { client.embed("text " + std::to_string(i)); });
  for (auto& t : callers) t.join();
  EXPECT_EQ(fake.hits.load(), 8);
  EXPECT_LE(fake.peak.load(), 2);
  EXPECT_EQ(RemoteConfig{}.max_in_flight, 4);
}

TEST(RemoteClient, DiskCacheAvoidsRepeatRequests) {
  FakeServer fake;
  const auto dir = std::filesystem::temp_directory_path() / "plancheck_cache_test";
  std::filesystem::remove_all(dir);
  auto cfg = fake.config();
  cfg.cache_dir = dir;
  {
    RemoteClient client(cfg);
    const auto first = client.interpret("stop()", "Always stop.");
    EXPECT_EQ(client.interpret("stop()", "Always stop."), first);
    client.embed("hello");
    client.embed("hello");
  }
  EXPECT_EQ(fake.hits.load(), 2);
  RemoteClient again(cfg);
  EXPECT_EQ(again.interpret("stop()", "Always stop.").y, 0);
  EXPECT_EQ(fake.hits.load(), 2);
  EXPECT_EQ(again.interpret("stop()", "Stop twice.").y, 0);
  EXPECT_EQ(fake.hits.load(), 3);

  const json req{{"a", 1}};
  EXPECT_EQ(DiskCache::key(req), DiskCache::key(json{{"a", 1}}));
  EXPECT_NE(DiskCache::key(req), DiskCache::key(json{{"a", 2}}));
  EXPECT_EQ(DiskCache::key(req).size(), 32u);
  std::filesystem::remove_all(dir);
}
