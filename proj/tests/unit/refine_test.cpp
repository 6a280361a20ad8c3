#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"
#include "plancheck/random.hpp"
#include "plancheck/refine/datasets.hpp"

using namespace plancheck;
using namespace plancheck::refine;

namespace {

const std::filesystem::path kGolden = PLANCHECK_GOLDEN_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Candidate cand(const std::string& plan, double p_hat, bool ok) {
  return {"cross the intersection", "Always stop at the stop sign.", plan, p_hat, ok};
}

std::vector<Candidate> random_candidates(std::mt19937_64& rng, std::size_t n) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < n; ++i) {
    // quantized so that ties appear
    const double p = std::round(uniform01(rng) * 20.0) / 20.0;
    out.push_back(cand("plan " + std::to_string(i), p, uniform01(rng) < 0.6));
  }
  return out;
}

std::vector<Candidate> golden_candidates() {
  return {
      {"cross the intersection", "Always stop at the stop sign.",
       "def cross():\n    while True:\n        if stop_sign_observed():\n            stop()\n", 0.95, true},
      {"cross the intersection", "Always stop at the stop sign.", "def cross():\n    velocity_publisher(10, 0)\n", 0.9,
       false},
      {"park near the \"shop\"", "Let pedestrians pass first.",
       "def park():\n    if pedestrian_observed():\n        stop()\n", 0.8, true},
      {"park near the \"shop\"", "Let pedestrians pass first.", "def park():\n    stop()\n", 0.5, true},
  };
}

}  // namespace

TEST(Sft, FilterDefinition) {
  const std::vector<Candidate> v = {cand("a", 0.95, true), cand("b", 0.7, true), cand("c", 0.9, false)};
  const auto r = build_sft(v, 0.8);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].plan, "a");
  EXPECT_TRUE(build_sft({cand("a", 0.99, true), cand("b", 0.5, true)}, 1.0).empty());
  EXPECT_EQ(build_sft({cand("a", 1.0, true)}, 1.0).size(), 1u);
  EXPECT_EQ(build_sft({cand("a", 0.8, true)}, 0.8).size(), 1u);
  EXPECT_THROW(build_sft(v, 0.5), Error);
  EXPECT_THROW(build_sft(v, 1.01), Error);
}

TEST(Sft, SoundOrderedAndMonotone) {
  std::mt19937_64 rng(4);
  const auto v = random_candidates(rng, 500);
  std::size_t prev = v.size() + 1;
  for (double tau : {0.55, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0}) {
    const auto r = build_sft(v, tau);
    std::size_t recount = 0, at = 0;
    for (const auto& c : v) {
      if (!(c.complies && c.p_hat >= tau)) continue;
      ++recount;
      ASSERT_LT(at, r.size());
      EXPECT_EQ(r[at++].plan, c.plan);
    }
    EXPECT_EQ(r.size(), recount);
    for (const auto& s : r) EXPECT_TRUE(s.complies && s.p_hat >= tau);
    EXPECT_LE(r.size(), prev);
    prev = r.size();
  }
}

TEST(Dpo, RanksByGuaranteeOfCompliance) {
  auto r = build_dpo({{"t1", {cand("a", 0.97, true), cand("b", 0.60, true)}}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].preferred, "a");
  EXPECT_EQ(r[0].rejected, "b");
  // a confident violation ranks below an uncertain compliance
  r = build_dpo({{"t2", {cand("a", 0.95, false), cand("b", 0.55, true)}}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].preferred, "b");
  EXPECT_DOUBLE_EQ(r[0].p_hat_preferred, 0.55);
  EXPECT_NEAR(r[0].p_hat_rejected, 0.05, 1e-15);
}

TEST(Dpo, TiesDropped) {
  std::vector<std::string> dropped;
  const auto r = build_dpo({{"t1", {cand("a", 0.7, true), cand("b", 0.3, false)}},
                            {"t2", {cand("a", 0.9, true), cand("b", 0.8, true)}},
                            {"t3", {cand("same", 0.9, true), cand("same", 0.1, true)}}},
                           &dropped);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].preferred, "a");
  EXPECT_EQ(dropped, (std::vector<std::string>{"t1", "t3"}));
}

TEST(Dpo, MissingPair) {
  try {
    build_dpo({{"t1", {cand("a", 0.7, true)}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::missing_pair);
  }
  EXPECT_THROW(build_dpo({{"t1", {cand("a", 0.7, true), cand("b", 0.7, true), cand("c", 0.7, true)}}}), Error);
}

TEST(Dpo, AntisymmetricAndOrdered) {
  std::mt19937_64 rng(8);
  const auto c = random_candidates(rng, 400);
  std::vector<TaskPair> fwd, rev;
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
    fwd.push_back({"t" + std::to_string(i), {c[i], c[i + 1]}});
    rev.push_back({"t" + std::to_string(i), {c[i + 1], c[i]}});
  }
  std::vector<std::string> df, dr;
  const auto a = build_dpo(fwd, &df);
  const auto b = build_dpo(rev, &dr);
  EXPECT_EQ(a, b);
  EXPECT_EQ(df, dr);
  EXPECT_EQ(a.size() + df.size(), fwd.size());
  EXPECT_GT(df.size(), 0u);
  for (const auto& r : a) {
    EXPECT_GT(r.p_hat_preferred, r.p_hat_rejected);
    EXPECT_NE(r.preferred, r.rejected);
  }
}

TEST(Export, GoldenJsonl) {
  const auto c = golden_candidates();
  const auto sft = sft_jsonl(build_sft(c, 0.8));
  const auto dpo = dpo_jsonl(build_dpo({{"t0", {c[0], c[1]}}, {"t1", {c[2], c[3]}}}));
  EXPECT_EQ(sft, slurp(kGolden / "sft.jsonl"));
  EXPECT_EQ(dpo, slurp(kGolden / "dpo.jsonl"));

  std::istringstream lines(dpo);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("input").at("messages").at(0).at("role"), "user");
    EXPECT_EQ(j.at("preferred_output").at(0).at("role"), "assistant");
    EXPECT_EQ(j.at("non_preferred_output").size(), 1u);
    ++n;
  }
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(sft_jsonl({}), "");
}
