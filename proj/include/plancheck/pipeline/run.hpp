#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plancheck/calib/calibration.hpp"
#include "plancheck/oracle/remote.hpp"
#include "plancheck/pipeline/corpus.hpp"
#include "plancheck/projector/mlp.hpp"

namespace plancheck::pipeline {

struct Paths {
  std::filesystem::path domain = "data/carla";
  std::filesystem::path heuristics = "data/carla/heuristics.json";
  std::filesystem::path train = "data/carla/plans/train";
  std::filesystem::path calib = "data/carla/plans/calib";
  std::filesystem::path test = "data/carla/plans/test";
  std::filesystem::path tasks = "data/carla/refine_tasks.json";
  std::filesystem::path out = "out";

  bool operator==(const Paths&) const = default;
};

struct ProjectorConfig {
  std::size_t hidden1 = 128, hidden2 = 32, latent = 10;
  std::size_t batch = 20, epochs = 10;
  double lr = 1e-3;

  bool operator==(const ProjectorConfig&) const = default;
};

struct RemoteSettings {
  std::string base_url = "https://api.openai.com/v1";
  std::string chat_model = "gpt-4o-mini";
  std::string embedding_model = "text-embedding-3-small";
  std::string api_key_env = "PLANCHECK_API_KEY";
  double timeout_s = 30.0;
  int max_in_flight = 4;
  std::filesystem::path prompt_file;  // empty: built-in prompt
  std::filesystem::path cache_dir;

  bool operator==(const RemoteSettings&) const = default;
};

/// Everything a pipeline run depends on. Relative paths resolve against
/// `base`, which is not serialized.
struct RunConfig {
  std::string backend = "mock";  // mock | remote
  std::uint64_t seed = 7;
  double tau = 0.8;
  int concurrency = 4;
  double error_rate = 0.2;  // mock interpreter
  std::size_t embedding_dim = 1536;
  ProjectorConfig projector;
  RemoteSettings remote;
  Paths paths;
  std::filesystem::path base;

  std::filesystem::path resolve(const std::filesystem::path& p) const;
  projector::Hyper hyper() const;

  /// Missing keys keep their defaults; unknown keys are rejected.
  static RunConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
  static RunConfig load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool operator==(const RunConfig& o) const {
    return backend == o.backend && seed == o.seed && tau == o.tau && concurrency == o.concurrency &&
           error_rate == o.error_rate && embedding_dim == o.embedding_dim && projector == o.projector &&
           remote == o.remote && paths == o.paths;
  }
};

struct Backends {
  std::shared_ptr<oracle::Interpreter> interpreter;
  std::shared_ptr<oracle::Embedder> embedder;
};

Backends make_backends(const RunConfig& cfg);

/// Per-sample output of the verifier.
struct VerdictRow {
  std::string plan_id;
  std::string rule_id;
  int y = 0;
  int y_star = 0;
  int y_hat_safe = 0;
  bool complies = false;
  double p_hat = 0.0;
  double d_prime = 0.0;
  int nearest = 0;
  std::size_t support = 0;
  bool low_support = false;

  nlohmann::json to_json() const;
  static VerdictRow from_json(const nlohmann::json& j);
};

VerdictRow verify_record(const projector::Params& p, const calib::Table& t, const Record& r);

struct RuleMetrics {
  std::size_t n = 0;
  double accuracy = 0.0;
  double interpreter_accuracy = 0.0;
  double compliance_rate = 0.0;
};

struct MetricsReport {
  std::size_t n = 0;
  double accuracy = 0.0;              // verifier verdict vs model checker
  double interpreter_accuracy = 0.0;  // raw interpreter answer vs model checker
  double compliance_rate = 0.0;       // plans that satisfy their specification
  std::map<std::string, RuleMetrics> per_rule;
  std::vector<std::size_t> histogram;  // p̂ in ten equal bins over [0, 1]
  std::size_t low_support = 0;

  nlohmann::json to_json() const;
};

MetricsReport metrics(const std::vector<VerdictRow>& rows);

/// JSON lines, one verdict per line.
std::string verdicts_jsonl(const std::vector<VerdictRow>& rows);
std::vector<VerdictRow> parse_verdicts_jsonl(const std::string& text);

/// Each command reads its inputs and writes its artifacts under paths.out;
/// the returned summary is also written as <command>.json.
nlohmann::json cmd_train(const RunConfig& cfg);
nlohmann::json cmd_calibrate(const RunConfig& cfg);
nlohmann::json cmd_verify(const RunConfig& cfg);
nlohmann::json cmd_refine(const RunConfig& cfg);
MetricsReport cmd_report(const std::filesystem::path& verdict_stream);

namespace artifacts {
inline constexpr const char* kCheckpoint = "projector.ckpt";
inline constexpr const char* kTrainRecords = "train_records.jsonl";
inline constexpr const char* kCalibration = "calibration.json";
inline constexpr const char* kVerdicts = "verdicts.jsonl";
inline constexpr const char* kMetrics = "metrics.json";
inline constexpr const char* kRefineVerdicts = "refine_verdicts.jsonl";
inline constexpr const char* kSft = "sft.jsonl";
inline constexpr const char* kDpo = "dpo.jsonl";
}  // namespace artifacts

}  // namespace plancheck::pipeline
