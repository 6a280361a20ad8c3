#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>

#include <nlohmann/json.hpp>

#include "plancheck/oracle/embedder.hpp"
#include "plancheck/oracle/interpreter.hpp"

namespace plancheck::oracle {

struct RemoteConfig {
  std::string base_url = "https://api.openai.com/v1";
  std::string chat_model = "gpt-4o-mini";
  std::string embedding_model = "text-embedding-3-small";
  std::string api_key_env = "PLANCHECK_API_KEY";
  double timeout_s = 30.0;
  int max_in_flight = 4;
  std::size_t dim = 1536;
  std::string prompt_template = kDefaultPrompt;
  std::filesystem::path cache_dir;  // empty disables caching
};

/// Responses stored one file per request, named by a hash of the request.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  std::optional<nlohmann::json> get(const nlohmann::json& request) const;
  void put(const nlohmann::json& request, const nlohmann::json& response);
  static std::string key(const nlohmann::json& request);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

/// Chat-completion and embedding client for the common JSON wire format.
class RemoteClient : public Interpreter, public Embedder {
 public:
  explicit RemoteClient(RemoteConfig cfg);

  InterpreterOutput interpret(const std::string& plan, const std::string& rule) override;
  std::vector<double> embed(const std::string& text) override;
  std::size_t dim() const override { return cfg_.dim; }

  const RemoteConfig& config() const { return cfg_; }

 private:
  nlohmann::json post(const std::string& endpoint, const nlohmann::json& body);

  RemoteConfig cfg_;
  std::string scheme_host_;
  std::string path_prefix_;
  std::optional<DiskCache> cache_;
  std::counting_semaphore<> slots_;
};

}  // namespace plancheck::oracle
