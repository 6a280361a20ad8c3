#include "plancheck/oracle/remote.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "plancheck/error.hpp"
#include "plancheck/random.hpp"

namespace plancheck::oracle {

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::io_error, "cannot create cache directory " + dir_.string());
}

std::string DiskCache::key(const nlohmann::json& request) {
  const std::string s = request.dump();
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(fnv1a64(s)),
                static_cast<unsigned long long>(fnv1a64(s, 0x84222325cbf29ce4ULL)));
  return buf;
}

std::optional<nlohmann::json> DiskCache::get(const nlohmann::json& request) const {
  std::lock_guard lock(mu_);
  std::ifstream in(dir_ / (key(request) + ".json"));
  if (!in) return std::nullopt;
  try {
    auto doc = nlohmann::json::parse(in);
    if (doc.at("request") != request) return std::nullopt;
    return doc.at("response");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void DiskCache::put(const nlohmann::json& request, const nlohmann::json& response) {
  std::lock_guard lock(mu_);
  const auto final_path = dir_ / (key(request) + ".json");
  const auto tmp = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << nlohmann::json{{"request", request}, {"response", response}}.dump();
    if (!out) throw Error(ErrorKind::io_error, "cannot write cache entry " + tmp);
  }
  std::filesystem::rename(tmp, final_path);
}

RemoteClient::RemoteClient(RemoteConfig cfg) : cfg_(std::move(cfg)), slots_(std::max(1, cfg_.max_in_flight)) {
  auto scheme_end = cfg_.base_url.find("://");
  if (scheme_end == std::string::npos) throw Error(ErrorKind::invalid_argument, "endpoint needs a scheme: " + cfg_.base_url);
  auto path_start = cfg_.base_url.find('/', scheme_end + 3);
  scheme_host_ = cfg_.base_url.substr(0, path_start);
  path_prefix_ = path_start == std::string::npos ? "" : cfg_.base_url.substr(path_start);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
  if (!cfg_.cache_dir.empty()) cache_.emplace(cfg_.cache_dir);
}

nlohmann::json RemoteClient::post(const std::string& endpoint, const nlohmann::json& body) {
  const nlohmann::json request{{"endpoint", endpoint}, {"body", body}};
  if (cache_) {
    if (auto hit = cache_->get(request)) return *hit;
  }

  slots_.acquire();
  struct Release {
    std::counting_semaphore<>& s;
    ~Release() { s.release(); }
  } release{slots_};

  httplib::Client cli(scheme_host_);
  const auto secs = static_cast<time_t>(cfg_.timeout_s);
  const auto usecs = static_cast<time_t>((cfg_.timeout_s - static_cast<double>(secs)) * 1e6);
  cli.set_connection_timeout(secs, usecs);
  cli.set_read_timeout(secs, usecs);
  cli.set_write_timeout(secs, usecs);
  httplib::Headers headers;
  if (const char* k = std::getenv(cfg_.api_key_env.c_str()); k != nullptr && *k != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + k);
  }
  auto res = cli.Post(path_prefix_ + endpoint, headers, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorKind::backend_unavailable, endpoint + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorKind::backend_unavailable, endpoint + ": HTTP " + std::to_string(res->status));
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorKind::backend_unavailable, endpoint + ": response is not JSON");
  }
  if (cache_) cache_->put(request, doc);
  return doc;
}

InterpreterOutput RemoteClient::interpret(const std::string& plan, const std::string& rule) {
  if (plan.empty() || rule.empty()) throw Error(ErrorKind::invalid_argument, "plan and rule must be non-empty");
  nlohmann::json body{{"model", cfg_.chat_model},
                      {"temperature", 0},
                      {"messages", {{{"role", "user"}, {"content", render_prompt(cfg_.prompt_template, plan, rule)}}}}};
  auto doc = post("/chat/completions", body);
  std::string content;
  try {
    content = doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::unparseable_answer, "chat response without message content");
  }
  return parse_answer(content);
}

std::vector<double> RemoteClient::embed(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::invalid_argument, "cannot embed empty text");
  auto doc = post("/embeddings", {{"model", cfg_.embedding_model}, {"input", text}});
  std::vector<double> v;
  try {
    v = doc.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::backend_unavailable, "embedding response without data");
  }
  if (v.size() != cfg_.dim) {
    throw Error(ErrorKind::dimension_mismatch,
                "embedding has " + std::to_string(v.size()) + " components, expected " + std::to_string(cfg_.dim));
  }
  for (double x : v)
    if (!std::isfinite(x)) throw Error(ErrorKind::backend_unavailable, "embedding has non-finite components");
  return v;
}

}  // namespace plancheck::oracle
