#include "plancheck/pipeline/run.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "plancheck/error.hpp"
#include "plancheck/random.hpp"
#include "plancheck/refine/datasets.hpp"

namespace plancheck::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kConfigSchema = "plancheck.config/1";

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw Error(ErrorKind::format_error, where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) throw Error(ErrorKind::format_error, "unknown configuration key " + where + "." + k);
  }
}

template <class T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void take_path(const json& j, const char* key, fs::path& out) {
  if (j.contains(key)) out = j.at(key).get<std::string>();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorKind::io_error, "write failed: " + path.string());
}

void write_json(const fs::path& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

std::vector<std::string> rules_for(const Domain& d, const std::vector<PlanFile>& plans, const std::string& split,
                                   const std::string& stage, std::uint64_t seed) {
  return assign_rules(plans, d.rules().in_split(split), seed ^ fnv1a64(stage));
}

std::string records_jsonl(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += json{{"plan", r.plan_id}, {"rule", r.rule_id}, {"y", r.y}, {"y_star", r.y_star},
                {"y_safe", r.y_safe}, {"rationale", r.rationale}}
               .dump() +
           "\n";
  }
  return out;
}

std::vector<projector::Sample> samples_of(const std::vector<Record>& records) {
  std::vector<projector::Sample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.embedding, r.y_safe});
  return out;
}

double mean_of(std::size_t k, std::size_t n) { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }

}  // namespace

fs::path RunConfig::resolve(const fs::path& p) const {
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

projector::Hyper RunConfig::hyper() const {
  projector::Hyper h;
  h.input_dim = embedding_dim;
  h.hidden1 = projector.hidden1;
  h.hidden2 = projector.hidden2;
  h.latent = projector.latent;
  h.batch = projector.batch;
  h.epochs = projector.epochs;
  h.lr = projector.lr;
  h.seed = seed;
  return h;
}

RunConfig RunConfig::from_json(const json& doc) {
  check_keys(doc, "config",
             {"schema", "backend", "seed", "tau", "concurrency", "error_rate", "embedding_dim", "projector", "remote",
              "paths"});
  if (doc.value("schema", std::string(kConfigSchema)) != kConfigSchema) {
    throw Error(ErrorKind::format_error, std::string("configuration schema must be ") + kConfigSchema);
  }
  RunConfig c;
  try {
    take(doc, "backend", c.backend);
    take(doc, "seed", c.seed);
    take(doc, "tau", c.tau);
    take(doc, "concurrency", c.concurrency);
    take(doc, "error_rate", c.error_rate);
    take(doc, "embedding_dim", c.embedding_dim);
    if (doc.contains("projector")) {
      const auto& p = doc.at("projector");
      check_keys(p, "projector", {"hidden1", "hidden2", "latent", "batch", "epochs", "lr"});
      take(p, "hidden1", c.projector.hidden1);
      take(p, "hidden2", c.projector.hidden2);
      take(p, "latent", c.projector.latent);
      take(p, "batch", c.projector.batch);
      take(p, "epochs", c.projector.epochs);
      take(p, "lr", c.projector.lr);
    }
    if (doc.contains("remote")) {
      const auto& r = doc.at("remote");
      check_keys(r, "remote",
                 {"base_url", "chat_model", "embedding_model", "api_key_env", "timeout_s", "max_in_flight",
                  "prompt_file", "cache_dir"});
      take(r, "base_url", c.remote.base_url);
      take(r, "chat_model", c.remote.chat_model);
      take(r, "embedding_model", c.remote.embedding_model);
      take(r, "api_key_env", c.remote.api_key_env);
      take(r, "timeout_s", c.remote.timeout_s);
      take(r, "max_in_flight", c.remote.max_in_flight);
      take_path(r, "prompt_file", c.remote.prompt_file);
      take_path(r, "cache_dir", c.remote.cache_dir);
    }
    if (doc.contains("paths")) {
      const auto& p = doc.at("paths");
      check_keys(p, "paths", {"domain", "heuristics", "train", "calib", "test", "tasks", "out"});
      take_path(p, "domain", c.paths.domain);
      take_path(p, "heuristics", c.paths.heuristics);
      take_path(p, "train", c.paths.train);
      take_path(p, "calib", c.paths.calib);
      take_path(p, "test", c.paths.test);
      take_path(p, "tasks", c.paths.tasks);
      take_path(p, "out", c.paths.out);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed configuration: ") + e.what());
  }
  if (c.backend != "mock" && c.backend != "remote") {
    throw Error(ErrorKind::invalid_argument, "backend must be mock or remote, got " + c.backend);
  }
  if (!(c.tau > 0.5 && c.tau <= 1.0)) throw Error(ErrorKind::invalid_argument, "tau must lie in (0.5, 1]");
  if (c.concurrency < 1) throw Error(ErrorKind::invalid_argument, "concurrency must be positive");
  if (c.error_rate < 0.0 || c.error_rate > 1.0) throw Error(ErrorKind::invalid_argument, "error_rate must lie in [0, 1]");
  return c;
}

json RunConfig::to_json() const {
  return {
      {"schema", kConfigSchema},
      {"backend", backend},
      {"seed", seed},
      {"tau", tau},
      {"concurrency", concurrency},
      {"error_rate", error_rate},
      {"embedding_dim", embedding_dim},
      {"projector",
       {{"hidden1", projector.hidden1},
        {"hidden2", projector.hidden2},
        {"latent", projector.latent},
        {"batch", projector.batch},
        {"epochs", projector.epochs},
        {"lr", projector.lr}}},
      {"remote",
       {{"base_url", remote.base_url},
        {"chat_model", remote.chat_model},
        {"embedding_model", remote.embedding_model},
        {"api_key_env", remote.api_key_env},
        {"timeout_s", remote.timeout_s},
        {"max_in_flight", remote.max_in_flight},
        {"prompt_file", remote.prompt_file.string()},
        {"cache_dir", remote.cache_dir.string()}}},
      {"paths",
       {{"domain", paths.domain.string()},
        {"heuristics", paths.heuristics.string()},
        {"train", paths.train.string()},
        {"calib", paths.calib.string()},
        {"test", paths.test.string()},
        {"tasks", paths.tasks.string()},
        {"out", paths.out.string()}}},
  };
}

RunConfig RunConfig::load(const fs::path& path) {
  RunConfig c = from_json(read_json(path));
  c.base = path.parent_path();
  return c;
}

void RunConfig::save(const fs::path& path) const { write_json(path, to_json()); }

Backends make_backends(const RunConfig& cfg) {
  if (cfg.backend == "remote") {
    oracle::RemoteConfig rc;
    rc.base_url = cfg.remote.base_url;
    rc.chat_model = cfg.remote.chat_model;
    rc.embedding_model = cfg.remote.embedding_model;
    rc.api_key_env = cfg.remote.api_key_env;
    rc.timeout_s = cfg.remote.timeout_s;
    rc.max_in_flight = cfg.remote.max_in_flight;
    rc.dim = cfg.embedding_dim;
    if (!cfg.remote.prompt_file.empty()) rc.prompt_template = read_text(cfg.resolve(cfg.remote.prompt_file));
    rc.cache_dir = cfg.resolve(cfg.remote.cache_dir);
    auto client = std::make_shared<oracle::RemoteClient>(rc);
    return {client, client};
  }
  auto h = oracle::Heuristics::from_json(read_json(cfg.resolve(cfg.paths.heuristics)));
  return {std::make_shared<oracle::MockInterpreter>(std::move(h), cfg.seed, cfg.error_rate),
          std::make_shared<oracle::MockEmbedder>(cfg.embedding_dim)};
}

json VerdictRow::to_json() const {
  return {{"plan", plan_id},     {"rule", rule_id},       {"y", y},
          {"y_star", y_star},    {"y_hat_safe", y_hat_safe}, {"complies", complies},
          {"p_hat", p_hat},      {"d_prime", d_prime},    {"nearest", nearest},
          {"support", support},  {"low_support", low_support}};
}

VerdictRow VerdictRow::from_json(const json& j) {
  try {
    VerdictRow r;
    r.plan_id = j.at("plan").get<std::string>();
    r.rule_id = j.at("rule").get<std::string>();
    r.y = j.at("y").get<int>();
    r.y_star = j.at("y_star").get<int>();
    r.y_hat_safe = j.at("y_hat_safe").get<int>();
    r.complies = j.at("complies").get<bool>();
    r.p_hat = j.at("p_hat").get<double>();
    r.d_prime = j.value("d_prime", 0.0);
    r.nearest = j.value("nearest", 0);
    r.support = j.value("support", std::size_t{0});
    r.low_support = j.value("low_support", false);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed verdict record: ") + e.what());
  }
}

VerdictRow verify_record(const projector::Params& p, const calib::Table& t, const Record& r) {
  const auto z = projector::project(p, r.embedding);
  VerdictRow v;
  v.plan_id = r.plan_id;
  v.rule_id = r.rule_id;
  v.y = r.y;
  v.y_star = r.y_star;
  v.y_hat_safe = projector::classify(p, z);
  v.complies = calib::complies(v.y, v.y_hat_safe);
  const auto g = calib::guarantee(t, z);
  v.p_hat = g.p_hat;
  v.d_prime = g.d_prime;
  v.nearest = g.nearest;
  v.support = g.support;
  v.low_support = g.low_support;
  return v;
}

json MetricsReport::to_json() const {
  json rules = json::object();
  for (const auto& [id, m] : per_rule) {
    rules[id] = {{"n", m.n},
                 {"accuracy", m.accuracy},
                 {"interpreter_accuracy", m.interpreter_accuracy},
                 {"compliance_rate", m.compliance_rate}};
  }
  return {{"schema", "plancheck.metrics/1"},
          {"n", n},
          {"accuracy", accuracy},
          {"interpreter_accuracy", interpreter_accuracy},
          {"compliance_rate", compliance_rate},
          {"per_rule", rules},
          {"histogram", histogram},
          {"low_support", low_support}};
}

MetricsReport metrics(const std::vector<VerdictRow>& rows) {
  if (rows.empty()) throw Error(ErrorKind::empty_stream, "no verdict records");
  MetricsReport m;
  m.n = rows.size();
  m.histogram.assign(10, 0);
  struct Count {
    std::size_t n = 0, ok = 0, interp_ok = 0, holds = 0;
  };
  Count total;
  std::map<std::string, Count> by_rule;
  for (const auto& r : rows) {
    const bool ok = (r.complies ? 1 : 0) == r.y_star;
    const bool interp_ok = r.y == r.y_star;
    for (Count* c : {&total, &by_rule[r.rule_id]}) {
      ++c->n;
      c->ok += ok;
      c->interp_ok += interp_ok;
      c->holds += r.y_star == 1;
    }
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(std::max(r.p_hat, 0.0) * 10.0), 9);
    ++m.histogram[bin];
    m.low_support += r.low_support;
  }
  m.accuracy = mean_of(total.ok, total.n);
  m.interpreter_accuracy = mean_of(total.interp_ok, total.n);
  m.compliance_rate = mean_of(total.holds, total.n);
  for (const auto& [id, c] : by_rule) {
    m.per_rule[id] = {c.n, mean_of(c.ok, c.n), mean_of(c.interp_ok, c.n), mean_of(c.holds, c.n)};
  }
  return m;
}

std::string verdicts_jsonl(const std::vector<VerdictRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += r.to_json().dump() + "\n";
  return out;
}

std::vector<VerdictRow> parse_verdicts_jsonl(const std::string& text) {
  std::vector<VerdictRow> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(VerdictRow::from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::format_error, std::string("bad verdict line: ") + e.what());
    }
  }
  return out;
}

json cmd_train(const RunConfig& cfg) {
  const auto domain = Domain::load(cfg.resolve(cfg.paths.domain));
  const auto plans = load_plans(cfg.resolve(cfg.paths.train));
  auto backends = make_backends(cfg);
  const auto records = collect(domain, plans, rules_for(domain, plans, "train", "train", cfg.seed), *backends.interpreter,
                               *backends.embedder, cfg.concurrency);
  const auto data = samples_of(records);
  projector::TrainReport report;
  const auto params = projector::train(data, cfg.hyper(), &report);
  spdlog::info("trained on {} samples in {:.2f} s", data.size(), report.seconds);

  std::size_t correct = 0, safe = 0, interp_ok = 0;
  for (const auto& r : records) {
    correct += projector::classify(params, projector::project(params, r.embedding)) == r.y_safe;
    safe += r.y_safe;
    interp_ok += r.y == r.y_star;
  }
  const fs::path out = cfg.resolve(cfg.paths.out);
  fs::create_directories(out);
  projector::save_checkpoint(params, out / artifacts::kCheckpoint);
  write_text(out / artifacts::kTrainRecords, records_jsonl(records));
  json summary = {{"schema", "plancheck.train/1"},
                  {"samples", records.size()},
                  {"safe", safe},
                  {"unsafe", records.size() - safe},
                  {"parameters", params.count()},
                  {"interpreter_accuracy", mean_of(interp_ok, records.size())},
                  {"train_accuracy", mean_of(correct, records.size())},
                  {"epoch_loss", report.epoch_loss}};
  write_json(out / "train.json", summary);
  return summary;
}

json cmd_calibrate(const RunConfig& cfg) {
  const fs::path out = cfg.resolve(cfg.paths.out);
  const auto params = projector::load_checkpoint(out / artifacts::kCheckpoint);
  const auto domain = Domain::load(cfg.resolve(cfg.paths.domain));
  const auto plans = load_plans(cfg.resolve(cfg.paths.calib));
  auto backends = make_backends(cfg);
  const auto records = collect(domain, plans, rules_for(domain, plans, "train", "calib", cfg.seed), *backends.interpreter,
                               *backends.embedder, cfg.concurrency);
  std::vector<calib::Point> points;
  std::size_t correct = 0;
  for (const auto& r : records) {
    auto z = projector::project(params, r.embedding);
    const int y_hat = projector::classify(params, z);
    correct += y_hat == r.y_safe;
    points.push_back({std::move(z), r.y_safe, y_hat});
  }
  const auto table = calib::calibrate(points);
  write_json(out / artifacts::kCalibration, table.to_json());
  json summary = {{"schema", "plancheck.calibrate/1"},
                  {"samples", records.size()},
                  {"classifier_accuracy", mean_of(correct, records.size())},
                  {"safe_prior", table.safe.prior()},
                  {"unsafe_prior", table.unsafe.prior()}};
  write_json(out / "calibrate.json", summary);
  return summary;
}

namespace {

struct Verifier {
  projector::Params params;
  calib::Table table;

  explicit Verifier(const fs::path& out)
      : params(projector::load_checkpoint(out / artifacts::kCheckpoint)),
        table(calib::Table::from_json(read_json(out / artifacts::kCalibration))) {}
};

}  // namespace

json cmd_verify(const RunConfig& cfg) {
  const fs::path out = cfg.resolve(cfg.paths.out);
  const Verifier v(out);
  const auto domain = Domain::load(cfg.resolve(cfg.paths.domain));
  const auto plans = load_plans(cfg.resolve(cfg.paths.test));
  auto backends = make_backends(cfg);
  const auto records = collect(domain, plans, rules_for(domain, plans, "test", "test", cfg.seed), *backends.interpreter,
                               *backends.embedder, cfg.concurrency);
  std::vector<VerdictRow> rows;
  for (const auto& r : records) rows.push_back(verify_record(v.params, v.table, r));
  write_text(out / artifacts::kVerdicts, verdicts_jsonl(rows));
  const json m = metrics(rows).to_json();
  write_json(out / artifacts::kMetrics, m);
  return m;
}

json cmd_refine(const RunConfig& cfg) {
  const fs::path out = cfg.resolve(cfg.paths.out);
  const Verifier v(out);
  const auto domain = Domain::load(cfg.resolve(cfg.paths.domain));
  const fs::path tasks_path = cfg.resolve(cfg.paths.tasks);
  const json doc = read_json(tasks_path);
  if (doc.value("schema", std::string()) != "plancheck.tasks/1") {
    throw Error(ErrorKind::format_error, "task file must declare schema plancheck.tasks/1");
  }
  std::vector<PlanFile> plans;
  std::vector<std::string> rule_ids;
  std::vector<std::pair<std::string, std::size_t>> task_slices;  // id, candidate count
  for (const auto& t : doc.at("tasks")) {
    const auto id = t.at("id").get<std::string>();
    const auto rule = t.at("rule").get<std::string>();
    domain.rules().rule(rule);
    std::size_t k = 0;
    for (const auto& rel : t.at("plans")) {
      const fs::path p = tasks_path.parent_path() / rel.get<std::string>();
      PlanFile f{id + "/" + p.stem().string(), {}, read_text(p)};
      f.task = task_of(f.text);
      plans.push_back(std::move(f));
      rule_ids.push_back(rule);
      ++k;
    }
    task_slices.emplace_back(id, k);
  }
  auto backends = make_backends(cfg);
  const auto records = collect(domain, plans, rule_ids, *backends.interpreter, *backends.embedder, cfg.concurrency);

  std::vector<VerdictRow> rows;
  std::vector<refine::Candidate> candidates;
  for (std::size_t i = 0; i < records.size(); ++i) {
    rows.push_back(verify_record(v.params, v.table, records[i]));
    candidates.push_back({plans[i].task, domain.rules().rule(rule_ids[i]).text, plans[i].text, rows.back().p_hat,
                          rows.back().complies});
  }
  std::vector<refine::TaskPair> pairs;
  std::size_t at = 0;
  for (const auto& [id, k] : task_slices) {
    pairs.push_back({id, {candidates.begin() + static_cast<std::ptrdiff_t>(at),
                          candidates.begin() + static_cast<std::ptrdiff_t>(at + k)}});
    at += k;
  }
  const auto sft = refine::build_sft(candidates, cfg.tau);
  std::vector<std::string> dropped;
  const auto dpo = refine::build_dpo(pairs, &dropped);
  write_text(out / artifacts::kRefineVerdicts, verdicts_jsonl(rows));
  write_text(out / artifacts::kSft, refine::sft_jsonl(sft));
  write_text(out / artifacts::kDpo, refine::dpo_jsonl(dpo));
  json summary = {{"schema", "plancheck.refine/1"},
                  {"tau", cfg.tau},
                  {"candidates", candidates.size()},
                  {"tasks", pairs.size()},
                  {"sft", sft.size()},
                  {"dpo", dpo.size()},
                  {"dropped", dropped}};
  write_json(out / "refine.json", summary);
  return summary;
}

MetricsReport cmd_report(const fs::path& verdict_stream) { return metrics(parse_verdicts_jsonl(read_text(verdict_stream))); }

}  // namespace plancheck::pipeline
