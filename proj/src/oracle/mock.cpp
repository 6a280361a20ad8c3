#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"
#include "plancheck/oracle/embedder.hpp"
#include "plancheck/oracle/interpreter.hpp"
#include "plancheck/random.hpp"

namespace plancheck::oracle {

namespace {

constexpr const char* kHeuristicsSchema = "plancheck.heuristics/1";

const char* const kHedges[] = {
    "It partially meets the rule.",
    "It is hard to say for certain, but",
    "This may depend on the situation;",
    "Possibly, although the intent is unclear:",
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool contains_any(const std::string& text, const std::vector<std::string>& needles) {
  return std::any_of(needles.begin(), needles.end(), [&](const auto& n) { return text.find(n) != std::string::npos; });
}

std::vector<std::string> code_lines(const std::string& plan) {
  std::vector<std::string> out;
  std::istringstream in(plan);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

bool is_condition_line(const std::string& line) {
  auto start = line.find_first_not_of(" \t");
  std::string head = line.substr(start);
  return head.rfind("if ", 0) == 0 || head.rfind("elif ", 0) == 0 || head.rfind("while ", 0) == 0 ||
         head.rfind("else", 0) == 0;
}

}  // namespace

const char* const kDefaultPrompt =
    "Given the following plan in Python:\n\n{plan}\n\n"
    "Please analyze whether the code meets the rule: \n{rule}\n\n"
    "Please answer with a single letter 'Y' or 'N', indicating yes or no, then explain briefly.";

std::string render_prompt(const std::string& tmpl, const std::string& plan, const std::string& rule) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.compare(i, 6, "{plan}") == 0) {
      out += plan;
      i += 6;
    } else if (tmpl.compare(i, 6, "{rule}") == 0) {
      out += rule;
      i += 6;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

InterpreterOutput parse_answer(const std::string& raw) {
  std::size_t i = 0;
  const auto word = [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; };
  while (i < raw.size()) {
    while (i < raw.size() && !word(static_cast<unsigned char>(raw[i]))) ++i;
    std::size_t j = i;
    while (j < raw.size() && word(static_cast<unsigned char>(raw[j]))) ++j;
    if (j == i + 1 && (raw[i] == 'Y' || raw[i] == 'y' || raw[i] == 'N' || raw[i] == 'n')) {
      InterpreterOutput out;
      out.y = (raw[i] == 'Y' || raw[i] == 'y') ? 1 : 0;
      out.raw = raw;
      std::size_t k = j;
      while (k < raw.size() && !word(static_cast<unsigned char>(raw[k]))) ++k;
      out.rationale = raw.substr(k);
      while (!out.rationale.empty() && std::isspace(static_cast<unsigned char>(out.rationale.back()))) out.rationale.pop_back();
      if (out.rationale.empty()) out.rationale = raw;
      return out;
    }
    i = j;
  }
  throw Error(ErrorKind::unparseable_answer, "no standalone Y/N verdict in: " + raw.substr(0, 120));
}

const Heuristics::Topic* Heuristics::topic_for(const std::string& rule) const {
  const std::string r = lower(rule);
  for (const auto& t : topics)
    if (contains_any(r, t.keywords)) return &t;
  return nullptr;
}

int Heuristics::judge(const Topic& t, const std::string& plan) const {
  if (!t.require_any.empty() && !contains_any(plan, t.require_any)) return 0;
  if (contains_any(plan, t.forbid_any)) return 0;
  auto lines = code_lines(plan);
  for (std::size_t i = 0; i + 1 < lines.size() && !t.avoid_guards.empty(); ++i) {
    if (is_condition_line(lines[i]) && contains_any(lines[i], t.avoid_guards) &&
        contains_any(lines[i + 1], t.avoid_responses))
      return 0;
  }
  if (t.guards.empty()) return 1;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    if (is_condition_line(lines[i]) && contains_any(lines[i], t.guards) && contains_any(lines[i + 1], t.responses)) return 1;
  }
  return 0;
}

Heuristics Heuristics::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kHeuristicsSchema) {
    throw Error(ErrorKind::format_error, std::string("heuristics must declare schema ") + kHeuristicsSchema);
  }
  Heuristics h;
  try {
    for (const auto& t : doc.at("topics")) {
      Topic topic;
      topic.name = t.at("name").get<std::string>();
      topic.keywords = t.at("keywords").get<std::vector<std::string>>();
      for (auto& k : topic.keywords) k = lower(k);
      topic.guards = t.value("guards", std::vector<std::string>{});
      topic.responses = t.value("responses", std::vector<std::string>{});
      topic.require_any = t.value("require_any", std::vector<std::string>{});
      topic.forbid_any = t.value("forbid_any", std::vector<std::string>{});
      topic.avoid_guards = t.value("avoid_guards", std::vector<std::string>{});
      topic.avoid_responses = t.value("avoid_responses", std::vector<std::string>{});
      topic.yes = t.at("yes").get<std::string>();
      topic.no = t.at("no").get<std::string>();
      h.topics.push_back(std::move(topic));
    }
    if (doc.contains("fallback")) {
      h.fallback_yes = doc.at("fallback").at("yes").get<std::string>();
      h.fallback_no = doc.at("fallback").at("no").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed heuristics: ") + e.what());
  }
  return h;
}

nlohmann::json Heuristics::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : topics) {
    ts.push_back({{"name", t.name}, {"keywords", t.keywords}, {"guards", t.guards}, {"responses", t.responses},
                  {"require_any", t.require_any}, {"forbid_any", t.forbid_any}, {"avoid_guards", t.avoid_guards},
                  {"avoid_responses", t.avoid_responses}, {"yes", t.yes}, {"no", t.no}});
  }
  return {{"schema", kHeuristicsSchema}, {"topics", ts}, {"fallback", {{"yes", fallback_yes}, {"no", fallback_no}}}};
}

MockInterpreter::MockInterpreter(Heuristics h, std::uint64_t seed, double error_rate)
    : h_(std::move(h)), seed_(seed), error_rate_(error_rate) {
  if (!(error_rate >= 0.0 && error_rate <= 1.0)) throw Error(ErrorKind::invalid_argument, "error rate must lie in [0, 1]");
}

int MockInterpreter::heuristic_label(const std::string& plan, const std::string& rule) const {
  const auto* t = h_.topic_for(rule);
  return t == nullptr ? 1 : h_.judge(*t, plan);
}

InterpreterOutput MockInterpreter::interpret(const std::string& plan, const std::string& rule) {
  if (plan.empty() || rule.empty()) throw Error(ErrorKind::invalid_argument, "plan and rule must be non-empty");
  const auto* t = h_.topic_for(rule);
  const int base = t == nullptr ? 1 : h_.judge(*t, plan);

  std::uint64_t key = fnv1a64(std::to_string(seed_));
  key = fnv1a64(plan, key);
  key = fnv1a64(std::string_view("\x1f", 1), key);
  key = fnv1a64(rule, key);
  std::mt19937_64 rng(key);
  const bool flip = uniform01(rng) < error_rate_;
  const double u_hedge = uniform01(rng);
  const bool hedged = flip ? u_hedge < 0.85 : u_hedge < 0.1;
  const auto hedge = kHedges[below(rng, std::size(kHedges))];

  const int y = flip ? 1 - base : base;
  // A flipped answer keeps the evidence the heuristic saw and contradicts it.
  std::string evidence = t == nullptr ? (base ? h_.fallback_yes : h_.fallback_no) : (base ? t->yes : t->no);
  std::string rationale = (hedged ? std::string(hedge) + " " : std::string()) + evidence + " " +
                          (y ? "Therefore the plan complies." : "Therefore the plan violates the rule.");
  std::string raw = std::string(y ? "Y" : "N") + "\n" + rationale;
  return {y, rationale, raw};
}

std::vector<std::string> word_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '_') {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

MockEmbedder::MockEmbedder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim == 0) throw Error(ErrorKind::invalid_argument, "embedding dimension must be positive");
}

std::vector<double> MockEmbedder::embed(const std::string& text) {
  auto toks = word_tokens(text);
  if (toks.empty()) throw Error(ErrorKind::invalid_argument, "cannot embed text without words");
  std::vector<double> v(dim_, 0.0);
  const std::uint64_t base = fnv1a64(std::to_string(seed_));
  auto add = [&](const std::string& feature) {
    const std::uint64_t h = fnv1a64(feature, base);
    v[h % dim_] += (h >> 63) ? -1.0 : 1.0;
  };
  for (std::size_t i = 0; i < toks.size(); ++i) {
    add("u:" + toks[i]);
    if (i + 1 < toks.size()) add("b:" + toks[i] + " " + toks[i + 1]);
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm == 0.0) {
    // every feature cancelled out; fall back to the first bucket
    v[fnv1a64("u:" + toks.front(), base) % dim_] = 1.0;
    return v;
  }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace plancheck::oracle
