#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "plancheck/automata/io.hpp"
#include "plancheck/error.hpp"
#include "plancheck/l2a/compile.hpp"
#include "plancheck/ltl/check.hpp"
#include "plancheck/plan/ast.hpp"
#include "plancheck/plan/parser.hpp"
#include "plancheck/pipeline/run.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace plancheck;

namespace {

constexpr int kOk = 0, kDomainError = 1, kUsageError = 2;

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backend;
  std::optional<double> tau;
  std::optional<std::string> out;
  std::string log_level = "warn";
};

pipeline::RunConfig load_config(const Globals& g) {
  pipeline::RunConfig c = g.config.empty() ? pipeline::RunConfig{} : pipeline::RunConfig::load(g.config);
  json overrides = c.to_json();
  if (g.seed) overrides["seed"] = *g.seed;
  if (g.backend) overrides["backend"] = *g.backend;
  if (g.tau) overrides["tau"] = *g.tau;
  auto merged = pipeline::RunConfig::from_json(overrides);
  merged.base = c.base;
  if (g.out) merged.paths.out = fs::absolute(*g.out);
  return merged;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int fail(const Error& e) {
  json d = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.position()) d["line"] = e.position()->line, d["column"] = e.position()->column;
  std::cerr << d.dump() << "\n";
  return e.kind() == ErrorKind::io_error ? kUsageError : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("plancheck"));

  CLI::App app{"Formal compliance checking of robot plans"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "Run configuration (JSON)")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Override the configured seed");
  app.add_option("--backend", g.backend, "Oracle backend")->check(CLI::IsMember({"mock", "remote"}));
  app.add_option("--tau", g.tau, "Guarantee threshold for fine-tuning exports")->check(CLI::Range(0.5, 1.0));
  app.add_option("--out", g.out, "Override the artifact directory");
  app.add_option("--log-level", g.log_level, "trace, debug, info, warn, error or off");

  std::string plan_path, domain_dir, spec, formula, dot_path, stream;
  bool permissive = false, explain = false, pretty = false;

  auto* parse = app.add_subcommand("parse", "Dump the syntax tree of a plan");
  parse->add_option("plan", plan_path)->required()->check(CLI::ExistingFile);
  parse->add_option("--domain", domain_dir, "Validate against this domain")->check(CLI::ExistingDirectory);
  parse->add_flag("--pretty", pretty, "Print normalized source instead of JSON");

  auto* l2a = app.add_subcommand("l2a", "Compile a plan to an automaton");
  l2a->add_option("plan", plan_path)->required()->check(CLI::ExistingFile);
  l2a->add_option("--domain", domain_dir)->check(CLI::ExistingDirectory);
  l2a->add_option("--dot", dot_path, "Also write Graphviz text here ('-' for stdout only)");
  l2a->add_flag("--permissive", permissive, "Unmapped action calls become empty states");
  l2a->add_flag("--explain", explain, "Print the API-to-proposition mapping instead");

  auto* check = app.add_subcommand("check", "Model-check a plan against a specification");
  check->add_option("plan", plan_path)->required()->check(CLI::ExistingFile);
  check->add_option("--domain", domain_dir)->check(CLI::ExistingDirectory);
  auto* spec_opt = check->add_option("--spec", spec, "Specification or rule id from the domain");
  auto* formula_opt = check->add_option("--formula", formula, "LTL formula text");
  spec_opt->excludes(formula_opt);
  check->add_flag("--permissive", permissive);

  auto* train = app.add_subcommand("train", "Collect training data and train the projector");
  auto* calibrate = app.add_subcommand("calibrate", "Build the calibration table");
  auto* verify = app.add_subcommand("verify", "Verify the held-out plans");
  auto* refine = app.add_subcommand("refine", "Export fine-tuning datasets");
  auto* report = app.add_subcommand("report", "Summarize a verdict stream");
  report->add_option("stream", stream, "Verdict stream (default: <out>/verdicts.jsonl)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  spdlog::set_level(spdlog::level::from_str(g.log_level));

  pipeline::RunConfig cfg;
  try {
    cfg = load_config(g);
  } catch (const Error& e) {
    fail(e);
    return kUsageError;
  }

  try {
    auto domain = [&] { return pipeline::Domain::load(domain_dir.empty() ? cfg.resolve(cfg.paths.domain) : fs::path(domain_dir)); };

    if (parse->parsed()) {
      const std::string src = pipeline::read_text(plan_path);
      const auto ast = domain_dir.empty() ? plan::parse_plan(src) : domain().parse(src);
      if (pretty) {
        std::cout << plan::pretty_print(ast);
      } else {
        emit(plan::to_json(ast));
      }
    } else if (l2a->parsed()) {
      const auto d = domain();
      const auto ast = d.parse(pipeline::read_text(plan_path));
      if (explain) {
        json rows = json::array();
        for (const auto& m : l2a::explain_mapping(ast, d.mapping())) {
          rows.push_back({{"call", plan::to_string(m.call)}, {"kind", m.kind}, {"props", m.props}});
        }
        emit(rows);
        return kOk;
      }
      l2a::CompileOptions opts;
      opts.permissive = permissive;
      const auto fsa = d.automaton(ast, opts);
      const auto dot = automata::to_dot(fsa, fs::path(plan_path).stem().string());
      if (dot_path == "-") {
        std::cout << dot;
      } else {
        emit(automata::to_json(fsa));
        if (!dot_path.empty()) {
          std::ofstream f(dot_path, std::ios::binary);
          if (!(f << dot)) throw Error(ErrorKind::io_error, "cannot write " + dot_path);
        }
      }
    } else if (check->parsed()) {
      if (spec.empty() && formula.empty()) throw CLI::RequiredError("--spec or --formula");
      const auto d = domain();
      ltl::Formula phi = ltl::Formula::truth();
      std::string spec_id = spec;
      if (!formula.empty()) {
        phi = ltl::parse_ltl(formula);
      } else {
        const auto& specs = d.rules().specs;
        const bool is_spec = std::any_of(specs.begin(), specs.end(), [&](const auto& s) { return s.id == spec; });
        if (!is_spec) spec_id = d.rules().rule(spec).spec;
        phi = d.rules().spec(spec_id).formula;
      }
      const auto ast = d.parse(pipeline::read_text(plan_path));
      l2a::CompileOptions opts;
      opts.permissive = permissive;
      const auto v = ltl::model_check(d.automaton(ast, opts), d.environment(), phi);
      json out = ltl::to_json(v);
      out["plan"] = plan_path;
      out["formula"] = phi.to_string();
      if (!spec_id.empty()) out["spec"] = spec_id;
      emit(out);
    } else if (train->parsed()) {
      emit(pipeline::cmd_train(cfg));
    } else if (calibrate->parsed()) {
      emit(pipeline::cmd_calibrate(cfg));
    } else if (verify->parsed()) {
      emit(pipeline::cmd_verify(cfg));
    } else if (refine->parsed()) {
      emit(pipeline::cmd_refine(cfg));
    } else if (report->parsed()) {
      const fs::path p = stream.empty() ? cfg.resolve(cfg.paths.out) / pipeline::artifacts::kVerdicts : fs::path(stream);
      if (!fs::exists(p)) throw Error(ErrorKind::io_error, "verdict stream not found: " + p.string());
      emit(pipeline::cmd_report(p).to_json());
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return kDomainError;
  }
  return kOk;
}
