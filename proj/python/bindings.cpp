#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "plancheck/automata/io.hpp"
#include "plancheck/calib/calibration.hpp"
#include "plancheck/error.hpp"
#include "plancheck/ltl/formula.hpp"
#include "plancheck/pipeline/domain.hpp"
#include "plancheck/pipeline/run.hpp"
#include "plancheck/plan/parser.hpp"
#include "plancheck/refine/datasets.hpp"

namespace py = pybind11;
namespace fs = std::filesystem;
using namespace plancheck;
using nlohmann::json;

namespace {

// Values cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json& j) { return j.dump(); }

ltl::Formula resolve_formula(const pipeline::Domain& d, const std::string& spec, const std::string& formula) {
  if (!formula.empty()) return ltl::parse_ltl(formula);
  if (spec.empty()) throw Error(ErrorKind::invalid_argument, "spec or formula required");
  for (const auto& s : d.rules().specs) {
    if (s.id == spec) return s.formula;
  }
  return d.rules().spec(d.rules().rule(spec).spec).formula;
}

std::string check_plan(const std::string& source, const std::string& domain, const std::string& spec,
                       const std::string& formula, bool permissive) {
  const auto d = pipeline::Domain::load(domain);
  const auto phi = resolve_formula(d, spec, formula);
  l2a::CompileOptions opts;
  opts.permissive = permissive;
  const auto v = ltl::model_check(d.automaton(d.parse(source), opts), d.environment(), phi);
  json out = ltl::to_json(v);
  out["formula"] = phi.to_string();
  return dump(out);
}

pipeline::RunConfig run_config(const std::string& doc, const std::string& base) {
  auto cfg = pipeline::RunConfig::from_json(json::parse(doc));
  cfg.base = base;
  return cfg;
}

std::string run(const std::string& command, const std::string& config, const std::string& base) {
  const auto cfg = run_config(config, base);
  if (command == "train") return dump(pipeline::cmd_train(cfg));
  if (command == "calibrate") return dump(pipeline::cmd_calibrate(cfg));
  if (command == "verify") return dump(pipeline::cmd_verify(cfg));
  if (command == "refine") return dump(pipeline::cmd_refine(cfg));
  throw Error(ErrorKind::invalid_argument, "unknown command: " + command);
}

std::vector<refine::Candidate> candidates(const std::string& doc) {
  std::vector<refine::Candidate> out;
  for (const auto& c : json::parse(doc)) {
    out.push_back({c.at("task"), c.at("rule"), c.at("plan"), c.at("p_hat"), c.at("complies")});
  }
  return out;
}

json guarantee_json(const calib::Guarantee& g) {
  return {{"nearest", g.nearest},     {"d_safe", g.d_safe},   {"d_unsafe", g.d_unsafe},
          {"d_prime", g.d_prime},     {"p_hat", g.p_hat},     {"support", g.support},
          {"low_support", g.low_support}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "PlancheckError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("line") = e.position() ? py::object(py::int_(e.position()->line)) : py::none();
      exc.attr("column") = e.position() ? py::object(py::int_(e.position()->column)) : py::none();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("parse_plan", [](const std::string& source, const std::string& domain) {
    const auto ast = domain.empty() ? plan::parse_plan(source) : pipeline::Domain::load(domain).parse(source);
    return dump(plan::to_json(ast));
  });
  m.def("pretty_print", [](const std::string& source) { return plan::pretty_print(plan::parse_plan(source)); });
  m.def("compile_plan", [](const std::string& source, const std::string& domain, bool permissive, const std::string& name) {
    const auto d = pipeline::Domain::load(domain);
    l2a::CompileOptions opts;
    opts.permissive = permissive;
    const auto fsa = d.automaton(d.parse(source), opts);
    return py::make_tuple(dump(automata::to_json(fsa)), automata::to_dot(fsa, name));
  });
  m.def("check_plan", &check_plan);
  m.def("normalize_formula", [](const std::string& text) { return ltl::parse_ltl(text).to_string(); });

  py::class_<calib::Table>(m, "CalibrationTable")
      .def_static("from_json", [](const std::string& doc) { return calib::Table::from_json(json::parse(doc)); })
      .def("to_json", [](const calib::Table& t) { return dump(t.to_json()); })
      .def("guarantee", [](const calib::Table& t, const std::vector<double>& z) {
        return dump(guarantee_json(calib::guarantee(t, z)));
      })
      .def_property_readonly("n", [](const calib::Table& t) { return t.n; })
      .def("__eq__", [](const calib::Table& a, const calib::Table& b) { return a == b; });
  m.def("calibrate", [](const std::vector<std::vector<double>>& z, const std::vector<int>& y_safe,
                        const std::vector<int>& y_hat) {
    if (z.size() != y_safe.size() || z.size() != y_hat.size()) {
      throw Error(ErrorKind::invalid_argument, "embeddings and labels differ in length");
    }
    std::vector<calib::Point> pts;
    for (std::size_t i = 0; i < z.size(); ++i) pts.push_back({z[i], y_safe[i], y_hat[i]});
    return calib::calibrate(pts);
  });
  m.def("complies", &calib::complies);

  m.def("build_sft", [](const std::string& doc, double tau) { return refine::sft_jsonl(refine::build_sft(candidates(doc), tau)); });
  m.def("build_dpo", [](const std::string& doc) {
    std::vector<refine::TaskPair> tasks;
    for (const auto& t : json::parse(doc)) {
      tasks.push_back({t.at("id"), candidates(t.at("candidates").dump())});
    }
    std::vector<std::string> dropped;
    auto text = refine::dpo_jsonl(refine::build_dpo(tasks, &dropped));
    return py::make_tuple(text, dropped);
  });

  m.def("default_config", [] { return dump(pipeline::RunConfig{}.to_json()); });
  m.def("run", &run);
  m.def("report", [](const std::string& path) { return dump(pipeline::cmd_report(path).to_json()); });
}
