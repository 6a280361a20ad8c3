#include "plancheck/automata/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"

namespace plancheck::automata {

using nlohmann::json;

namespace {

constexpr const char* kFsaSchema = "plancheck.fsa/1";
constexpr const char* kTsSchema = "plancheck.ts/1";

void require_schema(const json& doc, const char* schema) {
  if (!doc.is_object() || doc.value("schema", std::string()) != schema) {
    throw Error(ErrorKind::format_error, std::string("document must declare schema ") + schema);
  }
}

int state_index(const json& ref, const std::vector<std::string>& names) {
  if (ref.is_number_integer()) return ref.get<int>();
  const auto name = ref.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw Error(ErrorKind::format_error, "unknown state '" + name + "'");
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed automaton document: ") + e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

json to_json(const Fsa& a) {
  json states = json::array();
  for (const auto& s : a.states) states.push_back({{"name", s.name}, {"label", a.ap.names_in(s.label)}});
  json edges = json::array();
  for (const auto& e : a.edges) {
    edges.push_back({{"from", a.states[static_cast<std::size_t>(e.from)].name},
                     {"guard", e.guard.to_string()},
                     {"to", a.states[static_cast<std::size_t>(e.to)].name}});
  }
  return {{"schema", kFsaSchema},
          {"ap", a.ap.names()},
          {"states", std::move(states)},
          {"initial", a.states.at(static_cast<std::size_t>(a.initial)).name},
          {"transitions", std::move(edges)}};
}

Fsa fsa_from_json(const json& doc) {
  require_schema(doc, kFsaSchema);
  return guarded([&] {
    Fsa a;
    a.ap = PropSet(doc.at("ap").get<std::vector<std::string>>());
    std::vector<std::string> names;
    for (const auto& s : doc.at("states")) {
      names.push_back(s.at("name").get<std::string>());
      a.states.push_back({names.back(), a.ap.mask_of(s.value("label", std::vector<std::string>{}))});
    }
    a.initial = state_index(doc.at("initial"), names);
    for (const auto& e : doc.at("transitions")) {
      a.edges.push_back({state_index(e.at("from"), names), parse_guard(e.value("guard", std::string("true"))),
                         state_index(e.at("to"), names)});
    }
    a.validate();
    return a;
  });
}

json to_json(const TransitionSystem& ts) {
  json states = json::array();
  for (const auto& s : ts.states) states.push_back({{"name", s.name}, {"label", ts.ap.names_in(s.label)}});
  json edges = json::array();
  for (const auto& [from, to] : ts.edges) {
    edges.push_back({ts.states[static_cast<std::size_t>(from)].name, ts.states[static_cast<std::size_t>(to)].name});
  }
  return {{"schema", kTsSchema}, {"ap", ts.ap.names()}, {"states", std::move(states)}, {"transitions", std::move(edges)}};
}

TransitionSystem ts_from_json(const json& doc) {
  require_schema(doc, kTsSchema);
  return guarded([&] {
    TransitionSystem ts;
    ts.ap = PropSet(doc.at("ap").get<std::vector<std::string>>());
    std::vector<std::string> names;
    for (const auto& s : doc.at("states")) {
      names.push_back(s.at("name").get<std::string>());
      ts.states.push_back({names.back(), ts.ap.mask_of(s.value("label", std::vector<std::string>{}))});
    }
    for (const auto& e : doc.at("transitions")) {
      ts.edges.emplace_back(state_index(e.at(0), names), state_index(e.at(1), names));
    }
    ts.validate();
    return ts;
  });
}

std::string to_dot(const Fsa& a, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    const auto& s = a.states[i];
    os << "  s" << i << " [label=\"" << dot_escape(s.name) << "\\n" << dot_escape(a.ap.format(s.label)) << "\"];\n";
  }
  os << "  __start -> s" << a.initial << ";\n";
  for (const auto& e : a.edges) {
    os << "  s" << e.from << " -> s" << e.to << " [label=\"" << dot_escape(e.guard.to_string()) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ProductAutomaton& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < p.states.size(); ++i) {
    const auto& s = p.states[i];
    os << "  s" << i << " [label=\"(" << s.p << "," << s.q << ")\\n" << dot_escape(p.ap.format(s.label)) << "\"";
    if (std::find(p.initial.begin(), p.initial.end(), static_cast<int>(i)) != p.initial.end()) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < p.succ.size(); ++i) {
    for (int j : p.succ[i]) os << "  s" << i << " -> s" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plancheck::automata
