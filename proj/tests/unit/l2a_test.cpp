#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "shapes.hpp"
#include "plancheck/automata/io.hpp"
#include "plancheck/automata/ops.hpp"
#include "plancheck/l2a/compile.hpp"
#include "plancheck/l2a/mapping.hpp"
#include "plancheck/plan/parser.hpp"

using namespace plancheck;
using namespace plancheck::l2a;
using plancheck::automata::Fsa;

namespace {

PropositionMapping toy_mapping() {
  return PropositionMapping({
      {"a", {}, {"alpha"}, {}},
      {"b", {}, {"beta"}, {}},
      {"c", {}, {}, {}},
      {"s1", {}, {"sigma1"}, {}},
      {"s2", {}, {"sigma2"}, {}},
      {"s3", {}, {"sigma1", "sigma2"}, {}},
  });
}

PropositionMapping carla_like() {
  auto j = nlohmann::json::parse(R"({
    "schema": "plancheck.mapping/1",
    "defaults": [],
    "signatures": {"velocity_publisher": ["linear", "angular"]},
    "rules": [
      {"api": "velocity_publisher", "args": ["0", "0"], "props": ["stop"]},
      {"api": "velocity_publisher", "args": ["+", "0"], "props": ["move forward", "publish velocity"]},
      {"api": "velocity_publisher", "args": ["*", "+"], "props": ["turn left", "publish velocity"]},
      {"api": "velocity_publisher", "args": [], "props": ["publish velocity"]},
      {"api": "stop", "props": ["stop"]},
      {"api": "pedestrian_observed", "props": ["pedestrian"]},
      {"api": "omega1", "props": ["omega1"]},
      {"api": "omega2", "props": ["omega2"]},
      {"api": "omega3", "props": ["omega3"]},
      {"api": "sigma", "props": ["sigma"]}
    ]})");
  return PropositionMapping::from_json(j);
}

Fsa compile_src(const std::string& src, const PropositionMapping& m, CompileOptions o = {}) {
  return compile(plan::parse_plan(src), m, o);
}

// ---- reference interpreter ------------------------------------------------
//
// Runs the plan against a tape of sensor valuations, one per emitted state.
// If/while tests emit an empty state, conditions read the valuation of the
// most recent state.

struct Interp {
  const plan::PlanAst& ast;
  std::function<unsigned(std::size_t)> env;
  std::size_t limit;
  std::vector<std::set<std::string>> trace;

  struct Full {};
  struct Ret {};

  void emit(std::set<std::string> l) {
    trace.push_back(std::move(l));
    if (trace.size() >= limit) throw Full{};
  }

  bool sensor(const std::string& name) const {
    unsigned e = env(trace.size() - 1);
    if (name == "s1") return e & 1u;
    if (name == "s2") return e & 2u;
    if (name == "s3") return (e & 3u) == 3u;
    throw std::logic_error("sensor " + name);
  }

  bool eval(const plan::CondExpr& c) const {
    using K = plan::CondExpr::Kind;
    switch (c.kind) {
      case K::literal: return c.value;
      case K::call: return sensor(c.call.target);
      case K::negation: return !eval(c.operands[0]);
      case K::conjunction:
        for (const auto& o : c.operands)
          if (!eval(o)) return false;
        return true;
      case K::disjunction:
        for (const auto& o : c.operands)
          if (eval(o)) return true;
        return false;
    }
    return false;
  }

  void call(const plan::Call& c) {
    if (const auto* fn = ast.find(c.target)) {
      try {
        block(fn->body);
      } catch (const Ret&) {
      }
      return;
    }
    if (c.target == "a") emit({"alpha"});
    else if (c.target == "b") emit({"beta"});
    else emit({});
  }

  void block(const plan::Block& b) {
    for (const auto& s : b) {
      if (auto* x = std::get_if<plan::CallStmt>(&s.node)) {
        call(x->call);
      } else if (auto* x = std::get_if<plan::IfStmt>(&s.node)) {
        emit({});
        block(eval(x->cond) ? x->then_body : x->else_body);
      } else if (auto* x = std::get_if<plan::WhileStmt>(&s.node)) {
        emit({});
        while (eval(x->cond)) {
          std::size_t before = trace.size();
          block(x->body);
          if (trace.size() == before) emit({});
        }
      } else if (auto* x = std::get_if<plan::ForStmt>(&s.node)) {
        for (long i = 0; i < x->count; ++i) block(x->body);
      } else if (std::holds_alternative<plan::ReturnStmt>(s.node)) {
        throw Ret{};
      }
    }
  }

  void run() {
    const auto& body = ast.entry_function().body;
    bool restart = false;
    for (auto it = body.rbegin(); it != body.rend(); ++it) {
      if (std::holds_alternative<plan::AssignStmt>(it->node) || std::holds_alternative<plan::PassStmt>(it->node)) continue;
      restart = std::holds_alternative<plan::IfStmt>(it->node);
      break;
    }
    try {
      std::size_t before;
      do {
        before = trace.size();
        try {
          block(body);
        } catch (const Ret&) {
        }
      } while (restart && trace.size() > before);
      for (;;) emit({});
    } catch (const Full&) {
    }
  }
};

// Drives the automaton over the same tape; fails unless exactly one edge is
// enabled at every step.
std::vector<std::set<std::string>> run_fsa(const Fsa& a, const std::function<unsigned(std::size_t)>& env,
                                           std::size_t limit) {
  std::vector<std::set<std::string>> out;
  int s = a.initial;
  for (std::size_t i = 0; i < limit; ++i) {
    auto names = a.ap.names_in(a.states[static_cast<std::size_t>(s)].label);
    out.emplace_back(names.begin(), names.end());
    unsigned e = env(i);
    auto holds = [&](const std::string& p) {
      if (p == "sigma1") return (e & 1u) != 0;
      if (p == "sigma2") return (e & 2u) != 0;
      return false;
    };
    int next = -1, enabled = 0;
    for (const auto* edge : a.out_edges(s)) {
      if (edge->guard.eval(holds)) {
        next = edge->to;
        ++enabled;
      }
    }
    if (enabled != 1) {
      ADD_FAILURE() << "state " << s << " has " << enabled << " enabled edges at step " << i;
      break;
    }
    s = next;
  }
  return out;
}

class PlanGen {
 public:
  explicit PlanGen(std::uint64_t seed) : rng_(seed) {}

  std::string program() {
    int helpers = pick(0, 2);
    std::string out;
    for (int h = helpers - 1; h >= 0; --h) {
      out += "def h" + std::to_string(h) + "():\n";
      cur_fn_ = h;
      std::string body = block(1, 3, false);
      out += body.empty() ? "    pass\n" : body;
    }
    cur_fn_ = helpers;
    out += block(0, 4, true);
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string cond(int budget) {
    switch (budget <= 0 ? pick(0, 1) : pick(0, 5)) {
      case 0: return std::vector<std::string>{"s1()", "s2()", "s3()"}[static_cast<std::size_t>(pick(0, 2))];
      case 1: return pick(0, 3) == 0 ? (pick(0, 1) ? "True" : "False") : "s1()";
      case 2: return "not " + cond(budget - 1);
      case 3: return "(" + cond(budget - 1) + " and " + cond(budget - 1) + ")";
      case 4: return "(" + cond(budget - 1) + " or " + cond(budget - 1) + ")";
      default: return "s2()";
    }
  }

  std::string block(int indent, int depth, bool top) {
    std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
    std::string out;
    int n = pick(1, 3);
    for (int i = 0; i < n; ++i) {
      int k = pick(0, depth > 0 ? 10 : 5);
      switch (k) {
        case 0: case 1: out += pad + std::vector<std::string>{"a()", "b()", "c()"}[static_cast<std::size_t>(pick(0, 2))] + "\n"; break;
        case 2: out += pad + "sleep(1)\n"; break;
        case 3:
          if (cur_fn_ > 0) out += pad + "h" + std::to_string(pick(0, cur_fn_ - 1)) + "()\n";
          else out += pad + "x = 1\n";
          break;
        case 4: out += pad + (pick(0, 1) ? "pass\n" : "y += 2\n"); break;
        case 5:
          if (!top) out += pad + "return\n";
          else out += pad + "a()\n";
          break;
        case 6: case 7: {
          out += pad + "if " + cond(2) + ":\n" + block(indent + 1, depth - 1, false);
          if (pick(0, 1)) out += pad + "else:\n" + block(indent + 1, depth - 1, false);
          break;
        }
        case 8: case 9: out += pad + "while " + cond(2) + ":\n" + block(indent + 1, depth - 1, false); break;
        default:
          out += pad + "for i in range(" + std::to_string(pick(1, 2)) + "):\n" + block(indent + 1, depth - 1, false);
          break;
      }
    }
    return out;
  }

  std::mt19937_64 rng_;
  int cur_fn_ = 0;
};

}  // namespace

TEST(L2A, IfElseShape) {
  Fsa a = compile_src("if sigma():\n    omega1()\nelse:\n    omega2()\n", carla_like());
  EXPECT_TRUE(automata::iso_check(a, shapes::if_else_shape())) << automata::to_dot(a);
}

TEST(L2A, WhileShape) {
  Fsa a = compile_src("while sigma():\n    omega3()\n", carla_like());
  EXPECT_TRUE(automata::iso_check(a, shapes::while_shape())) << automata::to_dot(a);
  EXPECT_FALSE(automata::iso_check(a, shapes::while_shape_without_skip()));
}

TEST(L2A, EmptyPlanIsSingleSelfLoop) {
  Fsa a = compile_src("", toy_mapping());
  ASSERT_EQ(a.states.size(), 1u);
  EXPECT_EQ(a.states[0].label, 0u);
  ASSERT_EQ(a.edges.size(), 1u);
  EXPECT_EQ(a.edges[0].to, 0);
  EXPECT_TRUE(a.edges[0].guard.tautology());
}

TEST(L2A, SequenceEndsInTerminal) {
  Fsa a = compile_src("stop()\nvelocity_publisher(10, 0)\n", carla_like());
  ASSERT_EQ(a.states.size(), 3u);
  EXPECT_EQ(a.ap.names_in(a.states[0].label), std::vector<std::string>{"stop"});
  EXPECT_EQ(a.ap.names_in(a.states[1].label), (std::vector<std::string>{"move forward", "publish velocity"}));
  EXPECT_EQ(a.states[2].label, 0u);
}

TEST(L2A, ExplainMapping) {
  auto ast = plan::parse_plan(
      "if pedestrian_observed():\n    stop()\nelse:\n    velocity_publisher(linear=10, angular=0)\nfoo()\nsleep(1)\n");
  auto rows = explain_mapping(ast, carla_like());
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].kind, "sensor");
  EXPECT_EQ(rows[0].props, std::vector<std::string>{"pedestrian"});
  EXPECT_EQ(rows[1].props, std::vector<std::string>{"stop"});
  EXPECT_EQ(rows[2].kind, "action");
  EXPECT_EQ(rows[2].props, (std::vector<std::string>{"move forward", "publish velocity"}));
  EXPECT_EQ(rows[3].kind, "unmapped");
  EXPECT_EQ(rows[4].kind, "builtin");
}

TEST(L2A, KeywordArgumentsFollowSignature) {
  auto m = carla_like();
  auto ast = plan::parse_plan("velocity_publisher(angular=5, linear=0)\n");
  const auto* r = m.match(std::get<plan::CallStmt>(ast.entry_function().body[0].node).call);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->props, (std::vector<std::string>{"turn left", "publish velocity"}));
}

TEST(L2A, UnmappedCallErrors) {
  try {
    compile_src("foo()\n", carla_like());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unmapped_api);
  }
  Fsa a = compile_src("foo()\n", carla_like(), {.permissive = true});
  EXPECT_EQ(a.states.size(), 2u);
  EXPECT_EQ(a.states[0].label, 0u);
  // unmapped sensors fail even when permissive
  try {
    compile_src("if bar():\n    stop()\n", carla_like(), {.permissive = true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unmapped_api);
  }
}

TEST(L2A, InlineDepth) {
  std::string src;
  for (int i = 5; i > 0; --i) src += "def f" + std::to_string(i) + "():\n    f" + std::to_string(i - 1) + "()\n";
  src += "def f0():\n    a()\nf5()\n";
  EXPECT_EQ(compile_src(src, toy_mapping(), {.max_inline_depth = 6}).states.size(), 2u);
  try {
    compile_src(src, toy_mapping(), {.max_inline_depth = 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inline_depth_exceeded);
  }
}

TEST(L2A, EntryWithParamsRejected) {
  try {
    compile_src("def main(x):\n    a()\n", toy_mapping());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(L2A, DefaultsAndClears) {
  PropositionMapping m({{"down", {}, {"descend"}, {"slow"}}, {"wait", {}, {}, {}}}, {"slow", "limited"});
  Fsa a = compile_src("down()\nwait()\n", m);
  EXPECT_EQ(a.ap.names_in(a.states[0].label), (std::vector<std::string>{"descend", "limited"}));
  EXPECT_EQ(a.ap.names_in(a.states[1].label), (std::vector<std::string>{"limited", "slow"}));
  EXPECT_EQ(a.ap.names_in(a.states[2].label), (std::vector<std::string>{"limited", "slow"}));
}

TEST(L2A, MappingJsonRoundTrip) {
  auto m = carla_like();
  auto again = PropositionMapping::from_json(m.to_json());
  EXPECT_EQ(again.rules(), m.rules());
  EXPECT_EQ(again.signatures(), m.signatures());
}

TEST(L2A, AgreesWithInterpreterOnRandomPlans) {
  const auto m = toy_mapping();
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    std::string src = PlanGen(seed).program();
    SCOPED_TRACE(src);
    auto ast = plan::parse_plan(src);
    Fsa a = compile(ast, m);
    // every state has a complete, deterministic set of guards
    for (int s = 0; s < static_cast<int>(a.states.size()); ++s) {
      for (unsigned e = 0; e < 4; ++e) {
        int enabled = 0;
        for (const auto* edge : a.out_edges(s)) {
          enabled += edge->guard.eval([&](const std::string& p) {
            return p == "sigma1" ? (e & 1u) != 0 : p == "sigma2" ? (e & 2u) != 0 : false;
          });
        }
        ASSERT_EQ(enabled, 1) << "state " << s << " env " << e << "\n" << automata::to_dot(a);
      }
    }
    for (std::uint64_t tape = 0; tape < 8; ++tape) {
      std::mt19937_64 r(seed * 1000 + tape);
      std::vector<unsigned> bits(60);
      for (auto& b : bits) b = static_cast<unsigned>(r() & 3u);
      auto env = [&](std::size_t i) { return bits[i]; };
      Interp in{ast, env, bits.size(), {}};
      in.run();
      auto got = run_fsa(a, env, bits.size());
      ASSERT_EQ(got, in.trace) << automata::to_dot(a);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 400);
}
