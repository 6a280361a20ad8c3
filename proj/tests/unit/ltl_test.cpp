#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "shapes.hpp"
#include "ltl_oracle.hpp"
#include "plancheck/error.hpp"
#include "plancheck/ltl/buchi.hpp"
#include "plancheck/ltl/check.hpp"

using namespace plancheck;
using namespace plancheck::ltl;
using plancheck::automata::PropSet;

namespace {
Formula A(const char* n) { return Formula::atom(n); }

// Every word of length ≤ max_len, as lassos prefix·cycle^ω over the atoms.
std::vector<std::pair<oracle::Word, oracle::Word>> all_lassos(const std::vector<std::string>& atoms, std::size_t max_len) {
  std::vector<std::set<std::string>> letters;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms.size()); ++m) {
    std::set<std::string> l;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (m >> i & 1U) l.insert(atoms[i]);
    }
    letters.push_back(l);
  }
  std::vector<std::pair<oracle::Word, oracle::Word>> out;
  std::vector<oracle::Word> words{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<oracle::Word> longer;
    for (const auto& w : words) {
      for (const auto& l : letters) {
        auto w2 = w;
        w2.push_back(l);
        longer.push_back(w2);
      }
    }
    words = longer;
    for (const auto& w : words) {
      for (std::size_t loop = 0; loop < len; ++loop) {
        out.emplace_back(oracle::Word(w.begin(), w.begin() + static_cast<long>(loop)),
                         oracle::Word(w.begin() + static_cast<long>(loop), w.end()));
      }
    }
  }
  return out;
}
}  // namespace

TEST(LtlParse, SurfaceSyntax) {
  EXPECT_EQ(parse_ltl("G pedestrian -> X !\"publish velocity\""),
            implies(G(A("pedestrian")), X(!A("publish velocity"))));
  EXPECT_EQ(parse_ltl("true"), Formula::truth());
  EXPECT_EQ(parse_ltl("G (\"stop sign\" & car) -> X !\"publish velocity\""),
            implies(G(A("stop sign") && A("car")), X(!A("publish velocity"))));
  EXPECT_EQ(parse_ltl("G(pedestrian -> X !\"publish velocity\")"),
            G(implies(A("pedestrian"), X(!A("publish velocity")))));
}

TEST(LtlParse, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse_ltl("a -> b -> c"), implies(A("a"), implies(A("b"), A("c"))));
  EXPECT_EQ(parse_ltl("a | b & c"), A("a") || (A("b") && A("c")));
  EXPECT_EQ(parse_ltl("a U b U c"), U(A("a"), U(A("b"), A("c"))));
  EXPECT_EQ(parse_ltl("a & b U c"), A("a") && U(A("b"), A("c")));
  EXPECT_EQ(parse_ltl("!a U X b"), U(!A("a"), X(A("b"))));
  EXPECT_EQ(parse_ltl("\xc2\xac a \xe2\x88\xa7 b \xe2\x86\x92 c"), implies(!A("a") && A("b"), A("c")));
  EXPECT_EQ(parse_ltl("a && b || c => d"), implies((A("a") && A("b")) || A("c"), A("d")));
}

TEST(LtlParse, RoundTripAndErrors) {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    Formula f = oracle::random_formula(rng, {"a", "b c", "G"}, 3);
    EXPECT_EQ(parse_ltl(f.to_string()), f) << f.to_string();
  }
  for (const char* bad : {"", "a &", "(a", "a b", "X", "\"open", "a -> -> b"}) {
    try {
      parse_ltl(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::syntax_error);
      EXPECT_TRUE(e.position().has_value());
    }
  }
}

TEST(LtlBuchi, SmallShapes) {
  BuchiAutomaton p = to_buchi(A("p"));
  EXPECT_GE(p.states.size(), 1u);
  EXPECT_LE(p.states.size(), 2u);
  BuchiAutomaton all = to_buchi(G(Formula::truth()));
  EXPECT_TRUE(all.accepts_lasso({}, {{}}));
  BuchiAutomaton gp = to_buchi(G(A("p")));
  EXPECT_TRUE(gp.accepts_lasso({{"p"}}, {{"p"}}));
  EXPECT_FALSE(gp.accepts_lasso({{"p"}, {}}, {{"p"}}));
}

// Language equality against the direct semantics on every lasso word of
// length ≤ 6 over one atom, and ≤ 3 over two atoms.
TEST(LtlBuchi, LanguageMatchesSemantics) {
  const std::vector<std::string> one{"p"};
  const std::vector<std::string> two{"p", "q"};
  const auto words1 = all_lassos(one, 6);
  const auto words2 = all_lassos(two, 3);
  const std::vector<std::string> formulas{"p", "G p", "F p", "X p", "G F p", "F G p", "!p U p", "G (p -> X !p)",
                                          "p U q", "G (p -> F q)", "(G p) -> X !q", "F (p & X q)", "!(p U q) | G q"};
  for (const auto& text : formulas) {
    Formula f = parse_ltl(text);
    BuchiAutomaton b = to_buchi(f);
    const auto& words = f.atoms().size() > 1 ? words2 : words1;
    for (const auto& [prefix, cycle] : words) {
      ASSERT_EQ(b.accepts_lasso(prefix, cycle), oracle::eval_lasso(f, prefix, cycle)) << text;
      ASSERT_EQ(holds_on_lasso(f, prefix, cycle), oracle::eval_lasso(f, prefix, cycle)) << text;
    }
  }
}

TEST(LtlBuchi, TooLarge) {
  std::string text = "p0";
  for (int i = 1; i < 14; ++i) text += " & X p" + std::to_string(i);
  try {
    to_buchi(parse_ltl(text));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::formula_too_large);
  }
}

TEST(ModelCheck, Basics) {
  automata::Fsa left = shapes::if_else_shape();
  auto ts = automata::universal_ts(left.ap, {"sigma"});
  EXPECT_TRUE(model_check(left, ts, parse_ltl("G true")).holds);
  EXPECT_TRUE(model_check(left, ts, parse_ltl("G ((sigma & !omega1 & !omega2) -> X omega1)")).holds);
  Verdict v = model_check(left, ts, parse_ltl("G (sigma -> X omega2)"));
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_FALSE(v.counterexample->cycle.empty());
  auto j = to_json(v);
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_THROW(model_check(left, ts, parse_ltl("G unknown")), Error);
}

TEST(ModelCheck, DeadEndsStutter) {
  auto a = shapes::make_fsa({"done", "sigma"}, {{"p0", {}}, {"p1", {"done"}}}, 0, {{0, "sigma", 1}});
  auto ts = automata::universal_ts(a.ap, {"sigma"});
  // (p0, ∅) has no successor and repeats forever; (p1, ·) likewise
  EXPECT_FALSE(model_check(a, ts, parse_ltl("F done")).holds);
  EXPECT_TRUE(model_check(a, ts, parse_ltl("G (done -> G done)")).holds);
}

namespace {
oracle::Word labels_of(const std::vector<TraceStep>& steps) {
  oracle::Word w;
  for (const auto& s : steps) w.emplace_back(s.label.begin(), s.label.end());
  return w;
}
}  // namespace

TEST(ModelCheck, AgreesWithBruteForceAndReplays) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 150; ++i) {
    auto rc = oracle::random_case(rng);
    Verdict v = model_check(rc.product, rc.phi);
    auto brute = oracle::brute_force_check(rc.product, rc.phi);
    ASSERT_EQ(v.holds, brute.holds) << rc.phi.to_string();
    if (!v.holds) {
      const auto& cx = *v.counterexample;
      EXPECT_FALSE(oracle::eval_lasso(rc.phi, labels_of(cx.prefix), labels_of(cx.cycle)));
      // lasso follows product edges (dead ends stutter)
      std::vector<TraceStep> all = cx.prefix;
      all.insert(all.end(), cx.cycle.begin(), cx.cycle.end());
      EXPECT_NE(std::find(rc.product.initial.begin(), rc.product.initial.end(), all.front().state), rc.product.initial.end());
      for (std::size_t k = 0; k < all.size(); ++k) {
        const int from = all[k].state;
        const int to = k + 1 < all.size() ? all[k + 1].state : cx.cycle.front().state;
        auto succ = rc.product.succ[static_cast<std::size_t>(from)];
        if (succ.empty()) succ.push_back(from);
        EXPECT_NE(std::find(succ.begin(), succ.end(), to), succ.end());
      }
    }
    // duality: φ and ¬φ cannot both hold on a non-empty product
    if (v.holds) EXPECT_FALSE(model_check(rc.product, !rc.phi).holds);
  }
}
