#include "plancheck/automata/guard.hpp"

#include <algorithm>
#include <cctype>

#include "plancheck/error.hpp"

namespace plancheck::automata {

struct Guard::Node {
  Op op = Op::truth;
  std::string atom;
  std::vector<Guard> operands;
};

Guard::Guard() : Guard(truth()) {}

Guard::Guard(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

Guard Guard::truth() {
  static const auto n = std::make_shared<const Node>(Node{Op::truth, {}, {}});
  return Guard(n);
}

Guard Guard::falsity() {
  static const auto n = std::make_shared<const Node>(Node{Op::falsity, {}, {}});
  return Guard(n);
}

Guard Guard::atom(std::string name) {
  return Guard(std::make_shared<const Node>(Node{Op::atom, std::move(name), {}}));
}

Guard::Op Guard::op() const { return node_->op; }
const std::string& Guard::atom_name() const { return node_->atom; }
const std::vector<Guard>& Guard::operands() const { return node_->operands; }

Guard Guard::operator!() const {
  switch (op()) {
    case Op::truth: return falsity();
    case Op::falsity: return truth();
    case Op::negation: return operands().front();
    default: return Guard(std::make_shared<const Node>(Node{Op::negation, {}, {*this}}));
  }
}

// Constant folding, flattening of nested same-kind operands, and removal of
// syntactic duplicates.
Guard Guard::combine(Op op, const std::vector<Guard>& gs) {
  const bool conj = op == Op::conjunction;
  std::vector<Guard> flat;
  auto add = [&](const Guard& g) {
    if (std::find(flat.begin(), flat.end(), g) == flat.end()) flat.push_back(g);
  };
  for (const auto& g : gs) {
    if (g.op() == (conj ? Op::falsity : Op::truth)) return conj ? falsity() : truth();
    if (g.op() == (conj ? Op::truth : Op::falsity)) continue;
    if (g.op() == op) {
      for (const auto& inner : g.operands()) add(inner);
    } else {
      add(g);
    }
  }
  if (flat.empty()) return conj ? truth() : falsity();
  if (flat.size() == 1) return flat.front();
  return Guard(std::make_shared<const Node>(Node{op, {}, std::move(flat)}));
}

Guard operator&&(const Guard& a, const Guard& b) { return Guard::combine(Guard::Op::conjunction, {a, b}); }
Guard operator||(const Guard& a, const Guard& b) { return Guard::combine(Guard::Op::disjunction, {a, b}); }
Guard Guard::all_of(const std::vector<Guard>& gs) { return combine(Op::conjunction, gs); }
Guard Guard::any_of(const std::vector<Guard>& gs) { return combine(Op::disjunction, gs); }

bool Guard::eval(const std::function<bool(const std::string&)>& holds) const {
  switch (op()) {
    case Op::truth: return true;
    case Op::falsity: return false;
    case Op::atom: return holds(atom_name());
    case Op::negation: return !operands().front().eval(holds);
    case Op::conjunction:
      for (const auto& g : operands()) {
        if (!g.eval(holds)) return false;
      }
      return true;
    case Op::disjunction:
      for (const auto& g : operands()) {
        if (g.eval(holds)) return true;
      }
      return false;
  }
  return false;
}

bool Guard::eval(const PropSet& ap, LabelSet label) const {
  return eval([&](const std::string& name) {
    auto i = ap.index(name);
    return i && (label & (LabelSet{1} << *i)) != 0;
  });
}

std::set<std::string> Guard::atoms() const {
  std::set<std::string> out;
  if (op() == Op::atom) out.insert(atom_name());
  for (const auto& g : operands()) {
    auto inner = g.atoms();
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

namespace {

// Calls f on every assignment to `names`; stops early when f returns false.
template <typename F>
bool all_assignments(const std::vector<std::string>& names, F&& f) {
  if (names.size() > 20) throw Error(ErrorKind::invalid_argument, "guard mentions too many propositions");
  const std::size_t n = std::size_t{1} << names.size();
  for (std::size_t m = 0; m < n; ++m) {
    auto holds = [&](const std::string& a) {
      auto it = std::find(names.begin(), names.end(), a);
      return (m >> static_cast<std::size_t>(it - names.begin())) & 1U;
    };
    if (!f(std::function<bool(const std::string&)>(holds))) return false;
  }
  return true;
}

std::vector<std::string> atom_list(const Guard& a, const Guard& b) {
  auto s = a.atoms();
  auto t = b.atoms();
  s.insert(t.begin(), t.end());
  return {s.begin(), s.end()};
}

}  // namespace

bool Guard::satisfiable() const {
  auto names = atom_list(*this, *this);
  return !all_assignments(names, [&](const auto& holds) { return !eval(holds); });
}

bool Guard::tautology() const {
  auto names = atom_list(*this, *this);
  return all_assignments(names, [&](const auto& holds) { return eval(holds); });
}

bool equivalent(const Guard& a, const Guard& b) {
  if (a == b) return true;
  auto names = atom_list(a, b);
  return all_assignments(names, [&](const auto& holds) { return a.eval(holds) == b.eval(holds); });
}

bool operator==(const Guard& a, const Guard& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.atom_name() != b.atom_name()) return false;
  return a.operands() == b.operands();
}

std::string quote_prop(const std::string& name) {
  bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ident = false;
  }
  static const std::set<std::string> reserved{"true", "false", "True", "False", "G", "F", "X", "U", "R", "W"};
  if (ident && reserved.count(name) == 0) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

namespace {

int precedence(Guard::Op op) {
  switch (op) {
    case Guard::Op::disjunction: return 0;
    case Guard::Op::conjunction: return 1;
    default: return 2;
  }
}

std::string render(const Guard& g, int context) {
  std::string out;
  switch (g.op()) {
    case Guard::Op::truth: return "true";
    case Guard::Op::falsity: return "false";
    case Guard::Op::atom: return quote_prop(g.atom_name());
    case Guard::Op::negation: return "!" + render(g.operands().front(), 2);
    case Guard::Op::conjunction:
    case Guard::Op::disjunction: {
      const char* sep = g.op() == Guard::Op::conjunction ? " & " : " | ";
      for (std::size_t i = 0; i < g.operands().size(); ++i) {
        if (i > 0) out += sep;
        out += render(g.operands()[i], precedence(g.op()) + 1);
      }
      break;
    }
  }
  return precedence(g.op()) < context ? "(" + out + ")" : out;
}

class GuardParser {
 public:
  explicit GuardParser(const std::string& text) : s_(text) {}

  Guard run() {
    Guard g = parse_or();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::syntax_error, "guard '" + s_ + "': " + msg, SourcePos{1, static_cast<int>(i_) + 1});
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  Guard parse_or() {
    std::vector<Guard> ops{parse_and()};
    while (eat("||") || eat("|")) ops.push_back(parse_and());
    return Guard::any_of(ops);
  }
  Guard parse_and() {
    std::vector<Guard> ops{parse_not()};
    while (eat("&&") || eat("&")) ops.push_back(parse_not());
    return Guard::all_of(ops);
  }
  Guard parse_not() {
    if (++depth_ > 500) fail("nested too deeply");
    Guard g = (eat("!") || eat("~")) ? !parse_not() : parse_atom();
    --depth_;
    return g;
  }
  Guard parse_atom() {
    skip_ws();
    if (eat("(")) {
      Guard g = parse_or();
      if (!eat(")")) fail("expected ')'");
      return g;
    }
    if (i_ < s_.size() && s_[i_] == '"') {
      ++i_;
      std::string name;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        name.push_back(s_[i_++]);
      }
      if (i_ >= s_.size()) fail("unterminated quoted proposition");
      ++i_;
      return Guard::atom(name);
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail("expected proposition");
    std::string word = s_.substr(start, i_ - start);
    if (word == "true" || word == "True") return Guard::truth();
    if (word == "false" || word == "False") return Guard::falsity();
    return Guard::atom(word);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int depth_ = 0;
};

}  // namespace

std::string Guard::to_string() const { return render(*this, 0); }

Guard parse_guard(const std::string& text) { return GuardParser(text).run(); }

}  // namespace plancheck::automata
