#include "plancheck/ltl/formula.hpp"

#include <cctype>
#include <vector>

#include "plancheck/automata/guard.hpp"
#include "plancheck/error.hpp"

namespace plancheck::ltl {

struct Formula::Node {
  Op op = Op::truth;
  std::string name;
  std::vector<Formula> kids;
};

Formula::Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

Formula Formula::truth() {
  static const auto n = std::make_shared<const Node>(Node{Op::truth, {}, {}});
  return Formula(n);
}

Formula Formula::falsity() {
  static const auto n = std::make_shared<const Node>(Node{Op::falsity, {}, {}});
  return Formula(n);
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Op::atom, std::move(name), {}}));
}

Formula Formula::unary(Op op, Formula a) {
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(a)}}));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(a), std::move(b)}}));
}

Formula::Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
bool Formula::is_unary() const { return node_->kids.size() == 1; }
bool Formula::is_binary() const { return node_->kids.size() == 2; }

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  if (op() == Op::atom) out.insert(name());
  for (const auto& k : node_->kids) {
    auto inner = k.atoms();
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

int Formula::temporal_operators() const {
  int n = 0;
  switch (op()) {
    case Op::next:
    case Op::eventually:
    case Op::always:
    case Op::until:
    case Op::release: n = 1; break;
    default: break;
  }
  for (const auto& k : node_->kids) n += k.temporal_operators();
  return n;
}

namespace {

const char* symbol(Formula::Op op) {
  switch (op) {
    case Formula::Op::negation: return "!";
    case Formula::Op::conjunction: return " & ";
    case Formula::Op::disjunction: return " | ";
    case Formula::Op::implies: return " -> ";
    case Formula::Op::next: return "X ";
    case Formula::Op::eventually: return "F ";
    case Formula::Op::always: return "G ";
    case Formula::Op::until: return " U ";
    case Formula::Op::release: return " R ";
    default: return "";
  }
}

std::string wrap(const Formula& f) {
  std::string s = f.to_string();
  return f.is_binary() ? "(" + s + ")" : s;
}

}  // namespace

std::string Formula::to_string() const {
  switch (op()) {
    case Op::truth: return "true";
    case Op::falsity: return "false";
    case Op::atom: return automata::quote_prop(name());
    default: break;
  }
  if (is_unary()) return symbol(op()) + wrap(lhs());
  return wrap(lhs()) + symbol(op()) + wrap(rhs());
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.op() == b.op() && a.name() == b.name() && a.node_->kids == b.node_->kids;
}

Formula operator!(const Formula& a) { return Formula::unary(Formula::Op::negation, a); }
Formula operator&&(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::conjunction, a, b); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::disjunction, a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::implies, a, b); }
Formula X(const Formula& a) { return Formula::unary(Formula::Op::next, a); }
Formula F(const Formula& a) { return Formula::unary(Formula::Op::eventually, a); }
Formula G(const Formula& a) { return Formula::unary(Formula::Op::always, a); }
Formula U(const Formula& a, const Formula& b) { return Formula::binary(Formula::Op::until, a, b); }

namespace {

enum class T { atom, lparen, rparen, neg, conj, disj, impl, next, event, always, until, truth, falsity, end };

struct Tok {
  T kind;
  std::string text;
  int column;
};

class LtlParser {
 public:
  explicit LtlParser(const std::string& text) : s_(text) { lex(); }

  Formula run() {
    Formula f = parse_implies();
    if (peek().kind != T::end) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(int column, const std::string& msg) const {
    throw Error(ErrorKind::syntax_error, "in formula: " + msg, SourcePos{1, column});
  }
  [[noreturn]] void fail(const Tok& t, const std::string& msg) const { fail(t.column, msg); }

  void lex() {
    static const std::vector<std::pair<std::string, T>> symbols{
        {"->", T::impl}, {"=>", T::impl}, {"\xe2\x86\x92", T::impl}, {"&&", T::conj}, {"||", T::disj},
        {"\xe2\x88\xa7", T::conj}, {"\xe2\x88\xa8", T::disj}, {"\xc2\xac", T::neg}, {"&", T::conj},
        {"|", T::disj}, {"!", T::neg}, {"~", T::neg}, {"(", T::lparen}, {")", T::rparen}};
    std::size_t i = 0;
    while (i < s_.size()) {
      const char c = s_[i];
      const int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      bool matched = false;
      for (const auto& [text, kind] : symbols) {
        if (s_.compare(i, text.size(), text) == 0) {
          toks_.push_back({kind, text, col});
          i += text.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (c == '"') {
        std::string name;
        ++i;
        while (i < s_.size() && s_[i] != '"') {
          if (s_[i] == '\\' && i + 1 < s_.size()) ++i;
          name.push_back(s_[i++]);
        }
        if (i >= s_.size()) fail(col, "unterminated quoted proposition");
        ++i;
        if (name.empty()) fail(col, "empty proposition name");
        toks_.push_back({T::atom, name, col});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        std::string word = s_.substr(i, j - i);
        T kind = T::atom;
        if (word == "X") kind = T::next;
        else if (word == "F") kind = T::event;
        else if (word == "G") kind = T::always;
        else if (word == "U") kind = T::until;
        else if (word == "true" || word == "True") kind = T::truth;
        else if (word == "false" || word == "False") kind = T::falsity;
        toks_.push_back({kind, word, col});
        i = j;
        continue;
      }
      fail(col, "unexpected character");
    }
    toks_.push_back({T::end, "end of input", static_cast<int>(s_.size()) + 1});
  }

  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (peek().kind == T::impl) {
      next();
      return implies(lhs, parse_implies());
    }
    return lhs;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == T::disj) {
      next();
      f = f || parse_and();
    }
    return f;
  }
  Formula parse_and() {
    Formula f = parse_until();
    while (peek().kind == T::conj) {
      next();
      f = f && parse_until();
    }
    return f;
  }
  Formula parse_until() {
    Formula lhs = parse_unary();
    if (peek().kind == T::until) {
      next();
      return U(lhs, parse_until());
    }
    return lhs;
  }
  Formula parse_unary() {
    if (++depth_ > 500) fail(peek(), "formula nested too deeply");
    Formula f = parse_unary_inner();
    --depth_;
    return f;
  }
  Formula parse_unary_inner() {
    const Tok& t = next();
    switch (t.kind) {
      case T::neg: return !parse_unary();
      case T::next: return X(parse_unary());
      case T::event: return F(parse_unary());
      case T::always: return G(parse_unary());
      case T::truth: return Formula::truth();
      case T::falsity: return Formula::falsity();
      case T::atom: return Formula::atom(t.text);
      case T::lparen: {
        Formula f = parse_implies();
        if (peek().kind != T::rparen) fail(peek(), "expected ')', found '" + peek().text + "'");
        next();
        return f;
      }
      default: fail(t, "expected a formula, found '" + t.text + "'");
    }
  }

  const std::string& s_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

Formula nnf(const Formula& f, bool negate) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::truth: return negate ? Formula::falsity() : f;
    case Op::falsity: return negate ? Formula::truth() : f;
    case Op::atom: return negate ? !f : f;
    case Op::negation: return nnf(f.lhs(), !negate);
    case Op::conjunction:
      return negate ? nnf(f.lhs(), true) || nnf(f.rhs(), true) : nnf(f.lhs(), false) && nnf(f.rhs(), false);
    case Op::disjunction:
      return negate ? nnf(f.lhs(), true) && nnf(f.rhs(), true) : nnf(f.lhs(), false) || nnf(f.rhs(), false);
    case Op::implies:
      return negate ? nnf(f.lhs(), false) && nnf(f.rhs(), true) : nnf(f.lhs(), true) || nnf(f.rhs(), false);
    case Op::next: return X(nnf(f.lhs(), negate));
    case Op::eventually:
      return negate ? Formula::binary(Op::release, Formula::falsity(), nnf(f.lhs(), true))
                    : U(Formula::truth(), nnf(f.lhs(), false));
    case Op::always:
      return negate ? U(Formula::truth(), nnf(f.lhs(), true))
                    : Formula::binary(Op::release, Formula::falsity(), nnf(f.lhs(), false));
    case Op::until:
      return negate ? Formula::binary(Op::release, nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : U(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::release:
      return negate ? U(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Formula::binary(Op::release, nnf(f.lhs(), false), nnf(f.rhs(), false));
  }
  return f;
}

}  // namespace

Formula parse_ltl(const std::string& text) { return LtlParser(text).run(); }

Formula to_nnf(const Formula& f) { return nnf(f, false); }

}  // namespace plancheck::ltl
