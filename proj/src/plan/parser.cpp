#include "plancheck/plan/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "plancheck/plan/validate.hpp"

namespace plancheck::plan {
namespace {

enum class Tok { name, number, string, op, newline, indent, dedent, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
};

[[noreturn]] void syntax(const SourcePos& pos, const std::string& msg) {
  throw Error(ErrorKind::syntax_error, msg, pos);
}

[[noreturn]] void unsupported(const SourcePos& pos, const std::string& msg) {
  throw Error(ErrorKind::unknown_construct, msg, pos);
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Python-style tokenizer: emits NEWLINE at the end of each logical line and
// INDENT/DEDENT when the leading column changes. Newlines inside brackets
// continue the logical line.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    indents_.push_back(0);
    while (i_ < src_.size()) {
      if (depth_ == 0 && at_line_start_) {
        if (handle_line_start()) continue;
      }
      char c = src_[i_];
      if (c == '\n') {
        SourcePos eol = here();
        advance();
        if (depth_ == 0 && line_has_tokens_) emit(Tok::newline, "", eol);
        if (depth_ == 0) {
          at_line_start_ = true;
          line_has_tokens_ = false;
        }
        continue;
      }
      if (c == '\r' || c == ' ') {
        advance();
        continue;
      }
      if (c == '\t') {
        if (depth_ > 0) {
          advance();
          continue;
        }
        syntax(here(), "tab character outside indentation");
      }
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
        continue;
      }
      lex_token();
    }
    if (depth_ > 0) syntax(here(), "unexpected end of input: unclosed bracket");
    if (line_has_tokens_) emit(Tok::newline, "", here());
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(Tok::dedent, "", here());
    }
    emit(Tok::end, "", here());
    return std::move(tokens_);
  }

 private:
  SourcePos here() const { return SourcePos{line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void emit(Tok kind, std::string text, SourcePos pos, std::size_t b = 0, std::size_t e = 0) {
    tokens_.push_back(Token{kind, std::move(text), pos, b, e});
    if (kind != Tok::newline && kind != Tok::indent && kind != Tok::dedent) {
      line_has_tokens_ = true;
    }
  }

  // Measures indentation of the next non-blank line. Returns true if it
  // consumed a blank or comment-only line.
  bool handle_line_start() {
    std::size_t j = i_;
    int width = 0;
    while (j < src_.size() && (src_[j] == ' ' || src_[j] == '\t' || src_[j] == '\r')) {
      if (src_[j] == '\t') {
        SourcePos p{line_, width + 1};
        syntax(p, "tabs are not allowed in indentation");
      }
      if (src_[j] == ' ') ++width;
      ++j;
    }
    if (j >= src_.size() || src_[j] == '\n' || src_[j] == '#') {
      while (i_ < src_.size() && src_[i_] != '\n') advance();
      if (i_ < src_.size()) advance();
      return true;
    }
    while (i_ < j) advance();
    at_line_start_ = false;
    SourcePos pos = here();
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit(Tok::indent, "", pos);
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit(Tok::dedent, "", pos);
      }
      if (width != indents_.back()) syntax(pos, "dedent does not match any enclosing indentation level");
    }
    line_has_tokens_ = false;
    return false;
  }

  void lex_token() {
    SourcePos pos = here();
    std::size_t start = i_;
    char c = src_[i_];
    if (is_name_start(c)) {
      while (i_ < src_.size() && is_name_char(src_[i_])) advance();
      emit(Tok::name, std::string(src_.substr(start, i_ - start)), pos, start, i_);
      return;
    }
    if (is_digit(c) || (c == '.' && i_ + 1 < src_.size() && is_digit(src_[i_ + 1]))) {
      while (i_ < src_.size() && (is_digit(src_[i_]) || src_[i_] == '.' || src_[i_] == '_')) advance();
      if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
        advance();
        if (i_ < src_.size() && (src_[i_] == '+' || src_[i_] == '-')) advance();
        if (i_ >= src_.size() || !is_digit(src_[i_])) syntax(here(), "malformed number exponent");
        while (i_ < src_.size() && is_digit(src_[i_])) advance();
      }
      if (i_ < src_.size() && is_name_char(src_[i_])) syntax(here(), "malformed number");
      emit(Tok::number, std::string(src_.substr(start, i_ - start)), pos, start, i_);
      return;
    }
    if (c == '"' || c == '\'') {
      advance();
      while (true) {
        if (i_ >= src_.size() || src_[i_] == '\n') syntax(pos, "unterminated string literal");
        if (src_[i_] == '\\') {
          advance();
          if (i_ >= src_.size() || src_[i_] == '\n') syntax(pos, "unterminated string literal");
          advance();
          continue;
        }
        if (src_[i_] == c) {
          advance();
          break;
        }
        advance();
      }
      emit(Tok::string, std::string(src_.substr(start, i_ - start)), pos, start, i_);
      return;
    }
    static const char* const two_char[] = {"==", "!=", "<=", ">=", "+=", "-=", "*=", "/=",
                                           "%=", "**", "//", "->", ":="};
    for (const char* op : two_char) {
      if (src_.substr(i_, 2) == op) {
        advance();
        advance();
        emit(Tok::op, op, pos, start, i_);
        return;
      }
    }
    static const std::string single = "()[]{}:,.=+-*/%<>!~&|^@;";
    if (single.find(c) != std::string::npos) {
      if (c == '(' || c == '[' || c == '{') ++depth_;
      if (c == ')' || c == ']' || c == '}') {
        if (depth_ == 0) syntax(pos, std::string("unmatched '") + c + "'");
        --depth_;
      }
      advance();
      emit(Tok::op, std::string(1, c), pos, start, i_);
      return;
    }
    syntax(pos, "unexpected character");
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  bool at_line_start_ = true;
  bool line_has_tokens_ = false;
  std::vector<int> indents_;
  std::vector<Token> tokens_;
};

const std::set<std::string>& unsupported_keywords() {
  static const std::set<std::string> kw{
      "class", "import", "from",  "try",   "except", "finally", "with",   "lambda",
      "break", "continue", "yield", "global", "nonlocal", "async", "await", "del",
      "raise", "assert"};
  return kw;
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks) : src_(src), toks_(std::move(toks)) {}

  PlanAst parse_program() {
    PlanAst ast;
    FunctionDef main;
    main.name = kImplicitEntry;
    main.pos = SourcePos{1, 1};
    std::vector<FunctionDef> defs;
    while (!at(Tok::end)) {
      if (at(Tok::newline)) {
        next();
        continue;
      }
      if (at(Tok::indent)) syntax(peek().pos, "unexpected indent");
      if (at(Tok::dedent)) syntax(peek().pos, "unexpected dedent");
      if (at_name("def")) {
        FunctionDef f = parse_def();
        for (const auto& d : defs) {
          if (d.name == f.name) syntax(f.pos, "duplicate definition of '" + f.name + "'");
        }
        if (f.name == kImplicitEntry) syntax(f.pos, "reserved function name");
        defs.push_back(std::move(f));
        continue;
      }
      main.body.push_back(parse_stmt());
    }
    if (!main.body.empty() || defs.empty()) {
      ast.functions.push_back(std::move(main));
      ast.entry = kImplicitEntry;
      for (auto& d : defs) ast.functions.push_back(std::move(d));
    } else {
      ast.entry = defs.front().name;
      ast.functions = std::move(defs);
    }
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_op(std::string_view op, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::op && peek(ahead).text == op;
  }
  bool at_name(std::string_view name) const { return at(Tok::name) && peek().text == name; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::newline: return "end of line";
      case Tok::indent: return "indent";
      case Tok::dedent: return "dedent";
      case Tok::end: return "end of input";
      default: return "'" + t.text + "'";
    }
  }

  const Token& expect_op(std::string_view op) {
    if (!at_op(op)) syntax(peek().pos, "expected '" + std::string(op) + "', found " + describe(peek()));
    return next();
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (!at(kind)) syntax(peek().pos, "expected " + what + ", found " + describe(peek()));
    return next();
  }
  std::string expect_identifier(const std::string& what) {
    const Token& t = expect(Tok::name, what);
    if (is_keyword(t.text)) syntax(t.pos, "expected " + what + ", found keyword '" + t.text + "'");
    return t.text;
  }

  static bool is_keyword(const std::string& s) {
    static const std::set<std::string> kw{"def",  "if",    "elif", "else", "while", "for",
                                          "in",   "return", "pass", "and",  "or",    "not",
                                          "True", "False", "None"};
    return kw.count(s) > 0 || unsupported_keywords().count(s) > 0;
  }

  FunctionDef parse_def() {
    FunctionDef f;
    f.pos = next().pos;  // def
    f.name = expect_identifier("function name");
    expect_op("(");
    while (!at_op(")")) {
      std::string p = expect_identifier("parameter name");
      if (at_op(":") || at_op("=")) unsupported(peek().pos, "parameter annotations and defaults are not supported");
      f.params.push_back(std::move(p));
      if (!at_op(",")) break;
      next();
    }
    expect_op(")");
    if (at_op("->")) unsupported(peek().pos, "return annotations are not supported");
    expect_op(":");
    f.body = parse_suite();
    return f;
  }

  Block parse_suite() {
    if (++blocks_ > kMaxNesting) syntax(peek().pos, "blocks nested too deeply");
    Block body = parse_suite_inner();
    --blocks_;
    return body;
  }

  Block parse_suite_inner() {
    Block body;
    if (at(Tok::newline)) {
      next();
      expect(Tok::indent, "an indented block");
      while (!at(Tok::dedent) && !at(Tok::end)) {
        if (at(Tok::newline)) {
          next();
          continue;
        }
        if (at(Tok::indent)) syntax(peek().pos, "unexpected indent");
        if (at_name("def")) unsupported(peek().pos, "nested function definitions are not supported");
        body.push_back(parse_stmt());
      }
      if (at(Tok::dedent)) next();
      return body;
    }
    body.push_back(parse_simple_stmt());
    return body;
  }

  Stmt parse_stmt() {
    const Token& t = peek();
    if (t.kind == Tok::name) {
      if (t.text == "if") return parse_if();
      if (t.text == "while") return parse_while();
      if (t.text == "for") return parse_for();
      if (t.text == "def") unsupported(t.pos, "nested function definitions are not supported");
      if (t.text == "elif" || t.text == "else") syntax(t.pos, "'" + t.text + "' without matching 'if'");
    }
    return parse_simple_stmt();
  }

  void end_simple(const char* what) {
    if (at_op(";")) unsupported(peek().pos, "multiple statements on one line are not supported");
    if (!at(Tok::newline) && !at(Tok::end)) {
      unsupported(peek().pos, std::string("unexpected ") + describe(peek()) + " after " + what);
    }
    if (at(Tok::newline)) next();
  }

  Stmt parse_simple_stmt() {
    const Token& t = peek();
    Stmt s;
    s.pos = t.pos;
    if (t.kind != Tok::name) {
      if (t.kind == Tok::number || t.kind == Tok::string || t.kind == Tok::op) {
        unsupported(t.pos, "expression statements other than calls are not supported");
      }
      syntax(t.pos, "expected a statement, found " + describe(t));
    }
    if (unsupported_keywords().count(t.text) > 0) {
      unsupported(t.pos, "'" + t.text + "' is outside the plan grammar");
    }
    if (t.text == "if" || t.text == "while" || t.text == "for") {
      syntax(t.pos, "compound statement not allowed on the same line");
    }
    if (t.text == "pass") {
      next();
      s.node = PassStmt{};
      end_simple("pass");
      return s;
    }
    if (t.text == "return") {
      next();
      ReturnStmt r;
      if (!at(Tok::newline) && !at(Tok::end)) r.expr = take_expr_until_line_end();
      s.node = std::move(r);
      end_simple("return");
      return s;
    }
    if (is_keyword(t.text)) syntax(t.pos, "unexpected keyword '" + t.text + "'");
    if (at_op("(", 1)) {
      Call c = parse_call();
      s.node = CallStmt{std::move(c)};
      end_simple("call");
      return s;
    }
    if (at_op(".", 1)) unsupported(t.pos, "attribute access is not supported");
    if (at_op("[", 1) || at_op(",", 1)) unsupported(t.pos, "only simple name assignment is supported");
    static const std::set<std::string> assign_ops{"=", "+=", "-=", "*=", "/=", "%="};
    if (peek(1).kind == Tok::op && assign_ops.count(peek(1).text) > 0) {
      AssignStmt a;
      a.name = next().text;
      a.op = next().text;
      if (at(Tok::newline) || at(Tok::end)) syntax(peek().pos, "expected expression after '" + a.op + "'");
      a.expr = take_expr_until_line_end();
      s.node = std::move(a);
      end_simple("assignment");
      return s;
    }
    if (peek(1).kind == Tok::op && peek(1).text == ":") {
      unsupported(t.pos, "annotated assignments are not supported");
    }
    unsupported(t.pos, "expression statements other than calls are not supported");
  }

  Stmt parse_if() {
    Stmt s;
    s.pos = next().pos;  // if / elif
    IfStmt node;
    node.cond = parse_cond();
    expect_op(":");
    node.then_body = parse_suite();
    if (at_name("elif")) {
      node.else_body.push_back(parse_if());
    } else if (at_name("else")) {
      next();
      expect_op(":");
      node.else_body = parse_suite();
    }
    s.node = std::move(node);
    return s;
  }

  Stmt parse_while() {
    Stmt s;
    s.pos = next().pos;
    WhileStmt node;
    node.cond = parse_cond();
    expect_op(":");
    node.body = parse_suite();
    if (at_name("else")) unsupported(peek().pos, "'while ... else' is not supported");
    s.node = std::move(node);
    return s;
  }

  Stmt parse_for() {
    Stmt s;
    s.pos = next().pos;
    ForStmt node;
    node.var = expect_identifier("loop variable");
    if (!at_name("in")) syntax(peek().pos, "expected 'in', found " + describe(peek()));
    next();
    if (!at_name("range")) unsupported(peek().pos, "only 'for _ in range(N)' loops are supported");
    next();
    expect_op("(");
    const Token& n = peek();
    if (n.kind != Tok::number || !at_op(")", 1)) {
      unsupported(n.pos, "for-loop count must be a single integer literal");
    }
    next();
    for (char c : n.text) {
      if (!is_digit(c)) unsupported(n.pos, "for-loop count must be a positive integer literal");
    }
    try {
      node.count = std::stol(n.text);
    } catch (const std::exception&) {
      unsupported(n.pos, "for-loop count out of range");
    }
    if (node.count < 1 || node.count > 10000) {
      unsupported(n.pos, "for-loop count must be between 1 and 10000");
    }
    expect_op(")");
    expect_op(":");
    node.body = parse_suite();
    if (at_name("else")) unsupported(peek().pos, "'for ... else' is not supported");
    s.node = std::move(node);
    return s;
  }

  CondExpr parse_cond() {
    CondExpr e = parse_or();
    if (peek().kind == Tok::op && peek().text != ":") {
      unsupported(peek().pos, "conditions must combine boolean API calls with not/and/or");
    }
    return e;
  }

  CondExpr parse_or() {
    std::vector<CondExpr> ops;
    ops.push_back(parse_and());
    while (at_name("or")) {
      next();
      ops.push_back(parse_and());
    }
    return CondExpr::any_of(std::move(ops));
  }

  CondExpr parse_and() {
    std::vector<CondExpr> ops;
    ops.push_back(parse_not());
    while (at_name("and")) {
      next();
      ops.push_back(parse_not());
    }
    return CondExpr::all_of(std::move(ops));
  }

  CondExpr parse_not() {
    if (++nesting_ > kMaxNesting) syntax(peek().pos, "condition nested too deeply");
    CondExpr e;
    if (at_name("not")) {
      next();
      e = CondExpr::negate(parse_not());
    } else {
      e = parse_cond_atom();
    }
    --nesting_;
    return e;
  }

  CondExpr parse_cond_atom() {
    const Token& t = peek();
    if (at_op("(")) {
      next();
      CondExpr e = parse_or();
      expect_op(")");
      return e;
    }
    if (t.kind == Tok::name) {
      if (t.text == "True" || t.text == "False") {
        next();
        return CondExpr::literal(t.text == "True");
      }
      if (is_keyword(t.text)) syntax(t.pos, "unexpected keyword '" + t.text + "' in condition");
      if (at_op("(", 1)) return CondExpr::of_call(parse_call());
      if (at_op(".", 1)) unsupported(t.pos, "attribute access is not supported");
      unsupported(t.pos, "conditions may only reference boolean API calls");
    }
    if (t.kind == Tok::number || t.kind == Tok::string) {
      unsupported(t.pos, "conditions may only reference boolean API calls");
    }
    syntax(t.pos, "expected condition, found " + describe(t));
  }

  Call parse_call() {
    Call c;
    const Token& name = next();
    c.target = name.text;
    c.pos = name.pos;
    expect_op("(");
    while (!at_op(")")) {
      Arg a;
      if (peek().kind == Tok::name && at_op("=", 1)) {
        a.keyword = next().text;
        next();
      }
      if (at_op(",") || at_op(")")) syntax(peek().pos, "expected argument expression");
      a.text = take_expr_until_delim();
      a.sign = classify_literal(a.text, &a.value);
      c.args.push_back(std::move(a));
      if (!at_op(",")) break;
      next();
    }
    expect_op(")");
    return c;
  }

  // Opaque expression text up to the next top-level ',' or ')'.
  std::string take_expr_until_delim() {
    int depth = 0;
    std::size_t first = pos_;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::end || t.kind == Tok::newline) syntax(t.pos, "unexpected " + describe(t) + " in argument list");
      if (t.kind == Tok::op) {
        if (depth == 0 && (t.text == "," || t.text == ")")) break;
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
      }
      next();
    }
    return slice(first, pos_);
  }

  std::string take_expr_until_line_end() {
    std::size_t first = pos_;
    while (!at(Tok::newline) && !at(Tok::end)) {
      if (at_op(";")) unsupported(peek().pos, "multiple statements on one line are not supported");
      next();
    }
    return slice(first, pos_);
  }

  // Token texts joined with a single space wherever the source had a gap, so
  // comments and line continuations inside brackets drop out.
  std::string slice(std::size_t first, std::size_t last) const {
    std::string out;
    for (std::size_t k = first; k < last; ++k) {
      if (k > first && toks_[k].begin != toks_[k - 1].end) out.push_back(' ');
      out += toks_[k].text;
    }
    return out;
  }

  std::string_view src_;
  static constexpr int kMaxNesting = 200;

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
  int blocks_ = 0;
};

// ---- pretty printer ----

enum class Prec { disjunction = 0, conjunction = 1, negation = 2, atom = 3 };

Prec prec_of(const CondExpr& e) {
  switch (e.kind) {
    case CondExpr::Kind::disjunction: return Prec::disjunction;
    case CondExpr::Kind::conjunction: return Prec::conjunction;
    case CondExpr::Kind::negation: return Prec::negation;
    default: return Prec::atom;
  }
}

std::string render(const CondExpr& e, Prec context) {
  std::string out;
  switch (e.kind) {
    case CondExpr::Kind::literal: return e.value ? "True" : "False";
    case CondExpr::Kind::call: return to_string(e.call);
    case CondExpr::Kind::negation: out = "not " + render(e.operands.front(), Prec::negation); break;
    case CondExpr::Kind::conjunction:
    case CondExpr::Kind::disjunction: {
      const char* sep = e.kind == CondExpr::Kind::conjunction ? " and " : " or ";
      // Nested operands of the same kind get parentheses so that the
      // n-ary grouping survives a round trip.
      Prec inner = static_cast<Prec>(static_cast<int>(prec_of(e)) + 1);
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) out += sep;
        out += render(e.operands[i], inner);
      }
      break;
    }
  }
  if (prec_of(e) < context) return "(" + out + ")";
  return out;
}

void print_block(std::ostringstream& os, const Block& block, int indent);

void print_stmt(std::ostringstream& os, const Stmt& s, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CallStmt>) {
          os << pad << to_string(node.call) << "\n";
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          os << pad << "if " << to_string(node.cond) << ":\n";
          print_block(os, node.then_body, indent + 1);
          if (!node.else_body.empty()) {
            os << pad << "else:\n";
            print_block(os, node.else_body, indent + 1);
          }
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          os << pad << "while " << to_string(node.cond) << ":\n";
          print_block(os, node.body, indent + 1);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          os << pad << "for " << node.var << " in range(" << node.count << "):\n";
          print_block(os, node.body, indent + 1);
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          os << pad << node.name << " " << node.op << " " << node.expr << "\n";
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          os << pad << "return" << (node.expr.empty() ? "" : " " + node.expr) << "\n";
        } else {
          os << pad << "pass\n";
        }
      },
      s.node);
}

void print_block(std::ostringstream& os, const Block& block, int indent) {
  if (block.empty()) {
    os << std::string(static_cast<std::size_t>(indent) * 4, ' ') << "pass\n";
    return;
  }
  for (const auto& s : block) print_stmt(os, s, indent);
}

}  // namespace

std::string to_string(const Call& call) {
  std::string out = call.target + "(";
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    if (i > 0) out += ", ";
    if (!call.args[i].keyword.empty()) out += call.args[i].keyword + "=";
    out += call.args[i].text;
  }
  return out + ")";
}

std::string to_string(const CondExpr& cond) { return render(cond, Prec::disjunction); }

PlanAst parse_plan(std::string_view source) {
  Lexer lexer(source);
  Parser parser(source, lexer.run());
  PlanAst ast = parser.parse_program();
  std::vector<std::string> cycle = find_call_cycle(ast);
  if (!cycle.empty()) {
    std::string path;
    for (const auto& n : cycle) path += (path.empty() ? "" : " -> ") + n;
    const FunctionDef* f = ast.find(cycle.front());
    throw Error(ErrorKind::recursion_error, "recursive call cycle: " + path,
                f != nullptr ? std::optional<SourcePos>(f->pos) : std::nullopt);
  }
  return ast;
}

std::string pretty_print(const PlanAst& ast) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : ast.functions) {
    if (f.name == kImplicitEntry) continue;
    if (!first) os << "\n";
    first = false;
    os << "def " << f.name << "(";
    for (std::size_t i = 0; i < f.params.size(); ++i) os << (i > 0 ? ", " : "") << f.params[i];
    os << "):\n";
    print_block(os, f.body, 1);
  }
  if (const FunctionDef* main = ast.find(kImplicitEntry); main != nullptr && !main->body.empty()) {
    if (!first) os << "\n";
    for (const auto& s : main->body) print_stmt(os, s, 0);
  }
  return os.str();
}

}  // namespace plancheck::plan
