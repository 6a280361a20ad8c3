#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plancheck/error.hpp"

namespace plancheck::plan {

inline constexpr const char* kImplicitEntry = "__main__";

enum class Sign { negative, zero, positive, unknown };

/// A call argument. The expression is kept as opaque, whitespace-normalized
/// text; only numeric literals are evaluated so that proposition mapping can
/// classify them.
struct Arg {
  std::string keyword;  // empty for positional arguments
  std::string text;
  Sign sign = Sign::unknown;
  std::optional<double> value;

  bool operator==(const Arg&) const = default;
};

struct Call {
  std::string target;
  std::vector<Arg> args;
  SourcePos pos;

  bool operator==(const Call&) const = default;
};

struct CondExpr {
  enum class Kind { literal, call, negation, conjunction, disjunction };

  Kind kind = Kind::literal;
  bool value = false;              // literal
  Call call;                       // call
  std::vector<CondExpr> operands;  // negation (1), conjunction/disjunction (>= 2)

  static CondExpr literal(bool v);
  static CondExpr of_call(Call c);
  static CondExpr negate(CondExpr e);
  static CondExpr all_of(std::vector<CondExpr> es);
  static CondExpr any_of(std::vector<CondExpr> es);

  bool operator==(const CondExpr&) const = default;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct CallStmt {
  Call call;
  bool operator==(const CallStmt&) const = default;
};

struct IfStmt {
  CondExpr cond;
  Block then_body;
  Block else_body;
  bool operator==(const IfStmt&) const = default;
};

struct WhileStmt {
  CondExpr cond;
  Block body;
  bool operator==(const WhileStmt&) const = default;
};

struct ForStmt {
  std::string var;
  long count = 1;
  Block body;
  bool operator==(const ForStmt&) const = default;
};

// Recorded but semantically inert.
struct AssignStmt {
  std::string name;
  std::string op;  // "=", "+=", ...
  std::string expr;
  bool operator==(const AssignStmt&) const = default;
};

struct ReturnStmt {
  std::string expr;
  bool operator==(const ReturnStmt&) const = default;
};

struct PassStmt {
  bool operator==(const PassStmt&) const = default;
};

struct Stmt {
  std::variant<CallStmt, IfStmt, WhileStmt, ForStmt, AssignStmt, ReturnStmt, PassStmt> node;
  SourcePos pos;

  bool operator==(const Stmt&) const = default;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  Block body;
  SourcePos pos;

  bool operator==(const FunctionDef&) const = default;
};

/// Parsed plan. When the source has top-level statements (or nothing at
/// all) they form the implicit entry `__main__`, stored first.
struct PlanAst {
  std::vector<FunctionDef> functions;
  std::string entry;

  const FunctionDef* find(const std::string& name) const;
  const FunctionDef& entry_function() const;
  bool has_implicit_entry() const { return entry == kImplicitEntry; }

  bool operator==(const PlanAst&) const = default;
};

Sign classify_literal(const std::string& text, std::optional<double>* value = nullptr);

/// Structured dump used by `plancheck parse`.
nlohmann::json to_json(const PlanAst& ast);

}  // namespace plancheck::plan
