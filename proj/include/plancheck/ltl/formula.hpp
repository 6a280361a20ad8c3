#pragma once

#include <memory>
#include <set>
#include <string>

namespace plancheck::ltl {

/// Immutable LTL syntax tree. Release only arises internally from negation
/// normal form; the parser never produces it.
class Formula {
 public:
  enum class Op { truth, falsity, atom, negation, conjunction, disjunction, implies, next, eventually, always, until, release };

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula unary(Op op, Formula a);
  static Formula binary(Op op, Formula a, Formula b);

  Op op() const;
  const std::string& name() const;  // atoms only
  const Formula& lhs() const;       // operand of unary, left of binary
  const Formula& rhs() const;

  bool is_unary() const;
  bool is_binary() const;

  std::set<std::string> atoms() const;
  int temporal_operators() const;  // X, F, G, U, R occurrences

  /// Fully parenthesized text that parse_ltl reads back to an equal tree.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& a);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula X(const Formula& a);
Formula F(const Formula& a);
Formula G(const Formula& a);
Formula U(const Formula& a, const Formula& b);

/// Grammar, loosest first: -> (right-assoc), |, &, U (right-assoc), unary
/// (!, X, F, G). Atoms are identifiers or double-quoted names; `true` and
/// `false` are constants. Also accepts &&, ||, =>, ¬, ∧, ∨, →.
Formula parse_ltl(const std::string& text);

/// Negation normal form over true, false, atoms, negated atoms, &, |, X, U, R.
Formula to_nnf(const Formula& f);

}  // namespace plancheck::ltl
