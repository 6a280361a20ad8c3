#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "plancheck/automata/props.hpp"

namespace plancheck::automata {

/// Propositional formula over named atoms. Immutable; copies share structure.
class Guard {
 public:
  enum class Op { truth, falsity, atom, negation, conjunction, disjunction };

  Guard();  // true
  static Guard truth();
  static Guard falsity();
  static Guard atom(std::string name);

  Guard operator!() const;
  friend Guard operator&&(const Guard& a, const Guard& b);
  friend Guard operator||(const Guard& a, const Guard& b);
  static Guard all_of(const std::vector<Guard>& gs);
  static Guard any_of(const std::vector<Guard>& gs);

  Op op() const;
  const std::string& atom_name() const;
  const std::vector<Guard>& operands() const;

  bool is_true() const { return op() == Op::truth; }
  bool is_false() const { return op() == Op::falsity; }

  bool eval(const std::function<bool(const std::string&)>& holds) const;
  bool eval(const PropSet& ap, LabelSet label) const;
  std::set<std::string> atoms() const;

  /// Truth-table checks over the atoms the formulas mention.
  bool satisfiable() const;
  bool tautology() const;
  friend bool equivalent(const Guard& a, const Guard& b);

  /// Text form accepted by parse_guard: true, false, names (quoted when not
  /// identifiers), !, &, |, parentheses.
  std::string to_string() const;

  /// Structural equality (not semantic; see equivalent()).
  friend bool operator==(const Guard& a, const Guard& b);

 private:
  struct Node;
  explicit Guard(std::shared_ptr<const Node> n);
  static Guard combine(Op op, const std::vector<Guard>& gs);
  std::shared_ptr<const Node> node_;
};

Guard parse_guard(const std::string& text);

std::string quote_prop(const std::string& name);

}  // namespace plancheck::automata
