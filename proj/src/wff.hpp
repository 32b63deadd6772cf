// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_WFF_HPP
#define AGORA_WFF_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agora {

// Propositional formula. Immutable; copies share structure.
class Wff {
 public:
  enum class Kind { Atom, Not, And, Or, Implies };

  static Wff atom(std::string name);
  static Wff negation(Wff inner);
  static Wff conjunction(Wff left, Wff right);
  static Wff disjunction(Wff left, Wff right);
  static Wff implication(Wff antecedent, Wff consequent);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  const std::string& name() const { return node_->name; }

  // Left operand of a binary node, or the operand of a negation.
  const Wff& left() const { return node_->children[0]; }
  const Wff& right() const { return node_->children[1]; }
  const Wff& inner() const { return left(); }

  std::size_t size() const;
  void collect_atoms(std::set<std::string>& out) const;

  friend bool operator==(const Wff& a, const Wff& b);
  friend std::strong_ordering operator<=>(const Wff& a, const Wff& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Wff> children;
  };
  explicit Wff(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Wff make(Kind k, std::vector<Wff> children);

  std::shared_ptr<const Node> node_;
};

struct WffSyntaxError : std::runtime_error {
  WffSyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset(offset) {}
  std::size_t offset;
};

struct AtomBudgetExceeded : std::runtime_error {
  AtomBudgetExceeded(std::size_t atoms, std::size_t budget);
  std::size_t atoms;
  std::size_t budget;
};

inline constexpr std::size_t kDefaultAtomBudget = 20;

// Grammar: `~` > `&` > `|` > `->`; `&` and `|` associate left, `->` right.
Wff parse_wff(std::string_view text);

// Parses the longest wff starting at `pos` and advances `pos` past it
// (and trailing blanks). Stops without consuming at any token that cannot
// continue a formula: `,` `)` `;` `}` `|-` etc.
Wff parse_wff_prefix(std::string_view text, std::size_t& pos);

bool is_identifier_start(char c);
bool is_identifier_char(char c);

// Minimal parentheses; parse_wff(render(w)) == w.
std::string render(const Wff& w);

// Removes every double negation.
Wff normalize(const Wff& w);

// Negation with a leading `~` cancelled: negate(~a) == a.
Wff negate(const Wff& w);

bool neg_equivalent(const Wff& a, const Wff& b);

// Equality modulo double negation.
bool same_claim(const Wff& a, const Wff& b);

bool evaluate(const Wff& w, const std::set<std::string>& true_atoms);

bool is_tautology(const Wff& w, std::size_t atom_budget = kDefaultAtomBudget);

// Some assignment makes every formula true.
bool is_satisfiable(std::span<const Wff> formulas,
                    std::size_t atom_budget = kDefaultAtomBudget);

}  // namespace agora

template <>
struct std::hash<agora::Wff> {
  std::size_t operator()(const agora::Wff& w) const noexcept;
};

#endif  // AGORA_WFF_HPP
