// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "wff.hpp"

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>

namespace agora {

Wff Wff::make(Kind k, std::vector<Wff> children) {
  return Wff(std::make_shared<const Node>(Node{k, {}, std::move(children)}));
}

Wff Wff::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return Wff(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Wff Wff::negation(Wff inner) { return make(Kind::Not, {std::move(inner)}); }
Wff Wff::conjunction(Wff l, Wff r) { return make(Kind::And, {std::move(l), std::move(r)}); }
Wff Wff::disjunction(Wff l, Wff r) { return make(Kind::Or, {std::move(l), std::move(r)}); }
Wff Wff::implication(Wff a, Wff c) { return make(Kind::Implies, {std::move(a), std::move(c)}); }

std::size_t Wff::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

void Wff::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(name());
    return;
  }
  for (const auto& c : node_->children) c.collect_atoms(out);
}

bool operator==(const Wff& a, const Wff& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Wff& a, const Wff& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_atom()) {
    int c = a.name().compare(b.name());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

AtomBudgetExceeded::AtomBudgetExceeded(std::size_t atoms, std::size_t budget)
    : std::runtime_error("formula has " + std::to_string(atoms) +
                         " atoms, budget is " + std::to_string(budget)),
      atoms(atoms),
      budget(budget) {}

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  Wff implication() {
    Wff lhs = disjunction();
    skip_blank();
    if (lookahead("->")) {
      pos_ += 2;
      return Wff::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  std::size_t pos() const { return pos_; }

  void skip_blank() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  Wff disjunction() {
    Wff lhs = conjunction();
    for (;;) {
      skip_blank();
      // `|-` is the argument turnstile, never a disjunction.
      if (lookahead("|") && !lookahead("|-")) {
        ++pos_;
        lhs = Wff::disjunction(std::move(lhs), conjunction());
      } else {
        return lhs;
      }
    }
  }

  Wff conjunction() {
    Wff lhs = unary();
    for (;;) {
      skip_blank();
      if (lookahead("&")) {
        ++pos_;
        lhs = Wff::conjunction(std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Wff unary() {
    skip_blank();
    if (pos_ >= text_.size()) throw WffSyntaxError(pos_, "unexpected end of formula");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Wff::negation(unary());
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Wff inner = implication();
      skip_blank();
      if (!lookahead(")")) throw WffSyntaxError(pos_, "expected ')' to close '(' at offset " + std::to_string(open));
      ++pos_;
      return inner;
    }
    if (is_identifier_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
      return Wff::atom(std::string(text_.substr(start, pos_ - start)));
    }
    throw WffSyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  bool lookahead(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  std::string_view text_;
  std::size_t pos_;
};

// Binding strength, loosest first.
int precedence(Wff::Kind k) {
  switch (k) {
    case Wff::Kind::Implies: return 0;
    case Wff::Kind::Or: return 1;
    case Wff::Kind::And: return 2;
    case Wff::Kind::Not: return 3;
    case Wff::Kind::Atom: return 4;
  }
  return 4;
}

void render_into(const Wff& w, int min_prec, std::string& out) {
  bool paren = precedence(w.kind()) < min_prec;
  if (paren) out += '(';
  switch (w.kind()) {
    case Wff::Kind::Atom:
      out += w.name();
      break;
    case Wff::Kind::Not:
      out += '~';
      render_into(w.inner(), 3, out);
      break;
    case Wff::Kind::And:
      render_into(w.left(), 2, out);
      out += " & ";
      render_into(w.right(), 3, out);
      break;
    case Wff::Kind::Or:
      render_into(w.left(), 1, out);
      out += " | ";
      render_into(w.right(), 2, out);
      break;
    case Wff::Kind::Implies:
      render_into(w.left(), 1, out);
      out += " -> ";
      render_into(w.right(), 0, out);
      break;
  }
  if (paren) out += ')';
}

// Postfix program over atom indices for fast repeated evaluation.
struct Compiled {
  enum Op : std::uint8_t { Push, Not, And, Or, Implies };
  std::vector<std::pair<Op, std::uint32_t>> code;

  void emit(const Wff& w, const std::map<std::string, std::uint32_t>& index) {
    switch (w.kind()) {
      case Wff::Kind::Atom: code.emplace_back(Push, index.at(w.name())); return;
      case Wff::Kind::Not: emit(w.inner(), index); code.emplace_back(Not, 0); return;
      case Wff::Kind::And: emit(w.left(), index); emit(w.right(), index); code.emplace_back(And, 0); return;
      case Wff::Kind::Or: emit(w.left(), index); emit(w.right(), index); code.emplace_back(Or, 0); return;
      case Wff::Kind::Implies: emit(w.left(), index); emit(w.right(), index); code.emplace_back(Implies, 0); return;
    }
  }

  bool run(std::uint64_t assignment, std::vector<char>& stack) const {
    stack.clear();
    for (auto [op, arg] : code) {
      if (op == Push) {
        stack.push_back(static_cast<char>((assignment >> arg) & 1U));
        continue;
      }
      if (op == Not) {
        stack.back() = !stack.back();
        continue;
      }
      char r = stack.back();
      stack.pop_back();
      char& l = stack.back();
      if (op == And) l = l && r;
      else if (op == Or) l = l || r;
      else l = !l || r;
    }
    return stack.back() != 0;
  }
};

std::map<std::string, std::uint32_t> index_atoms(std::span<const Wff> formulas, std::size_t budget) {
  std::set<std::string> atoms;
  for (const auto& f : formulas) f.collect_atoms(atoms);
  if (atoms.size() > budget) throw AtomBudgetExceeded(atoms.size(), budget);
  std::map<std::string, std::uint32_t> index;
  for (const auto& a : atoms) index.emplace(a, static_cast<std::uint32_t>(index.size()));
  return index;
}

}  // namespace

Wff parse_wff_prefix(std::string_view text, std::size_t& pos) {
  Parser p(text, pos);
  Wff w = p.implication();
  p.skip_blank();
  pos = p.pos();
  return w;
}

Wff parse_wff(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) throw WffSyntaxError(pos, "empty formula");
  Wff w = parse_wff_prefix(text, pos);
  if (pos != text.size()) throw WffSyntaxError(pos, std::string("unexpected '") + text[pos] + "' after formula");
  return w;
}

std::string render(const Wff& w) {
  std::string out;
  render_into(w, 0, out);
  return out;
}

Wff normalize(const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Atom:
      return w;
    case Wff::Kind::Not:
      if (w.inner().kind() == Wff::Kind::Not) return normalize(w.inner().inner());
      return Wff::negation(normalize(w.inner()));
    case Wff::Kind::And:
      return Wff::conjunction(normalize(w.left()), normalize(w.right()));
    case Wff::Kind::Or:
      return Wff::disjunction(normalize(w.left()), normalize(w.right()));
    case Wff::Kind::Implies:
      return Wff::implication(normalize(w.left()), normalize(w.right()));
  }
  return w;
}

Wff negate(const Wff& w) {
  return w.kind() == Wff::Kind::Not ? w.inner() : Wff::negation(w);
}

bool neg_equivalent(const Wff& a, const Wff& b) {
  return normalize(a) == normalize(Wff::negation(b)) || normalize(b) == normalize(Wff::negation(a));
}

bool same_claim(const Wff& a, const Wff& b) { return a == b || normalize(a) == normalize(b); }

bool evaluate(const Wff& w, const std::set<std::string>& true_atoms) {
  switch (w.kind()) {
    case Wff::Kind::Atom: return true_atoms.contains(w.name());
    case Wff::Kind::Not: return !evaluate(w.inner(), true_atoms);
    case Wff::Kind::And: return evaluate(w.left(), true_atoms) && evaluate(w.right(), true_atoms);
    case Wff::Kind::Or: return evaluate(w.left(), true_atoms) || evaluate(w.right(), true_atoms);
    case Wff::Kind::Implies: return !evaluate(w.left(), true_atoms) || evaluate(w.right(), true_atoms);
  }
  return false;
}

bool is_tautology(const Wff& w, std::size_t atom_budget) {
  std::span<const Wff> one(&w, 1);
  auto index = index_atoms(one, atom_budget);
  Compiled prog;
  prog.emit(w, index);
  std::vector<char> stack;
  const std::uint64_t rows = std::uint64_t{1} << index.size();
  for (std::uint64_t a = 0; a < rows; ++a) {
    if (!prog.run(a, stack)) return false;
  }
  return true;
}

bool is_satisfiable(std::span<const Wff> formulas, std::size_t atom_budget) {
  auto index = index_atoms(formulas, atom_budget);
  std::vector<Compiled> progs(formulas.size());
  for (std::size_t i = 0; i < formulas.size(); ++i) progs[i].emit(formulas[i], index);
  std::vector<char> stack;
  const std::uint64_t rows = std::uint64_t{1} << index.size();
  for (std::uint64_t a = 0; a < rows; ++a) {
    bool all = true;
    for (const auto& p : progs) {
      if (!p.run(a, stack)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace agora

std::size_t std::hash<agora::Wff>::operator()(const agora::Wff& w) const noexcept {
  return std::hash<std::string>{}(agora::render(w));
}
