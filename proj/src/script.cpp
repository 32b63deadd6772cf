// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "script.hpp"

#include <algorithm>
#include <cctype>

namespace agora {

ScriptError::ScriptError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind(kind),
      line(line),
      column(column) {}

const char* to_string(ScriptError::Kind k) {
  switch (k) {
    case ScriptError::Kind::Syntax: return "syntax error";
    case ScriptError::Kind::Duplicate: return "duplicate id";
    case ScriptError::Kind::ForwardReference: return "forward reference";
  }
  return "error";
}

DictionarySet Script::dictionary_set() const {
  DictionarySet set;
  bool grounds = false, consequences = false;
  for (const auto& [role, dict] : dictionaries) {
    *set.by_role(role) = dict;
    grounds |= role == "grounds";
    consequences |= role == "consequences";
  }
  if (!grounds) set.grounds = set.claims;
  if (!consequences) set.consequences = set.claims;
  return set;
}

namespace {

using Kind = ScriptError::Kind;

// Drops a trailing `#` comment; `#` inside a quoted string is kept.
std::string strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted && c == '\\') {
      ++i;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '#' && !quoted) {
      return std::string(line.substr(0, i));
    }
  }
  std::string out(line);
  if (!out.empty() && out.back() == '\r') out.pop_back();
  return out;
}

class Cursor {
 public:
  Cursor(std::string text, std::size_t line) : text_(std::move(text)), line_(line) {}

  [[noreturn]] void fail(const std::string& msg, Kind kind = Kind::Syntax) const { fail_at(pos_, msg, kind); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg, Kind kind = Kind::Syntax) const {
    throw ScriptError(kind, line_, pos + 1, msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  bool peek(std::string_view s) {
    skip();
    return std::string_view(text_).substr(pos_, s.size()) == s;
  }
  bool eat(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!eat(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string identifier(const char* what = "identifier") {
    skip();
    if (pos_ >= text_.size() || !is_identifier_start(text_[pos_])) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Letters, digits, '-' and '_': validator tags such as modus-ponens.
  std::string tag() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                   text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a tag");
    return text_.substr(start, pos_ - start);
  }

  std::string quoted() {
    expect("\"");
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  Wff wff() {
    skip();
    try {
      return parse_wff_prefix(text_, pos_);
    } catch (const WffSyntaxError& e) {
      fail_at(e.offset, std::string("bad formula: ") + e.what());
    }
  }

  int move_ref() {
    skip();
    std::size_t at = pos_;
    if (!eat("@M")) fail("expected a move reference @M<k>");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail_at(at, "expected a move number after @M");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void finish() {
    if (!at_end()) fail("unexpected '" + text_.substr(pos_) + "'");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::vector<std::string> label_list(Cursor& c) {
  std::vector<std::string> out;
  c.expect("[");
  if (c.eat("]")) return out;
  do {
    out.push_back(c.identifier("label"));
  } while (c.eat(","));
  c.expect("]");
  return out;
}

std::vector<std::vector<std::string>> ground_labels(Cursor& c) {
  std::size_t start = c.pos();
  c.expect("[");
  if (!c.peek("[")) {
    c.reset(start);
    return {label_list(c)};
  }
  std::vector<std::vector<std::string>> out;
  do {
    out.push_back(label_list(c));
  } while (c.eat(","));
  c.expect("]");
  return out;
}

std::vector<InferenceStep> steps(Cursor& c, const std::vector<InferenceRule>& rules) {
  std::vector<InferenceStep> out;
  c.expect("{");
  do {
    std::vector<Wff> premises;
    do {
      premises.push_back(c.wff());
    } while (c.eat(","));
    c.expect("|-");
    std::size_t rule_at = c.pos();
    std::string rule = c.identifier("inference rule");
    if (std::none_of(rules.begin(), rules.end(), [&](const InferenceRule& r) { return r.id == rule; }))
      c.fail_at(rule_at, "inference rule " + rule + " is not declared", ScriptError::Kind::ForwardReference);
    c.expect("|-");
    Wff conclusion = c.wff();
    out.push_back({std::move(premises), std::move(rule), std::move(conclusion)});
  } while (c.eat(";"));
  c.expect("}");
  return out;
}

ValueAssignment values(Cursor& c) {
  ValueAssignment v;
  bool seen_grounds = false, seen_infer = false, seen_claim = false;
  if (!c.eat("values")) c.fail("expected 'values { ... }'");
  c.expect("{");
  do {
    std::size_t at = c.pos();
    std::string field = c.identifier("field name");
    c.expect(":");
    if (field == "grounds" && !seen_grounds) {
      v.grounds = ground_labels(c);
      seen_grounds = true;
    } else if (field == "infer" && !seen_infer) {
      v.inference = label_list(c);
      seen_infer = true;
    } else if (field == "claim" && !seen_claim) {
      v.claim = c.identifier("label");
      seen_claim = true;
    } else {
      c.fail_at(at, "unexpected or repeated field '" + field + "'");
    }
  } while (c.eat(";"));
  c.expect("}");
  if (!seen_grounds || !seen_infer || !seen_claim) c.fail("values need grounds, infer and claim fields");
  return v;
}

bool is_move_id(const std::string& word) {
  return word.size() > 1 && word[0] == 'M' &&
         std::all_of(word.begin() + 1, word.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::string render_dictionary_body(const ModalityDictionary& d) {
  std::vector<std::vector<std::string>> chains;
  for (const auto& [hi, lo] : d.covers()) {
    if (!chains.empty() && chains.back().back() == hi) {
      chains.back().push_back(lo);
    } else {
      chains.push_back({hi, lo});
    }
  }
  for (const auto& l : d.labels()) {
    bool used = std::any_of(d.covers().begin(), d.covers().end(),
                            [&](const auto& cv) { return cv.first == l || cv.second == l; });
    if (!used) chains.push_back({l});
  }
  std::string out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i) out += ", ";
    for (std::size_t j = 0; j < chains[i].size(); ++j) out += (j ? " > " : "") + chains[i][j];
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

ScriptBuilder::ScriptBuilder(Script seed) : script_(std::move(seed)) {}

int ScriptBuilder::next_move_id() const { return script_.moves.empty() ? 1 : script_.moves.back().id + 1; }

std::optional<Move> ScriptBuilder::add_line(std::string_view raw, std::size_t line_no, bool auto_number) {
  Cursor c(strip_comment(raw), line_no);
  if (c.at_end()) return std::nullopt;
  const std::size_t word_at = c.pos();
  std::string word = c.identifier("statement");

  if (word == "option") {
    std::string name = c.tag();
    if (name == "strict" || name == "strict-2-1") {
      script_.strict = true;
    } else if (name == "consistency") {
      std::string mode = c.identifier("consistency mode");
      if (mode == "syntactic") script_.consistency = ConsistencyMode::Syntactic;
      else if (mode == "classical") script_.consistency = ConsistencyMode::Classical;
      else c.fail("consistency mode must be syntactic or classical");
    } else {
      c.fail("unknown option '" + name + "'");
    }
    c.finish();
    return std::nullopt;
  }

  if (word == "dictionary") {
    std::size_t at = c.pos();
    std::string role = c.identifier("dictionary role");
    if (role != "claims" && role != "grounds" && role != "consequences" && role != "inference")
      c.fail_at(at, "dictionary role must be claims, grounds, consequences or inference");
    for (const auto& d : script_.dictionaries)
      if (d.first == role) c.fail_at(at, "dictionary " + role + " declared twice", Kind::Duplicate);
    c.expect("{");
    std::vector<std::vector<std::string>> chains;
    do {
      std::vector<std::string> chain;
      do {
        chain.push_back(c.identifier("label"));
      } while (c.eat(">"));
      chains.push_back(std::move(chain));
    } while (c.eat(","));
    c.expect("}");
    c.finish();
    try {
      script_.dictionaries.emplace_back(role, ModalityDictionary::from_chains(role, chains));
    } catch (const DictionaryError& e) {
      c.fail_at(at, e.what());
    }
    return std::nullopt;
  }

  if (word == "rule") {
    std::size_t at = c.pos();
    InferenceRule rule;
    rule.id = c.identifier("rule id");
    if (std::any_of(script_.rules.begin(), script_.rules.end(), [&](const auto& r) { return r.id == rule.id; }))
      c.fail_at(at, "rule " + rule.id + " declared twice", Kind::Duplicate);
    while (!c.at_end()) {
      if (c.peek("\"")) {
        rule.description = c.quoted();
      } else {
        std::size_t kw_at = c.pos();
        std::string kw = c.identifier("rule attribute");
        if (kw == "validator") {
          std::size_t tag_at = c.pos();
          auto v = validator_from_string(c.tag());
          if (!v) c.fail_at(tag_at, "validator must be modus-ponens, and-introduction or none");
          rule.validator = *v;
        } else if (kw == "strength") {
          rule.strength = c.identifier("label");
        } else {
          c.fail_at(kw_at, "unknown rule attribute '" + kw + "'");
        }
      }
    }
    script_.rules.push_back(std::move(rule));
    return std::nullopt;
  }

  if (word == "participant") {
    do {
      std::size_t at = c.pos();
      std::string p = c.identifier("participant id");
      if (std::find(script_.participants.begin(), script_.participants.end(), p) != script_.participants.end())
        c.fail_at(at, "participant " + p + " declared twice", Kind::Duplicate);
      script_.participants.push_back(std::move(p));
      c.eat(",");
    } while (!c.at_end());
    return std::nullopt;
  }

  if (word == "track") {
    do {
      script_.tracks.push_back(c.wff());
    } while (c.eat(","));
    c.finish();
    return std::nullopt;
  }

  if (word == "arg" || word == "cons") {
    std::size_t at = c.pos();
    std::string name = c.identifier("argument name");
    if (std::any_of(script_.arguments.begin(), script_.arguments.end(), [&](const auto& a) { return a.name == name; }))
      c.fail_at(at, "argument " + name + " defined twice", Kind::Duplicate);
    c.expect("=");
    std::optional<ValuedArgument> arg;
    if (word == "arg") {
      if (c.identifier("'grounded'") != "grounded") c.fail("expected 'grounded'");
      auto st = steps(c, script_.rules);
      Wff claim = st.back().conclusion;
      GroundedArgument g{std::move(st), std::move(claim)};
      arg = ValuedArgument{name, std::move(g), values(c)};
    } else {
      if (c.identifier("'from'") != "from") c.fail("expected 'from'");
      Wff source = c.wff();
      ConsequentialArgument ca{std::move(source), steps(c, script_.rules)};
      arg = ValuedArgument{name, std::move(ca), values(c)};
    }
    c.finish();
    script_.arguments.push_back(std::move(*arg));
    return std::nullopt;
  }

  Move m;
  if (is_move_id(word) && c.eat(":")) {
    m.id = std::stoi(word.substr(1));
    if (!script_.moves.empty() && m.id <= script_.moves.back().id) {
      c.fail_at(word_at, "move " + word + " must come after M" + std::to_string(script_.moves.back().id),
                m.id == script_.moves.back().id ? Kind::Duplicate : Kind::Syntax);
    }
    word = c.identifier("move kind");
  } else if (auto_number && move_kind_from_keyword(word)) {
    m.id = next_move_id();
  } else {
    c.fail_at(word_at, "unknown statement '" + word + "'");
  }
  auto kind = move_kind_from_keyword(word);
  if (!kind) c.fail("unknown move kind '" + word + "'");
  m.kind = *kind;

  std::size_t actor_at = c.pos();
  m.actor = c.identifier("participant id");
  if (std::find(script_.participants.begin(), script_.participants.end(), m.actor) == script_.participants.end()) {
    if (!open_participation_) c.fail_at(actor_at, "participant " + m.actor + " is not declared", Kind::ForwardReference);
    script_.participants.push_back(m.actor);
  }

  auto target = [&] {
    std::size_t at = c.pos();
    int t = c.move_ref();
    bool known = std::any_of(script_.moves.begin(), script_.moves.end(), [&](const Move& x) { return x.id == t; });
    if (!known) {
      c.fail_at(at, t >= m.id ? "M" + std::to_string(m.id) + " refers forward to M" + std::to_string(t)
                              : "M" + std::to_string(t) + " is not defined",
                Kind::ForwardReference);
    }
    m.target = t;
  };
  auto argument = [&] {
    std::size_t at = c.pos();
    std::string name = c.identifier("argument name");
    auto it = std::find_if(script_.arguments.begin(), script_.arguments.end(),
                           [&](const auto& a) { return a.name == name; });
    if (it == script_.arguments.end()) c.fail_at(at, "argument " + name + " is not defined", Kind::ForwardReference);
    m.argument = *it;
  };
  auto wff_label = [&] {
    c.expect("(");
    m.wff = c.wff();
    c.expect(",");
    m.label = c.identifier("label");
    c.expect(")");
  };

  switch (m.kind) {
    case MoveKind::Pose:
    case MoveKind::PoseCons:
      m.wff = c.wff();
      break;
    case MoveKind::Propose:
    case MoveKind::Assert:
      wff_label();
      break;
    case MoveKind::ProposeCons:
    case MoveKind::AssertCons:
      c.expect("(");
      m.wff = c.wff();
      c.expect(",");
      m.consequence = c.wff();
      c.expect(",");
      m.label = c.identifier("label");
      c.expect(")");
      break;
    case MoveKind::ProposeInf:
      c.expect("(");
      m.rule = c.identifier("rule id");
      c.expect(",");
      m.label = c.identifier("label");
      c.expect(")");
      break;
    case MoveKind::ShowArg:
    case MoveKind::ShowCons:
      argument();
      break;
    case MoveKind::Query:
    case MoveKind::QueryCons:
    case MoveKind::Contest:
    case MoveKind::ContestMod:
    case MoveKind::AcceptInf:
    case MoveKind::AcceptCons:
    case MoveKind::Retract:
      target();
      break;
    case MoveKind::ContestGround:
    case MoveKind::ContestCons:
      target();
      wff_label();
      break;
    case MoveKind::ContestInf:
      target();
      m.rule = c.identifier("rule id");
      break;
    case MoveKind::AcceptProp:
    case MoveKind::AcceptAssert:
      target();
      if (c.eat("(")) {
        m.label = c.identifier("label");
        c.expect(")");
      }
      break;
    case MoveKind::Prec:
      target();
      argument();
      break;
  }
  c.finish();
  script_.moves.push_back(m);
  return m;
}

Script parse_script(std::string_view text) {
  ScriptBuilder builder;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    builder.add_line(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return builder.script();
}

std::string render_script(const Script& s) {
  std::string out;
  if (s.strict) out += "option strict\n";
  if (s.consistency == ConsistencyMode::Classical) out += "option consistency classical\n";
  for (const auto& [role, dict] : s.dictionaries) out += "dictionary " + role + " { " + render_dictionary_body(dict) + " }\n";
  for (const auto& r : s.rules) {
    out += "rule " + r.id;
    if (r.validator != Validator::None) out += std::string(" validator ") + to_string(r.validator);
    if (r.strength) out += " strength " + *r.strength;
    if (!r.description.empty()) out += " \"" + escape(r.description) + "\"";
    out += "\n";
  }
  if (!s.participants.empty()) {
    out += "participant";
    for (const auto& p : s.participants) out += " " + p;
    out += "\n";
  }
  if (!s.tracks.empty()) {
    out += "track ";
    for (std::size_t i = 0; i < s.tracks.size(); ++i) out += (i ? ", " : "") + render(s.tracks[i]);
    out += "\n";
  }
  for (const auto& a : s.arguments) {
    if (a.is_grounded()) {
      out += "arg " + a.name + " = grounded { " + render_steps(a.steps()) + " }";
    } else {
      out += "cons " + a.name + " = from " + render(a.consequential().source) + " { " + render_steps(a.steps()) + " }";
    }
    out += " values { " + render_values(a.values) + " }\n";
  }
  for (const auto& m : s.moves) out += "M" + std::to_string(m.id) + ": " + render_move_body(m) + "\n";
  return out;
}

}  // namespace agora
