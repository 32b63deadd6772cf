// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_SCRIPT_HPP
#define AGORA_SCRIPT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argument.hpp"
#include "dictionary.hpp"
#include "protocol.hpp"

namespace agora {

// A dialogue script (`.agora` file). One statement per line, `#` comments:
//
//   option strict
//   option consistency classical
//   dictionary claims { Cert > Conf > Prob > Plaus > Supp > Open }
//   rule R2 validator modus-ponens strength Val "Modus ponens"
//   participant P1 P2
//   track phi
//   arg A1 = grounded { K4 |- R3 |- phi } values { grounds: [Conf]; infer: [Val]; claim: Conf }
//   cons C1 = from phi { phi, T1 |- R2 |- psi } values { grounds: [Conf, Conf]; infer: [Val]; claim: Conf }
//   M1: assert P1 (phi, Conf)
struct Script {
  bool strict = false;
  ConsistencyMode consistency = ConsistencyMode::Syntactic;
  std::vector<std::pair<std::string, ModalityDictionary>> dictionaries;
  std::vector<InferenceRule> rules;
  std::vector<std::string> participants;
  std::vector<Wff> tracks;
  std::vector<ValuedArgument> arguments;
  std::vector<Move> moves;

  DictionarySet dictionary_set() const;
  bool operator==(const Script&) const = default;
};

struct ScriptError : std::runtime_error {
  enum class Kind { Syntax, Duplicate, ForwardReference };
  ScriptError(Kind kind, std::size_t line, std::size_t column, const std::string& message);
  Kind kind;
  std::size_t line;
  std::size_t column;
};

const char* to_string(ScriptError::Kind k);

Script parse_script(std::string_view text);
std::string render_script(const Script& script);

// Incremental parsing for interactive use: statements are added one at a
// time against what is already known.
class ScriptBuilder {
 public:
  ScriptBuilder() = default;
  explicit ScriptBuilder(Script seed);

  // Parses one statement line and appends it. Returns the move when the line
  // was a move. With `auto_number`, a move line may omit its "M<k>:" prefix.
  std::optional<Move> add_line(std::string_view line, std::size_t line_no = 1, bool auto_number = false);

  // Undeclared actors are accepted (and declared) instead of rejected.
  void set_open_participation(bool open) { open_participation_ = open; }

  const Script& script() const { return script_; }
  Script& script() { return script_; }
  int next_move_id() const;

 private:
  Script script_;
  bool open_participation_ = false;
};

}  // namespace agora

#endif  // AGORA_SCRIPT_HPP
