// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_PROTOCOL_HPP
#define AGORA_PROTOCOL_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "argument.hpp"
#include "dictionary.hpp"
#include "nature.hpp"
#include "wff.hpp"

namespace agora {

enum class MoveKind {
  Pose,
  Propose,
  Assert,
  Query,
  ShowArg,
  PoseCons,
  ProposeCons,
  AssertCons,
  QueryCons,
  ShowCons,
  ProposeInf,
  Contest,
  ContestGround,
  ContestInf,
  ContestMod,
  ContestCons,
  AcceptProp,
  AcceptAssert,
  AcceptInf,
  AcceptCons,
  Prec,
  Retract,
};

inline constexpr int kMoveKindCount = 22;

// DSL keyword: "show_arg", "contest_ground", ...
const char* keyword(MoveKind k);
std::optional<MoveKind> move_kind_from_keyword(const std::string& s);

// Protocol rule that licenses the move kind, e.g. "1.4" for query.
const char* licensing_rule(MoveKind k);

// One dialogue move. Which payload fields are set depends on `kind`:
//   pose, pose_cons                 wff
//   propose, assert                 wff, label
//   propose_cons, assert_cons       wff (source), consequence, label
//   propose_inf                     rule, label (strength)
//   show_arg, show_cons             argument
//   query, query_cons, contest,
//   contest_mod, accept_inf,
//   accept_cons, retract            target
//   contest_ground, contest_cons    target, wff, label
//   contest_inf                     target, rule
//   accept_prop, accept_assert      target, optional label override
//   prec                            target, argument
struct Move {
  int id = 0;
  MoveKind kind = MoveKind::Pose;
  std::string actor;
  std::optional<int> target;
  std::optional<Wff> wff;
  std::optional<Wff> consequence;
  std::optional<std::string> label;
  std::optional<std::string> rule;
  std::optional<ValuedArgument> argument;

  bool operator==(const Move&) const = default;
};

// "assert P1 (phi, Conf)" without the "M<k>: " prefix.
std::string render_move_body(const Move& m);

enum class ViolationKind {
  ObligationViolation,
  Contradiction,
  BadTarget,
  MalformedPayload,
  ContestResponseViolation,
};

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string rule;      // protocol rule number, e.g. "3.8"
  std::string property;  // desired property it protects, e.g. "P10"
  std::string detail;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

struct Obligation {
  enum class Response { ShowArg, ShowCons, ContestResponse };

  std::string participant;
  Response required;
  Wff claim;                        // θ to argue for, or the contested claim
  std::optional<Wff> consequence;   // ShowCons: a consequence that must appear
  std::string contested_label;      // ContestResponse: the d_θ under contest
  int source = 0;                   // the query move

  std::string describe() const;
  bool operator==(const Obligation&) const = default;
};

struct ParticipantStore {
  // (wff, claims label), at most one entry per wff, insertion order.
  std::vector<std::pair<Wff, std::string>> entries;
  // Claims standing through assert/accept_assert and not retracted.
  std::vector<Wff> asserted;

  const std::string* label_of(const Wff& w) const;
  void put(const Wff& w, const std::string& label);
  bool remove(const Wff& w);
  bool operator==(const ParticipantStore&) const = default;
};

struct ProtocolConfig {
  // Contest responses negating θ must carry a label strictly above d_θ, and
  // retracting a mere proposal is rejected.
  bool strict = false;
  ConsistencyMode consistency = ConsistencyMode::Syntactic;
  std::size_t atom_budget = kDefaultAtomBudget;

  NatureContext nature_context() const { return {consistency, atom_budget}; }
  bool operator==(const ProtocolConfig&) const = default;
};

// Value-semantic snapshot of a dialogue.
struct DialogueState {
  ProtocolConfig config;
  DictionarySet dictionaries;
  std::vector<InferenceRule> rules;
  std::vector<std::string> participants;
  std::vector<Move> log;
  std::map<std::string, ParticipantStore> stores;
  std::deque<Obligation> obligations;
  std::vector<ExhibitedArgument> exhibited;
  std::vector<ExhibitedArgument> exhibited_consequences;
  NatureStore nature;

  const Move* find_move(int id) const;
  const InferenceRule* find_rule(const std::string& id) const;
  bool has_participant(const std::string& p) const;
  ArgumentPool pool() const { return exhibited; }

  bool operator==(const DialogueState&) const = default;
};

DialogueState initial_state(ProtocolConfig config, DictionarySet dictionaries, std::vector<InferenceRule> rules,
                            std::vector<std::string> participants, const std::vector<Wff>& track = {});

struct Transition {
  DialogueState state;
  std::vector<std::string> warnings;
  bool nature_changed = false;
};

using StepResult = std::variant<Transition, Violation>;

// On rejection the input state is untouched and the violation is returned.
StepResult apply_move(const DialogueState& state, const Move& move);

inline const std::deque<Obligation>& pending_obligations(const DialogueState& state) {
  return state.obligations;
}

}  // namespace agora

#endif  // AGORA_PROTOCOL_HPP
