// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_ARGUMENT_HPP
#define AGORA_ARGUMENT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dictionary.hpp"
#include "wff.hpp"

namespace agora {

enum class Validator { None, ModusPonens, AndIntroduction };

const char* to_string(Validator v);
std::optional<Validator> validator_from_string(const std::string& s);

// A mode of inference. Soundness is never a legality condition; a built-in
// validator only produces warnings.
struct InferenceRule {
  std::string id;
  std::string description;
  std::optional<std::string> strength;
  Validator validator = Validator::None;

  bool operator==(const InferenceRule&) const = default;
};

struct InferenceStep {
  std::vector<Wff> premises;
  std::string rule;
  Wff conclusion;

  bool operator==(const InferenceStep&) const = default;
};

// Chain of steps ending in `claim`.
struct GroundedArgument {
  std::vector<InferenceStep> steps;
  Wff claim;

  bool operator==(const GroundedArgument&) const = default;
};

// Chain of steps starting from `source`; every conclusion is a consequence.
struct ConsequentialArgument {
  Wff source;
  std::vector<InferenceStep> steps;

  std::vector<Wff> consequences() const;
  bool operator==(const ConsequentialArgument&) const = default;
};

// Labels attached to an argument: one vector per step (one label per
// premise), one label for the final conclusion, one inference label per step.
struct ValueAssignment {
  std::vector<std::vector<std::string>> grounds;
  std::string claim;
  std::vector<std::string> inference;

  bool operator==(const ValueAssignment&) const = default;
};

struct ValuedArgument {
  std::string name;
  std::variant<GroundedArgument, ConsequentialArgument> body;
  ValueAssignment values;

  bool is_grounded() const { return std::holds_alternative<GroundedArgument>(body); }
  const GroundedArgument& grounded() const { return std::get<GroundedArgument>(body); }
  const ConsequentialArgument& consequential() const { return std::get<ConsequentialArgument>(body); }
  const std::vector<InferenceStep>& steps() const;
  // Claim of a grounded argument, final consequence of a consequential one.
  const Wff& conclusion() const;

  bool operator==(const ValuedArgument&) const = default;
};

struct WellFormedReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

// Structural checks only; `rules` (optional) enables validator warnings.
WellFormedReport well_formed(const GroundedArgument& arg, const std::vector<InferenceRule>* rules = nullptr);
WellFormedReport well_formed(const ConsequentialArgument& arg, const std::vector<InferenceRule>* rules = nullptr);

// Shape and dictionary membership of a value assignment.
std::vector<std::string> check_values(const ValuedArgument& arg, const DictionarySet& dicts);

bool validator_accepts(Validator v, const InferenceStep& step);

// Premises that are not conclusions of an earlier step, first-mention order.
std::vector<Wff> grounds_of(const GroundedArgument& arg);

// Every premise of every step (intermediate conclusions included); the set
// consistency and undercutting inspect.
std::vector<Wff> premise_set(const GroundedArgument& arg);

enum class ConsistencyMode { Syntactic, Classical };

const char* to_string(ConsistencyMode m);

// Throws AtomBudgetExceeded in classical mode past `atom_budget`.
bool is_consistent(const GroundedArgument& arg, ConsistencyMode mode,
                   std::size_t atom_budget = kDefaultAtomBudget);

bool rebuts(const GroundedArgument& b, const GroundedArgument& a);
bool undercuts(const GroundedArgument& b, const GroundedArgument& a);

std::string render_steps(const std::vector<InferenceStep>& steps);
std::string render_values(const ValueAssignment& v);

}  // namespace agora

#endif  // AGORA_ARGUMENT_HPP
