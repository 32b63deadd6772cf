// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_QUERIES_HPP
#define AGORA_QUERIES_HPP

#include <string>
#include <vector>

#include "nature.hpp"
#include "protocol.hpp"

namespace agora {

NatureLabel nature_modality(const DialogueState& state, const Wff& claim);
int natural_valuation(const DialogueState& state, const Wff& claim);
const ExhibitedArgument* provisional_proof(const DialogueState& state, const Wff& claim);
AttackReport attackers(const DialogueState& state, const Wff& claim);

// Provisional proof exists <=> natural valuation is 1, for every tracked
// wff that is not a tautology.
struct EquivalenceReport {
  struct Row {
    Wff wff;
    NatureLabel label;
    bool proof_exists;
    int valuation;
    bool holds() const { return proof_exists == (valuation == 1); }
  };
  std::vector<Row> rows;
  std::size_t tautologies_skipped = 0;
  std::size_t pending_obligations = 0;

  std::size_t counterexamples() const;
  bool holds() const { return counterexamples() == 0; }
  std::string render() const;
};

EquivalenceReport check_theorem2(const DialogueState& state);

// Human-readable answer for one claim: arguments for and against, attackers,
// modality, valuation and proof status.
std::string describe_claim(const DialogueState& state, const Wff& claim);

}  // namespace agora

#endif  // AGORA_QUERIES_HPP
