// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "queries.hpp"

#include <sstream>

namespace agora {

NatureLabel nature_modality(const DialogueState& state, const Wff& claim) {
  return nature_modality(state.pool(), claim, state.config.nature_context());
}

int natural_valuation(const DialogueState& state, const Wff& claim) {
  return natural_valuation(state.pool(), claim, state.config.nature_context());
}

const ExhibitedArgument* provisional_proof(const DialogueState& state, const Wff& claim) {
  return provisional_proof(state.pool(), claim, state.config.nature_context());
}

AttackReport attackers(const DialogueState& state, const Wff& claim) { return attackers(state.pool(), claim); }

EquivalenceReport check_theorem2(const DialogueState& state) {
  EquivalenceReport report;
  report.pending_obligations = state.obligations.size();
  const auto ctx = state.config.nature_context();
  for (const auto& e : state.nature.entries()) {
    if (e.tautology) {
      ++report.tautologies_skipped;
      continue;
    }
    NatureLabel label = nature_modality(state.pool(), e.wff, ctx);
    bool proof = provisional_proof(state.pool(), e.wff, ctx) != nullptr;
    report.rows.push_back({e.wff, label, proof, label == NatureLabel::Confirmed ? 1 : 0});
  }
  return report;
}

std::size_t EquivalenceReport::counterexamples() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.holds() ? 0 : 1;
  return n;
}

std::string EquivalenceReport::render() const {
  std::ostringstream out;
  if (pending_obligations > 0) out << "note: " << pending_obligations << " obligation(s) still pending\n";
  for (const auto& r : rows) {
    out << agora::render(r.wff) << ": " << abbreviation(r.label) << ", v=" << r.valuation
        << ", proof=" << (r.proof_exists ? "yes" : "no") << (r.holds() ? "" : "  COUNTEREXAMPLE") << "\n";
  }
  out << "checked " << rows.size() << " wff(s), skipped " << tautologies_skipped << " tautolog"
      << (tautologies_skipped == 1 ? "y" : "ies") << ", " << counterexamples() << " counterexample(s)\n";
  return out.str();
}

namespace {

std::string ref(const ExhibitedArgument& e) {
  return e.argument.name + " (M" + std::to_string(e.move_id) + ", " + e.actor + ")";
}

}  // namespace

std::string describe_claim(const DialogueState& state, const Wff& claim) {
  std::ostringstream out;
  const auto report = attackers(state, claim);
  out << "claim: " << render(claim) << "\n";
  out << "arguments for:";
  if (report.supporting.empty()) out << " none";
  out << "\n";
  for (const auto* a : report.supporting) out << "  " << ref(*a) << ": " << render_steps(a->grounded().steps) << "\n";
  out << "rebuttals:";
  if (report.rebuttals.empty()) out << " none";
  out << "\n";
  for (const auto* a : report.rebuttals) out << "  " << ref(*a) << ": " << render_steps(a->grounded().steps) << "\n";
  out << "undercutters:";
  if (report.undercuts.empty()) out << " none";
  out << "\n";
  for (const auto& u : report.undercuts) {
    for (const auto* b : u.by) out << "  " << ref(*b) << " undercuts " << ref(*u.target) << "\n";
  }
  const NatureLabel label = nature_modality(state, claim);
  out << "modality: " << abbreviation(label) << "\n";
  out << "valuation: " << (label == NatureLabel::Confirmed ? 1 : 0) << "\n";
  const auto* proof = provisional_proof(state, claim);
  out << "provisional proof: " << (proof ? ref(*proof) : std::string("none")) << "\n";
  return out.str();
}

}  // namespace agora
