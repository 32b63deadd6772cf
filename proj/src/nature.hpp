// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_NATURE_HPP
#define AGORA_NATURE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argument.hpp"
#include "wff.hpp"

namespace agora {

// Nature's claims dictionary, weakest first so that `<` orders by strength.
enum class NatureLabel { Open, Supported, Plausible, Probable, Confirmed, Certain };

// Cert, Conf, Prob, Plaus, Supp, Open.
const char* abbreviation(NatureLabel l);
std::optional<NatureLabel> nature_label_from_string(const std::string& s);

struct NatureContext {
  ConsistencyMode consistency = ConsistencyMode::Syntactic;
  std::size_t atom_budget = kDefaultAtomBudget;
};

// A grounded argument put on the table by a show_arg, prec or accept move.
struct ExhibitedArgument {
  int move_id = 0;
  std::string actor;
  ValuedArgument argument;

  const GroundedArgument& grounded() const { return argument.grounded(); }
  bool operator==(const ExhibitedArgument&) const = default;
};

using ArgumentPool = std::span<const ExhibitedArgument>;

// Consistency under `ctx`; past the classical atom budget this falls back to
// the syntactic check.
bool consistent_in(const GroundedArgument& arg, const NatureContext& ctx);

// Supported, Plausible, Probable or Confirmed for an argument exhibited in
// `pool`.
NatureLabel argument_tier(const ExhibitedArgument& arg, ArgumentPool pool, const NatureContext& ctx);

// Nature's modality for `claim`. Sets `*budget_exceeded` when the tautology
// check was skipped for size.
NatureLabel nature_modality(ArgumentPool pool, const Wff& claim, const NatureContext& ctx,
                            bool* budget_exceeded = nullptr);

// 1 iff the modality is Confirmed.
int natural_valuation(ArgumentPool pool, const Wff& claim, const NatureContext& ctx);

// A consistent exhibited argument for `claim` with no rebuttal and no
// undercutter in `pool`, or null.
const ExhibitedArgument* provisional_proof(ArgumentPool pool, const Wff& claim, const NatureContext& ctx);

struct AttackReport {
  struct Undercut {
    const ExhibitedArgument* target;
    std::vector<const ExhibitedArgument*> by;
  };
  std::vector<const ExhibitedArgument*> supporting;
  std::vector<const ExhibitedArgument*> rebuttals;
  std::vector<Undercut> undercuts;

  bool empty() const { return supporting.empty() && rebuttals.empty() && undercuts.empty(); }
};

AttackReport attackers(ArgumentPool pool, const Wff& claim);
std::vector<const ExhibitedArgument*> undercutters_of(ArgumentPool pool, const ExhibitedArgument& target);

// Nature's commitment store: every tracked wff with its current modality.
// Tracking a wff also tracks its negation.
class NatureStore {
 public:
  struct Entry {
    Wff wff;
    NatureLabel label = NatureLabel::Open;
    bool tautology = false;
    bool budget_exceeded = false;

    bool operator==(const Entry&) const = default;
  };

  // Returns true if anything new was tracked.
  bool track(const Wff& w, ArgumentPool pool, const NatureContext& ctx);

  void recompute_all(ArgumentPool pool, const NatureContext& ctx);
  // Recomputes only the entries an argument newly added to `pool` can affect.
  void update_for_new_argument(const ExhibitedArgument& added, ArgumentPool pool, const NatureContext& ctx);

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const Wff& w) const;
  bool empty() const { return entries_.empty(); }

  // "(phi, Conf), (~phi, Open)". A non-empty `focus` keeps only the focus
  // wffs and their negations.
  std::string snapshot(std::span<const Wff> focus = {}) const;

  bool operator==(const NatureStore&) const = default;

 private:
  void add(const Wff& w, ArgumentPool pool, const NatureContext& ctx);

  std::vector<Entry> entries_;
};

}  // namespace agora

#endif  // AGORA_NATURE_HPP
