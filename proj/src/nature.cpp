// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "nature.hpp"

#include <algorithm>

namespace agora {

const char* abbreviation(NatureLabel l) {
  switch (l) {
    case NatureLabel::Certain: return "Cert";
    case NatureLabel::Confirmed: return "Conf";
    case NatureLabel::Probable: return "Prob";
    case NatureLabel::Plausible: return "Plaus";
    case NatureLabel::Supported: return "Supp";
    case NatureLabel::Open: return "Open";
  }
  return "Open";
}

std::optional<NatureLabel> nature_label_from_string(const std::string& s) {
  for (auto l : {NatureLabel::Open, NatureLabel::Supported, NatureLabel::Plausible, NatureLabel::Probable,
                 NatureLabel::Confirmed, NatureLabel::Certain}) {
    if (s == abbreviation(l)) return l;
  }
  auto full = dictionaries::claims().canonical(s);
  return full && *full != s ? nature_label_from_string(*full) : std::nullopt;
}

bool consistent_in(const GroundedArgument& arg, const NatureContext& ctx) {
  try {
    return is_consistent(arg, ctx.consistency, ctx.atom_budget);
  } catch (const AtomBudgetExceeded&) {
    return is_consistent(arg, ConsistencyMode::Syntactic);
  }
}

namespace {

bool rebutted(ArgumentPool pool, const Wff& claim) {
  return std::any_of(pool.begin(), pool.end(),
                     [&](const ExhibitedArgument& b) { return neg_equivalent(b.grounded().claim, claim); });
}

bool undercut(ArgumentPool pool, const GroundedArgument& a) {
  return std::any_of(pool.begin(), pool.end(),
                     [&](const ExhibitedArgument& b) { return undercuts(b.grounded(), a); });
}

}  // namespace

NatureLabel argument_tier(const ExhibitedArgument& arg, ArgumentPool pool, const NatureContext& ctx) {
  const auto& a = arg.grounded();
  if (!well_formed(a).ok()) return NatureLabel::Open;
  if (!consistent_in(a, ctx)) return NatureLabel::Supported;
  if (rebutted(pool, a.claim)) return NatureLabel::Plausible;
  if (undercut(pool, a)) return NatureLabel::Probable;
  return NatureLabel::Confirmed;
}

NatureLabel nature_modality(ArgumentPool pool, const Wff& claim, const NatureContext& ctx, bool* budget_exceeded) {
  if (budget_exceeded) *budget_exceeded = false;
  try {
    if (is_tautology(claim, ctx.atom_budget)) return NatureLabel::Certain;
  } catch (const AtomBudgetExceeded&) {
    if (budget_exceeded) *budget_exceeded = true;
  }
  NatureLabel best = NatureLabel::Open;
  for (const auto& arg : pool) {
    if (!same_claim(arg.grounded().claim, claim)) continue;
    best = std::max(best, argument_tier(arg, pool, ctx));
    if (best == NatureLabel::Confirmed) break;
  }
  return best;
}

int natural_valuation(ArgumentPool pool, const Wff& claim, const NatureContext& ctx) {
  return nature_modality(pool, claim, ctx) == NatureLabel::Confirmed ? 1 : 0;
}

const ExhibitedArgument* provisional_proof(ArgumentPool pool, const Wff& claim, const NatureContext& ctx) {
  if (rebutted(pool, claim)) return nullptr;
  for (const auto& arg : pool) {
    const auto& a = arg.grounded();
    if (!same_claim(a.claim, claim)) continue;
    if (well_formed(a).ok() && consistent_in(a, ctx) && !undercut(pool, a)) return &arg;
  }
  return nullptr;
}

std::vector<const ExhibitedArgument*> undercutters_of(ArgumentPool pool, const ExhibitedArgument& target) {
  std::vector<const ExhibitedArgument*> out;
  for (const auto& b : pool) {
    if (undercuts(b.grounded(), target.grounded())) out.push_back(&b);
  }
  return out;
}

AttackReport attackers(ArgumentPool pool, const Wff& claim) {
  AttackReport report;
  for (const auto& arg : pool) {
    const auto& c = arg.grounded().claim;
    if (same_claim(c, claim)) report.supporting.push_back(&arg);
    if (neg_equivalent(c, claim)) report.rebuttals.push_back(&arg);
  }
  for (const auto* s : report.supporting) {
    auto by = undercutters_of(pool, *s);
    if (!by.empty()) report.undercuts.push_back({s, std::move(by)});
  }
  return report;
}

void NatureStore::add(const Wff& w, ArgumentPool pool, const NatureContext& ctx) {
  Entry e{w};
  try {
    e.tautology = is_tautology(w, ctx.atom_budget);
  } catch (const AtomBudgetExceeded&) {
    e.budget_exceeded = true;
  }
  e.label = e.tautology ? NatureLabel::Certain : nature_modality(pool, w, ctx);
  entries_.push_back(std::move(e));
}

bool NatureStore::track(const Wff& w, ArgumentPool pool, const NatureContext& ctx) {
  bool added = false;
  for (const Wff& x : {w, negate(w)}) {
    if (!find(x)) {
      add(x, pool, ctx);
      added = true;
    }
  }
  return added;
}

const NatureStore::Entry* NatureStore::find(const Wff& w) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.wff == w; });
  return it == entries_.end() ? nullptr : &*it;
}

void NatureStore::recompute_all(ArgumentPool pool, const NatureContext& ctx) {
  for (auto& e : entries_) {
    if (!e.tautology) e.label = nature_modality(pool, e.wff, ctx);
  }
}

void NatureStore::update_for_new_argument(const ExhibitedArgument& added, ArgumentPool pool,
                                          const NatureContext& ctx) {
  const Wff& c = added.grounded().claim;
  std::vector<Wff> undercut_claims;
  for (const auto& arg : pool) {
    if (undercuts(added.grounded(), arg.grounded())) undercut_claims.push_back(arg.grounded().claim);
  }
  for (auto& e : entries_) {
    if (e.tautology) continue;
    bool affected = same_claim(e.wff, c) || neg_equivalent(e.wff, c) ||
                    std::any_of(undercut_claims.begin(), undercut_claims.end(),
                                [&](const Wff& u) { return same_claim(u, e.wff); });
    if (affected) e.label = nature_modality(pool, e.wff, ctx);
  }
}

std::string NatureStore::snapshot(std::span<const Wff> focus) const {
  std::string out;
  for (const auto& e : entries_) {
    if (!focus.empty() && std::none_of(focus.begin(), focus.end(), [&](const Wff& f) {
          return same_claim(f, e.wff) || neg_equivalent(f, e.wff);
        })) {
      continue;
    }
    if (!out.empty()) out += ", ";
    out += "(" + render(e.wff) + ", " + abbreviation(e.label) + ")";
  }
  return out;
}

}  // namespace agora
