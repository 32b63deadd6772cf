// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "protocol.hpp"

#include <algorithm>
#include <array>

namespace agora {

namespace {

struct KindInfo {
  MoveKind kind;
  const char* keyword;
  const char* rule;
};

constexpr std::array<KindInfo, kMoveKindCount> kKinds{{
    {MoveKind::Pose, "pose", "1.1"},
    {MoveKind::Propose, "propose", "1.2"},
    {MoveKind::Assert, "assert", "1.3"},
    {MoveKind::Query, "query", "1.4"},
    {MoveKind::ShowArg, "show_arg", "1.5"},
    {MoveKind::PoseCons, "pose_cons", "1.6"},
    {MoveKind::ProposeCons, "propose_cons", "1.7"},
    {MoveKind::AssertCons, "assert_cons", "1.8"},
    {MoveKind::QueryCons, "query_cons", "1.9"},
    {MoveKind::ShowCons, "show_cons", "1.10"},
    {MoveKind::ProposeInf, "propose_inf", "1.11"},
    {MoveKind::Contest, "contest", "2.1"},
    {MoveKind::ContestGround, "contest_ground", "2.2"},
    {MoveKind::ContestInf, "contest_inf", "2.3"},
    {MoveKind::ContestMod, "contest_mod", "2.4"},
    {MoveKind::ContestCons, "contest_cons", "2.5"},
    {MoveKind::AcceptProp, "accept_prop", "3.1"},
    {MoveKind::AcceptAssert, "accept_assert", "3.2"},
    {MoveKind::AcceptInf, "accept_inf", "3.4"},
    {MoveKind::AcceptCons, "accept_cons", "3.5"},
    {MoveKind::Prec, "prec", "3.6"},
    {MoveKind::Retract, "retract", "3.7"},
}};

const KindInfo& info(MoveKind k) { return kKinds[static_cast<std::size_t>(k)]; }

// Desired property each protocol rule gives effect to.
std::string property_for_rule(const std::string& rule) {
  static const std::map<std::string, std::string> table = {
      {"1.1", "P3"}, {"1.2", "P3"}, {"1.3", "P3"}, {"1.4", "P4"},  {"1.5", "P5"},  {"1.6", "P3"},
      {"1.7", "P3"}, {"1.8", "P3"}, {"1.9", "P4"}, {"1.10", "P5"}, {"1.11", "P9"}, {"2.1", "P4"},
      {"2.2", "P6"}, {"2.3", "P6"}, {"2.4", "P6"}, {"2.5", "P4"},  {"3.1", "P7"},  {"3.2", "P7"},
      {"3.3", "P7"}, {"3.4", "P7"}, {"3.5", "P7"}, {"3.6", "P8"},  {"3.7", "P10"}, {"3.8", "P10"},
  };
  auto it = table.find(rule);
  return it == table.end() ? "" : it->second;
}

Violation make_violation(ViolationKind kind, const std::string& rule, std::string detail,
                         std::string property = {}) {
  if (property.empty()) property = property_for_rule(rule);
  return Violation{kind, rule, std::move(property), std::move(detail)};
}

bool is_argument_move(MoveKind k) {
  return k == MoveKind::ShowArg || k == MoveKind::Prec || k == MoveKind::AcceptProp || k == MoveKind::AcceptAssert;
}

bool is_cons_move(MoveKind k) { return k == MoveKind::ShowCons || k == MoveKind::AcceptCons; }

const ExhibitedArgument* exhibited_by(const std::vector<ExhibitedArgument>& pool, int move_id) {
  auto it = std::find_if(pool.begin(), pool.end(), [&](const ExhibitedArgument& e) { return e.move_id == move_id; });
  return it == pool.end() ? nullptr : &*it;
}

// Claim a logged propose/assert/accept move stands behind.
std::optional<Wff> claim_of(const DialogueState& s, const Move& m) {
  if (m.kind == MoveKind::Propose || m.kind == MoveKind::Assert) return m.wff;
  if (m.kind == MoveKind::AcceptProp || m.kind == MoveKind::AcceptAssert) {
    if (const auto* e = exhibited_by(s.exhibited, m.id)) return e->grounded().claim;
  }
  return std::nullopt;
}

bool has_claimed(const DialogueState& s, const std::string& who, const Wff& claim,
                 std::initializer_list<MoveKind> kinds) {
  return std::any_of(s.log.begin(), s.log.end(), [&](const Move& m) {
    if (m.actor != who || std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) return false;
    auto c = claim_of(s, m);
    return c && same_claim(*c, claim);
  });
}

ValuedArgument canonical_labels(ValuedArgument arg, const DictionarySet& d) {
  for (auto& v : arg.values.grounds)
    for (auto& l : v) l = *d.grounds.canonical(l);
  for (auto& l : arg.values.inference) l = *d.inference.canonical(l);
  const auto& cd = arg.is_grounded() ? d.claims : d.consequences;
  arg.values.claim = *cd.canonical(arg.values.claim);
  return arg;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void mention_argument(const ValuedArgument& arg, std::vector<Wff>& out) {
  if (!arg.is_grounded()) out.push_back(arg.consequential().source);
  for (const auto& step : arg.steps()) {
    out.insert(out.end(), step.premises.begin(), step.premises.end());
    out.push_back(step.conclusion);
  }
}

std::optional<std::string> precization_problem(const GroundedArgument& old, const GroundedArgument& neu) {
  if (!same_claim(old.claim, neu.claim)) return "qualified argument must keep the claim " + render(old.claim);
  if (old.steps.size() != neu.steps.size()) return "qualified argument must keep the same number of steps";
  for (std::size_t k = 1; k < old.steps.size(); ++k) {
    if (old.steps[k] != neu.steps[k]) return "step " + std::to_string(k + 1) + " must be unchanged";
  }
  const auto& o0 = old.steps.front();
  const auto& n0 = neu.steps.front();
  if (o0.rule != n0.rule || o0.conclusion != n0.conclusion) return "step 1 must keep its rule and conclusion";
  for (const auto& p : o0.premises) {
    if (std::find(n0.premises.begin(), n0.premises.end(), p) == n0.premises.end())
      return "qualified grounds must extend the original grounds (missing " + render(p) + ")";
  }
  std::vector<Wff> added;
  for (const auto& p : n0.premises) {
    if (std::find(o0.premises.begin(), o0.premises.end(), p) == o0.premises.end() &&
        std::find(added.begin(), added.end(), p) == added.end())
      added.push_back(p);
  }
  if (added.empty()) return "qualification adds no grounds";
  if (added.size() == 1) {
    if (same_claim(added.front(), old.claim)) return "added grounds may not be the claim itself";
    const auto g = grounds_of(old);
    if (std::find(g.begin(), g.end(), added.front()) != g.end())
      return "added grounds may not be an existing ground " + render(added.front());
  }
  return std::nullopt;
}

class Step {
 public:
  Step(const DialogueState& state, const Move& move) : prev_(state), move_(move), next_(state) {}

  StepResult run();

 private:
  std::optional<Violation> check_obligation() const;
  std::optional<Violation> apply_kind();
  std::optional<Violation> check_argument(const ValuedArgument& arg, bool grounded);
  std::optional<Violation> need_label(const ModalityDictionary& dict, const std::optional<std::string>& label);
  std::optional<Violation> contradiction(const Wff& claim) const;
  const Move* target(std::optional<Violation>& err) const;
  Violation bad_target(const std::string& detail) const {
    return make_violation(ViolationKind::BadTarget, info(move_.kind).rule, detail);
  }
  Violation malformed(const std::string& detail, const std::string& property = {}) const {
    return make_violation(ViolationKind::MalformedPayload, info(move_.kind).rule, detail, property);
  }
  ParticipantStore& store() { return next_.stores[move_.actor]; }

  const DialogueState& prev_;
  const Move& move_;
  DialogueState next_;
  std::vector<std::string> warnings_;
  std::vector<Wff> mentioned_;
  std::optional<ExhibitedArgument> added_;
  std::optional<Obligation> created_;
};

std::optional<Violation> Step::check_obligation() const {
  if (prev_.obligations.empty()) return std::nullopt;
  const Obligation& ob = prev_.obligations.front();
  const char* rule = ob.required == Obligation::Response::ShowArg    ? "1.4"
                     : ob.required == Obligation::Response::ShowCons ? "1.9"
                                                                     : "2.1";
  auto fail = [&](const std::string& why) {
    return make_violation(ViolationKind::ObligationViolation, rule,
                          "pending obligation: " + ob.describe() + "; " + why, "P5");
  };
  if (move_.actor != ob.participant) return fail(move_.actor + " moved out of turn");
  switch (ob.required) {
    case Obligation::Response::ShowArg:
      if (move_.kind != MoveKind::ShowArg || !move_.argument || !move_.argument->is_grounded() ||
          !same_claim(move_.argument->grounded().claim, ob.claim))
        return fail("expected show_arg for " + render(ob.claim));
      break;
    case Obligation::Response::ShowCons: {
      bool ok = move_.kind == MoveKind::ShowCons && move_.argument && !move_.argument->is_grounded() &&
                same_claim(move_.argument->consequential().source, ob.claim);
      if (ok && ob.consequence) {
        auto cs = move_.argument->consequential().consequences();
        ok = std::any_of(cs.begin(), cs.end(), [&](const Wff& c) { return same_claim(c, *ob.consequence); });
      }
      if (!ok) return fail("expected show_cons from " + render(ob.claim));
      break;
    }
    case Obligation::Response::ContestResponse: {
      if ((move_.kind != MoveKind::Propose && move_.kind != MoveKind::Assert) || !move_.wff || !move_.label)
        return fail("expected propose or assert answering the contest");
      const auto& dict = prev_.dictionaries.claims;
      if (!dict.contains(*move_.label)) break;  // reported as malformed by the kind check
      auto response = [&](const std::string& why) {
        return make_violation(ViolationKind::ContestResponseViolation, "2.1",
                              "answer to contest of " + render(ob.claim) + " (" + ob.contested_label + "): " + why);
      };
      if (same_claim(*move_.wff, ob.claim)) {
        if (dict.compare(*move_.label, ob.contested_label) == Comparison::Equal)
          return response("a re-proposal must assign a different modality");
      } else if (neg_equivalent(*move_.wff, ob.claim)) {
        if (prev_.config.strict && !dict.greater(*move_.label, ob.contested_label))
          return response("the negation must carry a modality above " + ob.contested_label);
      } else {
        return response("concerns neither " + render(ob.claim) + " nor its negation");
      }
      break;
    }
  }
  return std::nullopt;
}

const Move* Step::target(std::optional<Violation>& err) const {
  if (!move_.target) {
    err = malformed("missing target move");
    return nullptr;
  }
  const Move* t = prev_.find_move(*move_.target);
  if (!t) err = bad_target("M" + std::to_string(*move_.target) + " is not a legal move of this dialogue");
  return t;
}

std::optional<Violation> Step::need_label(const ModalityDictionary& dict, const std::optional<std::string>& label) {
  if (!label) return malformed("missing modality label");
  if (!dict.contains(*label)) return malformed("label " + *label + " is not in dictionary " + dict.name(), "P2");
  return std::nullopt;
}

std::optional<Violation> Step::check_argument(const ValuedArgument& arg, bool grounded) {
  if (arg.is_grounded() != grounded)
    return malformed(std::string("expected a ") + (grounded ? "grounded" : "consequential") + " argument");
  auto report = grounded ? well_formed(arg.grounded(), &prev_.rules) : well_formed(arg.consequential(), &prev_.rules);
  if (!report.ok()) return malformed("argument " + arg.name + " is ill-formed: " + join(report.violations));
  if (auto problems = check_values(arg, prev_.dictionaries); !problems.empty())
    return malformed("argument " + arg.name + " values: " + join(problems), "P2");
  for (auto& w : report.warnings) warnings_.push_back("argument " + arg.name + " " + w);
  return std::nullopt;
}

std::optional<Violation> Step::contradiction(const Wff& claim) const {
  auto it = prev_.stores.find(move_.actor);
  if (it == prev_.stores.end()) return std::nullopt;
  for (const auto& a : it->second.asserted) {
    if (neg_equivalent(a, claim))
      return make_violation(ViolationKind::Contradiction, "3.8",
                            move_.actor + " stands by an assertion of " + render(a) + " and has not retracted it");
  }
  return std::nullopt;
}

std::optional<Violation> Step::apply_kind() {
  std::optional<Violation> err;
  const auto& dicts = prev_.dictionaries;
  switch (move_.kind) {
    case MoveKind::Pose:
    case MoveKind::PoseCons:
      if (!move_.wff) return malformed("missing formula");
      mentioned_.push_back(*move_.wff);
      return std::nullopt;

    case MoveKind::Propose:
    case MoveKind::Assert: {
      if (!move_.wff) return malformed("missing claim");
      if ((err = need_label(dicts.claims, move_.label))) return err;
      if (move_.kind == MoveKind::Assert && (err = contradiction(*move_.wff))) return err;
      auto& s = store();
      s.put(*move_.wff, *dicts.claims.canonical(*move_.label));
      if (move_.kind == MoveKind::Assert &&
          std::none_of(s.asserted.begin(), s.asserted.end(), [&](const Wff& a) { return same_claim(a, *move_.wff); }))
        s.asserted.push_back(*move_.wff);
      mentioned_.push_back(*move_.wff);
      return std::nullopt;
    }

    case MoveKind::Query: {
      const Move* t = target(err);
      if (!t) return err;
      if (t->kind == MoveKind::Propose || t->kind == MoveKind::Assert) {
        if (t->actor == move_.actor) return bad_target("a participant may not query their own claim");
        created_ = Obligation{t->actor, Obligation::Response::ShowArg, *t->wff, std::nullopt, "", move_.id};
        return std::nullopt;
      }
      if (t->kind == MoveKind::Contest) {
        const Move* contested = prev_.find_move(*t->target);
        created_ = Obligation{t->actor, Obligation::Response::ContestResponse, *contested->wff, std::nullopt,
                              *dicts.claims.canonical(*contested->label), move_.id};
        return std::nullopt;
      }
      return bad_target("query must target a propose, assert or contest move");
    }

    case MoveKind::ShowArg:
    case MoveKind::Prec: {
      if (!move_.argument) return malformed("missing argument");
      if ((err = check_argument(*move_.argument, true))) return err;
      ValuedArgument arg = canonical_labels(*move_.argument, dicts);
      const Wff& claim = arg.grounded().claim;
      bool shown_before = std::any_of(prev_.exhibited.begin(), prev_.exhibited.end(), [&](const ExhibitedArgument& e) {
        return e.actor == move_.actor && same_claim(e.grounded().claim, claim);
      });
      if (move_.kind == MoveKind::Prec) {
        const Move* t = target(err);
        if (!t) return err;
        if (t->kind != MoveKind::ShowArg && t->kind != MoveKind::Prec)
          return bad_target("prec must target a show_arg or prec move");
        if (t->actor != move_.actor) return bad_target("a participant may only qualify their own argument");
        if (!has_claimed(prev_, move_.actor, claim,
                         {MoveKind::Propose, MoveKind::Assert, MoveKind::AcceptProp, MoveKind::AcceptAssert}))
          return bad_target(move_.actor + " has not proposed or asserted " + render(claim));
        const auto* old = exhibited_by(prev_.exhibited, t->id);
        if (auto problem = precization_problem(old->grounded(), arg.grounded())) return malformed(*problem);
      }
      // Change of modalities: a later showing revises the store entry.
      auto& s = store();
      if (shown_before && s.label_of(claim)) s.put(claim, arg.values.claim);
      mention_argument(arg, mentioned_);
      added_ = ExhibitedArgument{move_.id, move_.actor, std::move(arg)};
      return std::nullopt;
    }

    case MoveKind::ProposeCons:
    case MoveKind::AssertCons:
      if (!move_.wff || !move_.consequence) return malformed("missing claim or consequence");
      if ((err = need_label(dicts.consequences, move_.label))) return err;
      mentioned_.push_back(*move_.wff);
      mentioned_.push_back(*move_.consequence);
      return std::nullopt;

    case MoveKind::QueryCons: {
      const Move* t = target(err);
      if (!t) return err;
      if (t->kind != MoveKind::ProposeCons && t->kind != MoveKind::AssertCons)
        return bad_target("query_cons must target a propose_cons or assert_cons move");
      if (t->actor == move_.actor) return bad_target("a participant may not query their own consequence");
      created_ = Obligation{t->actor, Obligation::Response::ShowCons, *t->wff, t->consequence, "", move_.id};
      return std::nullopt;
    }

    case MoveKind::ShowCons: {
      if (!move_.argument) return malformed("missing argument");
      if ((err = check_argument(*move_.argument, false))) return err;
      ValuedArgument arg = canonical_labels(*move_.argument, dicts);
      mention_argument(arg, mentioned_);
      next_.exhibited_consequences.push_back({move_.id, move_.actor, std::move(arg)});
      return std::nullopt;
    }

    case MoveKind::ProposeInf:
      if (!move_.rule) return malformed("missing inference rule");
      if ((err = need_label(dicts.inference, move_.label))) return err;
      if (!next_.find_rule(*move_.rule))
        next_.rules.push_back({*move_.rule, "", *dicts.inference.canonical(*move_.label), Validator::None});
      return std::nullopt;

    case MoveKind::Contest: {
      const Move* t = target(err);
      if (!t) return err;
      if (t->kind != MoveKind::Propose && t->kind != MoveKind::Assert)
        return bad_target("contest must target a propose or assert move");
      if (t->actor == move_.actor) return bad_target("a participant may not contest their own claim");
      return std::nullopt;
    }

    case MoveKind::ContestGround:
    case MoveKind::ContestInf:
    case MoveKind::ContestMod: {
      const Move* t = target(err);
      if (!t) return err;
      if (!is_argument_move(t->kind)) return bad_target(std::string(keyword(move_.kind)) + " must target a move exhibiting a grounded argument");
      if (t->actor == move_.actor) return bad_target("a participant may not contest their own argument");
      const auto& a = exhibited_by(prev_.exhibited, t->id)->grounded();
      if (move_.kind == MoveKind::ContestGround) {
        if (!move_.wff) return malformed("missing contested ground");
        auto ps = premise_set(a);
        if (std::find(ps.begin(), ps.end(), *move_.wff) == ps.end())
          return bad_target(render(*move_.wff) + " is not a ground of the argument shown at M" + std::to_string(t->id));
        if ((err = need_label(dicts.grounds, move_.label))) return err;
        mentioned_.push_back(*move_.wff);
      } else if (move_.kind == MoveKind::ContestInf) {
        if (!move_.rule) return malformed("missing contested inference rule");
        if (std::none_of(a.steps.begin(), a.steps.end(), [&](const InferenceStep& s) { return s.rule == *move_.rule; }))
          return bad_target("rule " + *move_.rule + " is not used by the argument shown at M" + std::to_string(t->id));
      }
      return std::nullopt;
    }

    case MoveKind::ContestCons: {
      const Move* t = target(err);
      if (!t) return err;
      if (!is_cons_move(t->kind)) return bad_target("contest_cons must target a show_cons or accept_cons move");
      if (t->actor == move_.actor) return bad_target("a participant may not contest their own consequence");
      if (!move_.wff) return malformed("missing contested consequence");
      const auto* ex = exhibited_by(prev_.exhibited_consequences, t->id);
      auto cs = ex->argument.consequential().consequences();
      if (std::find(cs.begin(), cs.end(), *move_.wff) == cs.end())
        return bad_target(render(*move_.wff) + " is not a consequence in the argument shown at M" + std::to_string(t->id));
      if ((err = need_label(dicts.consequences, move_.label))) return err;
      mentioned_.push_back(*move_.wff);
      return std::nullopt;
    }

    case MoveKind::AcceptProp:
    case MoveKind::AcceptAssert: {
      const Move* t = target(err);
      if (!t) return err;
      if (!is_argument_move(t->kind)) return bad_target(std::string(keyword(move_.kind)) + " must target a move exhibiting a grounded argument");
      if (t->actor == move_.actor) return bad_target("a participant may not accept their own claim");
      const auto* shown = exhibited_by(prev_.exhibited, t->id);
      const Wff& claim = shown->grounded().claim;
      bool prop = move_.kind == MoveKind::AcceptProp;
      if (!has_claimed(prev_, t->actor, claim,
                       prop ? std::initializer_list<MoveKind>{MoveKind::Propose, MoveKind::AcceptProp}
                            : std::initializer_list<MoveKind>{MoveKind::Assert, MoveKind::AcceptAssert}))
        return bad_target(t->actor + " has not " + (prop ? "proposed " : "asserted ") + render(claim));
      ValuedArgument arg = shown->argument;
      if (move_.label) {
        if ((err = need_label(dicts.claims, move_.label))) return err;
        arg.values.claim = *dicts.claims.canonical(*move_.label);
      }
      if (!prop && (err = contradiction(claim))) return err;
      auto& s = store();
      s.put(claim, arg.values.claim);
      if (!prop && std::none_of(s.asserted.begin(), s.asserted.end(), [&](const Wff& a) { return same_claim(a, claim); }))
        s.asserted.push_back(claim);
      added_ = ExhibitedArgument{move_.id, move_.actor, std::move(arg)};
      return std::nullopt;
    }

    case MoveKind::AcceptInf: {
      const Move* t = target(err);
      if (!t) return err;
      if (t->kind != MoveKind::ProposeInf) return bad_target("accept_inf must target a propose_inf move");
      if (t->actor == move_.actor) return bad_target("a participant may not accept their own inference proposal");
      return std::nullopt;
    }

    case MoveKind::AcceptCons: {
      const Move* t = target(err);
      if (!t) return err;
      if (!is_cons_move(t->kind)) return bad_target("accept_cons must target a show_cons or accept_cons move");
      if (t->actor == move_.actor) return bad_target("a participant may not accept their own consequence");
      ExhibitedArgument copy = *exhibited_by(prev_.exhibited_consequences, t->id);
      copy.move_id = move_.id;
      copy.actor = move_.actor;
      next_.exhibited_consequences.push_back(std::move(copy));
      return std::nullopt;
    }

    case MoveKind::Retract: {
      const Move* t = target(err);
      if (!t) return err;
      if (t->actor != move_.actor) return bad_target("a participant may only retract their own commitments");
      bool retractable = t->kind == MoveKind::Assert || t->kind == MoveKind::AcceptAssert ||
                         t->kind == MoveKind::AcceptProp || (t->kind == MoveKind::Propose && !prev_.config.strict);
      if (!retractable) {
        return bad_target(t->kind == MoveKind::Propose ? "strict mode: only assertions and accepted claims can be retracted"
                                                       : "retract must target an assert or accept move");
      }
      Wff claim = *claim_of(prev_, *t);
      auto& s = store();
      if (!s.remove(claim)) return bad_target(render(claim) + " is not in the commitment store of " + move_.actor);
      std::erase_if(s.asserted, [&](const Wff& a) { return same_claim(a, claim); });
      return std::nullopt;
    }
  }
  return malformed("unknown move kind");
}

StepResult Step::run() {
  if (move_.actor.empty()) return malformed("move has no actor");
  if (!prev_.log.empty() && move_.id <= prev_.log.back().id)
    return malformed("move M" + std::to_string(move_.id) + " does not follow M" + std::to_string(prev_.log.back().id));
  if (auto v = check_obligation()) return *v;
  if (!next_.has_participant(move_.actor)) next_.participants.push_back(move_.actor);
  if (auto v = apply_kind()) return *v;

  if (!prev_.obligations.empty()) next_.obligations.pop_front();
  if (created_) next_.obligations.push_back(*created_);
  next_.log.push_back(move_);

  const auto ctx = next_.config.nature_context();
  const NatureStore before = next_.nature;
  if (added_) next_.exhibited.push_back(*added_);
  for (const auto& w : mentioned_) {
    const std::size_t n = next_.nature.entries().size();
    if (next_.nature.track(w, next_.pool(), ctx)) {
      for (std::size_t i = n; i < next_.nature.entries().size(); ++i) {
        const auto& e = next_.nature.entries()[i];
        if (e.budget_exceeded)
          warnings_.push_back("tautology check skipped for " + render(e.wff) + ": too many atoms");
      }
    }
  }
  if (added_) next_.nature.update_for_new_argument(next_.exhibited.back(), next_.pool(), ctx);

  Transition t{std::move(next_), std::move(warnings_), false};
  t.nature_changed = !(t.state.nature == before);
  return t;
}

}  // namespace

const char* keyword(MoveKind k) { return info(k).keyword; }

const char* licensing_rule(MoveKind k) { return info(k).rule; }

std::optional<MoveKind> move_kind_from_keyword(const std::string& s) {
  for (const auto& i : kKinds)
    if (s == i.keyword) return i.kind;
  return std::nullopt;
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::ObligationViolation: return "obligation-violation";
    case ViolationKind::Contradiction: return "contradiction";
    case ViolationKind::BadTarget: return "bad-target";
    case ViolationKind::MalformedPayload: return "malformed-payload";
    case ViolationKind::ContestResponseViolation: return "contest-response-violation";
  }
  return "?";
}

std::string Violation::describe() const {
  std::string out = std::string(to_string(kind)) + " (Rule " + rule;
  if (!property.empty()) out += ", " + property;
  return out + "): " + detail;
}

std::string Obligation::describe() const {
  std::string out = participant + " must ";
  switch (required) {
    case Response::ShowArg:
      out += "show_arg for " + render(claim);
      break;
    case Response::ShowCons:
      out += "show_cons from " + render(claim);
      if (consequence) out += " to " + render(*consequence);
      break;
    case Response::ContestResponse:
      out += "answer the contest of (" + render(claim) + ", " + contested_label + ")";
      break;
  }
  return out + " (M" + std::to_string(source) + ")";
}

std::string render_move_body(const Move& m) {
  std::string out = std::string(keyword(m.kind)) + " " + m.actor;
  if (m.target) out += " @M" + std::to_string(*m.target);
  switch (m.kind) {
    case MoveKind::Pose:
    case MoveKind::PoseCons:
      if (m.wff) out += " " + render(*m.wff);
      break;
    case MoveKind::Propose:
    case MoveKind::Assert:
    case MoveKind::ContestGround:
    case MoveKind::ContestCons:
      if (m.wff) out += " (" + render(*m.wff) + ", " + m.label.value_or("?") + ")";
      break;
    case MoveKind::ProposeCons:
    case MoveKind::AssertCons:
      if (m.wff && m.consequence)
        out += " (" + render(*m.wff) + ", " + render(*m.consequence) + ", " + m.label.value_or("?") + ")";
      break;
    case MoveKind::ProposeInf:
      out += " (" + m.rule.value_or("?") + ", " + m.label.value_or("?") + ")";
      break;
    case MoveKind::ContestInf:
      if (m.rule) out += " " + *m.rule;
      break;
    case MoveKind::AcceptProp:
    case MoveKind::AcceptAssert:
      if (m.label) out += " (" + *m.label + ")";
      break;
    case MoveKind::ShowArg:
    case MoveKind::ShowCons:
    case MoveKind::Prec:
      if (m.argument) out += " " + m.argument->name;
      break;
    default:
      break;
  }
  return out;
}

const std::string* ParticipantStore::label_of(const Wff& w) const {
  for (const auto& [f, l] : entries)
    if (same_claim(f, w)) return &l;
  return nullptr;
}

void ParticipantStore::put(const Wff& w, const std::string& label) {
  for (auto& [f, l] : entries) {
    if (same_claim(f, w)) {
      l = label;
      return;
    }
  }
  entries.emplace_back(w, label);
}

bool ParticipantStore::remove(const Wff& w) {
  auto n = std::erase_if(entries, [&](const auto& e) { return same_claim(e.first, w); });
  return n > 0;
}

const Move* DialogueState::find_move(int id) const {
  auto it = std::find_if(log.begin(), log.end(), [&](const Move& m) { return m.id == id; });
  return it == log.end() ? nullptr : &*it;
}

const InferenceRule* DialogueState::find_rule(const std::string& id) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const InferenceRule& r) { return r.id == id; });
  return it == rules.end() ? nullptr : &*it;
}

bool DialogueState::has_participant(const std::string& p) const {
  return std::find(participants.begin(), participants.end(), p) != participants.end();
}

DialogueState initial_state(ProtocolConfig config, DictionarySet dictionaries, std::vector<InferenceRule> rules,
                            std::vector<std::string> participants, const std::vector<Wff>& track) {
  DialogueState s;
  s.config = config;
  s.dictionaries = std::move(dictionaries);
  s.rules = std::move(rules);
  s.participants = std::move(participants);
  for (const auto& w : track) s.nature.track(w, s.pool(), config.nature_context());
  return s;
}

StepResult apply_move(const DialogueState& state, const Move& move) { return Step(state, move).run(); }

}  // namespace agora
