// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "argument.hpp"

#include <algorithm>

namespace agora {

const char* to_string(Validator v) {
  switch (v) {
    case Validator::None: return "none";
    case Validator::ModusPonens: return "modus-ponens";
    case Validator::AndIntroduction: return "and-introduction";
  }
  return "none";
}

std::optional<Validator> validator_from_string(const std::string& s) {
  if (s == "none") return Validator::None;
  if (s == "modus-ponens") return Validator::ModusPonens;
  if (s == "and-introduction") return Validator::AndIntroduction;
  return std::nullopt;
}

const char* to_string(ConsistencyMode m) {
  return m == ConsistencyMode::Syntactic ? "syntactic" : "classical";
}

std::vector<Wff> ConsequentialArgument::consequences() const {
  std::vector<Wff> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.conclusion);
  return out;
}

const std::vector<InferenceStep>& ValuedArgument::steps() const {
  return is_grounded() ? grounded().steps : consequential().steps;
}

const Wff& ValuedArgument::conclusion() const {
  return is_grounded() ? grounded().claim : consequential().steps.back().conclusion;
}

namespace {

bool contains(const std::vector<Wff>& ws, const Wff& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

void check_chain(const std::vector<InferenceStep>& steps, const std::vector<InferenceRule>* rules,
                 WellFormedReport& report) {
  if (steps.empty()) {
    report.violations.push_back("argument has no inference steps");
    return;
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    const std::string where = "step " + std::to_string(k + 1);
    if (step.premises.empty()) report.violations.push_back(where + ": no premises");
    if (k > 0 && !contains(step.premises, steps[k - 1].conclusion)) {
      report.violations.push_back(where + ": premises do not include the previous conclusion " +
                                  render(steps[k - 1].conclusion));
    }
    if (!rules) continue;
    auto it = std::find_if(rules->begin(), rules->end(), [&](const InferenceRule& r) { return r.id == step.rule; });
    if (it == rules->end()) {
      report.violations.push_back(where + ": unknown inference rule " + step.rule);
    } else if (it->validator != Validator::None && !validator_accepts(it->validator, step)) {
      report.warnings.push_back(where + ": rule " + it->id + " (" + to_string(it->validator) +
                                ") does not match its premises and conclusion");
    }
  }
}

}  // namespace

WellFormedReport well_formed(const GroundedArgument& arg, const std::vector<InferenceRule>* rules) {
  WellFormedReport report;
  check_chain(arg.steps, rules, report);
  if (!arg.steps.empty() && arg.steps.back().conclusion != arg.claim) {
    report.violations.push_back("final conclusion " + render(arg.steps.back().conclusion) +
                                " does not match claim " + render(arg.claim));
  }
  return report;
}

WellFormedReport well_formed(const ConsequentialArgument& arg, const std::vector<InferenceRule>* rules) {
  WellFormedReport report;
  check_chain(arg.steps, rules, report);
  if (!arg.steps.empty() && !contains(arg.steps.front().premises, arg.source)) {
    report.violations.push_back("step 1: premises do not include the source claim " + render(arg.source));
  }
  return report;
}

std::vector<std::string> check_values(const ValuedArgument& arg, const DictionarySet& dicts) {
  std::vector<std::string> problems;
  const auto& steps = arg.steps();
  const auto& v = arg.values;
  const ModalityDictionary& conclusion_dict = arg.is_grounded() ? dicts.claims : dicts.consequences;
  if (v.grounds.size() != steps.size()) {
    problems.push_back("expected " + std::to_string(steps.size()) + " ground label vectors, got " +
                       std::to_string(v.grounds.size()));
  } else {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (v.grounds[k].size() != steps[k].premises.size()) {
        problems.push_back("step " + std::to_string(k + 1) + ": expected " +
                           std::to_string(steps[k].premises.size()) + " ground labels, got " +
                           std::to_string(v.grounds[k].size()));
      }
      for (const auto& l : v.grounds[k]) {
        if (!dicts.grounds.contains(l)) problems.push_back("ground label " + l + " is not in dictionary " + dicts.grounds.name());
      }
    }
  }
  if (v.inference.size() != steps.size()) {
    problems.push_back("expected " + std::to_string(steps.size()) + " inference labels, got " +
                       std::to_string(v.inference.size()));
  }
  for (const auto& l : v.inference) {
    if (!dicts.inference.contains(l)) problems.push_back("inference label " + l + " is not in dictionary " + dicts.inference.name());
  }
  if (!conclusion_dict.contains(v.claim)) {
    problems.push_back("conclusion label " + v.claim + " is not in dictionary " + conclusion_dict.name());
  }
  return problems;
}

bool validator_accepts(Validator v, const InferenceStep& step) {
  const auto& ps = step.premises;
  switch (v) {
    case Validator::None:
      return true;
    case Validator::ModusPonens:
      for (const auto& imp : ps) {
        if (imp.kind() != Wff::Kind::Implies || imp.right() != step.conclusion) continue;
        if (contains(ps, imp.left())) return true;
      }
      return false;
    case Validator::AndIntroduction:
      if (step.conclusion.kind() != Wff::Kind::And) return false;
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (i != j && ps[i] == step.conclusion.left() && ps[j] == step.conclusion.right()) return true;
      return false;
  }
  return false;
}

std::vector<Wff> grounds_of(const GroundedArgument& arg) {
  std::vector<Wff> produced;
  std::vector<Wff> out;
  for (const auto& step : arg.steps) {
    for (const auto& p : step.premises) {
      if (!contains(produced, p) && !contains(out, p)) out.push_back(p);
    }
    produced.push_back(step.conclusion);
  }
  return out;
}

std::vector<Wff> premise_set(const GroundedArgument& arg) {
  std::vector<Wff> out;
  for (const auto& step : arg.steps)
    for (const auto& p : step.premises)
      if (!contains(out, p)) out.push_back(p);
  return out;
}

bool is_consistent(const GroundedArgument& arg, ConsistencyMode mode, std::size_t atom_budget) {
  const auto premises = premise_set(arg);
  if (mode == ConsistencyMode::Classical) return is_satisfiable(premises, atom_budget);
  for (std::size_t i = 0; i < premises.size(); ++i)
    for (std::size_t j = i + 1; j < premises.size(); ++j)
      if (neg_equivalent(premises[i], premises[j])) return false;
  return true;
}

bool rebuts(const GroundedArgument& b, const GroundedArgument& a) {
  return neg_equivalent(b.claim, a.claim);
}

bool undercuts(const GroundedArgument& b, const GroundedArgument& a) {
  const auto premises = premise_set(a);
  return std::any_of(premises.begin(), premises.end(),
                     [&](const Wff& alpha) { return neg_equivalent(alpha, b.claim); });
}

std::string render_steps(const std::vector<InferenceStep>& steps) {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k > 0) out += "; ";
    for (std::size_t i = 0; i < steps[k].premises.size(); ++i) {
      if (i > 0) out += ", ";
      out += render(steps[k].premises[i]);
    }
    out += " |- " + steps[k].rule + " |- " + render(steps[k].conclusion);
  }
  return out;
}

std::string render_values(const ValueAssignment& v) {
  auto list = [](const std::vector<std::string>& ls) {
    std::string s = "[";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + ls[i];
    return s + "]";
  };
  std::string out = "grounds: ";
  if (v.grounds.size() == 1) {
    out += list(v.grounds.front());
  } else {
    out += "[";
    for (std::size_t k = 0; k < v.grounds.size(); ++k) out += (k ? ", " : "") + list(v.grounds[k]);
    out += "]";
  }
  out += "; infer: " + list(v.inference) + "; claim: " + v.claim;
  return out;
}

}  // namespace agora
