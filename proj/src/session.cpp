// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "session.hpp"

#include <algorithm>

#include <json.hpp>

namespace agora {

namespace {

DialogueState initial_for(const Script& s, const TraceOptions& o) {
  ProtocolConfig config;
  config.strict = o.strict.value_or(s.strict);
  config.consistency = o.consistency.value_or(s.consistency);
  return initial_state(config, s.dictionary_set(), s.rules, s.participants, s.tracks);
}

std::vector<std::string> store_delta(const DialogueState& before, const DialogueState& after) {
  std::vector<std::string> out;
  std::vector<std::string> owners;
  for (const auto& [p, _] : before.stores) owners.push_back(p);
  for (const auto& [p, _] : after.stores)
    if (!before.stores.count(p)) owners.push_back(p);
  std::sort(owners.begin(), owners.end());
  static const ParticipantStore kEmpty;
  for (const auto& p : owners) {
    auto b = before.stores.find(p);
    auto a = after.stores.find(p);
    const ParticipantStore& sb = b == before.stores.end() ? kEmpty : b->second;
    const ParticipantStore& sa = a == after.stores.end() ? kEmpty : a->second;
    const std::string cs = "CS(" + p + ") ";
    for (const auto& [w, label] : sb.entries) {
      const std::string* now = sa.label_of(w);
      if (!now) out.push_back(cs + "- (" + render(w) + ", " + label + ")");
      else if (*now != label) out.push_back(cs + "~ (" + render(w) + ", " + label + " -> " + *now + ")");
    }
    for (const auto& [w, label] : sa.entries) {
      if (!sb.label_of(w)) out.push_back(cs + "+ (" + render(w) + ", " + label + ")");
    }
  }
  return out;
}

std::vector<std::string> missing_from(const std::deque<Obligation>& from, const std::deque<Obligation>& in) {
  std::vector<std::string> out;
  for (const auto& o : from)
    if (std::find(in.begin(), in.end(), o) == in.end()) out.push_back(o.describe());
  return out;
}

// A tracked wff changed label, or a newly tracked one starts above Open.
bool nature_moved(const NatureStore& before, const NatureStore& after) {
  for (const auto& e : after.entries()) {
    const auto* old = before.find(e.wff);
    if (old ? old->label != e.label : e.label != NatureLabel::Open) return true;
  }
  return false;
}

std::string render_argument(const ValuedArgument& a) {
  std::string out = a.name + ": ";
  if (const auto* c = std::get_if<ConsequentialArgument>(&a.body)) out += "from " + render(c->source) + ": ";
  return out + render_steps(a.steps()) + "  (" + render_values(a.values) + ")";
}

nlohmann::json values_json(const ValueAssignment& v) {
  return {{"grounds", v.grounds}, {"inference", v.inference}, {"claim", v.claim}};
}

nlohmann::json argument_json(const ValuedArgument& a) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : a.steps()) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : s.premises) premises.push_back(render(p));
    steps.push_back({{"premises", premises}, {"rule", s.rule}, {"conclusion", render(s.conclusion)}});
  }
  nlohmann::json j = {{"name", a.name}, {"steps", steps}, {"values", values_json(a.values)}};
  if (const auto* c = std::get_if<ConsequentialArgument>(&a.body)) {
    j["kind"] = "consequential";
    j["source"] = render(c->source);
  } else {
    j["kind"] = "grounded";
  }
  return j;
}

nlohmann::json move_json(const Move& m) {
  nlohmann::json j = {{"id", m.id}, {"kind", keyword(m.kind)}, {"actor", m.actor}, {"text", render_move_body(m)}};
  if (m.target) j["target"] = *m.target;
  if (m.wff) j["wff"] = render(*m.wff);
  if (m.consequence) j["consequence"] = render(*m.consequence);
  if (m.label) j["label"] = *m.label;
  if (m.rule) j["rule"] = *m.rule;
  if (m.argument) j["argument"] = m.argument->name;
  return j;
}

}  // namespace

std::string MoveRecord::render() const {
  std::string out = "M" + std::to_string(move.id) + ": " + render_move_body(move) + "\n";
  if (violation) return out + "  rejected: " + violation->describe() + "\n";
  out += "  legal\n";
  if (move.argument) out += "  argument " + render_argument(*move.argument) + "\n";
  for (const auto& w : warnings) out += "  warning: " + w + "\n";
  for (const auto& o : obligations_discharged) out += "  discharged: " + o + "\n";
  for (const auto& o : obligations_added) out += "  obliged: " + o + "\n";
  for (const auto& s : store_changes) out += "  " + s + "\n";
  if (nature_line) out += *nature_line + "\n";
  return out;
}

Session::Session(Script header, TraceOptions options) : script_(std::move(header)), options_(std::move(options)) {
  script_.moves.clear();
  if (!options_.focus.empty()) focus_ = options_.focus;
  else if (!options_.show_all) focus_ = script_.tracks;
  initial_ = initial_for(script_, options_);
  state_ = initial_;
  std::string snap = nature_snapshot();
  if (!snap.empty()) initial_line_ = "NCS0: " + snap;
}

Session Session::replay(const Script& script, TraceOptions options) {
  Session s(script, std::move(options));
  for (const auto& m : script.moves) {
    if (!s.apply(m).legal() && s.options_.halt_on_violation) {
      s.halted_ = true;
      break;
    }
  }
  return s;
}

const MoveRecord& Session::apply(const Move& move, bool keep_rejected) {
  MoveRecord rec;
  rec.move = move;
  StepResult r = apply_move(state_, move);
  if (auto* v = std::get_if<Violation>(&r)) {
    rec.violation = *v;
    if (!keep_rejected) {
      last_rejected_ = std::move(rec);
      return last_rejected_;
    }
    records_.push_back(std::move(rec));
    return records_.back();
  }
  auto& t = std::get<Transition>(r);
  rec.warnings = std::move(t.warnings);
  rec.obligations_discharged = missing_from(state_.obligations, t.state.obligations);
  rec.obligations_added = missing_from(t.state.obligations, state_.obligations);
  rec.store_changes = store_delta(state_, t.state);
  const bool moved = t.nature_changed && nature_moved(state_.nature, t.state.nature);
  state_ = std::move(t.state);
  if (moved || options_.verbose) {
    rec.nature_line = "NCS" + std::to_string(next_ncs_++) + ": " + nature_snapshot();
  }
  script_.moves.push_back(move);
  records_.push_back(std::move(rec));
  return records_.back();
}

Session::LineResult Session::apply_line(std::string_view line) {
  ScriptBuilder builder(script_);
  builder.set_open_participation(true);
  std::optional<Move> move = builder.add_line(line, 1, true);
  LineResult result;
  if (!move) {
    Script next = builder.script();
    if (next == script_) return result;
    script_ = std::move(next);
    rebuild();
    return result;
  }
  const std::size_t participants = script_.participants.size();
  const MoveRecord& rec = apply(*move, false);
  result.record = rec;
  if (rec.legal()) {
    // The builder may have declared a new actor; keep it in the header.
    const auto& declared = builder.script().participants;
    for (std::size_t i = participants; i < declared.size(); ++i) script_.participants.push_back(declared[i]);
  }
  return result;
}

bool Session::undo() {
  if (script_.moves.empty()) return false;
  script_.moves.pop_back();
  rebuild();
  return true;
}

void Session::rebuild() {
  Script s = script_;
  TraceOptions o = options_;
  o.halt_on_violation = false;
  Session fresh(s, o);
  for (const auto& m : s.moves) fresh.apply(m, false);
  fresh.options_ = options_;
  *this = std::move(fresh);
}

std::size_t Session::violations() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const MoveRecord& r) { return !r.legal(); }));
}

std::string Session::nature_snapshot() const { return state_.nature.snapshot(focus_); }

std::string Session::render_trace() const {
  std::string out = "# agora trace\n";
  if (initial_line_) out += *initial_line_ + "\n";
  for (const auto& r : records_) out += r.render();
  for (const auto& o : state_.obligations) out += "# unresolved: " + o.describe() + "\n";
  if (halted_ && !records_.empty()) out += "# halted at M" + std::to_string(records_.back().move.id) + "\n";
  return out;
}

std::string Session::render_validation() const {
  std::string out;
  for (const auto& r : records_) {
    out += "M" + std::to_string(r.move.id) + " " + keyword(r.move.kind) + " " + r.move.actor + ": ";
    out += r.legal() ? "legal" : "rejected: " + r.violation->describe();
    out += "\n";
    for (const auto& w : r.warnings) out += "  warning: " + w + "\n";
  }
  if (halted_) out += "halted after the first violation\n";
  if (state_.obligations.empty()) {
    out += "unresolved obligations: none\n";
  } else {
    out += "unresolved obligations:\n";
    for (const auto& o : state_.obligations) out += "  " + o.describe() + "\n";
  }
  const std::size_t v = violations();
  out += "result: ";
  out += clean() ? "valid" : "invalid";
  out += " (" + std::to_string(records_.size()) + " moves, " + std::to_string(v) + " violation" +
         (v == 1 ? "" : "s") + ", " + std::to_string(state_.obligations.size()) + " unresolved)\n";
  return out;
}

std::string Session::render_json() const {
  using nlohmann::json;
  json dicts = json::object();
  const DictionarySet set = script_.dictionary_set();
  for (const char* role : {"claims", "grounds", "consequences", "inference"}) {
    const ModalityDictionary* d = set.by_role(role);
    json covers = json::array();
    for (const auto& [hi, lo] : d->covers()) covers.push_back({hi, lo});
    dicts[role] = {{"labels", d->labels()}, {"order", covers}};
  }
  json rules = json::array();
  for (const auto& r : script_.rules) {
    json j = {{"id", r.id}, {"description", r.description}, {"validator", to_string(r.validator)}};
    if (r.strength) j["strength"] = *r.strength;
    rules.push_back(j);
  }
  json tracks = json::array();
  for (const auto& w : script_.tracks) tracks.push_back(render(w));
  json args = json::array();
  for (const auto& a : script_.arguments) args.push_back(argument_json(a));

  json moves = json::array();
  for (const auto& r : records_) {
    json j = move_json(r.move);
    j["legal"] = r.legal();
    if (r.violation) {
      j["violation"] = {{"kind", to_string(r.violation->kind)},
                        {"rule", r.violation->rule},
                        {"property", r.violation->property},
                        {"detail", r.violation->detail}};
    }
    j["warnings"] = r.warnings;
    j["obligations_added"] = r.obligations_added;
    j["obligations_discharged"] = r.obligations_discharged;
    j["store_changes"] = r.store_changes;
    if (r.nature_line) j["nature"] = *r.nature_line;
    moves.push_back(j);
  }
  json nature = json::array();
  for (const auto& e : state_.nature.entries()) {
    nature.push_back({{"wff", render(e.wff)}, {"label", abbreviation(e.label)}});
  }
  json stores = json::object();
  for (const auto& p : state_.participants) {
    json entries = json::array();
    if (auto it = state_.stores.find(p); it != state_.stores.end())
      for (const auto& [w, label] : it->second.entries) entries.push_back({render(w), label});
    stores[p] = entries;
  }
  json unresolved = json::array();
  for (const auto& o : state_.obligations) unresolved.push_back(o.describe());

  json doc = {
      {"script",
       {{"strict", script_.strict},
        {"consistency", to_string(script_.consistency)},
        {"dictionaries", dicts},
        {"rules", rules},
        {"participants", script_.participants},
        {"track", tracks},
        {"arguments", args}}},
      {"trace",
       {{"initial", initial_line_ ? json(*initial_line_) : json(nullptr)},
        {"moves", moves},
        {"unresolved", unresolved},
        {"halted", halted_},
        {"clean", clean()}}},
      {"final", {{"nature", nature}, {"stores", stores}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace agora
