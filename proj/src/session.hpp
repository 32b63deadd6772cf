// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_SESSION_HPP
#define AGORA_SESSION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "protocol.hpp"
#include "script.hpp"

namespace agora {

struct TraceOptions {
  // Nature-store lines show only these wffs and their negations. Empty means
  // the script's `track` seeds, or everything when there are none.
  std::vector<Wff> focus;
  bool show_all = false;
  // Emit a Nature-store line after every legal move, not only on change.
  bool verbose = false;
  bool halt_on_violation = false;
  std::optional<bool> strict;
  std::optional<ConsistencyMode> consistency;
};

struct MoveRecord {
  Move move;
  std::optional<Violation> violation;
  std::vector<std::string> warnings;
  std::vector<std::string> obligations_added;
  std::vector<std::string> obligations_discharged;
  std::vector<std::string> store_changes;
  std::optional<std::string> nature_line;

  bool legal() const { return !violation; }
  std::string render() const;
};

// Drives one dialogue: replays scripts, accepts interactive moves, undoes,
// and renders the deterministic trace.
class Session {
 public:
  explicit Session(Script header, TraceOptions options = {});

  // Replays every move of `script`; rejected moves are recorded and, with
  // halt_on_violation, stop the replay.
  static Session replay(const Script& script, TraceOptions options = {});

  // Applies one move. Legal moves extend the dialogue; a rejected move is
  // kept in the trace only when `keep_rejected`.
  const MoveRecord& apply(const Move& move, bool keep_rejected = true);

  struct LineResult {
    std::optional<MoveRecord> record;  // set for move lines
  };
  // One DSL line in interactive mode: definitions extend the header, moves
  // are applied (auto-numbered when the "M<k>:" prefix is omitted) and
  // rejected moves are not kept. Throws ScriptError.
  LineResult apply_line(std::string_view line);

  // Drops the last legal move by replaying the shortened log.
  bool undo();

  const DialogueState& state() const { return state_; }
  const DialogueState& initial() const { return initial_; }
  const std::vector<MoveRecord>& records() const { return records_; }
  // Header plus legal moves, renderable with render_script.
  const Script& script() const { return script_; }
  const std::vector<Wff>& focus() const { return focus_; }
  bool halted() const { return halted_; }

  std::size_t violations() const;
  // All moves legal and no obligation left open.
  bool clean() const { return violations() == 0 && state_.obligations.empty(); }

  std::string nature_snapshot() const;
  std::string render_trace() const;
  std::string render_validation() const;
  std::string render_json() const;

 private:
  void rebuild();

  Script script_;
  TraceOptions options_;
  std::vector<Wff> focus_;
  DialogueState initial_;
  DialogueState state_;
  std::vector<MoveRecord> records_;
  std::optional<std::string> initial_line_;
  MoveRecord last_rejected_;
  int next_ncs_ = 1;
  bool halted_ = false;
};

}  // namespace agora

#endif  // AGORA_SESSION_HPP
