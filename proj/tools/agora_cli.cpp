// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end. Talks to the engine only through the C API.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agora/agora.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;

struct Flags {
  bool strict = false;
  std::string consistency;
  std::string focus;
  bool verbose = false;
  bool halt = false;
  bool show_all = false;
  bool json = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--strict-2-1", f.strict, "Contest responses must outrank the contested label");
  cmd->add_option("--consistency", f.consistency, "Argument consistency check")
      ->check(CLI::IsMember({"syntactic", "classical"}));
  cmd->add_option("--focus", f.focus, "Comma-separated wffs shown in Nature-store lines");
  cmd->add_flag("--show-all", f.show_all, "Show every tracked wff in Nature-store lines");
}

void add_trace_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--verbose", f.verbose, "Print the Nature store after every legal move");
  cmd->add_flag("--halt-on-violation", f.halt, "Stop at the first rejected move");
  cmd->add_flag("--json", f.json, "Structured output");
}

// Owns one session plus the strings the C API hands out.
class Handle {
 public:
  ~Handle() { agora_session_free(session_); }
  agora_session* get() const { return session_; }

  bool open(const Flags& f) {
    agora_options o;
    agora_options_init(&o);
    if (f.strict) o.strict = 1;
    if (f.consistency == "syntactic") o.consistency = AGORA_CONSISTENCY_SYNTACTIC;
    if (f.consistency == "classical") o.consistency = AGORA_CONSISTENCY_CLASSICAL;
    o.verbose = f.verbose;
    o.halt_on_violation = f.halt;
    o.show_all = f.show_all;
    if (!f.focus.empty()) o.focus = f.focus.c_str();
    return report(agora_session_new(&o, &session_), "options");
  }

  static bool report(agora_status st, const std::string& what) {
    if (st == AGORA_OK || st == AGORA_VIOLATION) return true;
    std::cerr << "error: " << what << ": " << agora_last_error() << "\n";
    return false;
  }

 private:
  agora_session* session_ = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  agora_string_free(s);
  return out;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int load(Handle& h, const Flags& f, const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return kExitParse;
  if (!h.open(f)) return kExitParse;
  if (!Handle::report(agora_session_load(h.get(), text.c_str()), path)) return kExitParse;
  return kExitOk;
}

int cmd_output(Handle& h, agora_status (*fn)(const agora_session*, char**)) {
  char* out = nullptr;
  agora_status st = fn(h.get(), &out);
  std::cout << take(out);
  if (!Handle::report(st, "output")) return kExitParse;
  return agora_session_clean(h.get()) ? kExitOk : kExitViolation;
}

void repl_help() {
  std::cout << "Enter script lines (moves may omit the M<k>: prefix). Commands:\n"
               "  undo            drop the last legal move\n"
               "  save [path]     write the session as a script (stdout without a path)\n"
               "  trace           print the trace so far\n"
               "  status          legality report and open obligations\n"
               "  nature          current Nature store\n"
               "  claim <wff>     arguments, attackers and modality for a claim\n"
               "  check           provisional proof vs natural valuation table\n"
               "  help, quit\n";
}

int cmd_repl(const Flags& f, const std::string& path) {
  Handle h;
  if (!path.empty()) {
    if (int rc = load(h, f, path); rc != kExitOk) return rc;
  } else if (!h.open(f)) {
    return kExitParse;
  }
  const bool interactive = isatty(STDIN_FILENO);
  std::string line;
  while (true) {
    if (interactive) std::cout << "agora> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::string word = line.substr(0, line.find(' '));
    std::string rest = line.size() > word.size() ? line.substr(word.size() + 1) : "";
    if (word == "quit" || word == "exit") break;
    char* out = nullptr;
    if (word == "help") {
      repl_help();
    } else if (word == "undo") {
      if (agora_session_undo(h.get()) == AGORA_OK) std::cout << "undone\n";
      else std::cerr << "error: " << agora_last_error() << "\n";
    } else if (word == "save") {
      agora_session_save(h.get(), &out);
      std::string text = take(out);
      if (rest.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(rest, std::ios::binary);
        if (file << text) std::cout << "saved " << rest << "\n";
        else std::cerr << "error: cannot write " << rest << "\n";
      }
    } else if (word == "trace") {
      agora_session_trace(h.get(), &out);
      std::cout << take(out);
    } else if (word == "status") {
      agora_session_validation(h.get(), &out);
      std::cout << take(out);
    } else if (word == "nature") {
      agora_session_nature(h.get(), &out);
      std::cout << take(out);
    } else if (word == "claim") {
      if (Handle::report(agora_session_query(h.get(), rest.c_str(), &out), "claim")) std::cout << take(out);
    } else if (word == "check") {
      agora_session_check_theorem2(h.get(), &out);
      std::cout << take(out);
    } else {
      agora_status st = agora_session_apply_line(h.get(), line.c_str(), &out);
      std::string echo = take(out);
      if (st == AGORA_OK || st == AGORA_VIOLATION) std::cout << echo;
      else std::cerr << "error: " << agora_last_error() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialogue-game engine for scientific risk debates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", agora_version());

  Flags f;
  std::string path;
  std::string claim;

  auto* validate = app.add_subcommand("validate", "Check every move of a script against the protocol");
  validate->add_option("script", path, "Script file")->required();
  add_common(validate, f);
  validate->add_flag("--json", f.json, "Structured output");

  auto* replay = app.add_subcommand("replay", "Replay a script and print its trace");
  replay->add_option("script", path, "Script file")->required();
  add_common(replay, f);
  add_trace_flags(replay, f);

  auto* query = app.add_subcommand("query", "Report on one claim after replaying a script");
  query->add_option("script", path, "Script file")->required();
  query->add_option("claim", claim, "Claim, e.g. '~phi'")->required();
  add_common(query, f);

  auto* repl = app.add_subcommand("repl", "Enter moves interactively");
  repl->add_option("script", path, "Optional starting script");
  add_common(repl, f);
  repl->add_flag("--verbose", f.verbose, "Print the Nature store after every legal move");

  auto* check = app.add_subcommand("check-theorem2", "Compare provisional proofs with natural valuations");
  check->add_option("script", path, "Script file")->required();
  add_common(check, f);

  auto* example = app.add_subcommand("example", "Print the bundled example script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (example->parsed()) {
    std::cout << agora_example_script();
    return kExitOk;
  }
  if (repl->parsed()) return cmd_repl(f, path);

  Handle h;
  if (int rc = load(h, f, path); rc != kExitOk) return rc;

  if (validate->parsed()) return cmd_output(h, f.json ? agora_session_json : agora_session_validation);
  if (replay->parsed()) return cmd_output(h, f.json ? agora_session_json : agora_session_trace);
  if (query->parsed()) {
    char* out = nullptr;
    if (!Handle::report(agora_session_query(h.get(), claim.c_str(), &out), "claim")) return kExitParse;
    std::cout << take(out);
    return kExitOk;
  }
  if (check->parsed()) {
    char* out = nullptr;
    agora_status st = agora_session_check_theorem2(h.get(), &out);
    std::cout << take(out);
    return st == AGORA_OK ? kExitOk : kExitViolation;
  }
  return kExitOk;
}
