// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "agora/agora.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "example_script.hpp"
#include "queries.hpp"
#include "session.hpp"

struct agora_session {
  agora::TraceOptions options;
  std::unique_ptr<agora::Session> session;
};

namespace {

thread_local std::string last_error;

agora_status fail(agora_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

agora_status emit(const std::string& text, char** out) {
  if (!out) return fail(AGORA_INVALID_ARGUMENT, "output pointer is null");
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buf) return fail(AGORA_INTERNAL_ERROR, "out of memory");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
  return AGORA_OK;
}

std::string script_error_message(const agora::ScriptError& e) {
  return "line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ": " +
         agora::to_string(e.kind) + ": " + e.what();
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
agora_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const agora::ScriptError& e) {
    return fail(AGORA_PARSE_ERROR, script_error_message(e));
  } catch (const agora::WffSyntaxError& e) {
    return fail(AGORA_PARSE_ERROR, std::string("column ") + std::to_string(e.offset + 1) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(AGORA_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(AGORA_INTERNAL_ERROR, e.what());
  }
}

std::vector<agora::Wff> parse_focus(const char* text) {
  std::vector<agora::Wff> out;
  if (!text) return out;
  std::string_view rest(text);
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (item.find_first_not_of(" \t") != std::string_view::npos) out.push_back(agora::parse_wff(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

extern "C" {

void agora_options_init(agora_options* o) {
  if (!o) return;
  o->strict = -1;
  o->consistency = AGORA_CONSISTENCY_SCRIPT;
  o->verbose = 0;
  o->halt_on_violation = 0;
  o->show_all = 0;
  o->focus = nullptr;
}

void agora_string_free(char* s) { std::free(s); }

const char* agora_status_string(agora_status status) {
  switch (status) {
    case AGORA_OK: return "ok";
    case AGORA_VIOLATION: return "violation";
    case AGORA_PARSE_ERROR: return "parse error";
    case AGORA_INVALID_ARGUMENT: return "invalid argument";
    case AGORA_NOTHING_TO_UNDO: return "nothing to undo";
    case AGORA_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* agora_last_error(void) { return last_error.c_str(); }

const char* agora_version(void) { return "0.1.0"; }

const char* agora_example_script(void) { return agora::kExampleScript; }

agora_status agora_session_new(const agora_options* options, agora_session** out) {
  if (!out) return fail(AGORA_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  return guarded([&] {
    agora_options o;
    agora_options_init(&o);
    if (options) o = *options;
    auto s = std::make_unique<agora_session>();
    if (o.strict >= 0) s->options.strict = o.strict != 0;
    if (o.consistency == AGORA_CONSISTENCY_SYNTACTIC) s->options.consistency = agora::ConsistencyMode::Syntactic;
    else if (o.consistency == AGORA_CONSISTENCY_CLASSICAL) s->options.consistency = agora::ConsistencyMode::Classical;
    else if (o.consistency != AGORA_CONSISTENCY_SCRIPT) return fail(AGORA_INVALID_ARGUMENT, "unknown consistency mode");
    s->options.verbose = o.verbose != 0;
    s->options.halt_on_violation = o.halt_on_violation != 0;
    s->options.show_all = o.show_all != 0;
    s->options.focus = parse_focus(o.focus);
    s->session = std::make_unique<agora::Session>(agora::Script{}, s->options);
    *out = s.release();
    return AGORA_OK;
  });
}

void agora_session_free(agora_session* session) { delete session; }

agora_status agora_session_load(agora_session* session, const char* script_text) {
  if (!session || !script_text) return fail(AGORA_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    agora::Script script = agora::parse_script(script_text);
    session->session = std::make_unique<agora::Session>(agora::Session::replay(script, session->options));
    return AGORA_OK;
  });
}

agora_status agora_session_apply_line(agora_session* session, const char* line, char** echo) {
  if (!session || !line) return fail(AGORA_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = session->session->apply_line(line);
    std::string text = result.record ? result.record->render() : std::string();
    if (echo) {
      if (agora_status st = emit(text, echo); st != AGORA_OK) return st;
    }
    if (result.record && !result.record->legal()) return fail(AGORA_VIOLATION, result.record->violation->describe());
    return AGORA_OK;
  });
}

agora_status agora_session_undo(agora_session* session) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return session->session->undo() ? AGORA_OK : fail(AGORA_NOTHING_TO_UNDO, "no move to undo"); });
}

int agora_session_clean(const agora_session* session) { return session && session->session->clean() ? 1 : 0; }

int agora_session_move_count(const agora_session* session) {
  return session ? static_cast<int>(session->session->state().log.size()) : 0;
}

agora_status agora_session_trace(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return emit(session->session->render_trace(), out); });
}

agora_status agora_session_validation(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return emit(session->session->render_validation(), out); });
}

agora_status agora_session_json(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return emit(session->session->render_json(), out); });
}

agora_status agora_session_nature(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return emit(session->session->nature_snapshot() + "\n", out); });
}

agora_status agora_session_query(const agora_session* session, const char* claim, char** out) {
  if (!session || !claim) return fail(AGORA_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(agora::describe_claim(session->session->state(), agora::parse_wff(claim)), out);
  });
}

agora_status agora_session_check_theorem2(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] {
    auto report = agora::check_theorem2(session->session->state());
    if (agora_status st = emit(report.render(), out); st != AGORA_OK) return st;
    return report.holds() ? AGORA_OK : fail(AGORA_VIOLATION, "equivalence fails for some claim");
  });
}

agora_status agora_session_save(const agora_session* session, char** out) {
  if (!session) return fail(AGORA_INVALID_ARGUMENT, "null session");
  return guarded([&] { return emit(agora::render_script(session->session->script()), out); });
}

}  // extern "C"
