/* Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
 * Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0 */

#ifndef AGORA_AGORA_H
#define AGORA_AGORA_H

#if defined(_WIN32)
#if defined(AGORA_BUILDING)
#define AGORA_API __declspec(dllexport)
#else
#define AGORA_API __declspec(dllimport)
#endif
#else
#define AGORA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct agora_session agora_session;

typedef enum agora_status {
  AGORA_OK = 0,
  /* A move was rejected, or the dialogue has violations or open obligations. */
  AGORA_VIOLATION = 1,
  /* Script, move line or wff text did not parse. */
  AGORA_PARSE_ERROR = 2,
  AGORA_INVALID_ARGUMENT = 3,
  AGORA_NOTHING_TO_UNDO = 4,
  AGORA_INTERNAL_ERROR = 5
} agora_status;

typedef enum agora_consistency {
  AGORA_CONSISTENCY_SCRIPT = 0, /* whatever the script declares */
  AGORA_CONSISTENCY_SYNTACTIC = 1,
  AGORA_CONSISTENCY_CLASSICAL = 2
} agora_consistency;

typedef struct agora_options {
  int strict; /* -1: script decides, 0: lenient, 1: strict */
  agora_consistency consistency;
  int verbose;
  int halt_on_violation;
  int show_all;
  const char *focus; /* comma-separated wffs, or NULL */
} agora_options;

AGORA_API void agora_options_init(agora_options *options);

/* Strings returned through `char **out` are owned by the caller and released
 * with agora_string_free. */
AGORA_API void agora_string_free(char *s);

AGORA_API const char *agora_status_string(agora_status status);
/* Message for the most recent failing call on this thread, or "". */
AGORA_API const char *agora_last_error(void);
AGORA_API const char *agora_version(void);
/* The bundled example dialogue, as script text. Static storage. */
AGORA_API const char *agora_example_script(void);

/* `options` may be NULL for defaults. */
AGORA_API agora_status agora_session_new(const agora_options *options, agora_session **out);
AGORA_API void agora_session_free(agora_session *session);

/* Replaces the session's dialogue with `script_text` and replays it. */
AGORA_API agora_status agora_session_load(agora_session *session, const char *script_text);

/* One script line in interactive mode. Move lines may omit "M<k>:". `echo`
 * (may be NULL) receives the rendered move record, or "" for definitions.
 * Returns AGORA_VIOLATION for a rejected move, which is not kept. */
AGORA_API agora_status agora_session_apply_line(agora_session *session, const char *line, char **echo);
AGORA_API agora_status agora_session_undo(agora_session *session);

/* Nonzero when every move was legal and no obligation is open. */
AGORA_API int agora_session_clean(const agora_session *session);
AGORA_API int agora_session_move_count(const agora_session *session);

AGORA_API agora_status agora_session_trace(const agora_session *session, char **out);
AGORA_API agora_status agora_session_validation(const agora_session *session, char **out);
AGORA_API agora_status agora_session_json(const agora_session *session, char **out);
AGORA_API agora_status agora_session_nature(const agora_session *session, char **out);
AGORA_API agora_status agora_session_query(const agora_session *session, const char *claim, char **out);
/* Returns AGORA_VIOLATION when a counterexample row exists. */
AGORA_API agora_status agora_session_check_theorem2(const agora_session *session, char **out);
/* Header and legal moves as script text. */
AGORA_API agora_status agora_session_save(const agora_session *session, char **out);

#ifdef __cplusplus
}
#endif

#endif /* AGORA_AGORA_H */
