// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "agora/agora.h"

namespace {

const std::string kSource = AGORA_SOURCE_DIR;
const std::string kExamplePath = kSource + "/scripts/risk-x.agora";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  agora_string_free(s);
  return out;
}

struct SessionPtr {
  agora_session* s = nullptr;
  explicit SessionPtr(const agora_options* o = nullptr) { EXPECT_EQ(agora_session_new(o, &s), AGORA_OK); }
  ~SessionPtr() { agora_session_free(s); }
};

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(agora_version(), "0.1.0");
  EXPECT_STREQ(agora_status_string(AGORA_OK), "ok");
  EXPECT_NE(std::string(agora_example_script()).find("M10: show_arg P4 A3"), std::string::npos);
}

TEST(CApi, LoadAndTrace) {
  SessionPtr h;
  ASSERT_EQ(agora_session_load(h.s, agora_example_script()), AGORA_OK);
  EXPECT_EQ(agora_session_move_count(h.s), 10);
  EXPECT_TRUE(agora_session_clean(h.s));
  char* out = nullptr;
  ASSERT_EQ(agora_session_trace(h.s, &out), AGORA_OK);
  EXPECT_EQ(take(out), slurp(kSource + "/tests/golden/risk-x.trace"));
  ASSERT_EQ(agora_session_nature(h.s, &out), AGORA_OK);
  EXPECT_EQ(take(out), "(phi, Plaus), (~phi, Plaus)\n");
  ASSERT_EQ(agora_session_query(h.s, "~K3", &out), AGORA_OK);
  EXPECT_NE(take(out).find("valuation: 1"), std::string::npos);
  ASSERT_EQ(agora_session_check_theorem2(h.s, &out), AGORA_OK);
  agora_string_free(out);
  ASSERT_EQ(agora_session_json(h.s, &out), AGORA_OK);
  EXPECT_EQ(take(out).front(), '{');
}

TEST(CApi, ParseErrorsAndBadArguments) {
  SessionPtr h;
  EXPECT_EQ(agora_session_load(h.s, "M1: shout P1 phi\n"), AGORA_PARSE_ERROR);
  EXPECT_NE(std::string(agora_last_error()).find("line 1"), std::string::npos);
  char* out = nullptr;
  EXPECT_EQ(agora_session_query(h.s, "phi &", &out), AGORA_PARSE_ERROR);
  EXPECT_EQ(agora_session_load(nullptr, "x"), AGORA_INVALID_ARGUMENT);
  EXPECT_EQ(agora_session_trace(h.s, nullptr), AGORA_INVALID_ARGUMENT);
}

TEST(CApi, InteractiveLinesAndUndo) {
  SessionPtr h;
  char* echo = nullptr;
  ASSERT_EQ(agora_session_apply_line(h.s, "assert P1 (phi, Conf)", &echo), AGORA_OK);
  EXPECT_NE(take(echo).find("M1: assert P1 (phi, Conf)"), std::string::npos);
  ASSERT_EQ(agora_session_apply_line(h.s, "assert P1 (~phi, Supp)", &echo), AGORA_VIOLATION);
  EXPECT_NE(take(echo).find("contradiction"), std::string::npos);
  EXPECT_EQ(agora_session_move_count(h.s), 1);
  ASSERT_EQ(agora_session_apply_line(h.s, "track psi", &echo), AGORA_OK);
  EXPECT_EQ(take(echo), "");
  EXPECT_EQ(agora_session_undo(h.s), AGORA_OK);
  EXPECT_EQ(agora_session_undo(h.s), AGORA_NOTHING_TO_UNDO);
  char* saved = nullptr;
  ASSERT_EQ(agora_session_save(h.s, &saved), AGORA_OK);
  EXPECT_NE(take(saved).find("track psi"), std::string::npos);
}

TEST(CApi, StrictOptionOverridesScript) {
  agora_options o;
  agora_options_init(&o);
  o.strict = 1;
  SessionPtr h(&o);
  const char* text =
      "participant P1 P2 P3\nM1: assert P1 (phi, Conf)\nM2: contest P2 @M1\nM3: query P3 @M2\n"
      "M4: propose P2 (~phi, Plaus)\n";
  ASSERT_EQ(agora_session_load(h.s, text), AGORA_OK);
  EXPECT_FALSE(agora_session_clean(h.s));
  SessionPtr lenient;
  ASSERT_EQ(agora_session_load(lenient.s, text), AGORA_OK);
  EXPECT_TRUE(agora_session_clean(lenient.s));
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(AGORA_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | " + cmd;
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, ReplayAndValidateExample) {
  auto r = cli("replay " + kExamplePath);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(kSource + "/tests/golden/risk-x.trace"));
  auto v = cli("validate " + kExamplePath);
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("result: valid"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const std::string bad = testing::TempDir() + "agora_bad.agora";
  std::ofstream(bad) << "participant P1\nM1: assert P1 (phi, Conf)\nM2: assert P1 (~phi, Conf)\n";
  EXPECT_EQ(cli("validate " + bad).code, 1);
  const std::string broken = testing::TempDir() + "agora_broken.agora";
  std::ofstream(broken) << "M1: assert\n";
  EXPECT_EQ(cli("replay " + broken).code, 2);
  EXPECT_EQ(cli("replay /nonexistent/file.agora").code, 2);
  EXPECT_EQ(cli("replay --no-such-flag " + kExamplePath).code, 2);
}

TEST(Cli, ExampleQueryAndCheck) {
  auto e = cli("example");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, slurp(kExamplePath));
  auto q = cli("query " + kExamplePath + " phi");
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("modality: Plaus"), std::string::npos);
  EXPECT_EQ(cli("check-theorem2 " + kExamplePath).code, 0);
}

TEST(Cli, Repl) {
  auto r = cli("repl", "assert P1 (phi, Conf)\\nclaim phi\\nundo\\nstatus\\nquit\\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("M1: assert P1 (phi, Conf)\n  legal"), std::string::npos);
  EXPECT_NE(r.out.find("modality: Open"), std::string::npos);
  EXPECT_NE(r.out.find("result: valid (0 moves"), std::string::npos);
}

}  // namespace
