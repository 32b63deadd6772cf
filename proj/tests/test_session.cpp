// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "example_script.hpp"
#include "fuzz.hpp"
#include "json.hpp"
#include "session.hpp"

using namespace agora;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the "M<k>: " prefix so the session numbers the move itself.
std::string unnumbered(const std::string& line) {
  if (line.empty() || line[0] != 'M') return line;
  auto colon = line.find(": ");
  return colon == std::string::npos ? line : line.substr(colon + 2);
}

TEST(Session, GoldenTrace) {
  Session s = Session::replay(parse_script(kExampleScript));
  EXPECT_EQ(s.render_trace(), slurp(std::string(AGORA_SOURCE_DIR) + "/tests/golden/risk-x.trace"));
  EXPECT_TRUE(s.clean());
  EXPECT_EQ(s.records().size(), 10u);
}

TEST(Session, ValidationReport) {
  Session s = Session::replay(parse_script(kExampleScript));
  auto lines = lines_of(s.render_validation());
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(), "M1 assert P1: legal");
  EXPECT_EQ(lines.back(), "result: valid (10 moves, 0 violations, 0 unresolved)");
}

TEST(Session, ValidationReportsUnresolvedObligation) {
  Session s = Session::replay(parse_script("participant P1 P2\nM1: assert P1 (phi, Conf)\nM2: query P2 @M1\n"));
  EXPECT_FALSE(s.clean());
  auto text = s.render_validation();
  EXPECT_NE(text.find("P1 must show_arg for phi (M2)"), std::string::npos);
  EXPECT_NE(s.render_trace().find("# unresolved: P1 must show_arg for phi (M2)"), std::string::npos);
}

TEST(Session, ContradictionAppendedToExample) {
  Session s = Session::replay(parse_script(std::string(kExampleScript) + "M11: assert P1 (~phi, Supp)\n"));
  ASSERT_EQ(s.records().size(), 11u);
  ASSERT_TRUE(s.records().back().violation);
  EXPECT_EQ(s.records().back().violation->kind, ViolationKind::Contradiction);
  EXPECT_EQ(s.violations(), 1u);
}

TEST(Session, HaltOnViolation) {
  std::string text = kExampleScript;
  text.erase(text.find("M3: show_arg P1 A1\n"), std::string("M3: show_arg P1 A1\n").size());
  TraceOptions o;
  o.halt_on_violation = true;
  Session s = Session::replay(parse_script(text), o);
  EXPECT_TRUE(s.halted());
  ASSERT_EQ(s.records().size(), 3u);
  EXPECT_EQ(s.records().back().move.id, 4);
  auto trace = s.render_trace();
  EXPECT_NE(trace.find("  rejected: obligation-violation (Rule 1.4, P5)"), std::string::npos);
  EXPECT_NE(trace.find("# halted at M4"), std::string::npos);
  o.halt_on_violation = false;
  EXPECT_EQ(Session::replay(parse_script(text), o).records().size(), 9u);
}

TEST(Session, VerboseEmitsStoreAfterEveryLegalMove) {
  TraceOptions o;
  o.verbose = true;
  Session s = Session::replay(parse_script(kExampleScript), o);
  for (const auto& r : s.records()) EXPECT_TRUE(r.nature_line) << r.move.id;
  EXPECT_EQ(*s.records().back().nature_line, "NCS10: (phi, Plaus), (~phi, Plaus)");
}

TEST(Session, FocusOverridesTracks) {
  TraceOptions o;
  o.focus = {parse_wff("K3")};
  Session s = Session::replay(parse_script(kExampleScript), o);
  EXPECT_EQ(s.nature_snapshot(), "(K3, Open), (~K3, Conf)");
  TraceOptions all;
  all.show_all = true;
  EXPECT_NE(Session::replay(parse_script(kExampleScript), all).nature_snapshot().find("(K2, Open)"),
            std::string::npos);
}

TEST(Session, InteractiveLinesMatchReplay) {
  Session live(Script{});
  for (const auto& line : lines_of(kExampleScript)) live.apply_line(unnumbered(line));
  Session batch = Session::replay(parse_script(kExampleScript));
  EXPECT_EQ(live.render_trace(), batch.render_trace());
  EXPECT_EQ(live.script(), batch.script());
}

TEST(Session, InteractiveRejectionIsDropped) {
  Session live(parse_script("participant P1 P2\n"));
  auto r = live.apply_line("assert P1 (phi, Conf)");
  ASSERT_TRUE(r.record && r.record->legal());
  r = live.apply_line("assert P1 (~phi, Conf)");
  ASSERT_TRUE(r.record);
  EXPECT_FALSE(r.record->legal());
  EXPECT_EQ(live.records().size(), 1u);
  r = live.apply_line("pose P2 psi");
  EXPECT_EQ(r.record->move.id, 2);
  EXPECT_THROW(live.apply_line("assert P1 (phi"), ScriptError);
}

TEST(Session, UndoThenRedoReproducesTrace) {
  Session s = Session::replay(parse_script(kExampleScript));
  const std::string full = s.render_trace();
  auto moves = s.script().moves;
  for (int i = 0; i < 4; ++i) ASSERT_TRUE(s.undo());
  EXPECT_EQ(s.records().size(), 6u);
  for (std::size_t i = 6; i < moves.size(); ++i) ASSERT_TRUE(s.apply(moves[i]).legal());
  EXPECT_EQ(s.render_trace(), full);
  Session empty(Script{});
  EXPECT_FALSE(empty.undo());
}

TEST(Session, JsonExport) {
  Session s = Session::replay(parse_script(kExampleScript));
  auto j = nlohmann::json::parse(s.render_json());
  EXPECT_TRUE(j["trace"]["clean"].get<bool>());
  EXPECT_EQ(j["trace"]["moves"].size(), 10u);
  EXPECT_EQ(j["trace"]["moves"][2]["nature"], "NCS1: (phi, Conf), (~phi, Open)");
  EXPECT_EQ(j["final"]["stores"]["P1"][0][0], "phi");
  EXPECT_TRUE(j["final"]["stores"]["P3"].empty());
  EXPECT_EQ(j["script"]["participants"].size(), 4u);
}

// Typing a generated dialogue line by line gives the same trace as
// replaying the script, and undoing every move returns to the start.
TEST(SessionProperties, InteractiveEqualsReplayOnGeneratedDialogues) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Script s = fuzz::random_dialogue(seed);
    Session batch = Session::replay(s);
    Session live(Script{});
    for (const auto& line : lines_of(render_script(s))) live.apply_line(unnumbered(line));
    ASSERT_EQ(live.render_trace(), batch.render_trace()) << render_script(s);
    Session fresh(s);
    while (live.undo()) {
    }
    ASSERT_EQ(live.state(), fresh.state());
  }
}

}  // namespace
