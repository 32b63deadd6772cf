// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "example_script.hpp"
#include "fuzz.hpp"
#include "script.hpp"

using namespace agora;

namespace {

ScriptError error_of(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ScriptError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ScriptError(ScriptError::Kind::Syntax, 0, 0, "");
}

TEST(ParseScript, Example) {
  Script s = parse_script(kExampleScript);
  ASSERT_EQ(s.moves.size(), 10u);
  EXPECT_EQ(s.rules.size(), 3u);
  EXPECT_EQ(s.rules[1].validator, Validator::ModusPonens);
  EXPECT_EQ(s.participants, (std::vector<std::string>{"P1", "P2", "P3", "P4"}));
  EXPECT_EQ(s.tracks, std::vector<Wff>{parse_wff("phi")});
  ASSERT_EQ(s.arguments.size(), 3u);
  EXPECT_EQ(s.arguments[1].values.grounds.front(), (std::vector<std::string>{"Conf", "Prob"}));
  const Move& m9 = s.moves[8];
  EXPECT_EQ(m9.kind, MoveKind::ContestGround);
  EXPECT_EQ(m9.target, 8);
  EXPECT_EQ(m9.wff, parse_wff("K3"));
  EXPECT_EQ(m9.label, "Prob");
  EXPECT_EQ(s.moves[9].argument->name, "A3");
}

TEST(ParseScript, EmptyAndCommentOnly) {
  EXPECT_EQ(parse_script(""), Script{});
  EXPECT_EQ(parse_script("# nothing here\n\n   \n"), Script{});
}

TEST(ParseScript, OptionsAndDictionaries) {
  Script s = parse_script("option strict\noption consistency classical\ndictionary inference { Good > Bad }\n");
  EXPECT_TRUE(s.strict);
  EXPECT_EQ(s.consistency, ConsistencyMode::Classical);
  EXPECT_TRUE(s.dictionary_set().inference.greater("Good", "Bad"));
  EXPECT_EQ(s.dictionary_set().claims, dictionaries::claims());
}

TEST(ParseScript, ConsequentialArgument) {
  Script s = parse_script(
      "rule R2\ncons C1 = from phi { phi, T1 |- R2 |- psi } values { grounds: [Conf, Conf]; infer: [Val]; claim: "
      "Conf }\n");
  ASSERT_EQ(s.arguments.size(), 1u);
  ASSERT_FALSE(s.arguments[0].is_grounded());
  EXPECT_EQ(s.arguments[0].consequential().source, parse_wff("phi"));
}

TEST(ScriptErrors, ForwardMoveReference) {
  std::string text = kExampleScript;
  auto at = text.find("M3: show_arg P1 A1");
  text.replace(at, std::string("M3: show_arg P1 A1").size(), "M3: query P2 @M7");
  auto e = error_of(text);
  EXPECT_EQ(e.kind, ScriptError::Kind::ForwardReference);
  EXPECT_NE(std::string(e.what()).find("M3 refers forward to M7"), std::string::npos);
}

TEST(ScriptErrors, Duplicates) {
  EXPECT_EQ(error_of("rule R1\nrule R1\n").kind, ScriptError::Kind::Duplicate);
  EXPECT_EQ(error_of("participant P1\nM1: pose P1 a\nM1: pose P1 b\n").kind, ScriptError::Kind::Duplicate);
  EXPECT_EQ(error_of("rule R\narg A = grounded { a |- R |- b } values { grounds: [Conf]; infer: [Val]; claim: Conf }\n"
                     "arg A = grounded { a |- R |- b } values { grounds: [Conf]; infer: [Val]; claim: Conf }\n")
                .kind,
            ScriptError::Kind::Duplicate);
}

TEST(ScriptErrors, UndeclaredNames) {
  EXPECT_EQ(error_of("M1: pose P1 a\n").kind, ScriptError::Kind::ForwardReference);
  EXPECT_EQ(error_of("participant P1\nM1: show_arg P1 A9\n").kind, ScriptError::Kind::ForwardReference);
  auto e = error_of("arg A = grounded { a |- R7 |- b } values { grounds: [Conf]; infer: [Val]; claim: Conf }\n");
  EXPECT_EQ(e.kind, ScriptError::Kind::ForwardReference);
  EXPECT_NE(std::string(e.what()).find("inference rule R7 is not declared"), std::string::npos);
}

TEST(ScriptErrors, SyntaxWithPosition) {
  auto e = error_of("participant P1\nM1: propose P1 (phi Conf)\n");
  EXPECT_EQ(e.kind, ScriptError::Kind::Syntax);
  EXPECT_EQ(e.line, 2u);
  EXPECT_EQ(e.column, 21u);
  EXPECT_EQ(error_of("participant P1\nM1: shout P1 phi\n").kind, ScriptError::Kind::Syntax);
  EXPECT_EQ(error_of("option loud\n").kind, ScriptError::Kind::Syntax);
  EXPECT_EQ(error_of("dictionary claims { a > b > a }\n").kind, ScriptError::Kind::Syntax);
}

TEST(ScriptBuilder, AutoNumberAndOpenParticipation) {
  ScriptBuilder b(parse_script("participant P1\n"));
  b.set_open_participation(true);
  auto m = b.add_line("pose P9 phi", 1, true);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, 1);
  EXPECT_EQ(b.next_move_id(), 2);
  EXPECT_EQ(b.script().participants.back(), "P9");
  EXPECT_FALSE(b.add_line("track psi"));
  EXPECT_EQ(b.script().tracks.back(), parse_wff("psi"));
}

TEST(RenderScript, ExampleRoundTrip) {
  Script s = parse_script(kExampleScript);
  EXPECT_EQ(parse_script(render_script(s)), s);
  EXPECT_EQ(render_script(parse_script(render_script(s))), render_script(s));
}

// Generated dialogues survive render then parse unchanged.
TEST(ScriptProperties, RoundTripOverGeneratedDialogues) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    fuzz::Options o;
    o.consistency = seed % 3 ? ConsistencyMode::Syntactic : ConsistencyMode::Classical;
    Script s = fuzz::random_dialogue(seed, o);
    std::string text = render_script(s);
    Script back = parse_script(text);
    ASSERT_EQ(back, s) << text;
    ASSERT_EQ(render_script(back), text);
  }
}

}  // namespace
