// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "example_script.hpp"
#include "fuzz.hpp"
#include "protocol.hpp"
#include "script.hpp"

using namespace agora;

namespace {

const char* kHeader = R"(rule R1 validator and-introduction
rule R2 validator modus-ponens
rule R3
participant P1 P2 P3
arg A1 = grounded { K4 |- R3 |- phi } values { grounds: [Conf]; infer: [Val]; claim: Conf }
arg A1b = grounded { K4, K5 |- R3 |- phi } values { grounds: [Conf, Prob]; infer: [Val]; claim: Prob }
arg B1 = grounded { K1, K3 |- R2 |- ~phi } values { grounds: [Conf, Prob]; infer: [Val]; claim: Plaus }
)";

// Applies the moves of `text` (after the shared header) one at a time,
// stopping at the first rejection.
struct Run {
  DialogueState state;
  std::optional<Violation> violation;
  int rejected_at = 0;
  std::vector<std::string> warnings;
};

Run run(const std::string& moves, bool strict = false) {
  Script s = parse_script(std::string(kHeader) + moves);
  Run out{initial_state({strict || s.strict, s.consistency}, s.dictionary_set(), s.rules, s.participants, s.tracks)};
  for (const auto& m : s.moves) {
    auto r = apply_move(out.state, m);
    if (auto* v = std::get_if<Violation>(&r)) {
      out.violation = *v;
      out.rejected_at = m.id;
      return out;
    }
    auto& t = std::get<Transition>(r);
    out.warnings.insert(out.warnings.end(), t.warnings.begin(), t.warnings.end());
    out.state = std::move(t.state);
  }
  return out;
}

TEST(MoveKinds, KeywordsAndRules) {
  for (int i = 0; i < kMoveKindCount; ++i) {
    auto k = static_cast<MoveKind>(i);
    EXPECT_EQ(move_kind_from_keyword(keyword(k)), k);
  }
  EXPECT_STREQ(licensing_rule(MoveKind::Query), "1.4");
  EXPECT_STREQ(licensing_rule(MoveKind::Prec), "3.6");
  EXPECT_STREQ(licensing_rule(MoveKind::Retract), "3.7");
  EXPECT_FALSE(move_kind_from_keyword("shout"));
}

TEST(ApplyMove, AssertEntersStore) {
  auto r = run("M1: assert P1 (phi, Conf)\n");
  ASSERT_FALSE(r.violation);
  EXPECT_EQ(*r.state.stores.at("P1").label_of(parse_wff("phi")), "Conf");
  EXPECT_EQ(r.state.stores.at("P1").asserted, std::vector<Wff>{parse_wff("phi")});
}

TEST(ApplyMove, InputStateUntouched) {
  auto r = run("M1: assert P1 (phi, Conf)\n");
  DialogueState before = r.state;
  Move m{2, MoveKind::Query, "P2", 1};
  auto out = apply_move(r.state, m);
  ASSERT_TRUE(std::holds_alternative<Transition>(out));
  EXPECT_EQ(r.state, before);
  EXPECT_EQ(std::get<Transition>(out).state.log.size(), 2u);
}

TEST(Obligations, ExampleQueue) {
  Script s = parse_script(kExampleScript);
  DialogueState st = initial_state({s.strict, s.consistency}, s.dictionary_set(), s.rules, s.participants, s.tracks);
  std::vector<std::string> pending;
  for (const auto& m : s.moves) {
    st = std::get<Transition>(apply_move(st, m)).state;
    std::string line;
    for (const auto& ob : pending_obligations(st)) line += ob.describe();
    pending.push_back(line);
  }
  EXPECT_EQ(pending[1], "P1 must show_arg for phi (M2)");
  EXPECT_EQ(pending[2], "");
  EXPECT_EQ(pending[4], "P2 must answer the contest of (phi, Conf) (M5)");
  EXPECT_EQ(pending[6], "P2 must show_arg for ~phi (M7)");
  EXPECT_EQ(pending[9], "");
}

TEST(Obligations, OutOfTurnAndWrongResponse) {
  auto other = run("M1: assert P1 (phi, Conf)\nM2: query P2 @M1\nM3: show_arg P2 A1\n");
  ASSERT_TRUE(other.violation);
  EXPECT_EQ(other.violation->kind, ViolationKind::ObligationViolation);
  EXPECT_EQ(other.violation->rule, "1.4");
  EXPECT_EQ(other.violation->property, "P5");
  auto wrong = run("M1: assert P1 (phi, Conf)\nM2: query P2 @M1\nM3: show_arg P1 B1\n");
  ASSERT_TRUE(wrong.violation);
  EXPECT_EQ(wrong.rejected_at, 3);
}

TEST(Obligations, BlockEveryoneElse) {
  auto r = run("M1: assert P1 (phi, Conf)\nM2: assert P2 (~phi, Plaus)\nM3: query P3 @M1\nM4: query P3 @M2\n");
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(r.rejected_at, 4);
  auto ok = run(
      "M1: assert P1 (phi, Conf)\nM2: assert P2 (~phi, Plaus)\nM3: query P3 @M1\nM4: show_arg P1 A1\n"
      "M5: query P3 @M2\nM6: show_arg P2 B1\n");
  EXPECT_FALSE(ok.violation);
  EXPECT_TRUE(ok.state.obligations.empty());
}

TEST(ContestResponse, LenientAndStrict) {
  const std::string prefix = "M1: assert P1 (phi, Conf)\nM2: contest P2 @M1\nM3: query P3 @M2\n";
  // The contester answers.
  EXPECT_TRUE(run(prefix + "M4: propose P1 (~phi, Supp)\n").violation);
  EXPECT_FALSE(run(prefix + "M4: propose P2 (~phi, Supp)\n").violation);
  auto strict = run(prefix + "M4: propose P2 (~phi, Supp)\n", true);
  ASSERT_TRUE(strict.violation);
  EXPECT_EQ(strict.violation->kind, ViolationKind::ContestResponseViolation);
  EXPECT_EQ(strict.violation->rule, "2.1");
  EXPECT_FALSE(run(prefix + "M4: propose P2 (~phi, Cert)\n", true).violation);
  auto same = run(prefix + "M4: propose P2 (phi, Conf)\n");
  ASSERT_TRUE(same.violation);
  EXPECT_EQ(same.violation->kind, ViolationKind::ContestResponseViolation);
  EXPECT_FALSE(run(prefix + "M4: propose P2 (phi, Prob)\n").violation);
  EXPECT_TRUE(run(prefix + "M4: propose P2 (psi, Prob)\n").violation);
}

TEST(Contradiction, AssertAgainstOwnAssertion) {
  auto bad = run("M1: assert P1 (phi, Conf)\nM2: assert P1 (~phi, Supp)\n");
  ASSERT_TRUE(bad.violation);
  EXPECT_EQ(bad.violation->kind, ViolationKind::Contradiction);
  EXPECT_EQ(bad.violation->property, "P10");
  EXPECT_TRUE(run("M1: assert P1 (phi, Conf)\nM2: assert P1 (~~~phi, Supp)\n").violation);
  EXPECT_FALSE(run("M1: assert P1 (phi, Conf)\nM2: assert P2 (~phi, Supp)\n").violation);
  EXPECT_FALSE(run("M1: propose P1 (phi, Conf)\nM2: propose P1 (~phi, Supp)\n").violation);
}

TEST(Retract, RemovesCommitment) {
  auto r = run("M1: assert P1 (phi, Conf)\nM2: retract P1 @M1\nM3: assert P1 (~phi, Supp)\n");
  ASSERT_FALSE(r.violation);
  EXPECT_EQ(*r.state.stores.at("P1").label_of(parse_wff("~phi")), "Supp");
  EXPECT_EQ(r.state.stores.at("P1").label_of(parse_wff("phi")), nullptr);
  auto foreign = run("M1: assert P1 (phi, Conf)\nM2: retract P2 @M1\n");
  ASSERT_TRUE(foreign.violation);
  EXPECT_EQ(foreign.violation->kind, ViolationKind::BadTarget);
}

TEST(Retract, ProposalOnlyOutsideStrictMode) {
  EXPECT_FALSE(run("M1: propose P1 (phi, Conf)\nM2: retract P1 @M1\n").violation);
  EXPECT_TRUE(run("M1: propose P1 (phi, Conf)\nM2: retract P1 @M1\n", true).violation);
}

TEST(Targets, MissingAndWrongKind) {
  Move q{1, MoveKind::Query, "P2", 9};
  DialogueState st = initial_state({}, {}, {}, {"P1", "P2"});
  auto r = apply_move(st, q);
  ASSERT_TRUE(std::holds_alternative<Violation>(r));
  EXPECT_EQ(std::get<Violation>(r).kind, ViolationKind::BadTarget);
  auto pose = run("M1: pose P1 phi\nM2: query P2 @M1\n");
  ASSERT_TRUE(pose.violation);
  EXPECT_EQ(pose.violation->kind, ViolationKind::BadTarget);
}

TEST(Payload, UnknownLabel) {
  auto label = run("M1: propose P1 (phi, Likely)\n");
  ASSERT_TRUE(label.violation);
  EXPECT_EQ(label.violation->kind, ViolationKind::MalformedPayload);
  EXPECT_EQ(label.violation->property, "P2");
  EXPECT_TRUE(run("M1: propose_inf P1 (R3, Sound)\n").violation);
}

TEST(ProposeInf, RegistersNewRule) {
  auto r = run("M1: propose_inf P1 (R9, Val)\nM2: accept_inf P2 @M1\n");
  ASSERT_FALSE(r.violation);
  ASSERT_NE(r.state.find_rule("R9"), nullptr);
  EXPECT_EQ(r.state.find_rule("R9")->strength, "Val");
}

TEST(Prec, AddsArgumentAndKeepsOriginal) {
  auto r = run("M1: assert P1 (phi, Conf)\nM2: show_arg P1 A1\nM3: prec P1 @M2 A1b\n");
  ASSERT_FALSE(r.violation);
  ASSERT_EQ(r.state.exhibited.size(), 2u);
  EXPECT_EQ(r.state.exhibited[1].argument.name, "A1b");
  EXPECT_TRUE(run("M1: show_arg P1 A1\nM2: prec P2 @M1 A1b\n").violation);
}

TEST(Nature, ChangeFlag) {
  Script s = parse_script(kExampleScript);
  DialogueState st = initial_state({s.strict, s.consistency}, s.dictionary_set(), s.rules, s.participants, s.tracks);
  std::string flags;
  for (const auto& m : s.moves) {
    auto t = std::get<Transition>(apply_move(st, m));
    flags += t.nature_changed ? '1' : '0';
    st = std::move(t.state);
  }
  EXPECT_EQ(flags, "0010000101");
}

// Every generated dialogue replays legally, and replaying it twice gives the
// same state.
TEST(ProtocolProperties, GeneratedDialoguesReplayDeterministically) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Script s = fuzz::random_dialogue(seed);
    auto replay = [&] {
      DialogueState st =
          initial_state({s.strict, s.consistency}, s.dictionary_set(), s.rules, s.participants, s.tracks);
      for (const auto& m : s.moves) {
        auto r = apply_move(st, m);
        EXPECT_TRUE(std::holds_alternative<Transition>(r)) << "seed " << seed << " M" << m.id;
        if (!std::holds_alternative<Transition>(r)) break;
        st = std::get<Transition>(r).state;
      }
      return st;
    };
    auto a = replay();
    ASSERT_EQ(a, replay());
    EXPECT_TRUE(a.obligations.empty());
  }
}

// Every standing assertion has a store entry, and no wff is stored twice.
TEST(ProtocolProperties, StoresStayCoherent) {
  for (std::uint64_t seed = 300; seed < 400; ++seed) {
    Script s = fuzz::random_dialogue(seed);
    DialogueState st = initial_state({s.strict, s.consistency}, s.dictionary_set(), s.rules, s.participants, s.tracks);
    for (const auto& m : s.moves) st = std::get<Transition>(apply_move(st, m)).state;
    for (const auto& [who, store] : st.stores) {
      for (const auto& w : store.asserted) ASSERT_NE(store.label_of(w), nullptr) << who;
      for (std::size_t i = 0; i < store.entries.size(); ++i)
        for (std::size_t j = i + 1; j < store.entries.size(); ++j)
          ASSERT_FALSE(store.entries[i].first == store.entries[j].first) << who;
    }
  }
}

}  // namespace
