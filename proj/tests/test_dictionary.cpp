// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "dictionary.hpp"

using namespace agora;

namespace {

TEST(Dictionary, ClaimsOrder) {
  auto d = dictionaries::claims();
  EXPECT_EQ(d.compare("Confirmed", "Plausible"), Comparison::Greater);
  EXPECT_EQ(d.compare("Conf", "Plaus"), Comparison::Greater);
  EXPECT_EQ(d.compare("Open", "Open"), Comparison::Equal);
  EXPECT_EQ(d.compare("Supp", "Cert"), Comparison::Lesser);
  EXPECT_EQ(d.canonical("Probable"), "Prob");
}

TEST(Dictionary, InferenceOrder) {
  auto d = dictionaries::inference();
  EXPECT_EQ(d.compare("Valid", "Invalid"), Comparison::Greater);
  EXPECT_EQ(d.compare("Inval", "Val"), Comparison::Lesser);
}

TEST(Dictionary, AcceptabilityOrder) {
  auto d = dictionaries::acceptability();
  EXPECT_TRUE(d.greater("Acceptable", "NotAcceptable"));
  EXPECT_TRUE(d.greater("SometimesAcceptable", "Open"));
}

TEST(Dictionary, UnknownLabelThrows) {
  EXPECT_THROW(dictionaries::claims().compare("Maybe", "Conf"), DictionaryError);
  EXPECT_FALSE(dictionaries::claims().contains("Maybe"));
}

TEST(Dictionary, PartialOrderFromChains) {
  auto d = ModalityDictionary::from_chains("g", {{"High", "Mid", "Low"}, {"High", "Side"}});
  EXPECT_EQ(d.compare("High", "Low"), Comparison::Greater);
  EXPECT_EQ(d.compare("Side", "Low"), Comparison::Incomparable);
  EXPECT_EQ(d.compare("Mid", "Side"), Comparison::Incomparable);
}

TEST(Dictionary, RejectsCyclesAndStrangers) {
  EXPECT_THROW(ModalityDictionary::from_chains("c", {{"a", "b", "a"}}), DictionaryError);
  EXPECT_THROW(ModalityDictionary("d", {"a"}, {{"a", "z"}}), DictionaryError);
  EXPECT_THROW(ModalityDictionary("d", {"a", "a"}, {}), DictionaryError);
}

TEST(Dictionary, EqualityIgnoresDeclarationOrder) {
  ModalityDictionary a("d", {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  ModalityDictionary b("d", {"z", "y", "x"}, {{"y", "z"}, {"x", "y"}});
  EXPECT_EQ(a, b);
}

// Antisymmetry and transitivity, exhaustively on every built-in dictionary.
TEST(DictionaryProperties, StrictPartialOrder) {
  for (const auto& d : {dictionaries::claims(), dictionaries::inference(), dictionaries::acceptability()}) {
    const auto& ls = d.labels();
    for (const auto& a : ls) {
      EXPECT_EQ(d.compare(a, a), Comparison::Equal);
      for (const auto& b : ls) {
        EXPECT_EQ(d.compare(a, b) == Comparison::Greater, d.compare(b, a) == Comparison::Lesser) << a << " " << b;
        for (const auto& c : ls) {
          if (d.greater(a, b) && d.greater(b, c)) EXPECT_TRUE(d.greater(a, c)) << a << " " << b << " " << c;
        }
      }
    }
  }
}

TEST(DictionaryProperties, ClaimsIsTotal) {
  auto d = dictionaries::claims();
  const std::vector<std::string> order = {"Cert", "Conf", "Prob", "Plaus", "Supp", "Open"};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) EXPECT_TRUE(d.greater(order[i], order[j]));
}

TEST(DictionarySet, RolesAndDefaults) {
  DictionarySet s;
  EXPECT_EQ(s.grounds.labels(), s.claims.labels());
  EXPECT_EQ(s.by_role("inference")->name(), "inference");
  EXPECT_EQ(s.by_role("nonsense"), nullptr);
}

}  // namespace
