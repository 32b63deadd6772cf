// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "dictionary.hpp"

#include <algorithm>

namespace agora {

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Greater: return "greater";
    case Comparison::Lesser: return "lesser";
    case Comparison::Equal: return "equal";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

ModalityDictionary::ModalityDictionary(std::string name, std::vector<std::string> labels,
                                       std::vector<Cover> covers)
    : name_(std::move(name)), labels_(std::move(labels)), covers_(std::move(covers)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw DictionaryError("dictionary " + name_ + ": empty label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw DictionaryError("dictionary " + name_ + ": duplicate label " + labels_[i]);
    }
  }
  const std::size_t n = labels_.size();
  above_.assign(n, std::vector<bool>(n, false));
  for (const auto& [hi, lo] : covers_) {
    auto find = [&](const std::string& l) {
      auto it = std::find(labels_.begin(), labels_.end(), l);
      if (it == labels_.end()) throw DictionaryError("dictionary " + name_ + ": order mentions unknown label " + l);
      return static_cast<std::size_t>(it - labels_.begin());
    };
    above_[find(hi)][find(lo)] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (above_[k][j]) above_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (above_[i][i]) throw DictionaryError("dictionary " + name_ + ": order has a cycle through " + labels_[i]);
  }
}

ModalityDictionary ModalityDictionary::from_chains(std::string name,
                                                   const std::vector<std::vector<std::string>>& chains) {
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (std::find(labels.begin(), labels.end(), chain[i]) == labels.end()) labels.push_back(chain[i]);
      if (i > 0) covers.emplace_back(chain[i - 1], chain[i]);
    }
  }
  return ModalityDictionary(std::move(name), std::move(labels), std::move(covers));
}

void ModalityDictionary::add_alias(const std::string& alias, const std::string& label) {
  index_of(label);
  aliases_[alias] = label;
}

std::optional<std::string> ModalityDictionary::canonical(const std::string& label) const {
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end()) return label;
  if (auto it = aliases_.find(label); it != aliases_.end()) return it->second;
  return std::nullopt;
}

std::size_t ModalityDictionary::index_of(const std::string& label) const {
  auto c = canonical(label);
  if (!c) throw DictionaryError("label " + label + " is not in dictionary " + name_);
  return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), *c) - labels_.begin());
}

Comparison ModalityDictionary::compare(const std::string& a, const std::string& b) const {
  std::size_t i = index_of(a), j = index_of(b);
  if (i == j) return Comparison::Equal;
  if (above_[i][j]) return Comparison::Greater;
  if (above_[j][i]) return Comparison::Lesser;
  return Comparison::Incomparable;
}

bool ModalityDictionary::operator==(const ModalityDictionary& o) const {
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return name_ == o.name_ && sorted(labels_) == sorted(o.labels_) && sorted(covers_) == sorted(o.covers_);
}

namespace dictionaries {

ModalityDictionary claims() {
  auto d = ModalityDictionary::from_chains("claims", {{"Cert", "Conf", "Prob", "Plaus", "Supp", "Open"}});
  d.add_alias("Certain", "Cert");
  d.add_alias("Confirmed", "Conf");
  d.add_alias("Probable", "Prob");
  d.add_alias("Plausible", "Plaus");
  d.add_alias("Supported", "Supp");
  return d;
}

ModalityDictionary inference() {
  auto d = ModalityDictionary::from_chains("inference", {{"Val", "Inval"}});
  d.add_alias("Valid", "Val");
  d.add_alias("Invalid", "Inval");
  return d;
}

ModalityDictionary acceptability() {
  return ModalityDictionary::from_chains("inference",
                                         {{"Acceptable", "SometimesAcceptable", "Open", "NotAcceptable"}});
}

}  // namespace dictionaries

const ModalityDictionary* DictionarySet::by_role(const std::string& role) const {
  return const_cast<DictionarySet*>(this)->by_role(role);
}

ModalityDictionary* DictionarySet::by_role(const std::string& role) {
  if (role == "claims") return &claims;
  if (role == "grounds") return &grounds;
  if (role == "consequences") return &consequences;
  if (role == "inference") return &inference;
  return nullptr;
}

}  // namespace agora
