// Copyright 2026 The Risk Agora Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#ifndef AGORA_DICTIONARY_HPP
#define AGORA_DICTIONARY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agora {

enum class Comparison { Greater, Lesser, Equal, Incomparable };

const char* to_string(Comparison c);

struct DictionaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite set of modality labels under a strict partial order. The order is
// given as (greater, lesser) cover pairs; the transitive closure is taken at
// construction and cycles are rejected.
class ModalityDictionary {
 public:
  using Cover = std::pair<std::string, std::string>;

  ModalityDictionary() = default;
  ModalityDictionary(std::string name, std::vector<std::string> labels, std::vector<Cover> covers);

  // Each chain lists labels strongest first, e.g. {{"Val", "Inval"}}.
  static ModalityDictionary from_chains(std::string name, const std::vector<std::vector<std::string>>& chains);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Cover>& covers() const { return covers_; }

  // Long spellings accepted on input, e.g. "Confirmed" for "Conf".
  void add_alias(const std::string& alias, const std::string& label);
  std::optional<std::string> canonical(const std::string& label) const;
  bool contains(const std::string& label) const { return canonical(label).has_value(); }

  Comparison compare(const std::string& a, const std::string& b) const;
  bool greater(const std::string& a, const std::string& b) const {
    return compare(a, b) == Comparison::Greater;
  }

  // Same name, label set and cover set; declaration order is irrelevant.
  bool operator==(const ModalityDictionary& o) const;

 private:
  std::size_t index_of(const std::string& label) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::map<std::string, std::string> aliases_;
  // above_[i][j]: labels_[i] > labels_[j] in the closure.
  std::vector<std::vector<bool>> above_;
};

namespace dictionaries {

// Cert > Conf > Prob > Plaus > Supp > Open, with the long names as aliases.
ModalityDictionary claims();
// Val > Inval.
ModalityDictionary inference();
// Acceptable > SometimesAcceptable > Open > NotAcceptable.
ModalityDictionary acceptability();

}  // namespace dictionaries

// The four dictionaries a dialogue runs under. Grounds and consequences
// default to the claims dictionary.
struct DictionarySet {
  ModalityDictionary claims = dictionaries::claims();
  ModalityDictionary grounds = dictionaries::claims();
  ModalityDictionary consequences = dictionaries::claims();
  ModalityDictionary inference = dictionaries::inference();

  const ModalityDictionary* by_role(const std::string& role) const;
  ModalityDictionary* by_role(const std::string& role);

  bool operator==(const DictionarySet&) const = default;
};

}  // namespace agora

#endif  // AGORA_DICTIONARY_HPP
