#pragma once

#include <string>
#include <utility>
#include <vector>

namespace diffhopf {

/// A violated identity, printed.
struct Witness {
  std::string check;     // which law, e.g. "coassociativity"
  std::string location;  // generator, matrix entry, ...
  std::string identity;  // the identity that should hold
  std::string lhs;
  std::string rhs;
};

struct Report {
  bool pass = true;
  std::vector<Witness> witnesses;
  /// Extra key/value output (dimensions, matrices, certificates).
  std::vector<std::pair<std::string, std::string>> facts;

  void fail(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void merge(const Report& other) {
    pass = pass && other.pass;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    facts.insert(facts.end(), other.facts.begin(), other.facts.end());
  }
};

}  // namespace diffhopf
