#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bforge/json_io.hpp"

namespace bforge {

/// One golden case: a descriptor, the command kind that runs it, and exact
/// expected values addressed by JSON pointer into the produced report.
struct CorpusCase {
  std::string name;
  /// Label of the worked example the golden values come from.
  std::string tag;
  /// "basis", "exists", "operator" or "derived".
  std::string kind;
  Json descriptor;
  std::vector<std::pair<std::string, std::string>> expected;
};

struct CaseOutcome {
  std::string name;
  bool passed = false;
  /// JSON pointer of the first mismatched field, empty on pass.
  std::string field;
  std::string detail;
};

std::vector<CorpusCase> builtin_corpus();

std::vector<CorpusCase> corpus_from_json(const Json& j);
Json corpus_to_json(const std::vector<CorpusCase>& cases);

/// The report a case is checked against. Throws on malformed descriptors.
Json case_report(const CorpusCase& c);

/// Compares every expected field; strings compare as is, other values by
/// their compact JSON text.
CaseOutcome check_case(const CorpusCase& c);

}  // namespace bforge
