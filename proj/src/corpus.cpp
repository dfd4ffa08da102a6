#include "bforge/corpus.hpp"

#include "bforge/errors.hpp"

namespace bforge {

namespace {

// Golden values, all transcribed from the worked examples.
constexpr const char* kBuiltin = R"json([
  {"name": "span-1-x3-basis", "tag": "E1", "kind": "basis",
   "descriptor": {"exponents": [0, 3], "a": "-1", "b": "1"},
   "expected": {"/status": "found", "/grade": "positive", "/scaling": "partition-of-unity",
                "/elements/0/coefficients": "0:1/2,3:-1/2", "/elements/1/coefficients": "0:1/2,3:1/2"}},
  {"name": "span-1-x3-operator", "tag": "E1", "kind": "operator",
   "descriptor": {"space": {"exponents": [0, 3], "a": "-1", "b": "1"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/ratios/0": "-1", "/ratios/1": "1",
                "/nodes/0/lo": "-1", "/nodes/0/hi": "-1", "/nodes/1/lo": "1", "/nodes/1/hi": "1",
                "/weights/0": "1", "/weights/1": "1"}},
  {"name": "span-1-x-x3-signed", "tag": "E2", "kind": "basis",
   "descriptor": {"exponents": [0, 1, 3], "a": "-1", "b": "1"},
   "expected": {"/status": "found", "/grade": "signed",
                "/elements/0/coefficients": "0:2,1:-3,3:1", "/elements/1/coefficients": "1:1,3:-1",
                "/elements/2/coefficients": "0:2,1:3,3:-1"}},
  {"name": "span-1-x-x3-no-basis", "tag": "E2", "kind": "basis",
   "descriptor": {"exponents": [0, 1, 3], "a": "-1", "b": "2"},
   "expected": {"/status": "no-basis", "/failures/1/k": "2", "/failures/1/kind": "ForcedExtraZero"}},
  {"name": "cubic-P3-symmetric", "tag": "P3", "kind": "operator",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3], "a": "-1", "b": "1"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/ratios/0": "-1", "/ratios/1": "1", "/ratios/2": "-1", "/ratios/3": "1",
                "/nodes/0/lo": "-1", "/nodes/1/lo": "1", "/nodes/2/lo": "-1", "/nodes/3/lo": "1",
                "/nodes/0/hi": "-1", "/nodes/1/hi": "1", "/nodes/2/hi": "-1", "/nodes/3/hi": "1"}},
  {"name": "cubic-P3-symmetric-exists", "tag": "P3", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3], "a": "-1", "b": "1"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/verdict": "exists", "/monotonicity": "non-monotone",
                "/gamma/0": "-1", "/gamma/1": "1", "/gamma/2": "-1", "/gamma/3": "1"}},
  {"name": "cubic-P3-shifted", "tag": "P3", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3], "a": "-1", "b": "2"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/verdict": "node-out-of-range",
                "/gamma/0": "-1", "/gamma/1": "2", "/gamma/2": "-4", "/gamma/3": "8"}},
  {"name": "cubic-P4-shifted", "tag": "P3", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3, 4], "a": "-1", "b": "2"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/verdict": "exists", "/monotonicity": "non-monotone",
                "/gamma/0": "-1", "/gamma/1": "5/4", "/gamma/2": "-1", "/gamma/3": "-1", "/gamma/4": "8"}},
  {"name": "sextic-span-symmetric-basis", "tag": "ex1", "kind": "basis",
   "descriptor": {"exponents": [0, 1, 2, 3, 6], "a": "-1", "b": "1"},
   "expected": {"/grade": "positive", "/scaling": "partition-of-unity",
                "/elements/0/coefficients": "0:5/56,1:-9/28,2:45/112,3:-5/28,6:1/112",
                "/elements/1/coefficients": "0:2/7,1:-3/7,2:-3/14,3:3/7,6:-1/14",
                "/elements/2/coefficients": "0:1/4,2:-3/8,6:1/8",
                "/elements/3/coefficients": "0:2/7,1:3/7,2:-3/14,3:-3/7,6:-1/14",
                "/elements/4/coefficients": "0:5/56,1:9/28,2:45/112,3:5/28,6:1/112"}},
  {"name": "sextic-span-symmetric-exists", "tag": "ex1", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3, 6], "a": "-1", "b": "1"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/verdict": "exists", "/node_order": "t0 < t3 < t2 < t1 < t4",
                "/gamma/0": "-1", "/gamma/1": "3/4", "/gamma/2": "0", "/gamma/3": "-3/4", "/gamma/4": "1"}},
  {"name": "sextic-span-shifted-basis", "tag": "ex2", "kind": "basis",
   "descriptor": {"exponents": [0, 1, 2, 3, 6], "a": "-1", "b": "2"},
   "expected": {"/grade": "positive", "/scaling": "partition-of-unity",
                "/elements/0/coefficients": "0:640/2673,1:-128/297,2:80/297,3:-160/2673,6:1/2673",
                "/elements/1/coefficients": "0:5776/13365,1:-152/1485,2:-532/1485,3:2318/13365,6:-38/13365",
                "/elements/2/coefficients": "0:98/405,1:14/45,2:-7/90,3:-56/405,6:7/810",
                "/elements/3/coefficients": "0:16/243,1:4/27,2:2/27,3:-4/243,6:-2/243",
                "/elements/4/coefficients": "0:5/243,1:2/27,2:5/54,3:10/243,6:1/486"}},
  {"name": "sextic-span-shifted-exists", "tag": "ex2", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3, 6], "a": "-1", "b": "2"}, "f0": "0:1", "f1": "3:1"},
   "expected": {"/verdict": "node-out-of-range", "/gamma/2": "-16/7"}},
  {"name": "nonmonotone-nodes-w", "tag": "w-counterexample", "kind": "exists",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3], "a": "0", "b": "1"}, "f0": "0:1", "f1": "1:3/8,2:-1/2,3:1/3"},
   "expected": {"/verdict": "exists", "/w/0": "3/8", "/w/1": "-1/8", "/w/2": "3/8",
                "/w_summary": "has-negative", "/monotonicity": "non-monotone"}},
  {"name": "derived-sextic-span", "tag": "D1E4", "kind": "derived",
   "descriptor": {"space": {"exponents": [0, 1, 2, 3, 6], "a": "-1", "b": "1"}, "f0": "0:1", "unit_at": "0"},
   "expected": {"/support": "[0,1,2,5]", "/basis/grade": "positive",
                "/elements_unit_at/0": "0:1,1:-5/2,2:5/3,5:-1/6",
                "/elements_unit_at/1": "0:1,1:-1/2,2:-1,5:1/2",
                "/elements_unit_at/2": "0:1,1:1/2,2:-1,5:-1/2",
                "/elements_unit_at/3": "0:1,1:5/2,2:5/3,5:1/6"}}
])json";

std::string text_of(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::vector<CorpusCase> builtin_corpus() { return corpus_from_json(Json::parse(kBuiltin)); }

std::vector<CorpusCase> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("corpus", "expected an array of cases");
  std::vector<CorpusCase> cases;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "corpus[" + std::to_string(i) + "]";
    const Json& c = j[i];
    for (const char* key : {"name", "tag", "kind", "descriptor", "expected"})
      if (!c.is_object() || !c.contains(key)) throw ParseError(where + "." + key, "missing field");
    CorpusCase out{text_of(c["name"]), text_of(c["tag"]), text_of(c["kind"]), c["descriptor"], {}};
    if (!c["expected"].is_object()) throw ParseError(where + ".expected", "expected an object");
    for (const auto& [pointer, value] : c["expected"].items()) out.expected.emplace_back(pointer, text_of(value));
    cases.push_back(std::move(out));
  }
  return cases;
}

Json corpus_to_json(const std::vector<CorpusCase>& cases) {
  Json out = Json::array();
  for (const auto& c : cases) {
    Json j;
    j["name"] = c.name;
    j["tag"] = c.tag;
    j["kind"] = c.kind;
    j["descriptor"] = c.descriptor;
    Json expected = Json::object();
    for (const auto& [pointer, value] : c.expected) expected[pointer] = value;
    j["expected"] = std::move(expected);
    out.push_back(std::move(j));
  }
  return out;
}

Json case_report(const CorpusCase& c) {
  if (c.kind == "basis") {
    const auto space = space_from_json(c.descriptor);
    return basis_report_json(space, bernstein_basis(space));
  }
  if (c.kind == "exists") return to_json(existence_report(problem_from_json(c.descriptor)));
  if (c.kind == "operator") {
    const Rational tol = c.descriptor.contains("tol") ? rational_from_json(c.descriptor["tol"], "tol")
                                                      : default_node_tolerance();
    return to_json(build_operator(existence_report(problem_from_json(c.descriptor)), tol));
  }
  if (c.kind == "derived") {
    const auto space = space_from_json(c.descriptor.at("space"));
    const auto f0 = polynomial_from_json(c.descriptor.at("f0"), "f0");
    std::optional<Rational> unit_at;
    if (c.descriptor.contains("unit_at")) unit_at = rational_from_json(c.descriptor["unit_at"], "unit_at");
    auto result = derived_space(space, f0);
    if (auto* rep = std::get_if<DerivedSpaceRep>(&result)) return to_json(*rep, unit_at);
    Json j;
    j["status"] = "no-basis";
    j["failures"] = to_json(std::get<NoBasisReport>(result));
    return j;
  }
  throw ParseError("kind", "unknown case kind \"" + c.kind + "\"");
}

CaseOutcome check_case(const CorpusCase& c) {
  CaseOutcome out{c.name, false, {}, {}};
  Json report;
  try {
    report = case_report(c);
  } catch (const std::exception& e) {
    out.field = "(report)";
    out.detail = e.what();
    return out;
  }
  for (const auto& [pointer, expected] : c.expected) {
    Json::json_pointer ptr;
    try {
      ptr = Json::json_pointer(pointer);
    } catch (const Json::exception&) {
      out.field = pointer;
      out.detail = "not a valid JSON pointer";
      return out;
    }
    if (!report.contains(ptr)) {
      out.field = pointer;
      out.detail = "missing from report";
      return out;
    }
    const std::string got = text_of(report.at(ptr));
    if (got != expected) {
      out.field = pointer;
      out.detail = "expected " + expected + ", got " + got;
      return out;
    }
  }
  out.passed = true;
  return out;
}

}  // namespace bforge
