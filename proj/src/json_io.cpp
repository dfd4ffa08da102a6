#include "bforge/json_io.hpp"

#include "bforge/errors.hpp"

namespace bforge {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

template <class T>
Json list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json polynomial_list(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

Json failure_json(const BasisFailure& f) {
  Json j;
  j["k"] = f.k;
  j["kind"] = to_token(f.kind);
  j["nullity"] = f.nullity;
  if (f.kind == BasisFailureKind::forced_extra_zero) {
    j["candidate"] = f.candidate.str();
    j["endpoint"] = std::string(1, f.endpoint);
    j["order_found"] = f.order_found;
    j["order_required"] = f.order_required;
  }
  j["detail"] = f.describe();
  return j;
}

template <class T, class F>
Json optional_token(const std::optional<T>& v, F&& token) {
  return v ? Json(token(*v)) : Json(nullptr);
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>(), where);
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError(where, "expected an exact rational string such as \"-3/4\"");
}

Polynomial polynomial_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a sparse polynomial string such as \"0:1,3:-1/2\"");
  return Polynomial::parse(j.get<std::string>(), where);
}

MonomialSpace space_from_json(const Json& j, const std::string& where) {
  const Json& exps = field(j, "exponents", where);
  if (!exps.is_array()) throw ParseError(where + ".exponents", "expected an array of non-negative integers");
  std::vector<unsigned> exponents;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!exps[i].is_number_unsigned())
      throw ParseError(where + ".exponents[" + std::to_string(i) + "]", "expected a non-negative integer");
    exponents.push_back(exps[i].get<unsigned>());
  }
  Rational a = rational_from_json(field(j, "a", where), where + ".a");
  Rational b = rational_from_json(field(j, "b", where), where + ".b");
  try {
    return MonomialSpace::build(std::move(exponents), std::move(a), std::move(b));
  } catch (const BadExponents& e) {
    throw ParseError(where + ".exponents", e.what());
  } catch (const BadInterval& e) {
    throw ParseError(where + ".b", e.what());
  }
}

OperatorProblem problem_from_json(const Json& j) {
  return {space_from_json(field(j, "space", "problem")), polynomial_from_json(field(j, "f0", "problem"), "f0"),
          polynomial_from_json(field(j, "f1", "problem"), "f1")};
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where, std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Enclosure& e) {
  Json j;
  j["lo"] = e.lo.str();
  j["hi"] = e.hi.str();
  return j;
}

Json to_json(const MonomialSpace& space) {
  Json j;
  j["exponents"] = space.exponents();
  j["a"] = space.a().str();
  j["b"] = space.b().str();
  return j;
}

Json to_json(const OperatorProblem& problem) {
  Json j;
  j["space"] = to_json(problem.space);
  j["f0"] = problem.f0.str();
  j["f1"] = problem.f1.str();
  return j;
}

Json to_json(const SignClassification& sc) {
  Json j;
  j["interval"] = sc.interval.str();
  j["verdict"] = to_token(sc.verdict);
  Json witnesses = Json::array();
  for (const auto& s : sc.samples) {
    Json w;
    w["x"] = s.point.str();
    w["sign"] = s.sign;
    witnesses.push_back(std::move(w));
  }
  j["witnesses"] = std::move(witnesses);
  Json roots = Json::array();
  for (const auto& r : sc.roots) {
    Json e = to_json(r.where);
    e["multiplicity"] = r.multiplicity;
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  return j;
}

Json to_json(const BernsteinBasis& basis) {
  Json j;
  j["grade"] = to_token(basis.grade);
  j["scaling"] = to_token(basis.scaling);
  Json elements = Json::array();
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    Json e;
    e["k"] = k;
    e["coefficients"] = basis.elements[k].str();
    e["zero_orders"] = {basis.zero_orders[k].first, basis.zero_orders[k].second};
    e["classification"] = to_token(basis.classification[k].verdict);
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  return j;
}

Json to_json(const NoBasisReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(failure_json(f));
  return failures;
}

Json basis_report_json(const MonomialSpace& space, const BasisResult& result) {
  Json j;
  j["space"] = to_json(space);
  if (const auto* basis = std::get_if<BernsteinBasis>(&result)) {
    j["status"] = "found";
    const Json body = to_json(preferred_scaling(*basis));
    for (const auto& [key, value] : body.items()) j[key] = value;
  } else {
    j["status"] = "no-basis";
    j["failures"] = to_json(std::get<NoBasisReport>(result));
  }
  return j;
}

Json to_json(const ExistenceReport& report) {
  Json j;
  j["problem"] = to_json(report.problem);
  j["verdict"] = to_token(report.verdict);
  j["grade"] = report.basis ? Json(to_token(report.basis->grade)) : Json(nullptr);
  j["failures"] = report.basis_failure ? to_json(*report.basis_failure) : Json::array();
  j["beta"] = list(report.beta);
  j["gamma"] = list(report.gamma);
  j["ratios"] = list(report.ratios);
  j["in_range"] = report.in_range;
  j["monotonicity"] = optional_token(report.monotonicity, [](NodeMonotonicity m) { return to_token(m); });
  j["node_order"] = report.ratios.empty() ? Json(nullptr) : Json(node_order(report.ratios));
  j["w"] = report.w ? list(report.w->values) : Json(nullptr);
  j["w_summary"] = report.w ? Json(to_token(report.w->summary)) : Json(nullptr);
  j["cross_check"] = report.cross_check ? Json(*report.cross_check) : Json(nullptr);
  j["notes"] = report.notes;
  return j;
}

Json to_json(const OperatorSpec& spec) {
  Json j;
  j["tolerance"] = spec.tolerance.str();
  j["nodes"] = list(spec.nodes);
  Json weights = Json::array();
  for (const auto& w : spec.weights) weights.push_back(w.is_exact() ? to_json(w.lo) : to_json(w));
  j["weights"] = std::move(weights);
  j["ratios"] = list(spec.ratios);
  j["node_order"] = node_order(spec.ratios);
  j["basis"] = to_json(spec.basis);
  return j;
}

Json to_json(const DerivedSpaceRep& rep, const std::optional<Rational>& unit_at) {
  Json j;
  j["f0"] = rep.f0.str();
  j["support"] = rep.numerator_space.monomial_support();
  j["numerators"] = polynomial_list(rep.numerator_space.generators());
  j["basis"] = to_json(rep.numerator_basis);
  if (unit_at) {
    std::vector<Polynomial> scaled;
    for (const auto& e : rep.numerator_basis.elements) {
      const Rational v = e(*unit_at);
      scaled.push_back(v.is_zero() ? e : e * v.inverse());
    }
    j["unit_at"] = unit_at->str();
    j["elements_unit_at"] = polynomial_list(scaled);
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bforge
