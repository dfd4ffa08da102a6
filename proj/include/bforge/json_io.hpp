#pragma once

// JSON descriptors and reports. Rationals are "p/q" strings, polynomials use
// the sparse "deg:coef" text form, and field order is fixed so that emitted
// documents re-serialize byte for byte.

#include <optional>
#include <string>

#include "json.hpp"

#include "bforge/basis.hpp"
#include "bforge/operator.hpp"
#include "bforge/roots.hpp"
#include "bforge/space.hpp"

namespace bforge {

using Json = nlohmann::ordered_json;

/// Parse errors name the offending field, prefixed by `where` ("space.a").
Rational rational_from_json(const Json& j, const std::string& where);
Polynomial polynomial_from_json(const Json& j, const std::string& where);
MonomialSpace space_from_json(const Json& j, const std::string& where = "space");
OperatorProblem problem_from_json(const Json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json_text(const std::string& text, const std::string& where);

Json to_json(const Rational& r);
Json to_json(const Enclosure& e);
Json to_json(const MonomialSpace& space);
Json to_json(const OperatorProblem& problem);
Json to_json(const SignClassification& sc);
Json to_json(const BernsteinBasis& basis);
Json to_json(const NoBasisReport& report);
Json basis_report_json(const MonomialSpace& space, const BasisResult& result);
Json to_json(const ExistenceReport& report);
Json to_json(const OperatorSpec& spec);
/// With unit_at set, also lists each numerator basis element scaled to value 1 there.
Json to_json(const DerivedSpaceRep& rep, const std::optional<Rational>& unit_at = std::nullopt);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace bforge
