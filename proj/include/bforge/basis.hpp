#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bforge/polynomial.hpp"
#include "bforge/roots.hpp"
#include "bforge/space.hpp"

namespace bforge {

enum class BasisGrade {
  any_sign,      // "signed": some element changes sign inside (a, b)
  non_negative,  // every element >= 0, some with interior zeros
  positive,      // every element > 0 on (a, b)
};

std::string to_token(BasisGrade g);

enum class Scaling {
  canonical_integer,   // integer coefficients with content 1, oriented positive near b
  partition_of_unity,  // elements sum to the constant 1
};

std::string to_token(Scaling s);

/// Bernstein basis: element k vanishes to order exactly k at a and exactly
/// n - k at b.
struct BernsteinBasis {
  Rational a;
  Rational b;
  std::vector<Polynomial> elements;
  /// (order at a, order at b) per element.
  std::vector<std::pair<unsigned, unsigned>> zero_orders;
  /// Sign behaviour of each element on the open interval (a, b).
  std::vector<SignClassification> classification;
  BasisGrade grade = BasisGrade::any_sign;
  Scaling scaling = Scaling::canonical_integer;
  /// Positive multipliers turning the canonical elements into these ones.
  std::vector<Rational> scale_factors;

  std::size_t order() const { return elements.size() - 1; }
  bool normalized() const { return scaling == Scaling::partition_of_unity; }
  bool is_nonnegative() const { return grade != BasisGrade::any_sign; }
};

enum class BasisFailureKind {
  forced_extra_zero,         // the unique candidate vanishes to a higher order than required
  degenerate_solution_space  // the endpoint conditions leave more than one direction
};

std::string to_token(BasisFailureKind k);

struct BasisFailure {
  unsigned k;
  BasisFailureKind kind;
  std::size_t nullity;
  /// forced_extra_zero only: the candidate, the offending endpoint and the
  /// order it actually vanishes to there.
  Polynomial candidate;
  char endpoint = ' ';
  unsigned order_found = 0;
  unsigned order_required = 0;

  std::string describe() const;
};

struct NoBasisReport {
  /// One entry per index k whose element cannot be built, ascending in k.
  std::vector<BasisFailure> failures;

  const BasisFailure* at(unsigned k) const;
};

using BasisResult = std::variant<BernsteinBasis, NoBasisReport>;

/// Solves, for each k, the homogeneous endpoint conditions p^(j)(a) = 0
/// (j < k) and p^(j)(b) = 0 (j < n - k) over the space. Elements come back in
/// canonical integer scaling, oriented so (-1)^(n-k) p^(n-k)(b) > 0.
BasisResult bernstein_basis(const SpanSpace& space);
BasisResult bernstein_basis(const MonomialSpace& space);

/// Rescales a non-negative basis to a partition of unity. Throws
/// NotNonNegative, ConstantNotInSpace or NonPositiveScalar.
BernsteinBasis normalize_partition_of_unity(const BernsteinBasis& basis);

/// The normalized basis when it exists, otherwise the input unchanged.
BernsteinBasis preferred_scaling(const BernsteinBasis& basis);

/// Exact coordinates of f in the basis. Throws NotInSpace.
std::vector<Rational> coordinates(const Polynomial& f, const BernsteinBasis& basis);

/// Sum of coords[k] * elements[k].
Polynomial combine(const std::vector<Rational>& coords, const BernsteinBasis& basis);

/// The derivative space {(f / f0)' : f in U} represented through numerators
/// Q = f' f0 - f f0', so q = Q / f0^2.
struct DerivedSpaceRep {
  Polynomial f0;
  SpanSpace numerator_space;
  BernsteinBasis numerator_basis;
};

using DerivedResult = std::variant<DerivedSpaceRep, NoBasisReport>;

/// Throws NotInSpace if f0 is outside the space and F0NotPositive unless f0 > 0
/// on the closed interval.
DerivedResult derived_space(const MonomialSpace& space, const Polynomial& f0);

/// f' g - f g'
Polynomial quotient_numerator(const Polynomial& f, const Polynomial& g);

}  // namespace bforge
