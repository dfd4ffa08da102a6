#include "bforge/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "bforge/errors.hpp"
#include "bforge/linear_system.hpp"

namespace bforge {

std::string to_token(BasisGrade g) {
  switch (g) {
    case BasisGrade::any_sign: return "signed";
    case BasisGrade::non_negative: return "non-negative";
    case BasisGrade::positive: return "positive";
  }
  return "unknown";
}

std::string to_token(Scaling s) {
  return s == Scaling::partition_of_unity ? "partition-of-unity" : "canonical-integer";
}

std::string to_token(BasisFailureKind k) {
  return k == BasisFailureKind::forced_extra_zero ? "ForcedExtraZero" : "DegenerateSolutionSpace";
}

std::string BasisFailure::describe() const {
  std::string s = "k=" + std::to_string(k) + ": " + to_token(kind);
  if (kind == BasisFailureKind::forced_extra_zero) {
    s += " (candidate " + candidate.pretty() + " vanishes to order " + std::to_string(order_found) +
         " at " + endpoint + ", required exactly " + std::to_string(order_required) + ")";
  } else {
    s += " (solution space of dimension " + std::to_string(nullity) + ")";
  }
  return s;
}

const BasisFailure* NoBasisReport::at(unsigned k) const {
  for (const auto& f : failures)
    if (f.k == k) return &f;
  return nullptr;
}

namespace {

// values[j][i] = g_i^(j)(x) for j <= max_order.
std::vector<std::vector<Rational>> derivative_table(const std::vector<Polynomial>& gens, const Rational& x,
                                                    std::size_t max_order) {
  std::vector<std::vector<Rational>> t(max_order + 1, std::vector<Rational>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial d = gens[i];
    for (std::size_t j = 0; j <= max_order; ++j) {
      t[j][i] = d(x);
      d = d.derivative();
    }
  }
  return t;
}

BasisGrade grade_of(const std::vector<SignClassification>& cls) {
  bool all_positive = true;
  for (const auto& c : cls) {
    if (!c.is_nonnegative()) return BasisGrade::any_sign;
    if (c.verdict != SignVerdict::strictly_positive) all_positive = false;
  }
  return all_positive ? BasisGrade::positive : BasisGrade::non_negative;
}

}  // namespace

BasisResult bernstein_basis(const SpanSpace& space) {
  const auto& gens = space.generators();
  const std::size_t n = space.order();
  const auto at_a = derivative_table(gens, space.a(), n);
  const auto at_b = derivative_table(gens, space.b(), n);

  BernsteinBasis basis;
  basis.a = space.a();
  basis.b = space.b();
  NoBasisReport failures;

  for (std::size_t k = 0; k <= n; ++k) {
    Matrix m(n, gens.size());
    std::size_t row = 0;
    for (std::size_t j = 0; j < k; ++j, ++row)
      for (std::size_t i = 0; i < gens.size(); ++i) m(row, i) = at_a[j][i];
    for (std::size_t j = 0; j < n - k; ++j, ++row)
      for (std::size_t i = 0; i < gens.size(); ++i) m(row, i) = at_b[j][i];

    const auto sol = solve_linear({std::move(m), std::nullopt});
    const auto kk = static_cast<unsigned>(k);
    if (sol.nullity() != 1) {
      failures.failures.push_back({kk, BasisFailureKind::degenerate_solution_space, sol.nullity(), {}, ' ', 0, 0});
      continue;
    }

    Polynomial p;
    for (std::size_t i = 0; i < gens.size(); ++i) p += gens[i] * sol.null_space[0][i];
    p = primitive_part(p);

    const unsigned order_a = zero_order_at(p, space.a());
    const unsigned order_b = zero_order_at(p, space.b());
    if (order_a != k || order_b != n - k) {
      BasisFailure f{kk, BasisFailureKind::forced_extra_zero, 1, p, 'a', order_a, kk};
      if (order_b != n - k) {
        f.endpoint = 'b';
        f.order_found = order_b;
        f.order_required = static_cast<unsigned>(n - k);
      }
      failures.failures.push_back(std::move(f));
      continue;
    }

    // Near b the element behaves like C (b - x)^(n-k); make C positive.
    Rational lead_b = p.derivative_at(order_b, space.b());
    if ((n - k) % 2 == 1) lead_b = -lead_b;
    if (lead_b.sign() < 0) p = -p;

    basis.classification.push_back(classify_on_interval(p, Interval::open(space.a(), space.b())));
    basis.elements.push_back(std::move(p));
    basis.zero_orders.emplace_back(order_a, order_b);
    basis.scale_factors.emplace_back(1);
  }

  if (!failures.failures.empty()) return failures;
  basis.grade = grade_of(basis.classification);
  return basis;
}

BasisResult bernstein_basis(const MonomialSpace& space) { return bernstein_basis(space.span()); }

std::vector<Rational> coordinates(const Polynomial& f, const BernsteinBasis& basis) {
  std::size_t rows = f.coefficients().size();
  for (const auto& e : basis.elements) rows = std::max(rows, e.coefficients().size());
  Matrix m(rows, basis.elements.size());
  std::vector<Rational> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < basis.elements.size(); ++c) m(r, c) = basis.elements[c].coeff(r);
    rhs[r] = f.coeff(r);
  }
  try {
    return *solve_linear({std::move(m), std::move(rhs)}).particular;
  } catch (const Inconsistent&) {
    throw NotInSpace(f.str() + " is not in the span of the basis");
  }
}

Polynomial combine(const std::vector<Rational>& coords, const BernsteinBasis& basis) {
  if (coords.size() != basis.elements.size())
    throw ArityMismatch("expected " + std::to_string(basis.elements.size()) + " coordinates, got " +
                        std::to_string(coords.size()));
  Polynomial sum;
  for (std::size_t k = 0; k < coords.size(); ++k) sum += basis.elements[k] * coords[k];
  return sum;
}

BernsteinBasis normalize_partition_of_unity(const BernsteinBasis& basis) {
  if (!basis.is_nonnegative())
    throw NotNonNegative("only non-negative bases can be normalized (grade " + to_token(basis.grade) + ")");
  std::vector<Rational> c;
  try {
    c = coordinates(Polynomial::constant(1), basis);
  } catch (const NotInSpace&) {
    throw ConstantNotInSpace("the constant 1 is not in the space");
  }
  BernsteinBasis out = basis;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].sign() <= 0)
      throw NonPositiveScalar("normalizing scalar for element " + std::to_string(k) + " is " + c[k].str());
    out.elements[k] *= c[k];
    out.scale_factors[k] *= c[k];
  }
  out.scaling = Scaling::partition_of_unity;
  return out;
}

BernsteinBasis preferred_scaling(const BernsteinBasis& basis) {
  if (!basis.is_nonnegative() || basis.normalized()) return basis;
  try {
    return normalize_partition_of_unity(basis);
  } catch (const ConstantNotInSpace&) {
    return basis;
  }
}

Polynomial quotient_numerator(const Polynomial& f, const Polynomial& g) {
  return f.derivative() * g - f * g.derivative();
}

DerivedResult derived_space(const MonomialSpace& space, const Polynomial& f0) {
  if (!space.contains(f0)) throw NotInSpace("f0 = " + f0.str() + " is not in " + space.str());
  const auto cls = classify_on_interval(f0, Interval::closed(space.a(), space.b()));
  if (cls.verdict != SignVerdict::strictly_positive)
    throw F0NotPositive("f0 is " + to_token(cls.verdict) + " on [" + space.a().str() + ", " + space.b().str() + "]");

  // Images of the generators; the kernel of f -> f' f0 - f f0' is span{f0},
  // so a maximal independent subset has n elements.
  std::vector<Polynomial> images;
  const SpanSpace span = space.span();
  for (const auto& g : span.generators()) {
    Polynomial h = quotient_numerator(g, f0);
    if (h.is_zero()) continue;
    images.push_back(std::move(h));
    std::size_t rows = 0;
    for (const auto& p : images) rows = std::max(rows, p.coefficients().size());
    Matrix m(rows, images.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = images[c].coeff(r);
    if (solve_linear({std::move(m), std::nullopt}).rank != images.size()) images.pop_back();
  }
  if (images.size() + 1 != space.dimension())
    throw std::logic_error("derived numerator space has dimension " + std::to_string(images.size()));

  SpanSpace numerators(std::move(images), space.a(), space.b());
  auto result = bernstein_basis(numerators);
  if (auto* report = std::get_if<NoBasisReport>(&result)) return *report;
  return DerivedSpaceRep{f0, std::move(numerators), preferred_scaling(std::get<BernsteinBasis>(result))};
}

}  // namespace bforge
