#include "bforge/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bforge/errors.hpp"
#include "bforge/linear_system.hpp"

namespace bforge {

namespace {

std::size_t max_length(const std::vector<Polynomial>& ps) {
  std::size_t len = 0;
  for (const auto& p : ps) len = std::max(len, p.coefficients().size());
  return len;
}

// Columns are the coefficient vectors of ps.
Matrix coefficient_matrix(const std::vector<Polynomial>& ps, std::size_t rows) {
  Matrix m(rows, ps.size());
  for (std::size_t c = 0; c < ps.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = ps[c].coeff(r);
  return m;
}

}  // namespace

SpanSpace::SpanSpace(std::vector<Polynomial> generators, Rational a, Rational b)
    : generators_(std::move(generators)), a_(std::move(a)), b_(std::move(b)) {
  if (!(a_ < b_)) throw BadInterval("interval requires a < b, got [" + a_.str() + ", " + b_.str() + "]");
  if (generators_.empty()) throw std::invalid_argument("span of no generators");
  const auto rank = solve_linear({coefficient_matrix(generators_, max_length(generators_)), std::nullopt}).rank;
  if (rank != generators_.size()) throw std::invalid_argument("span generators are linearly dependent");
}

std::vector<unsigned> SpanSpace::monomial_support() const {
  std::set<unsigned> s;
  for (const auto& g : generators_)
    for (auto e : g.support()) s.insert(e);
  return {s.begin(), s.end()};
}

bool SpanSpace::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const std::size_t rows = std::max(max_length(generators_), f.coefficients().size());
  std::vector<Rational> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) rhs[r] = f.coeff(r);
  try {
    solve_linear({coefficient_matrix(generators_, rows), std::move(rhs)});
    return true;
  } catch (const Inconsistent&) {
    return false;
  }
}

MonomialSpace MonomialSpace::build(std::vector<unsigned> exponents, Rational a, Rational b) {
  if (exponents.empty()) throw BadExponents("exponent list is empty");
  for (std::size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] <= exponents[i - 1])
      throw BadExponents("exponents must be strictly increasing (position " + std::to_string(i) + ")");
  if (!(a < b)) throw BadInterval("interval requires a < b, got [" + a.str() + ", " + b.str() + "]");
  return MonomialSpace(std::move(exponents), std::move(a), std::move(b));
}

MonomialSpace MonomialSpace::polynomials(unsigned n, Rational a, Rational b) {
  std::vector<unsigned> e(n + 1);
  for (unsigned i = 0; i <= n; ++i) e[i] = i;
  return build(std::move(e), std::move(a), std::move(b));
}

bool MonomialSpace::contains(const Polynomial& f) const {
  for (auto e : f.support())
    if (!std::binary_search(exponents_.begin(), exponents_.end(), e)) return false;
  return true;
}

SpanSpace MonomialSpace::span() const {
  std::vector<Polynomial> gens;
  gens.reserve(exponents_.size());
  for (auto e : exponents_) gens.push_back(Polynomial::monomial(1, e));
  return SpanSpace(std::move(gens), a_, b_);
}

std::string MonomialSpace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) os << ", ";
    if (exponents_[i] == 0)
      os << "1";
    else if (exponents_[i] == 1)
      os << "x";
    else
      os << "x^" << exponents_[i];
  }
  os << "} on [" << a_ << ", " << b_ << "]";
  return os.str();
}

}  // namespace bforge
