#pragma once

#include <string>
#include <vector>

#include "bforge/polynomial.hpp"
#include "bforge/rational.hpp"

namespace bforge {

/// Finite-dimensional span of linearly independent polynomials over [a, b].
class SpanSpace {
 public:
  /// Throws BadInterval unless a < b and std::invalid_argument when the
  /// generators are linearly dependent.
  SpanSpace(std::vector<Polynomial> generators, Rational a, Rational b);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::size_t dimension() const { return generators_.size(); }
  /// n for an (n+1)-dimensional space.
  std::size_t order() const { return generators_.size() - 1; }

  /// Union of the monomial supports of the generators.
  std::vector<unsigned> monomial_support() const;
  bool contains(const Polynomial& f) const;

 private:
  std::vector<Polynomial> generators_;
  Rational a_;
  Rational b_;
};

/// Span of distinct monomials x^e over [a, b].
class MonomialSpace {
 public:
  /// Throws BadExponents (empty, not strictly increasing) or BadInterval (a >= b).
  static MonomialSpace build(std::vector<unsigned> exponents, Rational a, Rational b);
  /// Polynomial space P_n[a, b].
  static MonomialSpace polynomials(unsigned n, Rational a, Rational b);

  const std::vector<unsigned>& exponents() const { return exponents_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::size_t dimension() const { return exponents_.size(); }
  std::size_t order() const { return exponents_.size() - 1; }

  bool contains(const Polynomial& f) const;
  SpanSpace span() const;
  std::string str() const;

 private:
  MonomialSpace(std::vector<unsigned> exponents, Rational a, Rational b)
      : exponents_(std::move(exponents)), a_(std::move(a)), b_(std::move(b)) {}

  std::vector<unsigned> exponents_;
  Rational a_;
  Rational b_;
};

}  // namespace bforge
