#pragma once

#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bforge/rational.hpp"

namespace bforge {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial with rational coefficients.
/// Coefficient i multiplies x^i; trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// x - root
  static Polynomial linear_factor(const Rational& root);

  /// Parses the sparse "degree:coefficient,..." form, e.g. "0:1/4,2:-3/8,6:1/8".
  /// Repeated degrees are summed.
  static Polynomial parse(std::string_view text, const std::string& field = "polynomial");
  /// Sparse "degree:coefficient" form; the zero polynomial renders as "0:0".
  std::string str() const;
  /// Human-readable form such as "5/56 - 9/28*x + x^6".
  std::string pretty() const;

  int degree() const {
    return coeffs_.empty() ? kZeroPolynomialDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  /// Exponents with nonzero coefficients.
  std::vector<unsigned> support() const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial derivative(unsigned order) const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// Value of the order-th derivative at x.
  Rational derivative_at(unsigned order, const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator-(const Polynomial& p) { return p * Rational(-1); }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend bool operator==(const Polynomial& l, const Polynomial& r) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over the rationals; throws std::domain_error for d = 0.
DivMod divmod(const Polynomial& p, const Polynomial& d);

/// Quotient of p by d; throws NonExactDivision when the remainder is nonzero.
Polynomial div_exact(const Polynomial& p, const Polynomial& d);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

Polynomial make_monic(const Polynomial& p);

/// Scales p to integer coefficients with content 1, keeping the sign of the
/// leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// Order of vanishing of p at x: the least j with p^(j)(x) != 0.
/// Throws ZeroPolynomial for p = 0.
unsigned zero_order_at(const Polynomial& p, const Rational& x);

/// Yun square-free decomposition: p = lc * prod factors[i]^(i+1), each factor
/// monic and square-free, pairwise coprime. Entries may be constant 1.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace bforge
