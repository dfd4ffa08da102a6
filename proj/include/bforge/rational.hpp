#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace bforge {

/// Exact rational number, always reduced with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Text form is "p/q", or "p"
/// when the denominator is 1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);       // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Decimals and exponents are rejected.
  static Rational parse(std::string_view text, const std::string& field = "rational");

  std::string str() const { return q_.get_str(); }

  /// Decimal rendering rounded half away from zero to `digits` fractional digits.
  std::string to_decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;
  mpz_class floor() const;
  mpz_class ceil() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }

  friend bool operator==(const Rational& l, const Rational& r) { return l.q_ == r.q_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.q_, r.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

 private:
  mpq_class q_{0};
};

/// 10^-exponent, e.g. pow10_inverse(12) == 1/10^12.
Rational pow10_inverse(unsigned exponent);

/// The rational with the smallest denominator (then smallest magnitude) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Rational midpoint(const Rational& lo, const Rational& hi);

}  // namespace bforge
