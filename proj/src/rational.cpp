#include "bforge/rational.hpp"

#include <cctype>

#include "bforge/errors.hpp"

namespace bforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Integer with optional leading sign.
bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long long v) : q_(static_cast<long>(v)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text, const std::string& field) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(s))
      throw ParseError(field, "expected exact rational \"p\" or \"p/q\", got \"" + std::string(s) + "\"");
    return Rational(parse_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_integer_text(num) || !all_digits(den))
    throw ParseError(field, "expected exact rational \"p/q\", got \"" + std::string(s) + "\"");
  const mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError(field, "zero denominator in \"" + std::string(s) + "\"");
  return Rational(parse_integer(num), d);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|q| * 10^digits), half away from zero
  const mpz_class n = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), mpz_class(q_.get_den() * 2).get_mpz_t());

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sign() < 0 && scaled != 0 ? "-" : "") + body;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(q_.get_den(), q_.get_num());
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow10_inverse(unsigned exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
  return Rational(mpz_class(1), p);
}

Rational midpoint(const Rational& lo, const Rational& hi) { return (lo + hi) / Rational(2); }

namespace {

// Simplest rational in [lo, hi] with 0 <= lo <= hi (Stern-Brocot descent).
Rational simplest_nonnegative(const Rational& lo, const Rational& hi) {
  const mpz_class fl = lo.floor();
  if (Rational(fl) == lo) return lo;
  if (Rational(mpz_class(fl + 1)) <= hi) return Rational(mpz_class(fl + 1));
  // lo and hi share the integer part fl; recurse on reciprocals of the fractional parts.
  const Rational lo_frac = lo - Rational(fl);
  const Rational hi_frac = hi - Rational(fl);
  return Rational(fl) + simplest_nonnegative(hi_frac.inverse(), lo_frac.inverse()).inverse();
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

}  // namespace bforge
