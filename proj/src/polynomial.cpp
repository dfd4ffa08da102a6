#include "bforge/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bforge/errors.hpp"

namespace bforge {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::parse(std::string_view text, const std::string& field) {
  std::map<unsigned, Rational> terms;
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty()) throw ParseError(field, "empty polynomial");

  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view term = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (comma != std::string_view::npos && rest.empty())
      throw ParseError(field, "trailing comma");

    const auto colon = term.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(field, "term \"" + std::string(term) + "\" is not of the form degree:coefficient");
    std::string deg_text(term.substr(0, colon));
    deg_text.erase(std::remove(deg_text.begin(), deg_text.end(), ' '), deg_text.end());
    if (deg_text.empty() || !std::all_of(deg_text.begin(), deg_text.end(), ::isdigit) ||
        deg_text.size() > 4)
      throw ParseError(field, "bad degree \"" + deg_text + "\"");
    const auto degree = static_cast<unsigned>(std::stoul(deg_text));
    terms[degree] += Rational::parse(term.substr(colon + 1), field);
  }

  std::vector<Rational> coeffs(terms.rbegin()->first + 1);
  for (const auto& [d, c] : terms) coeffs[d] = c;
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0:0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + coeffs_[i].str();
  }
  return out;
}

std::string Polynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::vector<unsigned> Polynomial::support() const {
  std::vector<unsigned> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) s.push_back(static_cast<unsigned>(i));
  return s;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::derivative(unsigned order) const {
  Polynomial p = *this;
  for (unsigned i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Rational Polynomial::derivative_at(unsigned order, const Rational& x) const {
  return derivative(order)(x);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Rational> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    if (l.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

DivMod divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {Polynomial{}, p};

  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  const auto dd = static_cast<std::size_t>(d.degree());
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead = d.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational factor = rem[i + dd] / lead;
    quot[i] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= factor * d.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial div_exact(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero())
    throw NonExactDivision("division of " + p.str() + " by " + d.str() + " leaves remainder " + r.str());
  return q;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    // keep coefficient size in check between steps
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return make_monic(a);
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coefficients())
    if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  ints.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    ints.push_back(c.num() * (den_lcm / c.den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(mpz_class(v / content));
  return Polynomial(std::move(out));
}

unsigned zero_order_at(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) throw ZeroPolynomial("zero order of the zero polynomial is undefined");
  unsigned order = 0;
  Polynomial d = p;
  while (d(x).is_zero()) {
    d = d.derivative();
    ++order;
  }
  return order;
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  if (p.is_constant()) return factors;

  const Polynomial f = make_monic(p);
  const Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = div_exact(f, a);
  Polynomial c = div_exact(fp, a);
  Polynomial d = c - b.derivative();
  while (!b.is_constant()) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    b = div_exact(b, g);
    c = div_exact(d, g);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().is_constant()) factors.pop_back();
  return factors;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
  if (p.is_constant()) return Polynomial::constant(1);
  return make_monic(div_exact(p, gcd(p, p.derivative())));
}

}  // namespace bforge
