#include "bforge/roots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bforge/errors.hpp"

namespace bforge {

bool Interval::contains(const Rational& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  seq_.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    seq_.push_back(d);
    const auto& prev = seq_[seq_.size() - 2];
    d = -divmod(prev, seq_.back()).remainder;
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : seq_) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

namespace {

void require_ordered(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi, got " + lo.str() + " and " + hi.str());
}

// Distinct roots of a square-free s in the open interval (l, r).
int open_count(const Polynomial& s, const SturmChain& chain, const Rational& l, const Rational& r) {
  // V(l) - V(r) counts roots in (l, r].
  return chain.variations(l) - chain.variations(r) - (s(r).is_zero() ? 1 : 0);
}

// Isolates the roots of square-free s in (l, r), which holds `count` of them.
void isolate_open(const Polynomial& s, const SturmChain& chain, const Rational& l, const Rational& r,
                  int count, std::vector<Enclosure>& out) {
  if (count == 0) return;
  const Rational m = midpoint(l, r);
  if (count == 1 && !s(l).is_zero() && !s(r).is_zero()) {
    // a root sitting at the midpoint is reported exactly so samples can avoid it
    out.push_back(s(m).is_zero() ? Enclosure::exact(m) : Enclosure{l, r});
    return;
  }
  const bool hit = s(m).is_zero();
  const int left = open_count(s, chain, l, m);
  isolate_open(s, chain, l, m, left, out);
  if (hit) out.push_back(Enclosure::exact(m));
  isolate_open(s, chain, m, r, count - left - (hit ? 1 : 0), out);
}

}  // namespace

int sturm_count(const Polynomial& p, const Interval& interval) {
  if (p.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
  require_ordered(interval.lo, interval.hi);
  const Polynomial s = squarefree_part(p);
  const SturmChain chain(s);
  int count = chain.variations(interval.lo) - chain.variations(interval.hi);
  if (!interval.hi_closed && s(interval.hi).is_zero()) --count;
  if (interval.lo_closed && s(interval.lo).is_zero()) ++count;
  return count;
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Interval& interval) {
  if (p.is_zero()) throw ZeroPolynomial("root isolation of the zero polynomial");
  require_ordered(interval.lo, interval.hi);
  const Polynomial s = squarefree_part(p);
  if (s.is_constant()) return {};
  const SturmChain chain(s);

  std::vector<Enclosure> found;
  if (interval.lo_closed && s(interval.lo).is_zero()) found.push_back(Enclosure::exact(interval.lo));
  isolate_open(s, chain, interval.lo, interval.hi, open_count(s, chain, interval.lo, interval.hi), found);
  if (interval.hi_closed && s(interval.hi).is_zero()) found.push_back(Enclosure::exact(interval.hi));

  // Shrink enclosures away from the interval ends so that both sides of every
  // root contain interior sample points.
  for (auto& e : found) {
    while (!e.is_exact() && (e.lo == interval.lo || e.hi == interval.hi)) {
      const Rational m = midpoint(e.lo, e.hi);
      const int sm = s(m).sign();
      if (sm == 0) e = Enclosure::exact(m);
      else if (sm == s(e.lo).sign()) e.lo = m;
      else e.hi = m;
    }
  }

  // Multiplicity = index of the square-free factor that vanishes in the enclosure.
  const auto factors = squarefree_decomposition(p);
  std::vector<IsolatedRoot> roots;
  roots.reserve(found.size());
  for (const auto& e : found) {
    unsigned multiplicity = 0;
    for (std::size_t i = 0; i < factors.size() && multiplicity == 0; ++i) {
      const auto& f = factors[i];
      if (f.is_constant()) continue;
      const bool has_root = e.is_exact() ? f(e.lo).is_zero()
                                         : sturm_count(f, Interval::open(e.lo, e.hi)) > 0;
      if (has_root) multiplicity = static_cast<unsigned>(i + 1);
    }
    if (multiplicity == 0) throw std::logic_error("isolated root not found in square-free factors");
    roots.push_back({e, multiplicity});
  }
  return roots;
}

std::string to_token(SignVerdict v) {
  switch (v) {
    case SignVerdict::strictly_positive: return "strictly-positive";
    case SignVerdict::nonnegative_with_zeros: return "non-negative-with-interior-zeros";
    case SignVerdict::sign_changing: return "sign-changing";
    case SignVerdict::strictly_negative: return "strictly-negative";
    case SignVerdict::nonpositive_with_zeros: return "non-positive-with-interior-zeros";
    case SignVerdict::identically_zero: return "identically-zero";
  }
  return "unknown";
}

const SignSample* SignClassification::sample_with_sign(int sign) const {
  for (const auto& s : samples)
    if (s.sign == sign) return &s;
  return nullptr;
}

SignClassification classify_on_interval(const Polynomial& p, const Interval& interval) {
  require_ordered(interval.lo, interval.hi);
  SignClassification out{SignVerdict::identically_zero, interval, {}, {}};
  if (p.is_zero()) {
    out.samples.push_back({midpoint(interval.lo, interval.hi), 0});
    return out;
  }

  out.roots = isolate_roots(p, interval);

  bool changes_sign = false;
  for (const auto& r : out.roots) {
    // endpoints of a non-exact enclosure are never roots
    const bool interior = !r.where.is_exact() || (interval.lo < r.where.lo && r.where.lo < interval.hi);
    if (interior && r.multiplicity % 2 == 1) changes_sign = true;
  }

  // Sample points: every gap between consecutive boundaries contains a
  // non-root midpoint, so each sign region of p is represented.
  std::vector<Rational> bounds{interval.lo, interval.hi};
  for (const auto& r : out.roots) {
    bounds.push_back(r.where.lo);
    bounds.push_back(r.where.hi);
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<SignSample> candidates;
  auto consider = [&](const Rational& x) {
    if (!(interval.lo < x && x < interval.hi)) return;
    const int s = p(x).sign();
    if (s != 0) candidates.push_back({x, s});
  };
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    consider(midpoint(bounds[i], bounds[i + 1]));
    if (i > 0) consider(bounds[i]);
  }
  if (candidates.empty()) throw std::logic_error("no non-root sample found");

  if (changes_sign) {
    const auto neg = std::find_if(candidates.begin(), candidates.end(), [](auto& c) { return c.sign < 0; });
    const auto pos = std::find_if(candidates.begin(), candidates.end(), [](auto& c) { return c.sign > 0; });
    if (neg == candidates.end() || pos == candidates.end())
      throw std::logic_error("odd-multiplicity interior root without opposite-sign samples");
    out.verdict = SignVerdict::sign_changing;
    out.samples = {*neg, *pos};
    return out;
  }

  const int s = candidates.front().sign;
  for (const auto& c : candidates)
    if (c.sign != s) throw std::logic_error("sign change found without odd-multiplicity root");
  out.samples = {candidates.front()};
  if (out.roots.empty())
    out.verdict = s > 0 ? SignVerdict::strictly_positive : SignVerdict::strictly_negative;
  else
    out.verdict = s > 0 ? SignVerdict::nonnegative_with_zeros : SignVerdict::nonpositive_with_zeros;
  return out;
}

Rational default_node_tolerance() { return pow10_inverse(12); }

RootEnclosure bisect_root(const Polynomial& p, const Rational& lo, const Rational& hi, const Rational& tol) {
  if (p.is_zero()) throw ZeroPolynomial("bisection on the zero polynomial");
  require_ordered(lo, hi);
  if (tol.sign() < 0) throw std::invalid_argument("negative tolerance");

  const int s_lo = p(lo).sign();
  const int s_hi = p(hi).sign();
  if (s_lo == 0) return Enclosure::exact(lo);
  if (s_hi == 0) return Enclosure::exact(hi);
  if (s_lo == s_hi)
    throw NoBracket("p has sign " + std::to_string(s_lo) + " at both " + lo.str() + " and " + hi.str());

  Rational l = lo;
  Rational r = hi;
  while (r - l > tol) {
    const Rational m = midpoint(l, r);
    const int s = p(m).sign();
    if (s == 0) return Enclosure::exact(m);
    if (s == s_lo)
      l = m;
    else
      r = m;
  }
  // A rational root with small denominator is the simplest rational in the bracket.
  const Rational candidate = simplest_between(l, r);
  if (p(candidate).is_zero()) return Enclosure::exact(candidate);
  return {l, r};
}

namespace {

Enclosure multiply(const Enclosure& x, const Enclosure& y) {
  const Rational a = x.lo * y.lo;
  const Rational b = x.lo * y.hi;
  const Rational c = x.hi * y.lo;
  const Rational d = x.hi * y.hi;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

}  // namespace

Enclosure evaluate_on(const Polynomial& p, const Enclosure& e) {
  if (e.is_exact()) return Enclosure::exact(p(e.lo));
  Enclosure acc = Enclosure::exact(0);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = multiply(acc, e);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace bforge
