#pragma once

#include <string>
#include <vector>

#include "bforge/polynomial.hpp"
#include "bforge/rational.hpp"

namespace bforge {

/// Rational interval with explicit endpoint openness. There is no default
/// openness: callers always say which endpoints count.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed;
  bool hi_closed;

  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }

  bool contains(const Rational& x) const;
  std::string str() const;
};

/// Closed rational enclosure [lo, hi]; lo == hi marks an exact value.
struct Enclosure {
  Rational lo;
  Rational hi;

  static Enclosure exact(const Rational& v) { return {v, v}; }
  Rational width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Enclosure& o) const { return !(hi < o.lo || o.hi < lo); }
  Rational mid() const { return midpoint(lo, hi); }
};

using RootEnclosure = Enclosure;

/// Signed remainder sequence p, p', -rem(p, p'), ...
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  const std::vector<Polynomial>& sequence() const { return seq_; }
  /// Sign variations at x, zeros dropped.
  int variations(const Rational& x) const;

 private:
  std::vector<Polynomial> seq_;
};

/// Number of distinct real roots of p in the interval. Throws ZeroPolynomial
/// for p = 0 and std::invalid_argument unless lo < hi.
int sturm_count(const Polynomial& p, const Interval& interval);

/// Root of multiplicity `multiplicity`, isolated in an enclosure containing no
/// other root of p. Exact rational roots get width zero.
struct IsolatedRoot {
  Enclosure where;
  unsigned multiplicity;
};

/// All distinct real roots of p inside the interval (openness respected),
/// sorted, each isolated from the others.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Interval& interval);

enum class SignVerdict {
  strictly_positive,
  nonnegative_with_zeros,
  sign_changing,
  strictly_negative,
  nonpositive_with_zeros,
  identically_zero,
};

std::string to_token(SignVerdict v);

struct SignSample {
  Rational point;
  int sign;
};

struct SignClassification {
  SignVerdict verdict;
  Interval interval;
  /// Points in the interval with their exact sign. A sign-changing verdict
  /// always carries one negative and one positive sample.
  std::vector<SignSample> samples;
  /// Roots of p in the interval (empty for strictly signed verdicts).
  std::vector<IsolatedRoot> roots;

  bool is_nonnegative() const {
    return verdict == SignVerdict::strictly_positive || verdict == SignVerdict::nonnegative_with_zeros;
  }
  /// First sample with the given sign, if any.
  const SignSample* sample_with_sign(int sign) const;
};

/// Sign behaviour of p on the interval. Sign changes are detected from
/// odd-multiplicity roots in the open interior (square-free decomposition),
/// and every verdict is backed by exact sample signs.
SignClassification classify_on_interval(const Polynomial& p, const Interval& interval);

/// Default tolerance for node enclosures: 10^-12.
Rational default_node_tolerance();

/// Certified bisection for a sign change of p in [lo, hi]. Midpoint signs
/// are exact. Roots hit exactly (endpoint, midpoint, or the simplest rational
/// in the final enclosure) are returned with width zero. Throws NoBracket when
/// p(lo) and p(hi) are nonzero and of equal sign.
RootEnclosure bisect_root(const Polynomial& p, const Rational& lo, const Rational& hi,
                          const Rational& tol);

/// Enclosure of p's range over [e.lo, e.hi] by interval Horner evaluation.
Enclosure evaluate_on(const Polynomial& p, const Enclosure& e);

}  // namespace bforge
