#include <algorithm>
#include <set>

#include "doctest.h"

#include "bforge/errors.hpp"
#include "bforge/roots.hpp"
#include "test_support.hpp"

using namespace bforge;
using namespace bforge::testing;

TEST_CASE("sturm_count") {
  CHECK(sturm_count(P("0:1,2:1"), Interval::open(Q("-1"), Q("1"))) == 0);
  CHECK(sturm_count(P("1:1,3:-1"), Interval::open(Q("-1"), Q("1"))) == 1);
  CHECK(sturm_count(P("1:1,3:-1"), Interval::closed(Q("-1"), Q("1"))) == 3);
  // x^3 + 4: the real root -4^(1/3) lies left of -1
  CHECK(sturm_count(P("0:4,3:1"), Interval::open(Q("-1"), Q("2"))) == 0);
  CHECK(sturm_count(P("0:4,3:1"), Interval::open(Q("-2"), Q("2"))) == 1);

  const Interval half_open{Q("-1"), Q("1"), false, true};
  CHECK(sturm_count(P("1:1,3:-1"), half_open) == 2);
  CHECK(sturm_count(pow(P("0:-1/2,1:1"), 3), Interval::open(Q("0"), Q("1"))) == 1);

  CHECK_THROWS_AS(sturm_count(Polynomial(), Interval::open(Q("0"), Q("1"))), ZeroPolynomial);
  CHECK_THROWS_AS(sturm_count(P("1:1"), Interval::open(Q("1"), Q("1"))), std::invalid_argument);
}

TEST_CASE("classify_on_interval") {
  const auto sc = classify_on_interval(P("1:1,3:-1"), Interval::open(Q("-1"), Q("1")));
  CHECK(sc.verdict == SignVerdict::sign_changing);
  const SignSample* neg = sc.sample_with_sign(-1);
  const SignSample* pos = sc.sample_with_sign(1);
  REQUIRE(neg);
  REQUIRE(pos);
  CHECK(P("1:1,3:-1")(neg->point).sign() < 0);
  CHECK(P("1:1,3:-1")(pos->point).sign() > 0);

  CHECK(classify_on_interval(P("0:1/2,2:-1/2"), Interval::open(Q("-1"), Q("1"))).verdict ==
        SignVerdict::strictly_positive);
  // ... but not on the closed interval, where it vanishes at both ends
  CHECK(classify_on_interval(P("0:1/2,2:-1/2"), Interval::closed(Q("-1"), Q("1"))).verdict ==
        SignVerdict::nonnegative_with_zeros);

  const Polynomial shifted_square = pow(P("0:-1/2,1:1"), 2) + Polynomial::constant(Q("1/8"));
  CHECK(classify_on_interval(shifted_square, Interval::open(Q("0"), Q("1"))).verdict ==
        SignVerdict::strictly_positive);

  const auto sq = classify_on_interval(P("2:3"), Interval::closed(Q("-1"), Q("1")));
  CHECK(sq.verdict == SignVerdict::nonnegative_with_zeros);
  REQUIRE(sq.roots.size() == 1);
  CHECK(sq.roots[0].where.is_exact());
  CHECK(sq.roots[0].where.lo == Q("0"));
  CHECK(sq.roots[0].multiplicity == 2);

  CHECK(classify_on_interval(P("0:-1,2:-1"), Interval::open(Q("0"), Q("1"))).verdict ==
        SignVerdict::strictly_negative);
  CHECK(classify_on_interval(P("4:-1"), Interval::open(Q("-1"), Q("1"))).verdict ==
        SignVerdict::nonpositive_with_zeros);
  CHECK(classify_on_interval(Polynomial(), Interval::open(Q("0"), Q("1"))).verdict ==
        SignVerdict::identically_zero);
  // triple root at an irrational-free point inside: still a sign change
  CHECK(classify_on_interval(pow(P("0:-1/3,1:1"), 3), Interval::open(Q("0"), Q("1"))).verdict ==
        SignVerdict::sign_changing);
  // x^2 - 2 has irrational roots; (x^2 - 2)^2 is non-negative with two interior zeros
  const auto irr = classify_on_interval(pow(P("0:-2,2:1"), 2), Interval::open(Q("-2"), Q("2")));
  CHECK(irr.verdict == SignVerdict::nonnegative_with_zeros);
  CHECK(irr.roots.size() == 2);
}

TEST_CASE("bisect_root") {
  const auto exact = bisect_root(P("0:-1,3:1"), Q("-1"), Q("2"), pow10_inverse(12));
  CHECK(exact.is_exact());
  CHECK(exact.lo == Q("1"));

  // cubing oracle: lo^3 <= c <= hi^3 brackets the cube root of c
  auto check_cube_root = [](const Rational& c, const Rational& lo, const Rational& hi, const Rational& tol) {
    const Polynomial p = Polynomial({-c, Rational(0), Rational(0), Rational(1)});
    const auto e = bisect_root(p, lo, hi, tol);
    CHECK(e.width() <= tol);
    CHECK(e.lo * e.lo * e.lo <= c);
    CHECK(c <= e.hi * e.hi * e.hi);
    return e;
  };
  const auto t41 = check_cube_root(Q("3/4"), Q("-1"), Q("1"), pow10_inverse(3));
  CHECK(t41.contains(Q("9085/10000")));
  CHECK(t41.contains(Q("9086/10000")));
  const auto p41 = check_cube_root(Q("5/4"), Q("-1"), Q("2"), pow10_inverse(3));
  CHECK(p41.contains(Q("10772/10000")));

  const auto at_end = bisect_root(P("0:-8,3:1"), Q("-1"), Q("2"), pow10_inverse(12));
  CHECK(at_end.is_exact());
  CHECK(at_end.lo == Q("2"));

  // rational root that bisection midpoints never hit exactly
  const auto third = bisect_root(P("0:-1,1:3"), Q("0"), Q("1"), pow10_inverse(12));
  CHECK(third.is_exact());
  CHECK(third.lo == Q("1/3"));

  CHECK_THROWS_AS(bisect_root(P("0:1,2:1"), Q("-1"), Q("1"), pow10_inverse(3)), NoBracket);
  CHECK(default_node_tolerance() == pow10_inverse(12));
}

TEST_CASE("interval evaluation encloses the range") {
  Gen g(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = g.polynomial(static_cast<int>(g.integer(0, 5)));
    auto [lo, hi] = g.interval();
    const Enclosure range = evaluate_on(p, {lo, hi});
    for (int i = 0; i < 10; ++i) CHECK(range.contains(p(g.interior(lo, hi))));
  }
}

TEST_CASE("root-analysis properties") {
  Gen g(4242);
  for (int trial = 0; trial < 150; ++trial) {
    std::set<Rational> roots;
    const long count = g.integer(1, 5);
    while (static_cast<long>(roots.size()) < count) roots.insert(g.rational(8, 4));
    std::vector<Rational> with_multiplicity(roots.begin(), roots.end());
    if (g.integer(0, 1)) with_multiplicity.push_back(*roots.begin());
    const Polynomial p = from_roots(with_multiplicity) * g.nonzero_rational();

    Rational lo = g.rational(8, 3);
    Rational hi = lo + Rational(mpz_class(g.integer(1, 12)), mpz_class(g.integer(1, 3)));
    const Interval iv{lo, hi, g.integer(0, 1) == 1, g.integer(0, 1) == 1};
    const auto expected = std::count_if(roots.begin(), roots.end(), [&](auto& r) { return iv.contains(r); });
    CHECK(sturm_count(p, iv) == expected);

    // squares never change sign
    const auto sq = classify_on_interval(p * p, Interval::open(lo, hi));
    CHECK(sq.verdict != SignVerdict::sign_changing);
    const bool interior_root = std::any_of(roots.begin(), roots.end(), [&](auto& r) { return lo < r && r < hi; });
    if (interior_root) {
      const bool pos = (p * p).leading().sign() > 0;
      CHECK(sq.verdict == (pos ? SignVerdict::nonnegative_with_zeros : SignVerdict::nonpositive_with_zeros));
    }

    // bisection on a monotone bracket
    const Polynomial lin = from_roots({g.rational(8, 5)}) * Q("3");
    const Polynomial mono = lin * lin * lin + lin;  // strictly increasing
    const auto e = bisect_root(mono, Q("-10"), Q("10"), pow10_inverse(9));
    CHECK((e.is_exact() ? mono(e.lo).is_zero() : (mono(e.lo) * mono(e.hi)).sign() < 0));
    CHECK(e.width() <= pow10_inverse(9));
  }
}
