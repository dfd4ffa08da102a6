#include <algorithm>

#include "doctest.h"

#include "bforge/errors.hpp"
#include "bforge/operator.hpp"
#include "test_support.hpp"

using namespace bforge;
using namespace bforge::testing;

namespace {

OperatorProblem problem(std::vector<unsigned> exps, const char* a, const char* b, const char* f0, const char* f1) {
  return {MonomialSpace::build(std::move(exps), Q(a), Q(b)), P(f0), P(f1)};
}

OperatorProblem polys(unsigned n, const char* a, const char* b, const char* f0, const char* f1) {
  return {MonomialSpace::polynomials(n, Q(a), Q(b)), P(f0), P(f1)};
}

// Plain Gaussian elimination on a square system; independent of solve_linear.
std::vector<Rational> gauss(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (m[piv][c].is_zero()) ++piv;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

// Coordinates of h in the classical basis of degree n on [a, b], by collocation.
std::vector<Rational> classical_coordinates(const Polynomial& h, unsigned n, const Rational& a, const Rational& b) {
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  std::vector<Rational> rhs(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    const Rational x = a + (b - a) * Rational(mpz_class(i), mpz_class(n));
    for (unsigned k = 0; k <= n; ++k) m[i][k] = eval_by_powers(classical_bernstein(n, k, a, b), x);
    rhs[i] = eval_by_powers(h, x);
  }
  return gauss(std::move(m), std::move(rhs));
}

// Distance from v to an enclosure (zero when contained).
Rational distance(const Enclosure& e, const Rational& v) {
  if (v < e.lo) return e.lo - v;
  if (v > e.hi) return v - e.hi;
  return Rational(0);
}

// |K f - f| <= L * tol / 2 * sum_k alpha_k p_k(x) when the samples come from node midpoints.
void check_reproduction(const OperatorSpec& spec, const Polynomial& f, const Rational& a, const Rational& b) {
  const Enclosure slope = evaluate_on(f.derivative(), {a, b});
  const Rational lipschitz = std::max(slope.lo.abs(), slope.hi.abs());
  const auto samples = sample_at_nodes(spec, f);
  for (int i = 0; i <= 20; ++i) {
    const Rational x = a + (b - a) * Rational(i, 20);
    Rational mass;
    for (std::size_t k = 0; k < spec.nodes.size(); ++k) mass += spec.weights[k].hi * spec.basis.elements[k](x);
    const Rational bound = lipschitz * spec.tolerance / Rational(2) * mass;
    CHECK(distance(evaluate_operator(spec, samples, x), f(x)) <= bound);
  }
}

}  // namespace

TEST_CASE("certify_monotone_ratio") {
  CHECK(certify_monotone_ratio(polys(2, "0", "1", "0:1", "1:1")).verdict ==
        RatioMonotonicity::strictly_increasing_ratio);
  const auto cubic = certify_monotone_ratio(polys(3, "-1", "1", "0:1", "3:1"));
  CHECK(cubic.verdict == RatioMonotonicity::increasing_with_critical_points);
  CHECK(!cubic.endpoint_critical);
  const auto at_end = certify_monotone_ratio(polys(2, "0", "1", "0:1", "2:1"));
  CHECK(at_end.verdict == RatioMonotonicity::increasing_with_critical_points);
  CHECK(at_end.endpoint_critical);
  CHECK(certify_monotone_ratio(polys(2, "-1", "1", "0:1", "2:1")).verdict == RatioMonotonicity::not_monotone);
  // (x / (1 + x))' = 1 / (1 + x)^2
  CHECK(certify_monotone_ratio(polys(2, "0", "1", "0:1,1:1", "1:1")).verdict ==
        RatioMonotonicity::strictly_increasing_ratio);
  CHECK_THROWS_AS(certify_monotone_ratio(polys(2, "-1", "1", "1:1", "2:1")), F0NotPositive);

  CHECK_THROWS_AS(validate_problem(polys(2, "-1", "1", "0:1", "2:1")), RatioNotMonotone);
  CHECK_THROWS_AS(validate_problem(polys(2, "-1", "1", "0:1", "3:1")), NotInSpace);
  CHECK_THROWS_AS(validate_problem(problem({0, 3}, "-1", "1", "0:1", "1:1")), NotInSpace);
}

TEST_CASE("existence_report") {
  SUBCASE("span{1, x^3} on [-1, 1]") {
    const auto rep = existence_report(problem({0, 3}, "-1", "1", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.ratios == Qs({"-1", "1"}));
    CHECK(*rep.monotonicity == NodeMonotonicity::strictly_increasing);
  }
  SUBCASE("P_3 on [-1, 2] puts a node left of a") {
    const auto rep = existence_report(polys(3, "-1", "2", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::node_out_of_range);
    CHECK(rep.beta == Qs({"1", "1", "1", "1"}));
    CHECK(rep.ratios == Qs({"-1", "2", "-4", "8"}));
    CHECK(rep.in_range == std::vector<bool>{true, true, false, true});
  }
  SUBCASE("P_3 on [-1, 1]") {
    const auto rep = existence_report(polys(3, "-1", "1", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.ratios == Qs({"-1", "1", "-1", "1"}));
    CHECK(*rep.monotonicity == NodeMonotonicity::non_monotone);
  }
  SUBCASE("P_4 on [-1, 2]") {
    const auto rep = existence_report(polys(4, "-1", "2", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.ratios == Qs({"-1", "5/4", "-1", "-1", "8"}));
    CHECK(*rep.monotonicity == NodeMonotonicity::non_monotone);
    CHECK(node_order(rep.ratios) == "t0 = t2 = t3 < t1 < t4");
  }
  SUBCASE("span{1,x,x^2,x^3,x^6} on [-1, 1]") {
    const auto rep = existence_report(problem({0, 1, 2, 3, 6}, "-1", "1", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.gamma == Qs({"-1", "3/4", "0", "-3/4", "1"}));
    CHECK(node_order(rep.ratios) == "t0 < t3 < t2 < t1 < t4");
    CHECK(*rep.monotonicity == NodeMonotonicity::non_monotone);
  }
  SUBCASE("span{1,x,x^2,x^3,x^6} on [-1, 2]") {
    const auto rep = existence_report(problem({0, 1, 2, 3, 6}, "-1", "2", "0:1", "3:1"));
    CHECK(rep.verdict == Verdict::node_out_of_range);
    CHECK(rep.gamma[2] == Q("-16/7"));
    CHECK(rep.ratios[2] < Q("-1"));
  }
  SUBCASE("critical point of the ratio at an endpoint") {
    const auto rep = existence_report(polys(2, "0", "1", "0:1", "2:1"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.ratios == Qs({"0", "0", "1"}));
    CHECK(*rep.monotonicity == NodeMonotonicity::non_decreasing);
    CHECK(!rep.notes.empty());
  }
  SUBCASE("signed basis") {
    const auto rep = existence_report(problem({0, 1, 3}, "-1", "1", "0:1", "1:1"));
    CHECK(rep.verdict == Verdict::no_nonneg_basis);
    CHECK(rep.basis_failure == std::nullopt);
    CHECK(!rep.notes.empty());
  }
  SUBCASE("no basis at all") {
    const auto rep = existence_report(problem({0, 1, 3}, "-1", "2", "0:1", "1:1"));
    CHECK(rep.verdict == Verdict::no_nonneg_basis);
    REQUIRE(rep.basis_failure);
    CHECK(rep.basis_failure->at(2)->kind == BasisFailureKind::forced_extra_zero);
  }
  SUBCASE("non-monotone node ratios with an existing operator") {
    const auto rep = existence_report(polys(3, "0", "1", "0:1", "1:3/8,2:-1/2,3:1/3"));
    CHECK(rep.verdict == Verdict::exists);
    CHECK(rep.gamma == Qs({"0", "1/8", "1/12", "5/24"}));
    CHECK(*rep.monotonicity == NodeMonotonicity::non_monotone);
    REQUIRE(rep.w);
    CHECK(rep.w->values == Qs({"3/8", "-1/8", "3/8"}));
    CHECK(rep.w->summary == WSummary::has_negative);
    CHECK(*rep.cross_check);
  }
}

TEST_CASE("ratio and w helpers") {
  CHECK(classify_ratios(Qs({"0", "1", "2"})) == NodeMonotonicity::strictly_increasing);
  CHECK(classify_ratios(Qs({"0", "1", "1"})) == NodeMonotonicity::non_decreasing);
  CHECK(classify_ratios(Qs({"0", "2", "1"})) == NodeMonotonicity::non_monotone);
  CHECK(summarize_w(Qs({"1", "2"})) == WSummary::all_positive);
  CHECK(summarize_w(Qs({"1", "0"})) == WSummary::all_nonneg_some_zero);
  CHECK(summarize_w(Qs({"1", "-1"})) == WSummary::has_negative);
  CHECK(monotonicity_from_w(WSummary::all_positive) == NodeMonotonicity::strictly_increasing);
  CHECK(monotonicity_from_w(WSummary::all_nonneg_some_zero) == NodeMonotonicity::non_decreasing);
  CHECK(monotonicity_from_w(WSummary::has_negative) == NodeMonotonicity::non_monotone);
}

TEST_CASE("w_coefficients") {
  const auto cubic = w_coefficients(polys(3, "-1", "1", "0:1", "3:1"));
  CHECK(cubic.values == Qs({"3", "-3", "3"}));
  CHECK(cubic.values == classical_coordinates(P("2:3"), 2, Q("-1"), Q("1")));

  const auto f1 = P("1:3/8,2:-1/2,3:1/3");
  CHECK(w_coefficients(polys(3, "0", "1", "0:1", "1:3/8,2:-1/2,3:1/3")).values ==
        classical_coordinates(f1.derivative(), 2, Q("0"), Q("1")));

  for (unsigned n = 1; n <= 5; ++n) {
    const auto w = w_coefficients({MonomialSpace::polynomials(n, Q("-2"), Q("3")), P("0:1"), P("1:1")});
    CHECK(w.summary == WSummary::all_positive);
  }
}

TEST_CASE("structural_diagnostics") {
  const auto p1 = structural_diagnostics(polys(1, "0", "1", "0:1", "1:1"));
  CHECK(p1.c == Qs({"0", "1"}));
  CHECK(p1.d == Qs({"-1", "0"}));

  const auto p2 = structural_diagnostics(polys(2, "0", "1", "0:1", "1:1"));
  CHECK(p2.c == Qs({"0", "2", "2"}));
  CHECK(p2.d == Qs({"-2", "-2", "0"}));
  CHECK(p2.c_from_endpoints == p2.c);
  CHECK(p2.d_from_endpoints == p2.d);
  CHECK(p2.signs_ok());
  CHECK(std::all_of(p2.eqprec_ok.begin(), p2.eqprec_ok.end(), [](bool b) { return b; }));

  const auto e4 = structural_diagnostics(problem({0, 1, 2, 3, 6}, "-1", "1", "0:1", "3:1"));
  CHECK(e4.c_from_endpoints == e4.c);
  CHECK(e4.d_from_endpoints == e4.d);
  CHECK(e4.signs_ok());
  for (unsigned pivot = 0; pivot <= 4; ++pivot) CHECK(e4.delta(pivot).exact());

  CHECK_THROWS_AS(structural_diagnostics(problem({0, 1, 3}, "-1", "1", "0:1", "1:1")), NotNonNegative);
}

TEST_CASE("build_operator") {
  SUBCASE("classical nodes are equispaced") {
    for (unsigned n = 1; n <= 5; ++n) {
      const auto rep = existence_report({MonomialSpace::polynomials(n, Q("-1"), Q("2")), P("0:1"), P("1:1")});
      const auto spec = build_operator(rep, default_node_tolerance());
      CHECK(spec.exact());
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(spec.nodes[k].lo == Q("-1") + Rational(3 * static_cast<long>(k), static_cast<long>(n)));
        CHECK(spec.weights[k].lo == Q("1"));
      }
    }
  }
  SUBCASE("cubic nodes on P_3[-1, 1]") {
    const auto spec = build_operator(existence_report(polys(3, "-1", "1", "0:1", "3:1")), default_node_tolerance());
    REQUIRE(spec.nodes.size() == 4);
    const auto expected = Qs({"-1", "1", "-1", "1"});
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(spec.nodes[k].is_exact());
      CHECK(spec.nodes[k].lo == expected[k]);
    }
    // x^2 samples to all ones, and x^5 samples like x^3
    CHECK(operator_image(spec, sample_at_nodes(spec, P("2:1"))) == P("0:1"));
    CHECK(operator_image(spec, sample_at_nodes(spec, P("5:1"))) == P("3:1"));
    CHECK_THROWS_AS(evaluate_operator(spec, Qs({"1", "2"}), Q("0")), ArityMismatch);
  }
  SUBCASE("span{1, x^3} reproduces x^3") {
    const auto spec = build_operator(existence_report(problem({0, 3}, "-1", "1", "0:1", "3:1")),
                                     default_node_tolerance());
    CHECK(operator_image(spec, sample_at_nodes(spec, P("3:1"))) == P("3:1"));
    const Enclosure at_half = evaluate_operator(spec, sample_at_nodes(spec, P("3:1")), Q("1/2"));
    CHECK(at_half.is_exact());
    CHECK(at_half.lo == Q("1/8"));
  }
  SUBCASE("irrational nodes on span{1,x,x^2,x^3,x^6}") {
    const auto rep = existence_report(problem({0, 1, 2, 3, 6}, "-1", "1", "0:1", "3:1"));
    const auto spec = build_operator(rep, pow10_inverse(12));
    CHECK(spec.exact());  // f0 = 1 keeps weights exact
    CHECK(!spec.nodes[1].is_exact());
    for (const auto& t : spec.nodes) CHECK(t.width() <= pow10_inverse(12));
    // t1 and t3 are the cube roots of 3/4 and -3/4
    CHECK(spec.nodes[1].lo * spec.nodes[1].lo * spec.nodes[1].lo <= Q("3/4"));
    CHECK(Q("3/4") <= spec.nodes[1].hi * spec.nodes[1].hi * spec.nodes[1].hi);
    CHECK(spec.nodes[3].lo * spec.nodes[3].lo * spec.nodes[3].lo <= Q("-3/4"));
    check_reproduction(spec, P("0:1"), Q("-1"), Q("1"));
    check_reproduction(spec, P("3:1"), Q("-1"), Q("1"));
    CHECK_THROWS_AS(build_operator(rep, Q("1")), ToleranceTooLoose);
  }
  SUBCASE("no operator") {
    CHECK_THROWS_AS(build_operator(existence_report(polys(3, "-1", "2", "0:1", "3:1")), default_node_tolerance()),
                    OperatorDoesNotExist);
  }
}

TEST_CASE("operator properties with non-constant f0") {
  Gen g(31337);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<unsigned>(g.integer(2, 4));
    auto [a, b] = g.interval();
    // f0 = c + e (x - a) with c > 0 and |e| (b - a) < c keeps f0 positive on [a, b]
    const Rational c = Rational(mpz_class(g.integer(1, 6)));
    const Rational e = c / (b - a) * Rational(mpz_class(g.integer(-3, 3)), mpz_class(4));
    const Polynomial f0({c - e * a, e});
    const Polynomial f1 = f0 * Polynomial({Rational(0), Rational(1)}) + Polynomial::constant(g.rational());
    const OperatorProblem prob{MonomialSpace::polynomials(n, a, b), f0, f1};
    try {
      validate_problem(prob);
    } catch (const RatioNotMonotone&) {
      continue;
    }

    const auto rep = existence_report(prob);
    if (rep.cross_check) CHECK(*rep.cross_check);
    if (rep.verdict != Verdict::exists) continue;
    ++built;
    const auto spec = build_operator(rep, pow10_inverse(10));
    check_reproduction(spec, f0, a, b);
    check_reproduction(spec, f1, a, b);
  }
  CHECK(built >= 10);
}
