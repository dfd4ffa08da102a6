#include "bforge/operator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bforge/errors.hpp"
#include "bforge/linear_system.hpp"

namespace bforge {

std::string to_token(RatioMonotonicity m) {
  switch (m) {
    case RatioMonotonicity::strictly_increasing_ratio: return "strictly-increasing-ratio";
    case RatioMonotonicity::increasing_with_critical_points: return "increasing-with-critical-points";
    case RatioMonotonicity::not_monotone: return "not-monotone";
  }
  return "unknown";
}

std::string to_token(Verdict v) {
  switch (v) {
    case Verdict::exists: return "exists";
    case Verdict::no_nonneg_basis: return "no-nonneg-basis";
    case Verdict::beta_not_positive: return "beta-not-positive";
    case Verdict::node_out_of_range: return "node-out-of-range";
  }
  return "unknown";
}

std::string to_token(NodeMonotonicity m) {
  switch (m) {
    case NodeMonotonicity::strictly_increasing: return "strictly-increasing";
    case NodeMonotonicity::non_decreasing: return "non-decreasing";
    case NodeMonotonicity::non_monotone: return "non-monotone";
  }
  return "unknown";
}

std::string to_token(WSummary s) {
  switch (s) {
    case WSummary::all_positive: return "all-positive";
    case WSummary::all_nonneg_some_zero: return "all-nonneg-some-zero";
    case WSummary::has_negative: return "has-negative";
  }
  return "unknown";
}

RatioCertificate certify_monotone_ratio(const OperatorProblem& problem) {
  const auto& s = problem.space;
  const auto f0_sign = classify_on_interval(problem.f0, Interval::closed(s.a(), s.b()));
  if (f0_sign.verdict != SignVerdict::strictly_positive)
    throw F0NotPositive("f0 is " + to_token(f0_sign.verdict) + " on [" + s.a().str() + ", " + s.b().str() + "]");

  const Polynomial n1 = problem.ratio_numerator();
  RatioCertificate cert{RatioMonotonicity::not_monotone,
                        classify_on_interval(n1, Interval::closed(s.a(), s.b())), false};
  switch (cert.numerator.verdict) {
    case SignVerdict::strictly_positive:
      cert.verdict = RatioMonotonicity::strictly_increasing_ratio;
      break;
    case SignVerdict::nonnegative_with_zeros:
      cert.verdict = RatioMonotonicity::increasing_with_critical_points;
      cert.endpoint_critical = n1(s.a()).is_zero() || n1(s.b()).is_zero();
      break;
    default:
      break;
  }
  return cert;
}

RatioCertificate validate_problem(const OperatorProblem& problem) {
  if (!problem.space.contains(problem.f0))
    throw NotInSpace("f0 = " + problem.f0.str() + " is not in " + problem.space.str());
  if (!problem.space.contains(problem.f1))
    throw NotInSpace("f1 = " + problem.f1.str() + " is not in " + problem.space.str());
  auto cert = certify_monotone_ratio(problem);
  if (cert.verdict == RatioMonotonicity::not_monotone)
    throw RatioNotMonotone("f1/f0 is not strictly increasing: (f1/f0)' numerator is " +
                           to_token(cert.numerator.verdict));
  return cert;
}

NodeMonotonicity classify_ratios(const std::vector<Rational>& ratios) {
  bool strict = true;
  for (std::size_t k = 0; k + 1 < ratios.size(); ++k) {
    if (ratios[k + 1] < ratios[k]) return NodeMonotonicity::non_monotone;
    if (ratios[k + 1] == ratios[k]) strict = false;
  }
  return strict ? NodeMonotonicity::strictly_increasing : NodeMonotonicity::non_decreasing;
}

WSummary summarize_w(const std::vector<Rational>& w) {
  bool zero = false;
  for (const auto& v : w) {
    if (v.sign() < 0) return WSummary::has_negative;
    if (v.is_zero()) zero = true;
  }
  return zero ? WSummary::all_nonneg_some_zero : WSummary::all_positive;
}

NodeMonotonicity monotonicity_from_w(WSummary s) {
  switch (s) {
    case WSummary::all_positive: return NodeMonotonicity::strictly_increasing;
    case WSummary::all_nonneg_some_zero: return NodeMonotonicity::non_decreasing;
    case WSummary::has_negative: return NodeMonotonicity::non_monotone;
  }
  return NodeMonotonicity::non_monotone;
}

namespace {

BernsteinBasis require_derived_basis(const OperatorProblem& problem) {
  if (problem.space.dimension() < 2)
    throw DerivedBasisUnavailable("a one-dimensional space has a zero-dimensional derived space");
  auto derived = derived_space(problem.space, problem.f0);
  if (auto* fail = std::get_if<NoBasisReport>(&derived))
    throw DerivedBasisUnavailable("derived space has no Bernstein basis (" + fail->failures.front().describe() + ")");
  auto& rep = std::get<DerivedSpaceRep>(derived);
  if (!rep.numerator_basis.is_nonnegative())
    throw DerivedBasisUnavailable("derived space Bernstein basis is signed");
  return rep.numerator_basis;
}

BernsteinBasis require_basis(const MonomialSpace& space) {
  auto result = bernstein_basis(space);
  if (auto* fail = std::get_if<NoBasisReport>(&result))
    throw NotNonNegative("space has no Bernstein basis (" + fail->failures.front().describe() + ")");
  auto& basis = std::get<BernsteinBasis>(result);
  if (!basis.is_nonnegative()) throw NotNonNegative("Bernstein basis of " + space.str() + " is signed");
  return preferred_scaling(basis);
}

}  // namespace

WCoefficients w_coefficients(const OperatorProblem& problem) {
  const BernsteinBasis q = require_derived_basis(problem);
  auto w = coordinates(problem.ratio_numerator(), q);
  const WSummary summary = summarize_w(w);
  return {std::move(w), summary};
}

ExistenceReport existence_report(const OperatorProblem& problem) {
  const RatioCertificate cert = validate_problem(problem);

  ExistenceReport rep(problem);
  if (cert.endpoint_critical)
    rep.notes.push_back("(f1/f0)' vanishes at an endpoint of [a, b]; strictly increasing nodes are impossible");

  auto basis_result = bernstein_basis(problem.space);
  if (auto* fail = std::get_if<NoBasisReport>(&basis_result)) {
    rep.verdict = Verdict::no_nonneg_basis;
    rep.basis_failure = *fail;
    return rep;
  }
  const auto& raw = std::get<BernsteinBasis>(basis_result);
  if (!raw.is_nonnegative()) {
    rep.verdict = Verdict::no_nonneg_basis;
    rep.notes.push_back("the Bernstein basis exists but is signed");
    return rep;
  }
  rep.basis = preferred_scaling(raw);
  rep.beta = coordinates(problem.f0, *rep.basis);
  rep.gamma = coordinates(problem.f1, *rep.basis);

  if (std::any_of(rep.beta.begin(), rep.beta.end(), [](const Rational& b) { return b.sign() <= 0; })) {
    rep.verdict = Verdict::beta_not_positive;
    return rep;
  }

  const Rational lo = problem.ratio_at_a();
  const Rational hi = problem.ratio_at_b();
  for (std::size_t k = 0; k < rep.beta.size(); ++k) {
    rep.ratios.push_back(rep.gamma[k] / rep.beta[k]);
    rep.in_range.push_back(lo <= rep.ratios.back() && rep.ratios.back() <= hi);
  }
  if (rep.ratios.front() != lo || rep.ratios.back() != hi)
    throw std::logic_error("endpoint ratios differ from f1/f0 at the interval ends");

  rep.monotonicity = classify_ratios(rep.ratios);
  try {
    rep.w = w_coefficients(problem);
    rep.cross_check = monotonicity_from_w(rep.w->summary) == *rep.monotonicity;
  } catch (const DerivedBasisUnavailable& e) {
    rep.notes.push_back(std::string("w coefficients unavailable: ") + e.what());
  }

  const bool all_in = std::all_of(rep.in_range.begin(), rep.in_range.end(), [](bool b) { return b; });
  rep.verdict = all_in ? Verdict::exists : Verdict::node_out_of_range;
  return rep;
}

std::string node_order(const std::vector<Rational>& ratios) {
  std::vector<std::size_t> idx(ratios.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto l, auto r) { return ratios[l] < ratios[r]; });
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ratios[idx[i - 1]] == ratios[idx[i]] ? " = " : " < ";
    out += "t" + std::to_string(idx[i]);
  }
  return out;
}

bool DeltaCheck::exact() const {
  return std::all_of(recurrence_residual.begin(), recurrence_residual.end(),
                     [](const Rational& r) { return r.is_zero(); }) &&
         delta[pivot].is_zero();
}

DeltaCheck StructuralDiagnostics::delta(unsigned pivot) const {
  if (pivot >= beta.size()) throw std::out_of_range("pivot beyond basis size");
  DeltaCheck out{pivot, {}, {}};
  const Rational r = gamma[pivot] / beta[pivot];
  for (std::size_t j = 0; j < beta.size(); ++j) out.delta.push_back(gamma[j] - r * beta[j]);
  for (std::size_t k = 0; k + 1 < beta.size(); ++k)
    out.recurrence_residual.push_back(c[k + 1] * out.delta[k + 1] - (w[k] - out.delta[k] * d[k]));
  return out;
}

bool StructuralDiagnostics::signs_ok() const {
  const std::size_t n = c.size() - 1;
  for (std::size_t k = 1; k <= n; ++k)
    if (c[k].sign() <= 0) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (d[k].sign() >= 0) return false;
  return true;
}

StructuralDiagnostics structural_diagnostics(const OperatorProblem& problem) {
  StructuralDiagnostics diag;
  diag.basis = require_basis(problem.space);
  diag.derived_basis = require_derived_basis(problem);
  diag.beta = coordinates(problem.f0, diag.basis);
  diag.gamma = coordinates(problem.f1, diag.basis);
  diag.w = coordinates(problem.ratio_numerator(), diag.derived_basis);

  const auto& p = diag.basis.elements;
  const auto& q = diag.derived_basis.elements;
  const std::size_t n = p.size() - 1;
  const Rational& a = problem.space.a();
  const Rational& b = problem.space.b();

  diag.c.assign(n + 1, Rational(0));
  diag.d.assign(n + 1, Rational(0));
  diag.c_from_endpoints.assign(n + 1, Rational(0));
  diag.d_from_endpoints.assign(n + 1, Rational(0));

  for (std::size_t k = 0; k <= n; ++k) {
    const Polynomial lhs = quotient_numerator(p[k], problem.f0);
    std::vector<const Polynomial*> cols;
    if (k >= 1) cols.push_back(&q[k - 1]);
    if (k < n) cols.push_back(&q[k]);

    std::size_t rows = lhs.coefficients().size();
    for (auto* c : cols) rows = std::max(rows, c->coefficients().size());
    Matrix m(rows, cols.size());
    std::vector<Rational> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = cols[j]->coeff(r);
      rhs[r] = lhs.coeff(r);
    }
    std::vector<Rational> x;
    try {
      x = *solve_linear({std::move(m), std::move(rhs)}).particular;
    } catch (const Inconsistent&) {
      throw IdentityViolation("d/dx(p_" + std::to_string(k) + "/f0) is not a combination of q_" +
                              std::to_string(k - 1) + " and q_" + std::to_string(k));
    }
    std::size_t j = 0;
    if (k >= 1) diag.c[k] = x[j++];
    if (k < n) diag.d[k] = x[j++];

    Polynomial recombined;
    if (k >= 1) recombined += q[k - 1] * diag.c[k];
    if (k < n) recombined += q[k] * diag.d[k];
    diag.eqprec_ok.push_back(recombined == lhs);

    const auto kk = static_cast<unsigned>(k);
    const auto mm = static_cast<unsigned>(n - k);
    if (k >= 1)
      diag.c_from_endpoints[k] =
          p[k].derivative_at(kk, a) * problem.f0(a) / q[k - 1].derivative_at(kk - 1, a);
    if (k < n)
      diag.d_from_endpoints[k] =
          p[k].derivative_at(mm, b) * problem.f0(b) / q[k].derivative_at(mm - 1, b);
  }
  return diag;
}

bool OperatorSpec::exact() const {
  return std::all_of(weights.begin(), weights.end(), [](const Enclosure& e) { return e.is_exact(); });
}

OperatorSpec build_operator(const ExistenceReport& report, const Rational& tol) {
  if (report.verdict != Verdict::exists)
    throw OperatorDoesNotExist("no operator: verdict is " + to_token(report.verdict));
  const auto& problem = report.problem;
  const Rational& a = problem.space.a();
  const Rational& b = problem.space.b();

  OperatorSpec spec{*report.basis, {}, {}, tol, report.ratios};
  for (std::size_t k = 0; k < report.ratios.size(); ++k) {
    const Polynomial g = problem.f1 - problem.f0 * report.ratios[k];
    RootEnclosure node;
    if (g.degree() == 1)
      node = Enclosure::exact(-g.coeff(0) / g.coeff(1));
    else
      node = bisect_root(g, a, b, tol);
    spec.nodes.push_back(node);

    const Enclosure f0_range = evaluate_on(problem.f0, node);
    if (f0_range.lo.sign() <= 0)
      throw ToleranceTooLoose("f0 enclosure at node " + std::to_string(k) + " is not positive");
    spec.weights.push_back({report.beta[k] / f0_range.hi, report.beta[k] / f0_range.lo});
  }

  for (std::size_t i = 0; i < spec.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < spec.nodes.size(); ++j)
      if (report.ratios[i] != report.ratios[j] && spec.nodes[i].overlaps(spec.nodes[j]))
        throw ToleranceTooLoose("enclosures of t" + std::to_string(i) + " and t" + std::to_string(j) +
                                " overlap at tolerance " + tol.str());
  return spec;
}

Enclosure evaluate_operator(const OperatorSpec& spec, const std::vector<Rational>& samples, const Rational& x) {
  if (samples.size() != spec.nodes.size())
    throw ArityMismatch("expected " + std::to_string(spec.nodes.size()) + " samples, got " +
                        std::to_string(samples.size()));
  Enclosure sum = Enclosure::exact(0);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Rational m = samples[k] * spec.basis.elements[k](x);
    const Rational lo = m * spec.weights[k].lo;
    const Rational hi = m * spec.weights[k].hi;
    sum.lo += std::min(lo, hi);
    sum.hi += std::max(lo, hi);
  }
  return sum;
}

Polynomial operator_image(const OperatorSpec& spec, const std::vector<Rational>& samples) {
  if (samples.size() != spec.nodes.size())
    throw ArityMismatch("expected " + std::to_string(spec.nodes.size()) + " samples, got " +
                        std::to_string(samples.size()));
  if (!spec.exact()) throw std::invalid_argument("operator image needs exact weights");
  Polynomial out;
  for (std::size_t k = 0; k < samples.size(); ++k)
    out += spec.basis.elements[k] * (samples[k] * spec.weights[k].lo);
  return out;
}

std::vector<Rational> sample_at_nodes(const OperatorSpec& spec, const Polynomial& f) {
  std::vector<Rational> out;
  out.reserve(spec.nodes.size());
  for (const auto& node : spec.nodes) out.push_back(f(node.is_exact() ? node.lo : node.mid()));
  return out;
}

}  // namespace bforge
