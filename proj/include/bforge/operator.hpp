#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bforge/basis.hpp"
#include "bforge/polynomial.hpp"
#include "bforge/roots.hpp"
#include "bforge/space.hpp"

namespace bforge {

/// A space together with the pair (f0, f1) an operator should fix.
struct OperatorProblem {
  MonomialSpace space;
  Polynomial f0;
  Polynomial f1;

  /// Numerator of (f1 / f0)': f1' f0 - f1 f0'.
  Polynomial ratio_numerator() const { return quotient_numerator(f1, f0); }
  Rational ratio_at_a() const { return f1(space.a()) / f0(space.a()); }
  Rational ratio_at_b() const { return f1(space.b()) / f0(space.b()); }
};

enum class RatioMonotonicity {
  strictly_increasing_ratio,         // (f1/f0)' > 0 on [a, b]
  increasing_with_critical_points,   // (f1/f0)' >= 0 with isolated zeros
  not_monotone,
};

std::string to_token(RatioMonotonicity m);

struct RatioCertificate {
  RatioMonotonicity verdict;
  /// Classification of f1' f0 - f1 f0' on the closed interval [a, b].
  SignClassification numerator;
  /// Set when (f1/f0)' vanishes at a or b.
  bool endpoint_critical = false;
};

/// Requires f0 > 0 on [a, b] (throws F0NotPositive otherwise).
RatioCertificate certify_monotone_ratio(const OperatorProblem& problem);

/// Checks the problem invariants: f0, f1 in the space (NotInSpace), f0 > 0 on
/// [a, b] (F0NotPositive), f1/f0 strictly increasing (RatioNotMonotone).
RatioCertificate validate_problem(const OperatorProblem& problem);

enum class Verdict { exists, no_nonneg_basis, beta_not_positive, node_out_of_range };
enum class NodeMonotonicity { strictly_increasing, non_decreasing, non_monotone };
enum class WSummary { all_positive, all_nonneg_some_zero, has_negative };

std::string to_token(Verdict v);
std::string to_token(NodeMonotonicity m);
std::string to_token(WSummary s);

/// Node ordering implied by the exact coefficient ratios.
NodeMonotonicity classify_ratios(const std::vector<Rational>& ratios);
WSummary summarize_w(const std::vector<Rational>& w);
/// The node class the sign pattern of w corresponds to.
NodeMonotonicity monotonicity_from_w(WSummary s);

struct WCoefficients {
  std::vector<Rational> values;
  WSummary summary;
};

/// Coordinates of (f1/f0)' in the derived Bernstein basis, computed on
/// numerators. Throws DerivedBasisUnavailable when the derived space lacks a
/// non-negative Bernstein basis.
WCoefficients w_coefficients(const OperatorProblem& problem);

struct ExistenceReport {
  explicit ExistenceReport(OperatorProblem p) : problem(std::move(p)) {}

  OperatorProblem problem;
  Verdict verdict = Verdict::no_nonneg_basis;
  /// Set when the space has a non-negative Bernstein basis.
  std::optional<BernsteinBasis> basis;
  /// Set when the space has no Bernstein basis at all.
  std::optional<NoBasisReport> basis_failure;
  std::vector<Rational> beta;
  std::vector<Rational> gamma;
  /// gamma[k] / beta[k]; empty unless every beta[k] > 0.
  std::vector<Rational> ratios;
  /// f1(a)/f0(a) <= ratios[k] <= f1(b)/f0(b), per k.
  std::vector<bool> in_range;
  std::optional<NodeMonotonicity> monotonicity;
  std::optional<WCoefficients> w;
  /// Ratio-ordering class equals the w-sign class; unset when w is unavailable.
  std::optional<bool> cross_check;
  std::vector<std::string> notes;
};

/// Full existence analysis. Outcomes are carried in the verdict; only a
/// problem that violates its invariants throws (see validate_problem).
ExistenceReport existence_report(const OperatorProblem& problem);

/// "t0 < t3 < t2 < t1 < t4" from exact ratio comparison ("=" for ties).
std::string node_order(const std::vector<Rational>& ratios);

/// Outcome of the two-unknown solve behind d/dx(p_k/f0) = c_k q_{k-1} + d_k q_k.
struct DeltaCheck {
  unsigned pivot;
  std::vector<Rational> delta;
  /// c_{k+1} delta_{k+1} - (w_k - delta_k d_k) for k = 0..n-1.
  std::vector<Rational> recurrence_residual;

  bool exact() const;
};

struct StructuralDiagnostics {
  BernsteinBasis basis;
  BernsteinBasis derived_basis;
  std::vector<Rational> beta;
  std::vector<Rational> gamma;
  std::vector<Rational> w;
  /// c[k] for k = 0..n with c[0] = 0.
  std::vector<Rational> c;
  /// d[k] for k = 0..n with d[n] = 0.
  std::vector<Rational> d;
  /// Per k: the identity holds exactly with the solved c_k, d_k.
  std::vector<bool> eqprec_ok;
  /// c_k and d_k recomputed from endpoint derivatives; must equal c and d.
  std::vector<Rational> c_from_endpoints;
  std::vector<Rational> d_from_endpoints;

  /// delta_j = gamma_j - (gamma_k0 / beta_k0) beta_j and its recurrence residuals.
  DeltaCheck delta(unsigned pivot) const;
  /// Every c_k > 0 (k >= 1) and every d_k < 0 (k < n).
  bool signs_ok() const;
};

/// Throws DerivedBasisUnavailable / NotNonNegative when either basis is
/// missing, IdentityViolation if the identity fails to hold.
StructuralDiagnostics structural_diagnostics(const OperatorProblem& problem);

struct OperatorSpec {
  BernsteinBasis basis;
  std::vector<RootEnclosure> nodes;
  /// alpha_k = beta_k / f0(t_k); exact (zero width) whenever the node is.
  std::vector<Enclosure> weights;
  Rational tolerance;
  std::vector<Rational> ratios;

  bool exact() const;
};

/// Nodes t_k solve f1 - r_k f0 = 0 on [a, b]. Throws OperatorDoesNotExist
/// unless the verdict is exists, ToleranceTooLoose when enclosures of nodes
/// with distinct ratios overlap.
OperatorSpec build_operator(const ExistenceReport& report, const Rational& tol);

/// sum_k samples[k] * alpha_k * p_k(x), as an enclosure (exact when weights are).
Enclosure evaluate_operator(const OperatorSpec& spec, const std::vector<Rational>& samples, const Rational& x);

/// The operator image as a polynomial; requires exact weights.
Polynomial operator_image(const OperatorSpec& spec, const std::vector<Rational>& samples);

/// Samples f at each node: exact nodes are used as is, otherwise the midpoint.
std::vector<Rational> sample_at_nodes(const OperatorSpec& spec, const Polynomial& f);

}  // namespace bforge
