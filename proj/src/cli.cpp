#include "bforge/cli.hpp"

#include <fnmatch.h>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bforge/corpus.hpp"
#include "bforge/errors.hpp"
#include "bforge/json_io.hpp"

namespace bforge {

namespace {

int precision_from_env() {
  const char* raw = std::getenv("BERNSTEIN_FORGE_PRECISION");
  if (!raw || !*raw) return 12;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 1000)
    throw ParseError("BERNSTEIN_FORGE_PRECISION", std::string("expected an integer in [0, 1000], got \"") + raw + "\"");
  return static_cast<int>(v);
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ParseError(field, "cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A descriptor argument is inline JSON when it starts with '{', otherwise a path.
Json load_descriptor(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, "descriptor");
  return parse_json_text(read_file(arg, "descriptor"), "descriptor");
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("--json", "cannot write \"" + path + "\"");
  out << dump(j);
}

std::string enclosure_text(const Enclosure& e, int digits) {
  if (e.is_exact()) return e.lo.str();
  return "[" + e.lo.str() + ", " + e.hi.str() + "] ~ " + e.mid().to_decimal(digits);
}

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s;
}

void print_basis(std::ostream& out, const BernsteinBasis& basis) {
  out << "grade: " << to_token(basis.grade) << " (" << to_token(basis.scaling) << ")\n";
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    out << "  p" << k << " = " << basis.elements[k].pretty() << "\n"
        << "       zeros (" << basis.zero_orders[k].first << ", " << basis.zero_orders[k].second << "), "
        << to_token(basis.classification[k].verdict) << "\n";
  }
}

void print_failures(std::ostream& out, const NoBasisReport& report) {
  out << "no Bernstein basis\n";
  for (const auto& f : report.failures) out << "  " << f.describe() << "\n";
}

int cmd_basis(const std::string& descriptor, const std::string& json_path, std::ostream& out) {
  const auto space = space_from_json(load_descriptor(descriptor));
  const auto result = bernstein_basis(space);
  out << "space: " << space.str() << "\n";
  write_json(json_path, basis_report_json(space, result));
  if (const auto* basis = std::get_if<BernsteinBasis>(&result)) {
    print_basis(out, preferred_scaling(*basis));
    return kExitOk;
  }
  print_failures(out, std::get<NoBasisReport>(result));
  return kExitNoBasis;
}

void print_report(std::ostream& out, const ExistenceReport& rep) {
  const auto& p = rep.problem;
  out << "space: " << p.space.str() << "\n"
      << "f0 = " << p.f0.pretty() << ", f1 = " << p.f1.pretty() << "\n"
      << "verdict: " << to_token(rep.verdict) << "\n";
  if (rep.basis_failure) print_failures(out, *rep.basis_failure);
  if (!rep.gamma.empty()) {
    out << "  k  beta  gamma  ratio  in range\n";
    for (std::size_t k = 0; k < rep.gamma.size(); ++k) {
      out << "  " << k << "  " << rep.beta[k].str() << "  " << rep.gamma[k].str();
      if (k < rep.ratios.size()) out << "  " << rep.ratios[k].str() << "  " << (rep.in_range[k] ? "yes" : "no");
      out << "\n";
    }
    for (std::size_t k = 0; k < rep.gamma.size(); ++k)
      out << "gamma_" << p.space.order() << "," << k << " = " << rep.gamma[k].str() << "\n";
  }
  if (rep.monotonicity) out << "monotonicity: " << to_token(*rep.monotonicity) << "\n";
  if (!rep.ratios.empty()) out << "node order: " << node_order(rep.ratios) << "\n";
  if (rep.w) out << "w: " << join(rep.w->values) << " (" << to_token(rep.w->summary) << ")\n";
  if (rep.cross_check) out << "cross-check: " << (*rep.cross_check ? "agrees" : "DISAGREES") << "\n";
  for (const auto& note : rep.notes) out << "note: " << note << "\n";
}

int cmd_exists(const std::string& descriptor, const std::string& json_path, std::ostream& out) {
  const auto problem = problem_from_json(load_descriptor(descriptor));
  const auto rep = existence_report(problem);
  write_json(json_path, to_json(rep));
  print_report(out, rep);
  return rep.verdict == Verdict::exists ? kExitOk : kExitNoOperator;
}

void write_samples(std::ostream& out, const OperatorSpec& spec, int count, int digits) {
  const std::size_t n = spec.basis.order();
  out << "x";
  for (std::size_t k = 0; k <= n; ++k) out << ",p_" << n << "_" << k;
  out << "\n";
  const Rational& a = spec.basis.a;
  const Rational& b = spec.basis.b;
  for (int i = 0; i < count; ++i) {
    const Rational x = count == 1 ? a : a + (b - a) * Rational(i, count - 1);
    out << x.to_decimal(digits);
    for (const auto& e : spec.basis.elements) out << "," << e(x).to_decimal(digits);
    out << "\n";
  }
}

int cmd_operator(const std::string& descriptor, const std::string& tol_text, int samples,
                 const std::string& json_path, std::ostream& out) {
  const auto problem = problem_from_json(load_descriptor(descriptor));
  const Rational tol = tol_text.empty() ? default_node_tolerance() : Rational::parse(tol_text, "--tol");
  if (tol.sign() <= 0) throw ParseError("--tol", "tolerance must be positive");
  const int digits = precision_from_env();
  const auto rep = existence_report(problem);
  if (rep.verdict != Verdict::exists) {
    print_report(out, rep);
    return kExitNoOperator;
  }
  const auto spec = build_operator(rep, tol);
  write_json(json_path, to_json(spec));
  if (samples > 0) {
    write_samples(out, spec, samples, digits);
    return kExitOk;
  }
  out << "space: " << problem.space.str() << "\n"
      << "f0 = " << problem.f0.pretty() << ", f1 = " << problem.f1.pretty() << "\n"
      << "tolerance: " << tol.str() << "\n"
      << "nodes:\n";
  for (std::size_t k = 0; k < spec.nodes.size(); ++k)
    out << "  t" << k << " = " << enclosure_text(spec.nodes[k], digits) << "\n";
  out << "weights:\n";
  for (std::size_t k = 0; k < spec.weights.size(); ++k)
    out << "  alpha" << k << " = " << enclosure_text(spec.weights[k], digits) << "\n";
  out << "node order: " << node_order(spec.ratios) << "\n";
  return kExitOk;
}

int cmd_corpus(const std::optional<std::string>& filter, const std::string& cases_path, bool dump_cases,
               const std::string& json_path, std::ostream& out) {
  const auto cases = cases_path.empty() ? builtin_corpus()
                                        : corpus_from_json(parse_json_text(read_file(cases_path, "--cases"), "--cases"));
  if (dump_cases) {
    out << dump(corpus_to_json(cases));
    return kExitOk;
  }
  std::size_t run = 0;
  std::size_t failed = 0;
  Json summary = Json::array();
  for (const auto& c : cases) {
    if (filter && fnmatch(filter->c_str(), c.name.c_str(), 0) != 0) continue;
    ++run;
    const auto outcome = check_case(c);
    Json j;
    j["name"] = c.name;
    j["tag"] = c.tag;
    j["passed"] = outcome.passed;
    j["field"] = outcome.field;
    j["detail"] = outcome.detail;
    summary.push_back(std::move(j));
    if (outcome.passed) {
      out << "PASS " << c.name << " [" << c.tag << "]\n";
    } else {
      ++failed;
      out << "FAIL " << c.name << " [" << c.tag << "] field " << outcome.field << ": " << outcome.detail << "\n";
    }
  }
  write_json(json_path, summary);
  if (run == 0) {
    out << "0 cases matched filter \"" << filter.value_or("") << "\"; nothing to run\n";
    return kExitOk;
  }
  out << run << " cases, " << run - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCorpusMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernstein bases and generalized Bernstein operators", "bforge"};
  app.require_subcommand(1);

  std::string descriptor;
  std::string json_path;
  std::string tol;
  int samples = 0;
  std::string filter;
  std::string cases_path;
  bool dump_cases = false;

  auto* basis = app.add_subcommand("basis", "Bernstein basis of a monomial span");
  basis->add_option("descriptor", descriptor, "space descriptor: JSON file or inline JSON")->required();
  basis->add_option("--json", json_path, "write the report as JSON");

  auto* exists = app.add_subcommand("exists", "decide whether the operator exists");
  exists->add_option("descriptor", descriptor, "problem descriptor: JSON file or inline JSON")->required();
  exists->add_option("--json", json_path, "write the report as JSON");

  auto* op = app.add_subcommand("operator", "nodes and weights of the operator");
  op->add_option("descriptor", descriptor, "problem descriptor: JSON file or inline JSON")->required();
  op->add_option("--tol", tol, "node enclosure width as an exact rational (default 1/10^12)");
  op->add_option("--samples", samples, "print a CSV of the basis at N equispaced points")->check(CLI::PositiveNumber);
  op->add_option("--json", json_path, "write the operator as JSON");

  auto* corpus = app.add_subcommand("corpus", "check the built-in golden cases");
  auto* filter_opt = corpus->add_option("--filter", filter, "only cases whose name matches this glob");
  corpus->add_option("--cases", cases_path, "read cases from a JSON file instead");
  corpus->add_flag("--dump", dump_cases, "print the cases as JSON and exit");
  corpus->add_option("--json", json_path, "write per-case results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (*basis) return cmd_basis(descriptor, json_path, out);
    if (*exists) return cmd_exists(descriptor, json_path, out);
    if (*op) return cmd_operator(descriptor, tol, samples, json_path, out);
    return cmd_corpus(filter_opt->count() ? std::optional<std::string>(filter) : std::nullopt, cases_path, dump_cases, json_path, out);
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const F0NotPositive& e) {
    err << "error: f0: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const RatioNotMonotone& e) {
    err << "error: f1: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const NotInSpace& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ToleranceTooLoose& e) {
    err << "error: --tol: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace bforge
