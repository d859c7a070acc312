// twistcalc command-line front end.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "twistcalc/chern.hpp"
#include "twistcalc/haar.hpp"
#include "twistcalc/oracle.hpp"
#include "twistcalc/parse.hpp"
#include "twistcalc/sphere.hpp"
#include "twistcalc/suites.hpp"
#include "twistcalc/tensorcalc.hpp"

namespace tc = twistcalc;
using nlohmann::json;

namespace {

struct Global {
  int dim = 5;
  int n = 2;
  std::uint64_t seed = 42;
  std::vector<int> moduli;
  bool json = false;
};

json complex_json(tc::Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(tc::Complex z) {
  std::ostringstream s;
  s.precision(15);
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

// Numeric value of an exact scalar at the first root choice of the oracle model.
tc::Complex numeric_value(const tc::ContextPtr& ctx, const tc::ExactScalar& s, const Global& g) {
  tc::OracleOptions opt;
  opt.moduli = g.moduli;
  return tc::make_models(ctx, opt).front().eval_scalar(s);
}

// Pure scalar part of an element, if it has no x or dx.
std::optional<tc::ExactScalar> as_scalar(const tc::Element& e) {
  if (e.is_zero()) return tc::ExactScalar{};
  if (e.size() == 1 && e.terms().begin()->first == tc::Monomial{}) return e.terms().begin()->second;
  return std::nullopt;
}

void emit(const Global& g, const std::string& exact, std::optional<tc::Complex> numeric, int degree,
          json extra = json::object()) {
  if (g.json) {
    json j{{"exact", exact}, {"numeric", numeric ? complex_json(*numeric) : json()}, {"degree", degree}};
    j.update(extra);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "exact:   " << exact << "\n";
  if (numeric) std::cout << "numeric: " << complex_text(*numeric) << "\n";
  std::cout << "degree:  " << degree << "\n";
  for (const auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << "\n";
}

int print_report(const tc::SuiteReport& r, const Global& g) {
  if (g.json) {
    json fails = json::array();
    for (const auto& f : r.failures)
      fails.push_back({{"name", f.name}, {"expression", f.expression}, {"expected", f.expected}, {"got", f.got}});
    std::cout << json{{"suite", r.suite},
                      {"cases", r.cases},
                      {"oracle_cases", r.oracle_cases},
                      {"failures", fails},
                      {"worst_oracle_magnitude", r.worst_oracle_magnitude},
                      {"wall_seconds", r.wall_seconds},
                      {"seed", r.seed}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "suite " << r.suite << ": " << r.cases << " exact cases, " << r.oracle_cases << " oracle cases, "
              << r.failures.size() << " failures, worst oracle magnitude " << r.worst_oracle_magnitude << ", "
              << r.wall_seconds << " s, seed " << r.seed << "\n";
    for (const auto& f : r.failures)
      std::cout << "  FAIL " << f.name << (f.expression.empty() ? "" : " [" + f.expression + "]")
                << (f.expected.empty() ? "" : "\n    expected: " + f.expected)
                << (f.got.empty() ? "" : "\n    got:      " + f.got) << "\n";
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus on twisted quantum planes and spheres"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--dim", g.dim, "ambient dimension D")->check(CLI::Range(1, tc::kMaxDim));
  app.add_option("--n", g.n, "instanton index n (sphere S^{2n})")->check(CLI::Range(1, 3));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--moduli", g.moduli, "root-of-unity moduli, one per parameter")->delimiter(',');
  app.add_flag("--json", g.json, "JSON output");

  auto* suite = app.add_subcommand("suite", "run an invariant suite");
  suite->require_subcommand(1);
  std::string suite_name;
  auto* suite_run = suite->add_subcommand("run", "run the named suite");
  suite_run->add_option("name", suite_name, "suite name")->required()->check(CLI::IsMember(tc::suite_names()));

  auto* charge = app.add_subcommand("charge", "Chern-Connes charge <e, tau>");
  bool numeric_check = false;
  charge->add_option("--n", g.n, "instanton index n")->check(CLI::Range(1, 2));
  charge->add_flag("--numeric-check", numeric_check, "also integrate Tr e (de)^{2n} in the numeric model");

  std::string expr;
  auto* haar = app.add_subcommand("haar", "Haar functional on the plane");
  haar->add_option("--dim", g.dim, "ambient dimension D")->check(CLI::Range(1, tc::kMaxDim));
  haar->add_option("--expr", expr, "function")->required();

  int sphere_n = 4;
  auto* hodge = app.add_subcommand("hodge", "Hodge star on the sphere");
  hodge->add_option("--sphere", sphere_n, "sphere dimension N")->check(CLI::Range(1, tc::kMaxDim - 1));
  hodge->add_option("--expr", expr, "k-form on the ambient plane")->required();

  auto* integ = app.add_subcommand("integrate", "integral over the sphere");
  integ->add_option("--sphere", sphere_n, "sphere dimension N")->check(CLI::Range(1, tc::kMaxDim - 1));
  integ->add_option("--expr", expr, "N-form on the ambient plane")->required();

  bool on_sphere = false;
  auto* oracle = app.add_subcommand("oracle", "test an element for vanishing in the numeric model");
  oracle->add_option("--dim", g.dim, "ambient dimension D")->check(CLI::Range(1, tc::kMaxDim));
  oracle->add_option("--moduli", g.moduli, "root-of-unity moduli")->delimiter(',');
  oracle->add_option("--seed", g.seed, "random seed");
  oracle->add_option("--expr", expr, "element")->required();
  oracle->add_flag("--sphere", on_sphere, "compare as sphere classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*suite_run) {
      tc::SuiteOptions opt;
      opt.dim = g.dim;
      opt.n = g.n;
      opt.seed = g.seed;
      opt.moduli = g.moduli;
      return print_report(tc::run_suite(suite_name, opt), g);
    }
    if (*charge) {
      const auto ctx = tc::Context::make(2 * g.n + 1);
      const tc::ExactScalar value = tc::charge(g.n);
      std::optional<tc::Complex> numeric;
      if (numeric_check) {
        tc::FormMatrix e = tc::projector(g.n);
        const tc::FormMatrix de = e.d();
        for (int k = 0; k < 2 * g.n; ++k) e = e * de;
        tc::OracleOptions opt;
        opt.moduli = g.moduli;
        const tc::Complex integral = tc::numeric_integrate(tc::make_models(ctx, opt).front(), e.trace());
        numeric = integral * numeric_value(ctx, tc::tau_normalization(2 * g.n), g) /
                  [&] {
                    double f = 1;
                    for (int k = 2; k <= g.n; ++k) f *= k;
                    return f;
                  }();
      }
      emit(g, tc::to_string(*ctx, value), numeric, 0);
      return value == tc::ExactScalar(1) ? 0 : 1;
    }
    if (*haar) {
      const auto ctx = tc::Context::make(g.dim);
      const tc::ExactScalar h = tc::haar_plane(tc::parse_expr(ctx, expr));
      emit(g, tc::to_string(*ctx, h), numeric_value(ctx, h, g), 0);
      return 0;
    }
    if (*hodge) {
      const auto ctx = tc::sphere_context(sphere_n);
      const tc::SphereForm w(tc::parse_expr(ctx, expr));
      const tc::SphereForm out = tc::hodge_sphere(w);
      const auto s = as_scalar(out.rep());
      emit(g, tc::to_string(out.rep()), s ? std::optional(numeric_value(ctx, *s, g)) : std::nullopt,
           out.rep().is_zero() ? sphere_n - w.degree() : out.degree());
      return 0;
    }
    if (*integ) {
      const auto ctx = tc::sphere_context(sphere_n);
      const tc::SphereForm w(tc::parse_expr(ctx, expr));
      const tc::ExactScalar v = tc::integrate(w);
      emit(g, tc::to_string(*ctx, v), numeric_value(ctx, v, g), w.rep().is_zero() ? sphere_n : w.degree());
      return 0;
    }
    if (*oracle) {
      const auto ctx = tc::Context::make(g.dim);
      const tc::Element f = tc::parse_expr(ctx, expr);
      tc::OracleOptions opt;
      opt.moduli = g.moduli;
      opt.seed = g.seed;
      const tc::IdentityReport r = tc::check_identity(f, on_sphere ? tc::Space::Sphere : tc::Space::Plane, opt);
      const auto s = as_scalar(f);
      emit(g, tc::to_string(f), s ? std::optional(numeric_value(ctx, *s, g)) : std::nullopt, f.form_degree(),
           json{{"vanishes", r.pass},
                {"max_magnitude", r.max_magnitude},
                {"evaluations", r.evaluations},
                {"seed", r.seed}});
      return r.pass ? 0 : 1;
    }
  } catch (const tc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
