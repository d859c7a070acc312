#pragma once

// Identity families shared by the suite runner and the acceptance binary.
// Each family records exact cases in a CaseLog; when an oracle is attached,
// every identity is also exported to the numeric torus model.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twistcalc/ncalg.hpp"
#include "twistcalc/oracle.hpp"

namespace twistcalc {

struct CaseFailure {
  std::string name;
  std::string expression;
  std::string expected;
  std::string got;
};

class CaseLog {
 public:
  CaseLog() = default;
  explicit CaseLog(OracleOptions oracle) : oracle_(std::move(oracle)) {}

  bool oracle_enabled() const { return oracle_.has_value(); }
  const OracleOptions& oracle_options() const { return *oracle_; }

  void check(bool ok, const std::string& name, const std::string& expression = {},
             const std::string& expected = {}, const std::string& got = {});
  /// got == expected as elements; exported to the oracle in the given space.
  void element_equal(const std::string& name, const Element& got, const Element& expected,
                     Space space = Space::Plane);
  /// got == expected as sphere classes (J membership of the difference).
  void sphere_equal(const std::string& name, const Element& got, const Element& expected);
  void scalar_equal(const std::string& name, const Context& ctx, const ExactScalar& got,
                    const ExactScalar& expected);
  /// Numeric-only case, counted with the oracle results.
  void oracle_case(const std::string& name, double magnitude, double tolerance);

  int cases() const { return cases_; }
  /// Distinct names of every exact case recorded so far.
  const std::set<std::string>& case_names() const { return names_; }
  int oracle_cases() const { return oracle_cases_; }
  const std::vector<CaseFailure>& failures() const { return failures_; }
  const std::vector<CaseFailure>& oracle_failures() const { return oracle_failures_; }
  double worst_oracle_magnitude() const { return worst_; }

 private:
  void export_identity(const std::string& name, const Element& diff, Space space);

  std::optional<OracleOptions> oracle_;
  int cases_ = 0;
  int oracle_cases_ = 0;
  double worst_ = 0.0;
  std::vector<CaseFailure> failures_;
  std::vector<CaseFailure> oracle_failures_;
  std::set<std::string> names_;
};

/// Random test data with small integer coefficients and phases in {q^-1, 1, q}.
class RandomElements {
 public:
  RandomElements(ContextPtr ctx, std::uint64_t seed) : ctx_(std::move(ctx)), rng_(seed) {}
  ExactScalar scalar();
  Monomial x_monomial(int max_degree);
  Element function(int max_degree, int terms);
  Element form(int k, int max_degree, int terms);
  std::vector<Generator> word(int length);
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  ContextPtr ctx_;
  std::mt19937_64 rng_;
};

/// All x-monomials of total degree <= max_degree in D variables.
std::vector<Monomial> x_monomials_up_to(int dim, int max_degree);

void check_qphase(CaseLog& log, int max_dim, std::uint64_t seed);
void check_ncalg(CaseLog& log, int max_dim, std::uint64_t seed);

void check_lambda(CaseLog& log, int max_dim);
/// Recursion vs the signed sum over permutations of Lambda words, and the
/// wedge-ratio reading of W, for k <= max_k.
void check_antisymmetrizer(CaseLog& log, int max_dim, int max_k);
/// eps eps^-1 = (D-k)! W, its cyclic variant, both partial traces of W and the metric transpose of W:
/// exhaustive for D <= exhaustive_dim, `samples` random tuples for D = random_dim.
void check_contractions(CaseLog& log, int exhaustive_dim, int random_dim, int samples, std::uint64_t seed);
void check_metric_epsilon(CaseLog& log, int max_dim);
void check_pairing(CaseLog& log, int max_dim, std::uint64_t seed);

void check_hodge_plane(CaseLog& log, int max_dim, std::uint64_t seed);
void check_hodge_sphere(CaseLog& log, int max_sphere_dim, std::uint64_t seed);

void check_haar_examples(CaseLog& log);
/// h((c-1) f) = 0 for every monomial f of degree <= max_degree.
void check_haar_well_defined(CaseLog& log, const std::vector<int>& dims, int max_degree);
/// h(fg) = h(gf) and conj h(f) = h(f*) on random pairs.
void check_haar_trace_reality(CaseLog& log, const std::vector<int>& dims, int pairs, std::uint64_t seed);
/// h(x^i x^j) against exact classical sphere moments (includes h(x^i x^i') = 1/D).
void check_haar_moments(CaseLog& log, const std::vector<int>& dims);
void check_haar_misc(CaseLog& log, int max_dim, std::uint64_t seed);

void check_sphere_basics(CaseLog& log, int max_sphere_dim, std::uint64_t seed);
/// Integral of d[theta] vanishes for random (N-1)-forms.
void check_stokes(CaseLog& log, const std::vector<int>& sphere_dims, int forms, int max_degree, std::uint64_t seed);
void check_connes_landi(CaseLog& log);

void check_clifford(CaseLog& log, int max_n);
void check_trace_formula(CaseLog& log, int random_tuples_n2, std::uint64_t seed);
void check_projector_curvature(CaseLog& log, int max_n, std::uint64_t seed);
void check_charge(CaseLog& log, int max_n);

void check_oracle_model(CaseLog& log, int dim, std::uint64_t seed);

/// q -> 1 context: Hodge star against the classical determinant pairing, Haar
/// against exact moments, charge against the Bott value.
void check_commutative_limit(CaseLog& log, int max_dim, int max_n);

}  // namespace twistcalc
