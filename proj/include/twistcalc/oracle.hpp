#pragma once

// Numeric model: commutative polynomial forms on R^D tensored with clock and
// shift matrices representing the torus relations U^a U^b = q_ab U^b U^a at
// roots of unity. Independent of the normal-ordering engine: words are
// multiplied generator by generator inside the model.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "twistcalc/ncalg.hpp"

namespace twistcalc {

class FormMatrix;

using Complex = std::complex<double>;

/// S^{s_p} C^{c_p} in every parameter slot p.
struct TorusWord {
  std::array<std::uint8_t, kMaxParams> shift{};
  std::array<std::uint8_t, kMaxParams> clock{};
  friend auto operator<=>(const TorusWord&, const TorusWord&) = default;
};

struct ModelKey {
  std::array<std::uint8_t, kMaxDim> x{};  // classical monomial in the complex coordinates x0^a
  std::uint16_t dx = 0;                   // classical wedge dx0^{a_1} ... dx0^{a_k}, ascending
  TorusWord word;
  friend auto operator<=>(const ModelKey&, const ModelKey&) = default;
};

using ModelValue = std::map<ModelKey, Complex>;

class TorusModel {
 public:
  /// One modulus and one root power per independent parameter of ctx.
  TorusModel(ContextPtr ctx, std::vector<int> moduli, std::vector<int> root_powers);

  const ContextPtr& ctx() const { return ctx_; }
  int num_params() const { return static_cast<int>(moduli_.size()); }
  int modulus(int p) const { return moduli_[static_cast<std::size_t>(p)]; }
  /// zeta_p = exp(2 pi i power_p / m_p).
  Complex root(int p) const { return roots_[static_cast<std::size_t>(p)]; }
  /// Value of a scalar with parameter p sent to zeta_p.
  Complex eval_scalar(const ExactScalar& s) const { return s.eval_roots(roots_); }

  /// U^a.
  const TorusWord& generator_word(int a) const { return gen_[static_cast<std::size_t>(a - 1)]; }
  /// Product of two torus words; returns the phase, writes the word.
  Complex multiply(const TorusWord& a, const TorusWord& b, TorusWord& out) const;
  /// Tr / dim: 1 on the identity word, 0 otherwise.
  double normalized_trace(const TorusWord& w) const;
  /// Largest matrix-entry magnitude of sum_k coeff_k * word_k.
  double max_entry(const std::map<std::pair<std::uint16_t, TorusWord>, Complex>& value) const;

 private:
  ContextPtr ctx_;
  std::vector<int> moduli_;
  std::vector<Complex> roots_;
  std::vector<TorusWord> gen_;
};

/// Moduli default to the primes 13, 17, 19, ... (distinct, at least twice the
/// exponent range used by the suites).
struct OracleOptions {
  std::vector<int> moduli;
  int points = 20;
  int root_choices = 2;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
};

std::vector<int> default_moduli(int count);
/// One model per root choice r = 1..root_choices (root power r for each parameter).
std::vector<TorusModel> make_models(const ContextPtr& ctx, const OracleOptions& opt);

/// Images in the model.
ModelValue eval_element(const TorusModel& model, const Element& f);
ModelValue eval_word(const TorusModel& model, std::span<const Generator> word);
ModelValue model_mul(const TorusModel& model, const ModelValue& a, const ModelValue& b);
ModelValue model_add(const ModelValue& a, const ModelValue& b, Complex scale = 1.0);
/// dc0 = 2 x0^{a'} dx0^a.
ModelValue classical_dc(const TorusModel& model);
/// Classical Hodge star acting on the dx0 part (pairing = Gram determinant of g).
ModelValue classical_hodge(const TorusModel& model, const ModelValue& v);

/// Complex coordinates of a real point y: x0^a = (y_a + i y_a')/sqrt2 for a < a'.
std::vector<Complex> complex_coordinates(const Context& ctx, std::span<const double> y);
/// Sum over keys at the point x0, collapsed to (dx mask, torus word).
std::map<std::pair<std::uint16_t, TorusWord>, Complex> evaluate_at(const ModelValue& v,
                                                                    std::span<const Complex> x0);

enum class Space { Plane, Sphere };

struct IdentityReport {
  bool pass = false;
  double max_magnitude = 0.0;
  int evaluations = 0;
  std::uint64_t seed = 0;
};

/// Random sample points: Gaussian for the plane, normalised onto the unit
/// sphere for sphere classes (where the form is first wedged with dc0).
std::vector<std::vector<double>> sample_points(int dim, Space space, int count, std::uint64_t seed);

/// True iff f evaluates below tolerance at every point and root choice.
/// Sample evaluations run in parallel.
IdentityReport check_identity(const Element& f, Space space, const OracleOptions& opt = {});
IdentityReport check_identity_serial(const Element& f, Space space, const OracleOptions& opt = {});
/// Same test on a precomputed model image.
IdentityReport check_model_value(const TorusModel& model, const ModelValue& v, Space space,
                                 const OracleOptions& opt);

/// Classical sphere average of a product of complex coordinates, exact.
Coeff classical_moment(const Context& ctx, const std::array<std::uint8_t, kMaxDim>& exponents);
/// Haar functional in the model: normalised trace times classical moments.
Complex numeric_haar(const TorusModel& model, const ModelValue& f);
Complex numeric_haar(const TorusModel& model, const Element& f);
/// Integral of an N-form computed inside the model from w dc0 / 2.
Complex numeric_integrate(const TorusModel& model, const Element& w);

/// Dense complex matrix used for numeric Clifford checks.
struct ComplexMatrix {
  int size = 0;
  std::vector<Complex> data;
  explicit ComplexMatrix(int s = 0) : size(s), data(static_cast<std::size_t>(s) * s) {}
  Complex& operator()(int r, int c) { return data[static_cast<std::size_t>(r * size + c)]; }
  Complex operator()(int r, int c) const { return data[static_cast<std::size_t>(r * size + c)]; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  double max_abs() const;
  Complex trace() const;
};

/// Classical Clifford generators at q = 1 built with doubles.
std::vector<ComplexMatrix> classical_gammas(int n);
/// Max deviation between the engine's curvature F = e de de (commutative
/// context) and the classical monopole curvature e (de de) sampled on S^{2n}.
double bott_curvature_discrepancy(const FormMatrix& F, int n, int points, std::uint64_t seed);

}  // namespace twistcalc
