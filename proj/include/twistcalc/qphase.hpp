#pragma once

// Deformation parameters q_ab and the exact coefficient ring Q(i, sqrt2)[q^+-1].

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistcalc/rational.hpp"

namespace twistcalc {

inline constexpr int kMaxDim = 11;
inline constexpr int kMaxParams = (kMaxDim / 2) * (kMaxDim / 2 - 1) / 2;

/// Element of Q(i, sqrt2), stored as re + im*i + re2*sqrt2 + im2*i*sqrt2.
struct Coeff {
  Rational re, im, re2, im2;

  static Coeff one() { return {Rational(1), {}, {}, {}}; }
  static Coeff i() { return {{}, Rational(1), {}, {}}; }
  static Coeff sqrt2() { return {{}, {}, Rational(1), {}}; }

  bool is_zero() const { return re.is_zero() && im.is_zero() && re2.is_zero() && im2.is_zero(); }
  Coeff conj() const { return {re, -im, re2, -im2}; }
  std::complex<double> to_complex() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b) {
    return {a.re + b.re, a.im + b.im, a.re2 + b.re2, a.im2 + b.im2};
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) {
    return {a.re - b.re, a.im - b.im, a.re2 - b.re2, a.im2 - b.im2};
  }
  Coeff operator-() const { return {-re, -im, -re2, -im2}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Rational& r) {
    return {a.re * r, a.im * r, a.re2 * r, a.im2 * r};
  }
  friend bool operator==(const Coeff&, const Coeff&) = default;
};

/// Exponent vector over the independent parameters of a context.
struct PhaseMonomial {
  std::array<std::int16_t, kMaxParams> exp{};

  bool is_one() const {
    for (auto e : exp)
      if (e != 0) return false;
    return true;
  }
  PhaseMonomial inverse() const {
    PhaseMonomial r;
    for (int k = 0; k < kMaxParams; ++k) r.exp[k] = static_cast<std::int16_t>(-exp[k]);
    return r;
  }
  PhaseMonomial& operator+=(const PhaseMonomial& o) {
    for (int k = 0; k < kMaxParams; ++k) exp[k] = static_cast<std::int16_t>(exp[k] + o.exp[k]);
    return *this;
  }
  PhaseMonomial& operator-=(const PhaseMonomial& o) {
    for (int k = 0; k < kMaxParams; ++k) exp[k] = static_cast<std::int16_t>(exp[k] - o.exp[k]);
    return *this;
  }
  void add_scaled(const PhaseMonomial& o, int times) {
    for (int k = 0; k < kMaxParams; ++k) exp[k] = static_cast<std::int16_t>(exp[k] + times * o.exp[k]);
  }
  friend PhaseMonomial operator+(PhaseMonomial a, const PhaseMonomial& b) { return a += b; }
  friend PhaseMonomial operator-(PhaseMonomial a, const PhaseMonomial& b) { return a -= b; }
  friend auto operator<=>(const PhaseMonomial&, const PhaseMonomial&) = default;
};

/// Ambient dimension D, the priming involution a -> D+1-a and the table of
/// canonical phases q_ab. Indices are 1-based throughout the public API.
class Context {
 public:
  /// `commutative` forces every q_ab to 1 (no independent parameters).
  static std::shared_ptr<const Context> make(int dim, bool commutative = false);

  int dim() const { return dim_; }
  bool commutative() const { return commutative_; }
  int half() const { return dim_ / 2; }
  int primed(int a) const { return dim_ + 1 - a; }
  bool has_middle() const { return dim_ % 2 == 1; }
  int middle() const { return (dim_ + 1) / 2; }

  int num_params() const { return static_cast<int>(params_.size()); }
  const std::vector<std::pair<int, int>>& params() const { return params_; }

  /// Canonical phase of q_ab from the precomputed table.
  const PhaseMonomial& q(int a, int b) const { return table_[idx(a, b)]; }

  friend bool operator==(const Context& a, const Context& b) {
    return a.dim_ == b.dim_ && a.commutative_ == b.commutative_;
  }

 private:
  Context(int dim, bool commutative);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>((a - 1) * dim_ + (b - 1)); }

  int dim_;
  bool commutative_;
  std::vector<std::pair<int, int>> params_;
  std::vector<PhaseMonomial> table_;
};

using ContextPtr = std::shared_ptr<const Context>;

/// Reduce q_ab to a monomial in the independent parameters by walking the
/// orbit of the moves (a,b)->(a',b'), (a,b)->(b,a)^-1, (a,b)->(a,b')^-1.
/// An orbit that contains a pair together with its own inverse forces q=1.
PhaseMonomial reduce_pair(const Context& ctx, int a, int b);

/// Finite sum of Coeff * PhaseMonomial terms; sorted by phase, no zero terms.
class ExactScalar {
 public:
  using Term = std::pair<PhaseMonomial, Coeff>;

  ExactScalar() = default;
  ExactScalar(const Rational& r) {  // NOLINT(implicit)
    if (!r.is_zero()) terms_.push_back({PhaseMonomial{}, Coeff{r, {}, {}, {}}});
  }
  ExactScalar(std::int64_t n) : ExactScalar(Rational(n)) {}  // NOLINT(implicit)
  ExactScalar(int n) : ExactScalar(Rational(n)) {}           // NOLINT(implicit)
  ExactScalar(const Coeff& c, const PhaseMonomial& p = {}) {
    if (!c.is_zero()) terms_.push_back({p, c});
  }

  static ExactScalar i() { return ExactScalar(Coeff::i()); }
  static ExactScalar sqrt2() { return ExactScalar(Coeff::sqrt2()); }
  static ExactScalar phase(const PhaseMonomial& p) { return ExactScalar(Coeff::one(), p); }
  /// i^k for any integer k.
  static ExactScalar i_pow(int k);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Returns the constant rational part when is_rational().
  Rational as_rational() const;

  ExactScalar conj() const;
  /// q -> q^-1 on every phase, coefficients untouched.
  ExactScalar invert_phases() const;
  /// Multiply every term by the phase monomial p.
  ExactScalar times_phase(const PhaseMonomial& p) const;
  /// Drop every phase exponent (q -> 1).
  ExactScalar at_unit_phases() const;

  /// Ring homomorphism sending parameter k to exp(i*theta[k]).
  std::complex<double> eval(std::span<const double> theta) const;
  /// Same, with parameter k sent to the given unit complex number.
  std::complex<double> eval_roots(std::span<const std::complex<double>> roots) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  ExactScalar operator-() const;
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

 private:
  std::vector<Term> terms_;
};

}  // namespace twistcalc
