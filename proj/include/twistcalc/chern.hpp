#pragma once

// q-Clifford matrices, the instanton projector on S^{2n}_q, its curvature,
// the cycle character tau and the Chern-Connes charge.

#include <vector>

#include "twistcalc/sphere.hpp"

namespace twistcalc {

/// Dense square matrix over ExactScalar.
class ScalarMatrix {
 public:
  explicit ScalarMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}
  static ScalarMatrix identity(int size);

  int size() const { return size_; }
  ExactScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * size_ + c)]; }
  const ExactScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * size_ + c)]; }

  ExactScalar trace() const;
  ScalarMatrix conj_transpose() const;

  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ExactScalar& s, const ScalarMatrix& a);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  int size_;
  std::vector<ExactScalar> data_;
};

/// gamma^1 ... gamma^{2n+1} acting on C^{2^n}, over the context with D = 2n+1.
struct GammaRep {
  int n;
  ContextPtr ctx;
  std::vector<ScalarMatrix> gamma;  // gamma[i-1] is gamma^i

  const ScalarMatrix& operator[](int i) const { return gamma.at(static_cast<std::size_t>(i - 1)); }
  int size() const { return 1 << n; }
};

/// gamma^i = sqrt2 diag(-q_i1,1) x ... x diag(-q_i(i-1),1) x L x 1 ... for i <= n,
/// gamma^{i'} = (gamma^i)^dagger, gamma^{n+1} = diag(1,-1)^{x n}.
GammaRep gamma_rep(int n, bool commutative = false);

/// Tr(gamma^{i_0} ... gamma^{i_2n}); requires exactly 2n+1 indices.
ExactScalar clifford_trace(const GammaRep& rep, std::span<const int> indices);

/// Square matrix of forms on one ambient context. Entries are plane
/// representatives; sphere-class questions go through reduce_mod_c / sphere_equal.
class FormMatrix {
 public:
  FormMatrix(ContextPtr ctx, int size);

  int size() const { return size_; }
  const ContextPtr& ctx() const { return ctx_; }
  Element& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * size_ + c)]; }
  const Element& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * size_ + c)]; }

  Element trace() const;
  /// (M*)_{rc} = star(M_{cr}).
  FormMatrix star_transpose() const;
  /// Entrywise exterior derivative.
  FormMatrix d() const;
  /// Entrywise reduce_mod_c (degree-0 entries only).
  FormMatrix reduce_mod_c() const;
  bool is_zero() const;
  /// Every entry difference lies in J.
  bool sphere_equal(const FormMatrix& o) const;

  friend FormMatrix operator+(const FormMatrix& a, const FormMatrix& b);
  friend FormMatrix operator-(const FormMatrix& a, const FormMatrix& b);
  friend FormMatrix operator-(const FormMatrix& a);
  /// Entries are computed in parallel.
  friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
  friend bool operator==(const FormMatrix& a, const FormMatrix& b);

 private:
  ContextPtr ctx_;
  int size_;
  std::vector<Element> data_;
};

/// Reference serial product, entry by entry in row-major order.
FormMatrix multiply_serial(const FormMatrix& a, const FormMatrix& b);

/// e = 1/2 (1 + gamma^i x^{i'}).
FormMatrix projector(const GammaRep& rep);
FormMatrix projector(int n, bool commutative = false);

/// F = e de de; throws std::invalid_argument unless e^2 = e on the sphere.
FormMatrix curvature(const FormMatrix& e);

/// 2^{[N/2]+1} [N/2]! / (i^{[N/2]} N!).
ExactScalar tau_normalization(int sphere_dim);
/// tau(a_0, ..., a_N) = normalization * integral of a_0 da_1 ... da_N on S^N_q.
ExactScalar character_tau(std::span<const Element> a);

/// Integral over S^{2n}_q of Tr(e (de)^{2n}).
ExactScalar charge_integral(int n, bool commutative = false);
/// Integral of Tr((de)^{2n}), the term dropped by Stokes in the charge.
ExactScalar integral_trace_de(int n, bool commutative = false);
/// <e, tau> = (1/n!) tau(Tr e^{x(2n+1)}).
ExactScalar charge(int n, bool commutative = false);

}  // namespace twistcalc
