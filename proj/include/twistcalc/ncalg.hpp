#pragma once

// Normal-ordering engine for the twisted plane: coordinates x^a, differentials
// dx^a, the wedge product, the exterior derivative and the * conjugation.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "twistcalc/qphase.hpp"

namespace twistcalc {

/// x^{e_1} ... x^{e_D} dx^{s_1} ... dx^{s_k}: all x factors in ascending index
/// order followed by the differentials in ascending order. Index a is stored
/// at position a-1; bit a-1 of `dx` marks dx^a.
struct Monomial {
  std::array<std::uint8_t, kMaxDim> x{};
  std::uint16_t dx = 0;

  int form_degree() const { return std::popcount(dx); }
  int x_degree() const {
    int s = 0;
    for (auto e : x) s += e;
    return s;
  }
  bool has_dx(int a) const { return (dx >> (a - 1)) & 1U; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.form_degree() <=> b.form_degree(); c != 0) return c;
    if (auto c = b.dx <=> a.dx; c != 0) return c;
    if (auto c = a.x_degree() <=> b.x_degree(); c != 0) return c;
    return b.x <=> a.x;
  }
};

/// A generator symbol in an unordered word.
struct Generator {
  enum class Kind : std::uint8_t { X, DX };
  Kind kind;
  int index;
  static Generator x(int a) { return {Kind::X, a}; }
  static Generator dx(int a) { return {Kind::DX, a}; }
};

/// Sparse sum of normal-ordered monomials with exact coefficients.
class Element {
 public:
  using TermMap = std::map<Monomial, ExactScalar>;

  explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Element(ContextPtr ctx, const ExactScalar& s);
  Element(ContextPtr ctx, const Monomial& m, const ExactScalar& s = ExactScalar(1));

  const ContextPtr& ctx() const { return ctx_; }
  const Context& context() const { return *ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  ExactScalar coeff(const Monomial& m) const;
  /// Adds s * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const ExactScalar& s);

  /// Form degree when homogeneous; -1 for mixed, 0 for the zero element.
  int form_degree() const;
  /// Throws std::invalid_argument unless every term has form degree k.
  void require_form_degree(int k, const char* what) const;
  int max_x_degree() const;
  /// Terms of the given form degree / x-degree only.
  Element form_part(int k) const;
  Element x_degree_part(int j) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const ExactScalar& s, const Element& a);
  friend Element operator*(const Element& a, const ExactScalar& s) { return s * a; }
  /// Element equality; contexts must agree.
  friend bool operator==(const Element& a, const Element& b);

  /// Apply a map to every coefficient (used for q -> 1 specialisation).
  template <class F>
  Element map_coeffs(F&& f) const {
    Element r(ctx_);
    for (const auto& [m, s] : terms_) r.add_term(m, f(s));
    return r;
  }

 private:
  ContextPtr ctx_;
  TermMap terms_;
};

void require_same_context(const Element& a, const Element& b);

/// Phase and sign picked up when the product of two normal monomials is
/// normal ordered; nullopt when a differential repeats.
struct ProductPhase {
  bool zero = false;
  int sign = 1;
  PhaseMonomial phase;
  Monomial result;
};
ProductPhase multiply_monomials(const Context& ctx, const Monomial& a, const Monomial& b);

Element x(const ContextPtr& ctx, int a);
Element dx(const ContextPtr& ctx, int a);
Element one(const ContextPtr& ctx);
Element scalar(const ContextPtr& ctx, const ExactScalar& s);

/// Normal order an arbitrary word of generators.
Element normal_order(const ContextPtr& ctx, std::span<const Generator> word);

/// Exterior derivative: d(x^a) = dx^a, graded Leibniz, d^2 = 0.
Element d(const Element& a);

/// Antilinear graded antihomomorphism with (x^a)* = x^{a'}, (dx^a)* = dx^{a'}.
Element star(const Element& a);

/// c = x^a g_ab x^b, central in the whole form algebra.
Element c_element(const ContextPtr& ctx);
/// V_D = i^{[D/2]} dx^1 ... dx^D.
Element volume_plane(const ContextPtr& ctx);

/// Replace every q by 1 while keeping the context (coefficients summed).
Element at_unit_phases(const Element& a);

Monomial x_monomial(std::initializer_list<std::pair<int, int>> powers);
Monomial dx_monomial(std::initializer_list<int> indices);

}  // namespace twistcalc
