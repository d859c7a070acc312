#pragma once

// Functions and forms on the twisted sphere S^N_q as classes of forms on the
// ambient plane R^{N+1}_q modulo J = (c-1) Omega + {w : w dc = 0}.

#include "twistcalc/ncalg.hpp"

namespace twistcalc {

/// A class [rep] in Omega(S^N_q); rep lives on the ambient plane of dimension N+1.
class SphereForm {
 public:
  explicit SphereForm(Element rep);

  const Element& rep() const { return rep_; }
  int sphere_dim() const { return rep_.context().dim() - 1; }
  const ContextPtr& ctx() const { return rep_.ctx(); }
  /// Form degree (throws on mixed degree).
  int degree() const;

  friend SphereForm operator+(const SphereForm& a, const SphereForm& b) { return SphereForm(a.rep_ + b.rep_); }
  friend SphereForm operator-(const SphereForm& a, const SphereForm& b) { return SphereForm(a.rep_ - b.rep_); }
  friend SphereForm operator*(const SphereForm& a, const SphereForm& b) { return SphereForm(a.rep_ * b.rep_); }
  friend SphereForm operator*(const ExactScalar& s, const SphereForm& a) { return SphereForm(s * a.rep_); }

 private:
  Element rep_;
};

/// Ambient context for S^N_q.
ContextPtr sphere_context(int sphere_dim, bool commutative = false);

/// Normal form of a function under c = 1, eliminating x^1 x^D.
Element reduce_mod_c(const Element& f);

/// dc as an ambient 1-form.
Element dc_element(const ContextPtr& ctx);

/// omega_k = (1/N!) i^{[(N+1)/2]} eps_(q^-1)_{s_1..s_N k} dx^{s_1} ... dx^{s_N}.
Element omega_k(const ContextPtr& ctx, int k);
/// The volume form [x^k omega_k].
SphereForm sphere_volume(const ContextPtr& ctx);

/// f with w dc / 2 = f V_{N+1}, for an ambient N-form w.
Element top_decompose(const Element& w);
/// Integral of a top-degree class: h(f_w).
ExactScalar integrate(const SphereForm& w);

/// True iff the classes agree, i.e. a - b lies in J.
bool sphere_equal(const SphereForm& a, const SphereForm& b);
/// Membership of an ambient form of degree <= N in J.
bool in_ideal_j(const Element& delta);

/// Hodge star on the sphere via its explicit formula.
SphereForm hodge_sphere(const SphereForm& w);
/// The same map computed as (-1)^{N-k} [*(beta dc/2)] with the plane Hodge star.
SphereForm hodge_sphere_via_plane(const SphereForm& w);
/// <[a],[b]> = 1/4 [<a dc, b dc>], returned reduced mod c.
SphereForm pairing_sphere(const SphereForm& a, const SphereForm& b);

}  // namespace twistcalc
