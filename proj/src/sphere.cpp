#include "twistcalc/sphere.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "twistcalc/haar.hpp"
#include "twistcalc/tensorcalc.hpp"

namespace twistcalc {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_sphere_ctx(const Context& ctx) {
  if (ctx.dim() < 2) throw std::invalid_argument("sphere needs an ambient dimension of at least 2");
}

Monomial x_part(const Monomial& m) {
  Monomial r = m;
  r.dx = 0;
  return r;
}

IndexTuple dx_indices(const Context& ctx, const Monomial& m) {
  IndexTuple t;
  for (int a = 1; a <= ctx.dim(); ++a)
    if (m.has_dx(a)) t.push_back(a);
  return t;
}

}  // namespace

SphereForm::SphereForm(Element rep) : rep_(std::move(rep)) { require_sphere_ctx(rep_.context()); }

int SphereForm::degree() const {
  const int k = rep_.form_degree();
  if (k < 0) throw std::invalid_argument("sphere form of mixed degree");
  return k;
}

ContextPtr sphere_context(int sphere_dim, bool commutative) {
  if (sphere_dim < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  return Context::make(sphere_dim + 1, commutative);
}

Element dc_element(const ContextPtr& ctx) { return d(c_element(ctx)); }

Element reduce_mod_c(const Element& f) {
  const ContextPtr& ctx = f.ctx();
  f.require_form_degree(0, "reduce_mod_c");
  const int dim = ctx->dim();
  // x^1 x^D = (1 - R)/k on the sphere, with c = k x^1 x^D + R (k = 1 when D = 1).
  Monomial lead;
  ++lead.x[0];
  ++lead.x[dim - 1];
  Element rest = c_element(ctx);
  const ExactScalar k = rest.coeff(lead);
  rest.add_term(lead, -k);
  const Element replacement = ExactScalar(Rational(1) / k.as_rational()) * (one(ctx) - rest);

  Element done(ctx);
  Element todo = f;
  while (!todo.is_zero()) {
    Element next(ctx);
    for (const auto& [m, s] : todo.terms()) {
      if (m.x[0] < lead.x[0] || m.x[dim - 1] < lead.x[dim - 1]) {
        done.add_term(m, s);
        continue;
      }
      Monomial tail = m;
      --tail.x[0];
      --tail.x[dim - 1];
      // (x^1 x^D) * tail = sign * phase * m
      ProductPhase p = multiply_monomials(*ctx, lead, tail);
      ExactScalar undo(p.sign > 0 ? Coeff::one() : -Coeff::one(), p.phase.inverse());
      next += (s * undo) * (replacement * Element(ctx, tail));
    }
    todo = std::move(next);
  }
  return done;
}

Element omega_k(const ContextPtr& ctx, int k) {
  require_sphere_ctx(*ctx);
  const int dim = ctx->dim();
  const int n = dim - 1;
  if (k < 1 || k > dim) throw std::out_of_range("omega_k: index out of range");
  IndexTuple rest;
  for (int a = 1; a <= dim; ++a)
    if (a != k) rest.push_back(a);
  Element out(ctx);
  do {
    IndexTuple full = rest;
    full.push_back(k);
    out += epsilon_qinv(*ctx, full) * wedge_word(ctx, rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return (ExactScalar(Rational(1, factorial(n))) * ExactScalar::i_pow((n + 1) / 2)) * out;
}

SphereForm sphere_volume(const ContextPtr& ctx) {
  Element v(ctx);
  for (int k = 1; k <= ctx->dim(); ++k) v += x(ctx, k) * omega_k(ctx, k);
  return SphereForm(v);
}

Element top_decompose(const Element& w) {
  const ContextPtr& ctx = w.ctx();
  require_sphere_ctx(*ctx);
  const int n = ctx->dim() - 1;
  w.require_form_degree(n, "top_decompose");
  Element top = ExactScalar(Rational(1, 2)) * (w * dc_element(ctx));
  const ExactScalar norm = ExactScalar::i_pow(-(ctx->dim() / 2));
  Element f(ctx);
  for (const auto& [m, s] : top.terms()) f.add_term(x_part(m), norm * s);
  return f;
}

ExactScalar integrate(const SphereForm& w) { return haar_plane(top_decompose(w.rep())); }

bool in_ideal_j(const Element& delta) {
  if (delta.is_zero()) return true;
  const ContextPtr& ctx = delta.ctx();
  require_sphere_ctx(*ctx);
  const int k = delta.form_degree();
  if (k < 0) throw std::invalid_argument("sphere_equal: mixed-degree difference");
  if (k > ctx->dim() - 1) throw std::invalid_argument("sphere_equal: degree exceeds sphere dimension");
  const Element c = c_element(ctx);
  const Element dc = dc_element(ctx);
  const int top = delta.max_x_degree();
  // Homogenise each parity class with powers of c, then test the kernel of  ^dc.
  for (int parity = 0; parity < 2; ++parity) {
    int high = -1;
    for (int j = parity; j <= top; j += 2)
      if (!delta.x_degree_part(j).is_zero()) high = j;
    if (high < 0) continue;
    Element homog(ctx);
    Element cpow = one(ctx);
    for (int j = high; j >= parity; j -= 2) {
      homog += cpow * delta.x_degree_part(j);
      cpow = cpow * c;
    }
    if (!(homog * dc).is_zero()) return false;
  }
  return true;
}

bool sphere_equal(const SphereForm& a, const SphereForm& b) {
  const int ka = a.rep().form_degree();
  const int kb = b.rep().form_degree();
  if (!a.rep().is_zero() && !b.rep().is_zero() && ka != kb)
    throw std::invalid_argument("sphere_equal: degree mismatch");
  return in_ideal_j(a.rep() - b.rep());
}

namespace {

Element hodge_sphere_basis(const ContextPtr& ctx, const IndexTuple& indices) {
  thread_local std::map<std::tuple<int, bool, IndexTuple>, Element> cache;
  auto key = std::make_tuple(ctx->dim(), ctx->commutative(), indices);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const int dim = ctx->dim();
  const int n = dim - 1;
  const int k = static_cast<int>(indices.size());
  IndexTuple rest;
  for (int a = 1; a <= dim; ++a)
    if (std::find(indices.begin(), indices.end(), a) == indices.end()) rest.push_back(a);
  Element out(ctx);
  if (static_cast<int>(rest.size()) == dim - k) {
    do {
      IndexTuple full = indices;
      full.insert(full.end(), rest.begin(), rest.end());
      ExactScalar eps = epsilon_q(*ctx, full);
      if (eps.is_zero()) continue;
      // rest = (a, l_{k+1}, ..., l_N): dx^{l_N'} ... dx^{l_{k+1}'} x^{a'}
      IndexTuple t;
      for (auto it = rest.rbegin(); it + 1 != rest.rend(); ++it) t.push_back(ctx->primed(*it));
      out += eps * (wedge_word(ctx, t) * x(ctx, ctx->primed(rest.front())));
    } while (std::next_permutation(rest.begin(), rest.end()));
    ExactScalar c = ExactScalar::i_pow(-((n + 1) / 2)) * ExactScalar(Rational(1, factorial(n - k)));
    if (((n - k) / 2 + (n - k)) % 2 == 1) c = -c;
    out = c * out;
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace

SphereForm hodge_sphere(const SphereForm& w) {
  const int k = w.rep().is_zero() ? 0 : w.degree();
  const ContextPtr& ctx = w.ctx();
  if (k > w.sphere_dim()) throw std::invalid_argument("hodge_sphere: degree exceeds sphere dimension");
  Element out(ctx);
  for (const auto& [m, s] : w.rep().terms())
    out += Element(ctx, x_part(m), s) * hodge_sphere_basis(ctx, dx_indices(*ctx, m));
  return SphereForm(out);
}

SphereForm hodge_sphere_via_plane(const SphereForm& w) {
  const int k = w.rep().is_zero() ? 0 : w.degree();
  const int n = w.sphere_dim();
  if (k > n) throw std::invalid_argument("hodge_sphere: degree exceeds sphere dimension");
  Element inner = ExactScalar(Rational(1, 2)) * (w.rep() * dc_element(w.ctx()));
  Element out = hodge_plane(inner);
  if ((n - k) % 2 == 1) out = -out;
  return SphereForm(out);
}

SphereForm pairing_sphere(const SphereForm& a, const SphereForm& b) {
  const Element dc = dc_element(a.ctx());
  Element p = pairing_plane(a.rep() * dc, b.rep() * dc);
  return SphereForm(reduce_mod_c(ExactScalar(Rational(1, 4)) * p));
}

}  // namespace twistcalc
