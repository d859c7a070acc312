#include "twistcalc/haar.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace twistcalc {

Rational haar_lambda(int n, int ambient_dim) {
  Rational denom(1);
  for (int k = 0; k < n; ++k) denom *= Rational(2 * (k + 1)) * Rational(ambient_dim + 2 * k);
  return Rational(1) / denom;
}

namespace {

void require_function(const Element& f, const char* what) {
  for (const auto& [m, s] : f.terms())
    if (m.dx != 0) throw std::invalid_argument(std::string(what) + ": expected a function (0-form)");
}

// d_s x^e = e_s prod_{a<s} q(a,s)^{e_a} x^{e - 1_s}
void partial_monomial(const Context& ctx, int s, const Monomial& m, const ExactScalar& c, Element& out) {
  const int e = m.x[s - 1];
  if (e == 0) return;
  PhaseMonomial ph;
  for (int a = 1; a < s; ++a)
    if (m.x[a - 1]) ph.add_scaled(ctx.q(a, s), m.x[a - 1]);
  Monomial r = m;
  r.x[s - 1] = static_cast<std::uint8_t>(e - 1);
  out.add_term(r, c * ExactScalar(Coeff{Rational(e), {}, {}, {}}, ph));
}

// Delta^{deg/2} of a single even monomial: a scalar.
ExactScalar full_laplacian_power(const ContextPtr& ctx, const Monomial& m) {
  thread_local std::map<std::tuple<int, bool, Monomial>, ExactScalar> cache;
  if (m.x_degree() == 0) return ExactScalar(1);
  auto key = std::make_tuple(ctx->dim(), ctx->commutative(), m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  ExactScalar total;
  const Element lap = laplacian(Element(ctx, m));
  for (const auto& [mm, s] : lap.terms()) total += s * full_laplacian_power(ctx, mm);
  cache.emplace(key, total);
  return total;
}

}  // namespace

Element partial(int s, const Element& f) {
  require_function(f, "partial");
  const Context& ctx = f.context();
  if (s < 1 || s > ctx.dim()) throw std::out_of_range("partial: index out of range");
  Element out(f.ctx());
  for (const auto& [m, c] : f.terms()) partial_monomial(ctx, s, m, c, out);
  return out;
}

Element laplacian(const Element& f) {
  require_function(f, "laplacian");
  const Context& ctx = f.context();
  Element out(f.ctx());
  for (int i = 1; i <= ctx.dim(); ++i) out += partial(i, partial(ctx.primed(i), f));
  return out;
}

ExactScalar haar_plane(const Element& f) {
  require_function(f, "haar");
  ExactScalar total;
  for (const auto& [m, c] : f.terms()) {
    const int deg = m.x_degree();
    if (deg % 2 == 1) continue;
    total += c * full_laplacian_power(f.ctx(), m) * ExactScalar(haar_lambda(deg / 2, f.context().dim()));
  }
  return total;
}

}  // namespace twistcalc
