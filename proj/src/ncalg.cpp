#include "twistcalc/ncalg.hpp"

#include <stdexcept>

namespace twistcalc {

namespace {

void check_index(const Context& ctx, int a) {
  if (a < 1 || a > ctx.dim())
    throw std::out_of_range("generator index " + std::to_string(a) + " out of range for D=" +
                            std::to_string(ctx.dim()));
}

ExactScalar signed_phase(int sign, const PhaseMonomial& p) {
  return ExactScalar(sign > 0 ? Coeff::one() : -Coeff::one(), p);
}

}  // namespace

Element::Element(ContextPtr ctx, const ExactScalar& s) : ctx_(std::move(ctx)) {
  if (!s.is_zero()) terms_.emplace(Monomial{}, s);
}

Element::Element(ContextPtr ctx, const Monomial& m, const ExactScalar& s) : ctx_(std::move(ctx)) {
  if (!s.is_zero()) terms_.emplace(m, s);
}

ExactScalar Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar{} : it->second;
}

void Element::add_term(const Monomial& m, const ExactScalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Element::form_degree() const {
  if (terms_.empty()) return 0;
  const int k = terms_.begin()->first.form_degree();
  for (const auto& [m, s] : terms_)
    if (m.form_degree() != k) return -1;
  return k;
}

void Element::require_form_degree(int k, const char* what) const {
  for (const auto& [m, s] : terms_)
    if (m.form_degree() != k)
      throw std::invalid_argument(std::string(what) + ": expected a homogeneous " +
                                  std::to_string(k) + "-form");
}

int Element::max_x_degree() const {
  int best = 0;
  for (const auto& [m, s] : terms_) best = std::max(best, m.x_degree());
  return best;
}

Element Element::form_part(int k) const {
  Element r(ctx_);
  for (const auto& [m, s] : terms_)
    if (m.form_degree() == k) r.terms_.emplace_hint(r.terms_.end(), m, s);
  return r;
}

Element Element::x_degree_part(int j) const {
  Element r(ctx_);
  for (const auto& [m, s] : terms_)
    if (m.x_degree() == j) r.terms_.emplace_hint(r.terms_.end(), m, s);
  return r;
}

void require_same_context(const Element& a, const Element& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("elements from different contexts");
}

Element& Element::operator+=(const Element& o) {
  require_same_context(*this, o);
  for (const auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_context(*this, o);
  for (const auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, s] : r.terms_) s = -s;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  require_same_context(a, b);
  return a.terms_ == b.terms_;
}

ProductPhase multiply_monomials(const Context& ctx, const Monomial& a, const Monomial& b) {
  ProductPhase out;
  if (a.dx & b.dx) {
    out.zero = true;
    return out;
  }
  const int dim = ctx.dim();
  // move x-part of b left across dx-part of a
  for (int i = 1; i <= dim; ++i) {
    if (!a.has_dx(i)) continue;
    for (int j = 1; j <= dim; ++j)
      if (b.x[j - 1]) out.phase.add_scaled(ctx.q(i, j), b.x[j - 1]);
  }
  // merge the two x-parts
  for (int i = 2; i <= dim; ++i) {
    if (!a.x[i - 1]) continue;
    for (int j = 1; j < i; ++j)
      if (b.x[j - 1]) out.phase.add_scaled(ctx.q(i, j), a.x[i - 1] * b.x[j - 1]);
  }
  // merge the two sets of differentials
  for (int i = 2; i <= dim; ++i) {
    if (!a.has_dx(i)) continue;
    for (int j = 1; j < i; ++j) {
      if (!b.has_dx(j)) continue;
      out.sign = -out.sign;
      out.phase += ctx.q(i, j);
    }
  }
  for (int i = 0; i < dim; ++i) out.result.x[i] = static_cast<std::uint8_t>(a.x[i] + b.x[i]);
  out.result.dx = static_cast<std::uint16_t>(a.dx | b.dx);
  return out;
}

Element operator*(const Element& a, const Element& b) {
  require_same_context(a, b);
  const Context& ctx = a.context();
  Element r(a.ctx());
  for (const auto& [ma, sa] : a.terms_) {
    for (const auto& [mb, sb] : b.terms_) {
      ProductPhase p = multiply_monomials(ctx, ma, mb);
      if (p.zero) continue;
      r.add_term(p.result, (sa * sb) * signed_phase(p.sign, p.phase));
    }
  }
  return r;
}

Element operator*(const ExactScalar& s, const Element& a) {
  Element r(a.ctx());
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
  return r;
}

Element x(const ContextPtr& ctx, int a) {
  check_index(*ctx, a);
  Monomial m;
  m.x[a - 1] = 1;
  return Element(ctx, m);
}

Element dx(const ContextPtr& ctx, int a) {
  check_index(*ctx, a);
  Monomial m;
  m.dx = static_cast<std::uint16_t>(1U << (a - 1));
  return Element(ctx, m);
}

Element one(const ContextPtr& ctx) { return Element(ctx, ExactScalar(1)); }
Element scalar(const ContextPtr& ctx, const ExactScalar& s) { return Element(ctx, s); }

Element normal_order(const ContextPtr& ctx, std::span<const Generator> word) {
  Element r = one(ctx);
  for (const Generator& g : word) r = r * (g.kind == Generator::Kind::X ? x(ctx, g.index) : dx(ctx, g.index));
  return r;
}

Element d(const Element& a) {
  const Context& ctx = a.context();
  const int dim = ctx.dim();
  Element r(a.ctx());
  for (const auto& [m, s] : a.terms()) {
    Monomial tail;
    tail.dx = m.dx;
    for (int i = 1; i <= dim; ++i) {
      const int e = m.x[i - 1];
      if (e == 0) continue;
      PhaseMonomial ph;
      for (int j = i + 1; j <= dim; ++j)
        if (m.x[j - 1]) ph.add_scaled(ctx.q(i, j), m.x[j - 1]);
      Monomial head = m;
      head.dx = static_cast<std::uint16_t>(1U << (i - 1));
      head.x[i - 1] = static_cast<std::uint8_t>(e - 1);
      ProductPhase p = multiply_monomials(ctx, head, tail);
      if (p.zero) continue;
      ph += p.phase;
      r.add_term(p.result, s * ExactScalar(Coeff{Rational(e * p.sign), {}, {}, {}}, ph));
    }
  }
  return r;
}

Element star(const Element& a) {
  const ContextPtr& ctx = a.ctx();
  const int dim = ctx->dim();
  Element r(ctx);
  std::vector<Generator> word;
  for (const auto& [m, s] : a.terms()) {
    word.clear();
    const int k = m.form_degree();
    for (int i = dim; i >= 1; --i)
      if (m.has_dx(i)) word.push_back(Generator::dx(ctx->primed(i)));
    for (int i = dim; i >= 1; --i)
      for (int t = 0; t < m.x[i - 1]; ++t) word.push_back(Generator::x(ctx->primed(i)));
    ExactScalar coeff = s.conj();
    if ((k * (k - 1) / 2) % 2 == 1) coeff = -coeff;
    r += coeff * normal_order(ctx, word);
  }
  return r;
}

Element c_element(const ContextPtr& ctx) {
  Element r(ctx);
  for (int a = 1; a <= ctx->dim(); ++a) r += x(ctx, a) * x(ctx, ctx->primed(a));
  return r;
}

Element volume_plane(const ContextPtr& ctx) {
  Monomial m;
  m.dx = static_cast<std::uint16_t>((1U << ctx->dim()) - 1U);
  return Element(ctx, m, ExactScalar::i_pow(ctx->dim() / 2));
}

Element at_unit_phases(const Element& a) {
  return a.map_coeffs([](const ExactScalar& s) { return s.at_unit_phases(); });
}

Monomial x_monomial(std::initializer_list<std::pair<int, int>> powers) {
  Monomial m;
  for (auto [a, e] : powers) m.x[a - 1] = static_cast<std::uint8_t>(m.x[a - 1] + e);
  return m;
}

Monomial dx_monomial(std::initializer_list<int> indices) {
  Monomial m;
  for (int a : indices) m.dx = static_cast<std::uint16_t>(m.dx | (1U << (a - 1)));
  return m;
}

}  // namespace twistcalc
