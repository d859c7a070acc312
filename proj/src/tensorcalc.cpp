#include "twistcalc/tensorcalc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace twistcalc {

namespace {

using Row = std::map<IndexTuple, ExactScalar>;

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void add_to(Row& row, const IndexTuple& key, const ExactScalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = row.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

// Right multiplication of a row by Lambda acting on slots pos, pos+1 (0-based).
Row times_lambda(const Context& ctx, const Row& row, std::size_t pos) {
  Row out;
  for (const auto& [m, v] : row) {
    IndexTuple j = m;
    std::swap(j[pos], j[pos + 1]);
    add_to(out, j, v * ExactScalar::phase(ctx.q(m[pos], m[pos + 1])));
  }
  return out;
}

// Row `upper` of I_{1..m}, identity on slots beyond m.
Row row_of_i(const Context& ctx, const IndexTuple& upper, std::size_t m) {
  Row out{{upper, ExactScalar(1)}};
  if (m < 2) return out;
  for (const auto& [j, v] : times_lambda(ctx, row_of_i(ctx, upper, m - 1), m - 2)) add_to(out, j, -v);
  return out;
}

struct RowKey {
  int dim;
  bool commutative;
  std::size_t m;
  IndexTuple upper;
  auto operator<=>(const RowKey&) const = default;
};

const Row& row_of_w(const Context& ctx, const IndexTuple& upper, std::size_t m) {
  thread_local std::map<RowKey, Row> cache;
  RowKey key{ctx.dim(), ctx.commutative(), m, upper};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Row out;
  if (m < 2) {
    out.emplace(upper, ExactScalar(1));
  } else {
    for (const auto& [mid, v] : row_of_i(ctx, upper, m))
      for (const auto& [j, w] : row_of_w(ctx, mid, m - 1)) add_to(out, j, v * w);
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

ExactScalar epsilon_q(const Context& ctx, std::span<const int> idx) {
  const std::size_t n = idx.size();
  if (n != static_cast<std::size_t>(ctx.dim()))
    throw std::invalid_argument("epsilon needs exactly D indices");
  PhaseMonomial phase;
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (idx[i] < 1 || idx[i] > ctx.dim()) throw std::out_of_range("epsilon index out of range");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (idx[i] == idx[j]) return {};
      if (idx[i] > idx[j]) {
        sign = -sign;
        phase += ctx.q(idx[i], idx[j]);
      }
    }
  }
  return ExactScalar(sign > 0 ? Coeff::one() : -Coeff::one(), phase);
}

ExactScalar epsilon_qinv(const Context& ctx, std::span<const int> idx) {
  return epsilon_q(ctx, idx).invert_phases();
}

ExactScalar lambda_entry(const Context& ctx, int a, int b, int c, int d) {
  if (a != d || b != c) return {};
  return ExactScalar::phase(ctx.q(a, b));
}

const std::map<IndexTuple, ExactScalar>& antisym_row(const Context& ctx, const IndexTuple& upper) {
  for (int a : upper)
    if (a < 1 || a > ctx.dim()) throw std::out_of_range("antisymmetrizer index out of range");
  return row_of_w(ctx, upper, upper.size());
}

ExactScalar antisym_W(const Context& ctx, const IndexTuple& upper, const IndexTuple& lower) {
  if (upper.size() != lower.size()) throw std::invalid_argument("W: tuple lengths differ");
  const auto& row = antisym_row(ctx, upper);
  auto it = row.find(lower);
  return it == row.end() ? ExactScalar{} : it->second;
}

std::vector<IndexTuple> ascending_subsets(int dim, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > dim) return out;
  std::vector<bool> pick(static_cast<std::size_t>(dim), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    IndexTuple t;
    for (int a = 0; a < dim; ++a)
      if (pick[static_cast<std::size_t>(a)]) t.push_back(a + 1);
    out.push_back(t);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Element wedge_word(const ContextPtr& ctx, std::span<const int> indices) {
  std::vector<Generator> word;
  word.reserve(indices.size());
  for (int a : indices) word.push_back(Generator::dx(a));
  return normal_order(ctx, word);
}

namespace {

IndexTuple dx_indices(const Context& ctx, const Monomial& m) {
  IndexTuple t;
  for (int a = 1; a <= ctx.dim(); ++a)
    if (m.has_dx(a)) t.push_back(a);
  return t;
}

Monomial x_part(const Monomial& m) {
  Monomial r = m;
  r.dx = 0;
  return r;
}

// <dx^A, dx^J> for ascending A, J of equal length.
ExactScalar basis_pairing(const Context& ctx, const IndexTuple& a, const IndexTuple& j) {
  const std::size_t k = a.size();
  IndexTuple lower(k);
  for (std::size_t m = 0; m < k; ++m) lower[m] = ctx.primed(a[k - 1 - m]);
  ExactScalar w = antisym_W(ctx, j, lower);
  return ((k / 2) % 2 == 1) ? -w : w;
}

}  // namespace

Element pairing_plane(const Element& alpha, const Element& beta) {
  require_same_context(alpha, beta);
  const int ka = alpha.form_degree();
  const int kb = beta.form_degree();
  if (ka < 0 || kb < 0) throw std::invalid_argument("pairing: mixed-degree argument");
  if (!alpha.is_zero() && !beta.is_zero() && ka != kb)
    throw std::invalid_argument("pairing: form degrees differ");
  const Context& ctx = alpha.context();
  Element out(alpha.ctx());
  for (const auto& [ma, sa] : alpha.terms()) {
    const IndexTuple ia = dx_indices(ctx, ma);
    for (const auto& [mb, sb] : beta.terms()) {
      const IndexTuple jb = dx_indices(ctx, mb);
      ExactScalar g = basis_pairing(ctx, ia, jb);
      if (g.is_zero()) continue;
      // x^{e} dx^J = phase * dx^J x^{e}
      PhaseMonomial ph;
      for (int b = 1; b <= ctx.dim(); ++b)
        if (mb.x[b - 1])
          for (int a : jb) ph.add_scaled(ctx.q(b, a), mb.x[b - 1]);
      ProductPhase p = multiply_monomials(ctx, x_part(ma), x_part(mb));
      ph += p.phase;
      out.add_term(p.result, sa * sb * g * ExactScalar(p.sign > 0 ? Coeff::one() : -Coeff::one(), ph));
    }
  }
  return out;
}

Element hodge_plane_basis(const ContextPtr& ctx, const IndexTuple& indices) {
  thread_local std::map<std::tuple<int, bool, IndexTuple>, Element> cache;
  auto key = std::make_tuple(ctx->dim(), ctx->commutative(), indices);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int dim = ctx->dim();
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
      IndexTuple t;
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) t.push_back(ctx->primed(*it));
      out += eps * wedge_word(ctx, t);
    } while (std::next_permutation(rest.begin(), rest.end()));
    ExactScalar c = ExactScalar::i_pow(-(dim / 2)) * ExactScalar(Rational(1, factorial(dim - k)));
    if (((dim - k) / 2) % 2 == 1) c = -c;
    out = c * out;
  }
  cache.emplace(key, out);
  return out;
}

Element hodge_plane(const Element& alpha) {
  if (alpha.form_degree() < 0) throw std::invalid_argument("hodge: mixed-degree argument");
  const ContextPtr& ctx = alpha.ctx();
  Element out(ctx);
  for (const auto& [m, s] : alpha.terms()) {
    Element f(ctx, x_part(m), s);
    out += f * hodge_plane_basis(ctx, dx_indices(*ctx, m));
  }
  return out;
}

}  // namespace twistcalc
