#include "twistcalc/chern.hpp"

#include <exception>
#include <stdexcept>

#include "twistcalc/tensorcalc.hpp"

namespace twistcalc {

ScalarMatrix ScalarMatrix::identity(int size) {
  ScalarMatrix m(size);
  for (int k = 0; k < size; ++k) m(k, k) = ExactScalar(1);
  return m;
}

ExactScalar ScalarMatrix::trace() const {
  ExactScalar t;
  for (int k = 0; k < size_; ++k) t += (*this)(k, k);
  return t;
}

ScalarMatrix ScalarMatrix::conj_transpose() const {
  ScalarMatrix m(size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) m(r, c) = (*this)(c, r).conj();
  return m;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix m(a.size());
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const int s = a.size();
  ScalarMatrix m(s);
  for (int r = 0; r < s; ++r)
    for (int k = 0; k < s; ++k) {
      if (a(r, k).is_zero()) continue;
      for (int c = 0; c < s; ++c)
        if (!b(k, c).is_zero()) m(r, c) += a(r, k) * b(k, c);
    }
  return m;
}

ScalarMatrix operator*(const ExactScalar& s, const ScalarMatrix& a) {
  ScalarMatrix m(a.size());
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
  return m;
}

namespace {

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  const int sa = a.size();
  const int sb = b.size();
  ScalarMatrix m(sa * sb);
  for (int r1 = 0; r1 < sa; ++r1)
    for (int c1 = 0; c1 < sa; ++c1) {
      if (a(r1, c1).is_zero()) continue;
      for (int r2 = 0; r2 < sb; ++r2)
        for (int c2 = 0; c2 < sb; ++c2) m(r1 * sb + r2, c1 * sb + c2) = a(r1, c1) * b(r2, c2);
    }
  return m;
}

ScalarMatrix diag2(const ExactScalar& a, const ExactScalar& b) {
  ScalarMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

GammaRep gamma_rep(int n, bool commutative) {
  if (n < 1 || 2 * n + 1 > kMaxDim) throw std::out_of_range("gamma_rep: n out of range");
  GammaRep rep{n, Context::make(2 * n + 1, commutative), {}};
  const Context& ctx = *rep.ctx;
  const int dim = 2 * n + 1;
  rep.gamma.assign(static_cast<std::size_t>(dim), ScalarMatrix(1 << n));

  ScalarMatrix lower(2);
  lower(1, 0) = ExactScalar(1);
  for (int i = 1; i <= n; ++i) {
    ScalarMatrix g = ScalarMatrix::identity(1);
    for (int j = 1; j <= n; ++j) {
      if (j < i)
        g = kron(g, diag2(-ExactScalar::phase(ctx.q(i, j)), ExactScalar(1)));
      else if (j == i)
        g = kron(g, lower);
      else
        g = kron(g, ScalarMatrix::identity(2));
    }
    rep.gamma[static_cast<std::size_t>(i - 1)] = ExactScalar::sqrt2() * g;
  }
  ScalarMatrix chir = ScalarMatrix::identity(1);
  for (int j = 1; j <= n; ++j) chir = kron(chir, diag2(ExactScalar(1), ExactScalar(-1)));
  rep.gamma[static_cast<std::size_t>(n)] = chir;
  for (int i = 1; i <= n; ++i)
    rep.gamma[static_cast<std::size_t>(ctx.primed(i) - 1)] = rep.gamma[static_cast<std::size_t>(i - 1)].conj_transpose();
  return rep;
}

ExactScalar clifford_trace(const GammaRep& rep, std::span<const int> indices) {
  if (static_cast<int>(indices.size()) != 2 * rep.n + 1)
    throw std::invalid_argument("clifford_trace: expected 2n+1 indices");
  ScalarMatrix m = ScalarMatrix::identity(rep.size());
  for (int i : indices) {
    if (i < 1 || i > 2 * rep.n + 1) throw std::out_of_range("clifford_trace: index out of range");
    m = m * rep[i];
  }
  return m.trace();
}

FormMatrix::FormMatrix(ContextPtr ctx, int size)
    : ctx_(std::move(ctx)), size_(size), data_(static_cast<std::size_t>(size) * size, Element(ctx_)) {}

Element FormMatrix::trace() const {
  Element t(ctx_);
  for (int k = 0; k < size_; ++k) t += (*this)(k, k);
  return t;
}

FormMatrix FormMatrix::star_transpose() const {
  FormMatrix m(ctx_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) m(r, c) = star((*this)(c, r));
  return m;
}

FormMatrix FormMatrix::d() const {
  FormMatrix m(ctx_, size_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = twistcalc::d(data_[k]);
  return m;
}

FormMatrix FormMatrix::reduce_mod_c() const {
  FormMatrix m(ctx_, size_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = twistcalc::reduce_mod_c(data_[k]);
  return m;
}

bool FormMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool FormMatrix::sphere_equal(const FormMatrix& o) const {
  if (size_ != o.size_) throw std::invalid_argument("FormMatrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!in_ideal_j(data_[k] - o.data_[k])) return false;
  return true;
}

FormMatrix operator+(const FormMatrix& a, const FormMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("FormMatrix size mismatch");
  FormMatrix m(a.ctx_, a.size_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

FormMatrix operator-(const FormMatrix& a, const FormMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("FormMatrix size mismatch");
  FormMatrix m(a.ctx_, a.size_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

FormMatrix operator-(const FormMatrix& a) {
  FormMatrix m(a.ctx_, a.size_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
  return m;
}

bool operator==(const FormMatrix& a, const FormMatrix& b) {
  return a.size_ == b.size_ && a.data_ == b.data_;
}

namespace {

Element product_entry(const FormMatrix& a, const FormMatrix& b, int r, int c) {
  Element acc(a.ctx());
  for (int k = 0; k < a.size(); ++k) {
    const Element& x = a(r, k);
    const Element& y = b(k, c);
    if (!x.is_zero() && !y.is_zero()) acc += x * y;
  }
  return acc;
}

void check_product(const FormMatrix& a, const FormMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("FormMatrix size mismatch");
  if (!(*a.ctx() == *b.ctx())) throw std::invalid_argument("FormMatrix context mismatch");
}

}  // namespace

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
  check_product(a, b);
  const int s = a.size_;
  FormMatrix m(a.ctx_, s);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < s * s; ++idx) {
    try {
      m.data_[static_cast<std::size_t>(idx)] = product_entry(a, b, idx / s, idx % s);
    } catch (...) {
#pragma omp critical(twistcalc_formmatrix_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return m;
}

FormMatrix multiply_serial(const FormMatrix& a, const FormMatrix& b) {
  check_product(a, b);
  FormMatrix m(a.ctx(), a.size());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) m(r, c) = product_entry(a, b, r, c);
  return m;
}

FormMatrix projector(const GammaRep& rep) {
  const ContextPtr& ctx = rep.ctx;
  const int s = rep.size();
  FormMatrix e(ctx, s);
  const ExactScalar half(Rational(1, 2));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      Element entry(ctx);
      if (r == c) entry += one(ctx);
      for (int i = 1; i <= ctx->dim(); ++i) {
        const ExactScalar& g = rep[i](r, c);
        if (!g.is_zero()) entry += g * x(ctx, ctx->primed(i));
      }
      e(r, c) = half * entry;
    }
  return e;
}

FormMatrix projector(int n, bool commutative) { return projector(gamma_rep(n, commutative)); }

FormMatrix curvature(const FormMatrix& e) {
  for (int r = 0; r < e.size(); ++r)
    for (int c = 0; c < e.size(); ++c) e(r, c).require_form_degree(0, "curvature");
  if (!(e * e - e).reduce_mod_c().is_zero()) throw std::invalid_argument("curvature: input is not a projector");
  const FormMatrix de = e.d();
  return e * de * de;
}

ExactScalar tau_normalization(int sphere_dim) {
  const int h = sphere_dim / 2;
  long long num = 1LL << (h + 1);
  for (int k = 2; k <= h; ++k) num *= k;
  long long den = 1;
  for (int k = 2; k <= sphere_dim; ++k) den *= k;
  return ExactScalar(Rational(num, den)) * ExactScalar::i_pow(-h);
}

ExactScalar character_tau(std::span<const Element> a) {
  if (a.empty()) throw std::invalid_argument("character_tau: no arguments");
  const ContextPtr& ctx = a.front().ctx();
  const int n = ctx->dim() - 1;
  if (static_cast<int>(a.size()) != n + 1)
    throw std::invalid_argument("character_tau: expected N+1 functions on S^N");
  Element w = a.front();
  w.require_form_degree(0, "character_tau");
  for (std::size_t k = 1; k < a.size(); ++k) {
    require_same_context(a.front(), a[k]);
    a[k].require_form_degree(0, "character_tau");
    w = w * d(a[k]);
  }
  return tau_normalization(n) * integrate(SphereForm(w));
}

namespace {

FormMatrix de_power(const FormMatrix& e, int n, bool with_e) {
  const FormMatrix de = e.d();
  FormMatrix acc = with_e ? e : de;
  for (int k = with_e ? 0 : 1; k < 2 * n; ++k) acc = acc * de;
  return acc;
}

}  // namespace

ExactScalar charge_integral(int n, bool commutative) {
  const FormMatrix e = projector(n, commutative);
  return integrate(SphereForm(de_power(e, n, true).trace()));
}

ExactScalar integral_trace_de(int n, bool commutative) {
  const FormMatrix e = projector(n, commutative);
  return integrate(SphereForm(de_power(e, n, false).trace()));
}

ExactScalar charge(int n, bool commutative) {
  long long nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  return ExactScalar(Rational(1, nf)) * tau_normalization(2 * n) * charge_integral(n, commutative);
}

}  // namespace twistcalc
