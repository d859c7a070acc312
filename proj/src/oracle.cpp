#include "twistcalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "twistcalc/chern.hpp"

namespace twistcalc {

namespace {

using PointValue = std::map<std::pair<std::uint16_t, TorusWord>, Complex>;

int wedge_sign(std::uint16_t a, std::uint16_t b) {
  // number of pairs (i in a, j in b) with i > j
  int swaps = 0;
  for (int j = 0; j < 16; ++j)
    if ((b >> j) & 1U) swaps += std::popcount(static_cast<unsigned>(a >> (j + 1)));
  return swaps % 2 == 0 ? 1 : -1;
}

double determinant(std::vector<double> m, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (m[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

TorusModel::TorusModel(ContextPtr ctx, std::vector<int> moduli, std::vector<int> root_powers)
    : ctx_(std::move(ctx)), moduli_(std::move(moduli)) {
  const int np = ctx_->num_params();
  if (static_cast<int>(moduli_.size()) != np || static_cast<int>(root_powers.size()) != np)
    throw std::invalid_argument("TorusModel: need one modulus and one root power per parameter");
  for (int p = 0; p < np; ++p) {
    const int m = moduli_[static_cast<std::size_t>(p)];
    if (m < 2 || m > 255) throw std::invalid_argument("TorusModel: modulus out of range");
    const int k = root_powers[static_cast<std::size_t>(p)];
    if (std::gcd(k, m) != 1) throw std::invalid_argument("TorusModel: root power must be coprime to the modulus");
    roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
  }
  gen_.assign(static_cast<std::size_t>(ctx_->dim()), TorusWord{});
  const auto& params = ctx_->params();
  for (int p = 0; p < np; ++p) {
    const auto [r, s] = params[static_cast<std::size_t>(p)];
    const auto inv = static_cast<std::uint8_t>(moduli_[static_cast<std::size_t>(p)] - 1);
    gen_[static_cast<std::size_t>(r - 1)].clock[p] = 1;
    gen_[static_cast<std::size_t>(s - 1)].shift[p] = 1;
    gen_[static_cast<std::size_t>(ctx_->primed(r) - 1)].clock[p] = inv;
    gen_[static_cast<std::size_t>(ctx_->primed(s) - 1)].shift[p] = inv;
  }
}

Complex TorusModel::multiply(const TorusWord& a, const TorusWord& b, TorusWord& out) const {
  Complex phase = 1.0;
  TorusWord r;
  for (int p = 0; p < num_params(); ++p) {
    const int m = modulus(p);
    const int e = (a.clock[p] * b.shift[p]) % m;
    if (e != 0) phase *= std::pow(root(p), e);
    r.shift[p] = static_cast<std::uint8_t>((a.shift[p] + b.shift[p]) % m);
    r.clock[p] = static_cast<std::uint8_t>((a.clock[p] + b.clock[p]) % m);
  }
  out = r;
  return phase;
}

double TorusModel::normalized_trace(const TorusWord& w) const { return w == TorusWord{} ? 1.0 : 0.0; }

double TorusModel::max_entry(const PointValue& value) const {
  // S^s C^c has entry zeta^{c j} at (j+s, j): words with equal (mask, s) overlap.
  using Group = std::pair<std::uint16_t, std::array<std::uint8_t, kMaxParams>>;
  std::map<Group, std::vector<std::pair<const TorusWord*, Complex>>> groups;
  for (const auto& [key, c] : value) groups[{key.first, key.second.shift}].push_back({&key.second, c});
  const int np = num_params();
  double best = 0.0;
  for (const auto& [g, members] : groups) {
    std::vector<int> j(static_cast<std::size_t>(np), 0);
    while (true) {
      Complex entry = 0.0;
      for (const auto& [w, c] : members) {
        Complex t = c;
        for (int p = 0; p < np; ++p) {
          const int e = (w->clock[p] * j[static_cast<std::size_t>(p)]) % modulus(p);
          if (e != 0) t *= std::pow(root(p), e);
        }
        entry += t;
      }
      best = std::max(best, std::abs(entry));
      int p = 0;
      for (; p < np; ++p) {
        if (++j[static_cast<std::size_t>(p)] < modulus(p)) break;
        j[static_cast<std::size_t>(p)] = 0;
      }
      if (p == np) break;
    }
  }
  return best;
}

std::vector<int> default_moduli(int count) {
  static constexpr int kPrimes[] = {13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  if (count > static_cast<int>(std::size(kPrimes))) throw std::invalid_argument("too many parameters");
  return {kPrimes, kPrimes + count};
}

std::vector<TorusModel> make_models(const ContextPtr& ctx, const OracleOptions& opt) {
  const int np = ctx->num_params();
  std::vector<int> moduli = opt.moduli;
  if (moduli.empty()) moduli = default_moduli(np);
  if (static_cast<int>(moduli.size()) < np)
    throw std::invalid_argument("oracle: need " + std::to_string(np) + " moduli for D=" + std::to_string(ctx->dim()));
  moduli.resize(static_cast<std::size_t>(np));
  std::vector<TorusModel> out;
  for (int r = 1; r <= opt.root_choices; ++r) {
    std::vector<int> powers;
    for (int m : moduli) {
      int k = r % m;
      while (std::gcd(k, m) != 1) ++k;
      powers.push_back(k);
    }
    out.emplace_back(ctx, moduli, powers);
  }
  return out;
}

ModelValue eval_element(const TorusModel& model, const Element& f) {
  if (!(*model.ctx() == f.context())) throw std::invalid_argument("oracle: context mismatch");
  const int dim = f.context().dim();
  ModelValue out;
  for (const auto& [m, s] : f.terms()) {
    ModelKey key;
    key.x = m.x;
    key.dx = m.dx;
    Complex c = model.eval_scalar(s);
    for (int a = 1; a <= dim; ++a)
      for (int k = 0; k < m.x[static_cast<std::size_t>(a - 1)]; ++k)
        c *= model.multiply(key.word, model.generator_word(a), key.word);
    for (int a = 1; a <= dim; ++a)
      if (m.has_dx(a)) c *= model.multiply(key.word, model.generator_word(a), key.word);
    out[key] += c;
  }
  return out;
}

ModelValue model_mul(const TorusModel& model, const ModelValue& a, const ModelValue& b) {
  ModelValue out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.dx & kb.dx) continue;
      ModelKey k;
      for (int i = 0; i < kMaxDim; ++i) k.x[i] = static_cast<std::uint8_t>(ka.x[i] + kb.x[i]);
      k.dx = static_cast<std::uint16_t>(ka.dx | kb.dx);
      const Complex phase = model.multiply(ka.word, kb.word, k.word);
      out[k] += static_cast<double>(wedge_sign(ka.dx, kb.dx)) * phase * ca * cb;
    }
  return out;
}

ModelValue model_add(const ModelValue& a, const ModelValue& b, Complex scale) {
  ModelValue out = a;
  for (const auto& [k, c] : b) out[k] += scale * c;
  return out;
}

ModelValue eval_word(const TorusModel& model, std::span<const Generator> word) {
  const int dim = model.ctx()->dim();
  ModelValue acc{{ModelKey{}, 1.0}};
  for (const auto& g : word) {
    if (g.index < 1 || g.index > dim) throw std::out_of_range("oracle: generator index out of range");
    ModelKey k;
    k.word = model.generator_word(g.index);
    if (g.kind == Generator::Kind::X)
      k.x[static_cast<std::size_t>(g.index - 1)] = 1;
    else
      k.dx = static_cast<std::uint16_t>(1U << (g.index - 1));
    acc = model_mul(model, acc, ModelValue{{k, 1.0}});
  }
  return acc;
}

ModelValue classical_dc(const TorusModel& model) {
  const Context& ctx = *model.ctx();
  ModelValue out;
  for (int a = 1; a <= ctx.dim(); ++a) {
    ModelKey k;
    k.x[static_cast<std::size_t>(ctx.primed(a) - 1)] = 1;
    k.dx = static_cast<std::uint16_t>(1U << (a - 1));
    out[k] += 2.0;
  }
  return out;
}

ModelValue classical_hodge(const TorusModel& model, const ModelValue& v) {
  const Context& ctx = *model.ctx();
  const int dim = ctx.dim();
  const std::uint16_t full = static_cast<std::uint16_t>((1U << dim) - 1);
  ModelValue out;
  for (const auto& [key, c] : v) {
    std::vector<int> b;
    for (int a = 1; a <= dim; ++a)
      if ((key.dx >> (a - 1)) & 1U) b.push_back(a);
    std::uint16_t amask = 0;
    for (int x : b) amask = static_cast<std::uint16_t>(amask | (1U << (ctx.primed(x) - 1)));
    std::vector<int> av;
    for (int a = 1; a <= dim; ++a)
      if ((amask >> (a - 1)) & 1U) av.push_back(a);
    const int k = static_cast<int>(b.size());
    std::vector<double> gram(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gram[static_cast<std::size_t>(i * k + j)] = (b[j] == ctx.primed(av[i])) ? 1.0 : 0.0;
    const double pairing = k == 0 ? 1.0 : determinant(gram, k);
    const auto comp = static_cast<std::uint16_t>(full & ~amask);
    ModelKey nk = key;
    nk.dx = comp;
    out[nk] += c * pairing * static_cast<double>(wedge_sign(amask, comp)) * i_power(dim / 2);
  }
  return out;
}

std::vector<Complex> complex_coordinates(const Context& ctx, std::span<const double> y) {
  const int dim = ctx.dim();
  if (static_cast<int>(y.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  std::vector<Complex> x0(static_cast<std::size_t>(dim));
  const double r = 1.0 / std::sqrt(2.0);
  for (int a = 1; a <= dim; ++a) {
    const int ap = ctx.primed(a);
    const auto ia = static_cast<std::size_t>(a - 1);
    const auto ip = static_cast<std::size_t>(ap - 1);
    if (a < ap)
      x0[ia] = r * Complex(y[ia], y[ip]);
    else if (a > ap)
      x0[ia] = r * Complex(y[ip], -y[ia]);
    else
      x0[ia] = y[ia];
  }
  return x0;
}

PointValue evaluate_at(const ModelValue& v, std::span<const Complex> x0) {
  PointValue out;
  for (const auto& [key, c] : v) {
    Complex t = c;
    for (std::size_t a = 0; a < x0.size(); ++a)
      for (int e = 0; e < key.x[a]; ++e) t *= x0[a];
    out[{key.dx, key.word}] += t;
  }
  return out;
}

std::vector<std::vector<double>> sample_points(int dim, Space space, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  for (int k = 0; k < count; ++k) {
    std::vector<double> y(static_cast<std::size_t>(dim));
    double norm = 0.0;
    for (auto& v : y) {
      v = gauss(rng);
      norm += v * v;
    }
    if (space == Space::Sphere)
      for (auto& v : y) v /= std::sqrt(norm);
    pts.push_back(std::move(y));
  }
  return pts;
}

namespace {

ModelValue prepare(const TorusModel& model, const ModelValue& v, Space space) {
  return space == Space::Sphere ? model_mul(model, v, classical_dc(model)) : v;
}

double point_magnitude(const TorusModel& model, const ModelValue& v, const std::vector<double>& y) {
  const auto x0 = complex_coordinates(*model.ctx(), y);
  return model.max_entry(evaluate_at(v, x0));
}

IdentityReport finish(double worst, int evals, const OracleOptions& opt) {
  IdentityReport r;
  r.max_magnitude = worst;
  r.evaluations = evals;
  r.seed = opt.seed;
  r.pass = worst < opt.tolerance;
  return r;
}

}  // namespace

IdentityReport check_model_value(const TorusModel& model, const ModelValue& v, Space space,
                                 const OracleOptions& opt) {
  const ModelValue w = prepare(model, v, space);
  const auto pts = sample_points(model.ctx()->dim(), space, opt.points, opt.seed);
  double worst = 0.0;
  const int n = static_cast<int>(pts.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (int k = 0; k < n; ++k) worst = std::max(worst, point_magnitude(model, w, pts[static_cast<std::size_t>(k)]));
  return finish(worst, n, opt);
}

IdentityReport check_identity(const Element& f, Space space, const OracleOptions& opt) {
  const auto models = make_models(f.ctx(), opt);
  const auto pts = sample_points(f.context().dim(), space, opt.points, opt.seed);
  std::vector<ModelValue> images;
  for (const auto& m : models) images.push_back(prepare(m, eval_element(m, f), space));
  const int nm = static_cast<int>(models.size());
  const int np = static_cast<int>(pts.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(dynamic)
  for (int idx = 0; idx < nm * np; ++idx) {
    const auto mi = static_cast<std::size_t>(idx / np);
    const auto pi = static_cast<std::size_t>(idx % np);
    worst = std::max(worst, point_magnitude(models[mi], images[mi], pts[pi]));
  }
  return finish(worst, nm * np, opt);
}

IdentityReport check_identity_serial(const Element& f, Space space, const OracleOptions& opt) {
  const auto pts = sample_points(f.context().dim(), space, opt.points, opt.seed);
  double worst = 0.0;
  int evals = 0;
  for (const auto& m : make_models(f.ctx(), opt)) {
    const ModelValue image = prepare(m, eval_element(m, f), space);
    for (const auto& y : pts) {
      worst = std::max(worst, point_magnitude(m, image, y));
      ++evals;
    }
  }
  return finish(worst, evals, opt);
}

Coeff classical_moment(const Context& ctx, const std::array<std::uint8_t, kMaxDim>& exponents) {
  const int dim = ctx.dim();
  using Poly = std::map<std::array<std::uint8_t, kMaxDim>, Coeff>;
  const Coeff half_sqrt2{{}, {}, Rational(1, 2), {}};
  const Coeff half_i_sqrt2{{}, {}, {}, Rational(1, 2)};
  Poly poly{{{}, Coeff::one()}};
  for (int a = 1; a <= dim; ++a) {
    const int ap = ctx.primed(a);
    std::vector<std::pair<int, Coeff>> lin;
    if (a < ap)
      lin = {{a, half_sqrt2}, {ap, half_i_sqrt2}};
    else if (a > ap)
      lin = {{ap, half_sqrt2}, {a, -half_i_sqrt2}};
    else
      lin = {{a, Coeff::one()}};
    for (int e = 0; e < exponents[static_cast<std::size_t>(a - 1)]; ++e) {
      Poly next;
      for (const auto& [mono, c] : poly)
        for (const auto& [var, lc] : lin) {
          auto m2 = mono;
          ++m2[static_cast<std::size_t>(var - 1)];
          next[m2] = next[m2] + c * lc;
        }
      poly = std::move(next);
    }
  }
  Coeff total{};
  for (const auto& [mono, c] : poly) {
    if (c.is_zero()) continue;
    int deg = 0;
    bool even = true;
    Rational num(1);
    for (int v = 0; v < dim; ++v) {
      const int al = mono[static_cast<std::size_t>(v)];
      if (al % 2) even = false;
      for (int t = al - 1; t > 0; t -= 2) num = num * Rational(t);
      deg += al;
    }
    if (!even) continue;
    Rational den(1);
    for (int k = 0; k < deg / 2; ++k) den = den * Rational(dim + 2 * k);
    total = total + c * (num / den);
  }
  return total;
}

Complex numeric_haar(const TorusModel& model, const ModelValue& f) {
  std::map<std::array<std::uint8_t, kMaxDim>, Complex> moments;
  Complex total = 0.0;
  for (const auto& [key, c] : f) {
    if (key.dx != 0) throw std::invalid_argument("numeric_haar: expected a function");
    const double tr = model.normalized_trace(key.word);
    if (tr == 0.0) continue;
    auto it = moments.find(key.x);
    if (it == moments.end()) it = moments.emplace(key.x, classical_moment(*model.ctx(), key.x).to_complex()).first;
    total += c * tr * it->second;
  }
  return total;
}

Complex numeric_haar(const TorusModel& model, const Element& f) { return numeric_haar(model, eval_element(model, f)); }

Complex numeric_integrate(const TorusModel& model, const Element& w) {
  const int dim = model.ctx()->dim();
  const auto full = static_cast<std::uint16_t>((1U << dim) - 1);
  const ModelValue top = model_mul(model, eval_element(model, w), classical_dc(model));
  ModelValue f;
  const Complex norm = 0.5 / i_power(dim / 2);
  for (const auto& [key, c] : top) {
    if (key.dx != full) throw std::invalid_argument("numeric_integrate: expected an N-form");
    ModelKey k = key;
    k.dx = 0;
    f[k] += norm * c;
  }
  return numeric_haar(model, f);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.size);
  for (int r = 0; r < a.size; ++r)
    for (int k = 0; k < a.size; ++k)
      for (int c = 0; c < a.size; ++c) m(r, c) += a(r, k) * b(k, c);
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.size);
  for (std::size_t k = 0; k < a.data.size(); ++k) m.data[k] = a.data[k] + b.data[k];
  return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix m(a.size);
  for (std::size_t k = 0; k < a.data.size(); ++k) m.data[k] = s * a.data[k];
  return m;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& v : data) best = std::max(best, std::abs(v));
  return best;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int k = 0; k < size; ++k) t += (*this)(k, k);
  return t;
}

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.size * b.size);
  for (int r1 = 0; r1 < a.size; ++r1)
    for (int c1 = 0; c1 < a.size; ++c1)
      for (int r2 = 0; r2 < b.size; ++r2)
        for (int c2 = 0; c2 < b.size; ++c2) m(r1 * b.size + r2, c1 * b.size + c2) = a(r1, c1) * b(r2, c2);
  return m;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix m(a.size);
  for (int r = 0; r < a.size; ++r)
    for (int c = 0; c < a.size; ++c) m(r, c) = std::conj(a(c, r));
  return m;
}

ComplexMatrix diag(Complex a, Complex b) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

std::vector<ComplexMatrix> classical_gammas(int n) {
  const int dim = 2 * n + 1;
  std::vector<ComplexMatrix> g(static_cast<std::size_t>(dim));
  ComplexMatrix lower(2);
  lower(1, 0) = 1.0;
  for (int i = 1; i <= n; ++i) {
    ComplexMatrix m(1);
    m(0, 0) = std::sqrt(2.0);
    for (int j = 1; j <= n; ++j) m = kron(m, j < i ? diag(-1.0, 1.0) : j == i ? lower : diag(1.0, 1.0));
    g[static_cast<std::size_t>(i - 1)] = m;
    g[static_cast<std::size_t>(dim - i)] = dagger(m);
  }
  ComplexMatrix z(1);
  z(0, 0) = 1.0;
  for (int j = 1; j <= n; ++j) z = kron(z, diag(1.0, -1.0));
  g[static_cast<std::size_t>(n)] = z;
  return g;
}

double bott_curvature_discrepancy(const FormMatrix& F, int n, int points, std::uint64_t seed) {
  const ContextPtr& ctx = F.ctx();
  const int dim = 2 * n + 1;
  if (ctx->dim() != dim || !ctx->commutative())
    throw std::invalid_argument("bott_curvature_discrepancy: expects the commutative context of S^{2n}");
  const TorusModel model(ctx, {}, {});
  const auto gam = classical_gammas(n);
  const int s = 1 << n;
  std::vector<std::vector<ModelValue>> images(static_cast<std::size_t>(s));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) images[static_cast<std::size_t>(r)].push_back(eval_element(model, F(r, c)));

  double worst = 0.0;
  for (const auto& y : sample_points(dim, Space::Sphere, points, seed)) {
    const auto x0 = complex_coordinates(*ctx, y);
    ComplexMatrix e(s);
    for (int k = 0; k < s; ++k) e(k, k) = 0.5;
    for (int i = 1; i <= dim; ++i) e = e + (0.5 * x0[static_cast<std::size_t>(dim - i)]) * gam[static_cast<std::size_t>(i - 1)];
    // d e / d x0^a = gamma^{a'} / 2
    for (int a = 1; a <= dim; ++a)
      for (int b = a + 1; b <= dim; ++b) {
        const auto& ga = gam[static_cast<std::size_t>(dim - a)];
        const auto& gb = gam[static_cast<std::size_t>(dim - b)];
        const ComplexMatrix comp = 0.25 * (e * (ga * gb + (-1.0) * (gb * ga)));
        const auto mask = static_cast<std::uint16_t>((1U << (a - 1)) | (1U << (b - 1)));
        for (int r = 0; r < s; ++r)
          for (int c = 0; c < s; ++c) {
            Complex got = 0.0;
            for (const auto& [key, v] : evaluate_at(images[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], x0))
              if (key.first == mask) got += v;
            worst = std::max(worst, std::abs(got - comp(r, c)));
          }
      }
  }
  return worst;
}

}  // namespace twistcalc
