#include "twistcalc/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "twistcalc/chern.hpp"
#include "twistcalc/haar.hpp"
#include "twistcalc/parse.hpp"
#include "twistcalc/sphere.hpp"
#include "twistcalc/tensorcalc.hpp"

namespace twistcalc {

// ---------------------------------------------------------------- CaseLog

void CaseLog::check(bool ok, const std::string& name, const std::string& expression,
                    const std::string& expected, const std::string& got) {
  ++cases_;
  names_.insert(name);
  if (!ok) failures_.push_back({name, expression, expected, got});
}

void CaseLog::element_equal(const std::string& name, const Element& got, const Element& expected, Space) {
  ++cases_;
  names_.insert(name);
  if (!(got == expected)) failures_.push_back({name, {}, to_string(expected), to_string(got)});
}

void CaseLog::sphere_equal(const std::string& name, const Element& got, const Element& expected) {
  ++cases_;
  names_.insert(name);
  const Element diff = got - expected;
  if (!in_ideal_j(diff)) failures_.push_back({name, "sphere class", to_string(expected), to_string(got)});
  if (oracle_) export_identity(name, diff, Space::Sphere);
}

void CaseLog::scalar_equal(const std::string& name, const Context& ctx, const ExactScalar& got,
                           const ExactScalar& expected) {
  ++cases_;
  names_.insert(name);
  if (!(got == expected)) failures_.push_back({name, {}, to_string(ctx, expected), to_string(ctx, got)});
}

void CaseLog::oracle_case(const std::string& name, double magnitude, double tolerance) {
  ++oracle_cases_;
  worst_ = std::max(worst_, magnitude);
  if (!(magnitude < tolerance))
    oracle_failures_.push_back({name, "numeric model", "< " + std::to_string(tolerance), std::to_string(magnitude)});
}

void CaseLog::export_identity(const std::string& name, const Element& diff, Space space) {
  const IdentityReport r = check_identity(diff, space, *oracle_);
  oracle_case(name, r.max_magnitude, oracle_->tolerance);
}

// ---------------------------------------------------------------- random data

ExactScalar RandomElements::scalar() {
  int v = uniform(-3, 2);
  if (v >= 0) ++v;
  ExactScalar s(v);
  if (uniform(0, 3) == 0) s = s * ExactScalar::i();
  PhaseMonomial p;
  for (int k = 0; k < ctx_->num_params(); ++k) p.exp[k] = static_cast<std::int16_t>(uniform(-1, 1));
  return s.times_phase(p);
}

Monomial RandomElements::x_monomial(int max_degree) {
  Monomial m;
  const int deg = uniform(0, max_degree);
  for (int k = 0; k < deg; ++k) ++m.x[static_cast<std::size_t>(uniform(1, ctx_->dim()) - 1)];
  return m;
}

Element RandomElements::function(int max_degree, int terms) {
  Element f(ctx_);
  for (int t = 0; t < terms; ++t) f += Element(ctx_, x_monomial(max_degree), scalar());
  return f;
}

Element RandomElements::form(int k, int max_degree, int terms) {
  Element f(ctx_);
  const int dim = ctx_->dim();
  for (int t = 0; t < terms; ++t) {
    Monomial m = x_monomial(max_degree);
    std::vector<int> idx(static_cast<std::size_t>(dim));
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), rng_);
    for (int j = 0; j < k; ++j) m.dx = static_cast<std::uint16_t>(m.dx | (1U << (idx[static_cast<std::size_t>(j)] - 1)));
    f += Element(ctx_, m, scalar());
  }
  return f;
}

std::vector<Generator> RandomElements::word(int length) {
  std::vector<Generator> w;
  for (int k = 0; k < length; ++k) {
    const int a = uniform(1, ctx_->dim());
    w.push_back(uniform(0, 2) == 0 ? Generator::dx(a) : Generator::x(a));
  }
  return w;
}

std::vector<Monomial> x_monomials_up_to(int dim, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == dim) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.x[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
      rec(var + 1, left - e);
    }
    cur.x[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, max_degree);
  return out;
}

namespace {

std::string tuple_str(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

std::string dstr(int dim) { return "D=" + std::to_string(dim); }

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

bool distinct(const IndexTuple& t) {
  IndexTuple s = t;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void all_tuples(int dim, int k, const std::function<void(const IndexTuple&)>& f) {
  IndexTuple t(static_cast<std::size_t>(k), 1);
  while (true) {
    f(t);
    int p = k - 1;
    for (; p >= 0; --p) {
      if (++t[static_cast<std::size_t>(p)] <= dim) break;
      t[static_cast<std::size_t>(p)] = 1;
    }
    if (p < 0) return;
  }
}

IndexTuple complement(int dim, const IndexTuple& t) {
  IndexTuple c;
  for (int a = 1; a <= dim; ++a)
    if (std::find(t.begin(), t.end(), a) == t.end()) c.push_back(a);
  return c;
}

IndexTuple concat(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Element basis_form(const ContextPtr& ctx, const IndexTuple& asc) { return wedge_word(ctx, asc); }

std::vector<Generator> dx_word(const IndexTuple& t) {
  std::vector<Generator> w;
  for (int a : t) w.push_back(Generator::dx(a));
  return w;
}

double model_magnitude(const TorusModel& m, const ModelValue& v, Space space, const OracleOptions& opt) {
  return check_model_value(m, v, space, opt).max_magnitude;
}

// Coefficient of the single key in the image of a dx word, with its key.
std::pair<ModelKey, Complex> word_image(const TorusModel& m, const IndexTuple& t) {
  const ModelValue v = eval_word(m, dx_word(t));
  if (v.empty()) return {ModelKey{}, 0.0};
  return *v.begin();
}

// Numeric W^I_J read off the model: dx^I = W dx^J for J a permutation of distinct I.
class NumericWedge {
 public:
  explicit NumericWedge(const TorusModel& m) : m_(m) {}
  Complex ratio(const IndexTuple& i, const IndexTuple& j) {
    if (!distinct(i)) return 0.0;
    IndexTuple si = i, sj = j;
    std::sort(si.begin(), si.end());
    std::sort(sj.begin(), sj.end());
    if (si != sj) return 0.0;
    const auto& a = image(i);
    const auto& b = image(j);
    if (!(a.first == b.first)) return std::nan("");
    return a.second / b.second;
  }
  Complex epsilon(const IndexTuple& i) {
    IndexTuple id(static_cast<std::size_t>(m_.ctx()->dim()));
    std::iota(id.begin(), id.end(), 1);
    return ratio(i, id);
  }

 private:
  const std::pair<ModelKey, Complex>& image(const IndexTuple& t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, word_image(m_, t)).first;
    return it->second;
  }
  const TorusModel& m_;
  std::map<IndexTuple, std::pair<ModelKey, Complex>> cache_;
};

}  // namespace

// ---------------------------------------------------------------- qphase

void check_qphase(CaseLog& log, int max_dim, std::uint64_t seed) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Context& c = *ctx;
    const int h = dim / 2;
    log.check(c.num_params() == h * (h - 1) / 2, "independent parameter count " + dstr(dim));
    for (int p = 1; p <= dim; ++p) {
      PhaseMonomial prod;
      for (int i = 1; i <= dim; ++i) prod += reduce_pair(c, i, p);
      log.check(prod.is_one(), "column product of q_ip is 1, p=" + std::to_string(p) + " " + dstr(dim));
    }
    bool antisym = true, primed = true, diag = true, table = true;
    for (int a = 1; a <= dim; ++a) {
      diag = diag && reduce_pair(c, a, a).is_one() && reduce_pair(c, a, c.primed(a)).is_one();
      for (int b = 1; b <= dim; ++b) {
        antisym = antisym && (reduce_pair(c, a, b) + reduce_pair(c, b, a)).is_one();
        primed = primed && reduce_pair(c, a, b) == reduce_pair(c, c.primed(a), c.primed(b));
        table = table && reduce_pair(c, a, b) == c.q(a, b);
      }
    }
    log.check(antisym, "q_ab q_ba = 1 " + dstr(dim));
    log.check(primed, "q_ab = q_a'b' " + dstr(dim));
    log.check(diag, "q_aa = q_aa' = 1 " + dstr(dim));
    log.check(table, "context table matches reduce_pair " + dstr(dim));
    bool inv = true;
    for (int a = 1; a <= dim; ++a) inv = inv && c.primed(c.primed(a)) == a;
    log.check(inv, "priming is an involution " + dstr(dim));
  }

  const auto c5 = Context::make(5);
  PhaseMonomial e12;
  e12.exp[0] = 1;
  log.check(reduce_pair(*c5, 1, 2) == e12, "reduce_pair(1,2) = q12");
  log.check(reduce_pair(*c5, 4, 5) == e12.inverse(), "reduce_pair(4,5) = q12^-1");
  log.check(reduce_pair(*c5, 3, 1).is_one(), "reduce_pair(3,1) = 1");
  bool threw = false;
  try {
    (void)reduce_pair(*c5, 0, 6);
  } catch (const std::out_of_range&) {
    threw = true;
  }
  log.check(threw, "reduce_pair rejects out-of-range indices");

  const ExactScalar q12 = ExactScalar::phase(e12);
  log.scalar_equal("conj(i q12) = -i q12^-1", *c5, (ExactScalar::i() * q12).conj(),
                   -ExactScalar::i() * ExactScalar::phase(e12.inverse()));
  const double theta[] = {std::numbers::pi};
  log.check(std::abs(q12.eval(theta) - Complex(-1.0, 0.0)) < 1e-12, "eval(q12, pi) = -1");
  log.scalar_equal("q12 q21 = 1", *c5, q12 * ExactScalar::phase(c5->q(2, 1)), ExactScalar(1));

  const auto c7 = Context::make(7);
  RandomElements rnd(c7, seed);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    ExactScalar s = rnd.scalar() * ExactScalar::sqrt2() + rnd.scalar();
    log.scalar_equal("conj conj = id", *c7, s.conj().conj(), s);
    std::vector<double> th(static_cast<std::size_t>(c7->num_params()));
    for (auto& v : th) v = ang(rnd.engine());
    log.check(std::abs(s.conj().eval(th) - std::conj(s.eval(th))) < 1e-12, "eval commutes with conj");
    ExactScalar u = rnd.scalar();
    log.check(std::abs((s * u).eval(th) - s.eval(th) * u.eval(th)) < 1e-12, "eval is multiplicative");
  }
}

// ---------------------------------------------------------------- ncalg

void check_ncalg(CaseLog& log, int max_dim, std::uint64_t seed) {
  {
    const auto c = Context::make(5);
    const ExactScalar q12 = ExactScalar::phase(c->q(1, 2));
    const ExactScalar q21 = ExactScalar::phase(c->q(2, 1));
    log.element_equal("x2 x1 = q12^-1 x1 x2", x(c, 2) * x(c, 1), q21 * (x(c, 1) * x(c, 2)));
    log.element_equal("dx1 dx1 = 0", dx(c, 1) * dx(c, 1), Element(c));
    log.element_equal("dx3 x1 = x1 dx3", dx(c, 3) * x(c, 1), Element(c, Monomial{{1}, 0b100}));
    log.element_equal("x1 * 1 = x1", x(c, 1) * one(c), x(c, 1));
    log.element_equal("x2 (x1 x2) = q12^-1 x1 x2^2", x(c, 2) * (x(c, 1) * x(c, 2)),
                      Element(c, x_monomial({{1, 1}, {2, 2}}), q21));
    log.element_equal("d x1 = dx1", d(x(c, 1)), dx(c, 1));
    log.element_equal("d(x1 x2) = dx1 x2 + x1 dx2", d(x(c, 1) * x(c, 2)), dx(c, 1) * x(c, 2) + x(c, 1) * dx(c, 2));
    log.element_equal("star x1 = x5", star(x(c, 1)), x(c, 5));
    log.element_equal("star(dx1 dx2) = -dx4 dx5", star(dx(c, 1) * dx(c, 2)), -(dx(c, 4) * dx(c, 5)));
    (void)q12;
  }

  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto c = Context::make(dim);
    RandomElements rnd(c, seed + static_cast<std::uint64_t>(dim));
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(c, log.oracle_options());

    // confluence: one relation applied by hand against the full normal form
    for (int t = 0; t < 30; ++t) {
      auto w = rnd.word(rnd.uniform(2, 8));
      const Element n0 = normal_order(c, w);
      Element left = one(c);
      for (const auto& g : w) left = left * normal_order(c, std::span(&g, 1));
      Element right = one(c);
      for (auto it = w.rbegin(); it != w.rend(); ++it) right = normal_order(c, std::span(&*it, 1)) * right;
      log.element_equal("left fold = normal order " + dstr(dim), left, n0);
      log.element_equal("right fold = normal order " + dstr(dim), right, n0);
      const auto pos = static_cast<std::size_t>(rnd.uniform(0, static_cast<int>(w.size()) - 2));
      auto w2 = w;
      std::swap(w2[pos], w2[pos + 1]);
      ExactScalar f = ExactScalar::phase(c->q(w[pos].index, w[pos + 1].index));
      if (w[pos].kind == Generator::Kind::DX && w[pos + 1].kind == Generator::Kind::DX) f = -f;
      log.element_equal("adjacent swap relation " + dstr(dim), n0, f * normal_order(c, w2));
      if (models)
        for (const auto& m : *models)
          log.oracle_case("word image = normal form image " + dstr(dim),
                          model_magnitude(m, model_add(eval_word(m, w), eval_element(m, n0), -1.0), Space::Plane,
                                          log.oracle_options()),
                          log.oracle_options().tolerance);
    }

    for (int t = 0; t < (dim <= 5 ? 50 : 10); ++t) {
      const int k1 = rnd.uniform(0, std::max(0, dim - 2));
      const int k2 = rnd.uniform(0, 1);
      const Element f = rnd.form(k1, 4, 2);
      const Element g = rnd.form(k2, 2, 2);
      const Element h = rnd.function(2, 2);
      log.element_equal("d d f = 0 " + dstr(dim), d(d(f)), Element(c));
      const Element lhs = d(f * g);
      const Element rhs = d(f) * g + ((k1 % 2) ? -(f * d(g)) : f * d(g));
      log.element_equal("graded Leibniz " + dstr(dim), lhs, rhs);
      log.element_equal("associativity " + dstr(dim), (f * g) * h, f * (g * h));
      log.element_equal("star involution " + dstr(dim), star(star(f)), f);
      const Element sfg = star(f * g);
      const Element sg_sf = star(g) * star(f);
      log.element_equal("star graded antihomomorphism " + dstr(dim), sfg, (k1 * k2) % 2 ? -sg_sf : sg_sf);
      log.element_equal("star d = d star " + dstr(dim), star(d(f)), d(star(f)));
    }

    const Element v = volume_plane(c);
    for (int a = 1; a <= dim; ++a) log.element_equal("V central " + dstr(dim), x(c, a) * v, v * x(c, a));
    log.element_equal("V real " + dstr(dim), star(v), v);

    if (dim <= 5) {
      for (int k = 0; k <= dim; ++k) {
        std::set<Monomial> seen;
        bool single = true, repeats_vanish = true;
        all_tuples(dim, k, [&](const IndexTuple& t) {
          const Element e = normal_order(c, dx_word(t));
          if (distinct(t)) {
            single = single && e.size() == 1;
            if (!e.is_zero()) seen.insert(e.terms().begin()->first);
          } else {
            repeats_vanish = repeats_vanish && e.is_zero();
          }
        });
        const auto expect = static_cast<std::size_t>(factorial(dim) / (factorial(k) * factorial(dim - k)));
        log.check((k == 0 || seen.size() == expect) && single && repeats_vanish,
                  "Omega_k has dimension C(D,k), k=" + std::to_string(k) + " " + dstr(dim));
      }
    }
  }
}

// ---------------------------------------------------------------- tensorcalc

void check_lambda(CaseLog& log, int max_dim) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Context& c = *ctx;
    // Sparse rows of Lambda: (a,b) -> (col, value).
    std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, ExactScalar>>> rows;
    for (int a = 1; a <= dim; ++a)
      for (int b = 1; b <= dim; ++b)
        for (int p = 1; p <= dim; ++p)
          for (int r = 1; r <= dim; ++r) {
            ExactScalar v = lambda_entry(c, a, b, p, r);
            if (!v.is_zero()) rows[{a, b}].push_back({{p, r}, v});
          }
    bool sq = true;
    for (int a = 1; a <= dim; ++a)
      for (int b = 1; b <= dim; ++b) {
        std::map<std::pair<int, int>, ExactScalar> acc;
        for (const auto& [mid, v] : rows[{a, b}])
          for (const auto& [col, w] : rows[mid]) acc[col] += v * w;
        std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
        sq = sq && acc.size() == 1 && acc.begin()->first == std::make_pair(a, b) && acc.begin()->second == ExactScalar(1);
      }
    log.check(sq, "Lambda^2 = 1 " + dstr(dim));

    using Vec = std::map<IndexTuple, ExactScalar>;
    auto apply = [&](const Vec& in, std::size_t pos) {
      Vec out;
      for (const auto& [t, v] : in)
        for (const auto& [col, w] : rows[{t[pos], t[pos + 1]}]) {
          IndexTuple u = t;
          u[pos] = col.first;
          u[pos + 1] = col.second;
          out[u] += v * w;
        }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
      return out;
    };
    bool braid = true;
    all_tuples(dim, 3, [&](const IndexTuple& t) {
      const Vec e{{t, ExactScalar(1)}};
      braid = braid && apply(apply(apply(e, 0), 1), 0) == apply(apply(apply(e, 1), 0), 1);
    });
    log.check(braid, "braid equation L12 L23 L12 = L23 L12 L23 " + dstr(dim));
    if (log.oracle_enabled()) {
      for (const auto& m : make_models(ctx, log.oracle_options())) {
        double worst = 0.0;
        all_tuples(dim, 3, [&](const IndexTuple& t) {
          // numeric braid on basis vectors using the model's phases
          auto num = [&](const IndexTuple& in, std::initializer_list<std::size_t> order) {
            IndexTuple u = in;
            Complex z = 1.0;
            for (auto pos : order) {
              z *= m.eval_scalar(lambda_entry(c, u[pos], u[pos + 1], u[pos + 1], u[pos]));
              std::swap(u[pos], u[pos + 1]);
            }
            return std::make_pair(u, z);
          };
          auto l = num(t, {0, 1, 0});
          auto r = num(t, {1, 0, 1});
          worst = std::max(worst, l.first == r.first ? std::abs(l.second - r.second) : 1.0);
        });
        log.oracle_case("numeric braid equation " + dstr(dim), worst, log.oracle_options().tolerance);
      }
    }
  }
}

void check_antisymmetrizer(CaseLog& log, int max_dim, int max_k) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Context& c = *ctx;
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());

    for (int k = 1; k <= std::min(max_k, dim); ++k) {
      bool agree = true;
      all_tuples(dim, k, [&](const IndexTuple& upper) {
        // signed sum over permutations of Lambda words (bubble-sort decomposition)
        std::map<IndexTuple, ExactScalar> brute;
        IndexTuple perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
          IndexTuple p = perm;
          IndexTuple row = upper;
          ExactScalar v(1);
          int sign = 1;
          for (int i = 0; i < k; ++i)
            for (int j = 0; j + 1 < k - i; ++j)
              if (p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(j + 1)]) {
                std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j + 1)]);
                v = v * ExactScalar::phase(c.q(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j + 1)]));
                std::swap(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j + 1)]);
                sign = -sign;
              }
          brute[row] += sign > 0 ? v : -v;
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::erase_if(brute, [](const auto& kv) { return kv.second.is_zero(); });
        agree = agree && brute == antisym_row(c, upper);
      });
      log.check(agree, "W recursion = signed permutation sum, k=" + std::to_string(k) + " " + dstr(dim));

      // wedge reading: dx^I = W^I_J dx^J for J a permutation of distinct I
      bool wedge = true;
      for (const auto& sub : ascending_subsets(dim, k)) {
        IndexTuple i = sub;
        do {
          IndexTuple j = sub;
          do {
            const ExactScalar w = antisym_W(c, i, j);
            wedge = wedge && wedge_word(ctx, i) == w * wedge_word(ctx, j);
            if (models)
              for (const auto& m : *models) {
                NumericWedge nw(m);
                log.oracle_case("model dx^I = W dx^J " + dstr(dim), std::abs(nw.ratio(i, j) - m.eval_scalar(w)),
                                log.oracle_options().tolerance);
              }
          } while (std::next_permutation(j.begin(), j.end()) && k <= 3);
        } while (std::next_permutation(i.begin(), i.end()) && k <= 3);
      }
      log.check(wedge, "wedge words satisfy dx^I = W^I_J dx^J, k=" + std::to_string(k) + " " + dstr(dim));
    }

    bool delta = true;
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) delta = delta && antisym_W(c, {i}, {j}) == ExactScalar(i == j ? 1 : 0);
    log.check(delta, "W^i_j = delta " + dstr(dim));

    if (dim <= 5) {
      IndexTuple id(static_cast<std::size_t>(dim));
      std::iota(id.begin(), id.end(), 1);
      bool we = true, wem1 = true, eww = true;
      IndexTuple i = id;
      do {
        we = we && antisym_W(c, i, id) == epsilon_q(c, i);
        wem1 = wem1 && antisym_W(c, id, i) == epsilon_qinv(c, i);
        if (dim <= 4) {
          IndexTuple j = id;
          do eww = eww && epsilon_q(c, i) * antisym_W(c, id, j) == antisym_W(c, i, j);
          while (std::next_permutation(j.begin(), j.end()));
        }
      } while (std::next_permutation(i.begin(), i.end()));
      log.check(we, "W^{i..}_{1..D} = eps_q " + dstr(dim));
      log.check(wem1, "W^{1..D}_{j..} = eps_(q^-1) " + dstr(dim));
      log.check(eww, "eps_q^i W^{1..D}_j = W^i_j " + dstr(dim));
    }
  }
  const auto c4 = Context::make(4);
  log.scalar_equal("W^{12}_{21} = -q12 (D=4)", *c4, antisym_W(*c4, {1, 2}, {2, 1}), -ExactScalar::phase(c4->q(1, 2)));
}

namespace {

void contraction_case(CaseLog& log, const ContextPtr& ctx, const IndexTuple& i, const IndexTuple& j,
                      std::vector<NumericWedge>* numeric, const std::vector<TorusModel>* models) {
  const Context& c = *ctx;
  const int dim = c.dim();
  const int k = static_cast<int>(i.size());
  const ExactScalar w = antisym_W(c, i, j);
  const ExactScalar scaled = ExactScalar(factorial(dim - k)) * w;
  ExactScalar lhs, lhs_bis;
  std::vector<Complex> num(numeric ? numeric->size() : 0), num_bis(num.size());
  if (distinct(i)) {
    IndexTuple l = complement(dim, i);
    do {
      lhs += epsilon_q(c, concat(i, l)) * epsilon_qinv(c, concat(j, l));
      lhs_bis += epsilon_q(c, concat(l, i)) * epsilon_qinv(c, concat(l, j));
      for (std::size_t m = 0; m < num.size(); ++m) {
        auto& nw = (*numeric)[m];
        // eps_(q^-1) lower = complex conjugate of eps_q on unit phases
        num[m] += nw.epsilon(concat(i, l)) * std::conj(nw.epsilon(concat(j, l)));
        num_bis[m] += nw.epsilon(concat(l, i)) * std::conj(nw.epsilon(concat(l, j)));
      }
    } while (std::next_permutation(l.begin(), l.end()));
  }
  const std::string tag = tuple_str(i) + tuple_str(j) + " " + dstr(dim);
  log.scalar_equal("eps eps^-1 = (D-k)! W " + tag, c, lhs, scaled);
  log.scalar_equal("cyclic eps eps^-1 = (D-k)! W " + tag, c, lhs_bis, scaled);
  for (std::size_t m = 0; m < num.size(); ++m) {
    const Complex rhs = static_cast<double>(factorial(dim - k)) * (*numeric)[m].ratio(i, j);
    log.oracle_case("numeric contraction " + tag, std::abs(num[m] - rhs), log.oracle_options().tolerance);
    log.oracle_case("numeric cyclic contraction " + tag, std::abs(num_bis[m] - rhs), log.oracle_options().tolerance);
  }
  (void)models;

  // partial traces over the last / first slot
  ExactScalar tr_last, tr_first;
  for (int a = 1; a <= dim; ++a) {
    tr_last += antisym_W(c, concat(i, {a}), concat(j, {a}));
    tr_first += antisym_W(c, concat({a}, i), concat({a}, j));
  }
  const ExactScalar nk = ExactScalar(dim - k) * w;
  log.scalar_equal("partial trace last slot " + tag, c, tr_last, nk);
  log.scalar_equal("partial trace first slot " + tag, c, tr_first, nk);

  // metric transpose: W^{i_k..i_1}_{a_k'..a_1'} = W^{a_1..a_k}_{i_1'..i_k'}
  IndexTuple ri(i.rbegin(), i.rend()), ajp, ip;
  for (auto it = j.rbegin(); it != j.rend(); ++it) ajp.push_back(c.primed(*it));
  for (int v : i) ip.push_back(c.primed(v));
  log.scalar_equal("metric transpose of W " + tag, c, antisym_W(c, ri, ajp), antisym_W(c, j, ip));
}

}  // namespace

void check_contractions(CaseLog& log, int exhaustive_dim, int random_dim, int samples, std::uint64_t seed) {
  auto run_dim = [&](int dim, const std::function<void(const std::function<void(const IndexTuple&, const IndexTuple&)>&)>& pairs) {
    const auto ctx = Context::make(dim);
    std::vector<TorusModel> models;
    std::vector<NumericWedge> numeric;
    if (log.oracle_enabled()) {
      models = make_models(ctx, log.oracle_options());
      for (const auto& m : models) numeric.emplace_back(m);
    }
    pairs([&](const IndexTuple& i, const IndexTuple& j) {
      contraction_case(log, ctx, i, j, numeric.empty() ? nullptr : &numeric, &models);
    });
  };
  for (int dim = 1; dim <= exhaustive_dim; ++dim)
    run_dim(dim, [&](const auto& f) {
      for (int k = 0; k <= dim; ++k)
        all_tuples(dim, k, [&](const IndexTuple& i) { all_tuples(dim, k, [&](const IndexTuple& j) { f(i, j); }); });
    });
  if (random_dim > exhaustive_dim) {
    std::mt19937_64 rng(seed);
    run_dim(random_dim, [&](const auto& f) {
      for (int s = 0; s < samples; ++s) {
        const int k = std::uniform_int_distribution<int>(1, random_dim)(rng);
        IndexTuple i(static_cast<std::size_t>(k)), j;
        std::uniform_int_distribution<int> idx(1, random_dim);
        for (auto& v : i) v = idx(rng);
        if (s % 2 == 0) {
          j = i;
          std::shuffle(j.begin(), j.end(), rng);
        } else {
          j.resize(i.size());
          for (auto& v : j) v = idx(rng);
        }
        f(i, j);
      }
    });
  }
}

void check_metric_epsilon(CaseLog& log, int max_dim) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Context& c = *ctx;
    const ExactScalar detg((dim / 2) % 2 ? -1 : 1);
    IndexTuple id(static_cast<std::size_t>(dim));
    std::iota(id.begin(), id.end(), 1);
    IndexTuple rev(id.rbegin(), id.rend());
    log.scalar_equal("eps_q^{1..D} = 1 " + dstr(dim), c, epsilon_q(c, id), ExactScalar(1));
    log.scalar_equal("eps_q^{D..1} = (-1)^[D/2] " + dstr(dim), c, epsilon_q(c, rev), detg);
    // det_q g = eps_q^{i} g_{1 i_1} ... g_{D i_D}: only i = (1', ..., D') survives
    IndexTuple primed_id;
    for (int a : id) primed_id.push_back(c.primed(a));
    log.scalar_equal("det_q g = det g " + dstr(dim), c, epsilon_q(c, primed_id), detg);
    bool l2 = true, l3 = true;
    IndexTuple i = id;
    do {
      IndexTuple ip;
      for (int a : i) ip.push_back(c.primed(a));
      // eps_q^{j} g_{j_1 i_1} ... = eps_q^{i'}
      l2 = l2 && epsilon_q(c, ip) == epsilon_q(c, i) * detg;
      IndexTuple ri(i.rbegin(), i.rend());
      l3 = l3 && epsilon_qinv(c, i) == epsilon_q(c, ri) * detg;
    } while (std::next_permutation(i.begin(), i.end()));
    log.check(l2, "eps_q^{i'} = eps_q^{i} det g " + dstr(dim));
    log.check(l3, "eps_(q^-1)_{j} = eps_q^{j reversed} det g " + dstr(dim));
    if (dim >= 2) {
      IndexTuple rep = id;
      rep[1] = rep[0];
      log.check(epsilon_q(c, rep).is_zero(), "eps vanishes on repeated indices " + dstr(dim));
    }
    if (log.oracle_enabled() && dim <= 5)
      for (const auto& m : make_models(ctx, log.oracle_options())) {
        NumericWedge nw(m);
        double worst = 0.0;
        IndexTuple p = id;
        do worst = std::max(worst, std::abs(nw.epsilon(p) - m.eval_scalar(epsilon_q(c, p))));
        while (std::next_permutation(p.begin(), p.end()));
        log.oracle_case("model epsilon " + dstr(dim), worst, log.oracle_options().tolerance);
      }
  }
  const auto c4 = Context::make(4);
  log.scalar_equal("eps_q^{2134} = -q12^-1 (D=4)", *c4, epsilon_q(*c4, IndexTuple{2, 1, 3, 4}),
                   -ExactScalar::phase(c4->q(2, 1)));
}

void check_pairing(CaseLog& log, int max_dim, std::uint64_t seed) {
  for (int dim = 2; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Context& c = *ctx;
    log.element_equal("<dx1, dxD> = 1 " + dstr(dim), pairing_plane(dx(ctx, 1), dx(ctx, dim)), one(ctx));
    log.element_equal("<dx1, dx1> = 0 " + dstr(dim), pairing_plane(dx(ctx, 1), dx(ctx, 1)), Element(ctx));
    log.element_equal("<V, V> = 1 " + dstr(dim), pairing_plane(volume_plane(ctx), volume_plane(ctx)), one(ctx));
    // <dx^{a_1}..dx^{a_k}, dx^{i_k}..dx^{i_1}> = (-1)^{[k/2]} W^{i_k..i_1}_{a_k'..a_1'}
    bool formula = true;
    for (int k = 1; k <= std::min(dim, 3); ++k)
      all_tuples(dim, k, [&](const IndexTuple& a) {
        if (!distinct(a)) return;
        all_tuples(dim, k, [&](const IndexTuple& i) {
          if (!distinct(i)) return;
          IndexTuple ri(i.rbegin(), i.rend()), ap;
          for (auto it = a.rbegin(); it != a.rend(); ++it) ap.push_back(c.primed(*it));
          ExactScalar expect = antisym_W(c, ri, ap);
          if ((k / 2) % 2) expect = -expect;
          formula = formula && pairing_plane(wedge_word(ctx, a), wedge_word(ctx, ri)) == Element(ctx, expect);
        });
      });
    log.check(formula, "pairing on wedge words matches the W formula " + dstr(dim));
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(dim));
    for (int t = 0; t < 10; ++t) {
      const int k = rnd.uniform(1, dim);
      const Element th = rnd.form(k, 1, 1);
      const Element th2 = rnd.form(k, 1, 1);
      const Element f = rnd.function(2, 2);
      const Element h = rnd.function(2, 2);
      log.element_equal("bimodule <th f, th'> = <th, f th'> " + dstr(dim), pairing_plane(th * f, th2),
                        pairing_plane(th, f * th2));
      log.element_equal("<f th, th' h> = f <th,th'> h " + dstr(dim), pairing_plane(f * th, th2 * h),
                        f * pairing_plane(th, th2) * h);
    }
    bool threw = false;
    try {
      (void)pairing_plane(dx(ctx, 1), one(ctx));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    log.check(threw, "pairing rejects degree mismatch " + dstr(dim));
  }
}

// ---------------------------------------------------------------- Hodge

void check_hodge_plane(CaseLog& log, int max_dim, std::uint64_t seed) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    const Element v = volume_plane(ctx);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(dim));
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());
    const auto& opt = log.oracle_options();

    log.element_equal("*1 = V " + dstr(dim), hodge_plane(one(ctx)), v);
    log.element_equal("*V = 1 " + dstr(dim), hodge_plane(v), one(ctx));
    for (int k = 0; k <= dim; ++k) {
      const auto basis = ascending_subsets(dim, k);
      const auto cobasis = ascending_subsets(dim, dim - k);
      const bool odd = (k * (dim - k)) % 2 == 1;
      const std::string tag = "k=" + std::to_string(k) + " " + dstr(dim);
      for (const auto& ia : basis) {
        const Element a = basis_form(ctx, ia);
        const Element sa = hodge_plane(a);
        log.element_equal("** = (-1)^{k(D-k)} " + tag, hodge_plane(sa), odd ? -a : a);
        log.element_equal("*(a^*) = (*a)^* " + tag, hodge_plane(star(a)), star(sa));
        const Element f = rnd.function(2, 2);
        const Element h = rnd.function(2, 2);
        log.element_equal("*(f a h) = f (*a) h " + tag, hodge_plane(f * a * h), f * sa * h);
        if (models)
          for (const auto& m : *models) {
            const Element fa = f * a;
            const ModelValue diff = model_add(eval_element(m, hodge_plane(fa)), classical_hodge(m, eval_element(m, fa)), -1.0);
            log.oracle_case("model intertwines * " + tag, model_magnitude(m, diff, Space::Plane, opt), opt.tolerance);
          }
        for (const auto& ib : basis) {
          const Element b = basis_form(ctx, ib);
          const Element sb = hodge_plane(b);
          const Element p = pairing_plane(a, b);
          log.element_equal("a ^ *b = <a,b> V " + tag, a * sb, p * v);
          log.element_equal("a ^ *b = (-1)^{k(D-k)} *a ^ b " + tag, a * sb, odd ? -(sa * b) : sa * b);
          log.element_equal("<a,b> = <*a,*b> " + tag, p, pairing_plane(sa, sb));
          if (models)
            for (const auto& m : *models) {
              const ModelValue lhs = model_mul(m, eval_element(m, a), classical_hodge(m, eval_element(m, b)));
              const ModelValue rhs = model_mul(m, eval_element(m, p), eval_element(m, v));
              log.oracle_case("model a ^ *b = <a,b> V " + tag, model_magnitude(m, model_add(lhs, rhs, -1.0), Space::Plane, opt),
                              opt.tolerance);
            }
        }
        for (const auto& ig : cobasis) {
          const Element g = basis_form(ctx, ig);
          log.element_equal("<*a, g> = <a ^ g, V> " + tag, pairing_plane(sa, g), pairing_plane(a * g, v));
        }
      }
    }
  }
}

void check_hodge_sphere(CaseLog& log, int max_sphere_dim, std::uint64_t seed) {
  for (int n = 1; n <= max_sphere_dim; ++n) {
    const auto ctx = sphere_context(n);
    const int dim = n + 1;
    const SphereForm vol = sphere_volume(ctx);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(n));
    const std::string nt = "N=" + std::to_string(n);
    auto hs = [](const Element& e) { return hodge_sphere(SphereForm(e)).rep(); };
    auto ps = [](const Element& a, const Element& b) { return pairing_sphere(SphereForm(a), SphereForm(b)).rep(); };

    log.sphere_equal("*1 = V " + nt, hs(one(ctx)), vol.rep());
    log.sphere_equal("*V = 1 " + nt, hs(vol.rep()), one(ctx));
    for (int k = 0; k <= n; ++k) {
      const auto basis = ascending_subsets(dim, k);
      const auto cobasis = ascending_subsets(dim, n - k);
      const bool odd = (k * (n - k)) % 2 == 1;
      const std::string tag = "k=" + std::to_string(k) + " " + nt;
      for (const auto& ia : basis) {
        const Element a = basis_form(ctx, ia);
        const Element sa = hs(a);
        log.sphere_equal("explicit * = (-1)^{N-k} [*(b dc/2)] " + tag, sa, hodge_sphere_via_plane(SphereForm(a)).rep());
        log.sphere_equal("** = (-1)^{k(N-k)} " + tag, hs(sa), odd ? -a : a);
        log.sphere_equal("*(a^*) = (*a)^* " + tag, hs(star(a)), star(sa));
        const Element f = rnd.function(1, 2);
        const Element h = rnd.function(1, 2);
        log.sphere_equal("*(f a h) = f (*a) h " + tag, hs(f * a * h), f * sa * h);
        for (const auto& ib : basis) {
          const Element b = basis_form(ctx, ib);
          const Element sb = hs(b);
          const Element p = ps(a, b);
          log.sphere_equal("a ^ *b = <a,b> V " + tag, a * sb, p * vol.rep());
          log.sphere_equal("a ^ *b = (-1)^{k(N-k)} *a ^ b " + tag, a * sb, odd ? -(sa * b) : sa * b);
          log.sphere_equal("<a,b> = <*a,*b> " + tag, p, ps(sa, sb));
        }
        for (const auto& ig : cobasis) {
          const Element g = basis_form(ctx, ig);
          log.sphere_equal("<*a, g> = <a ^ g, V> " + tag, ps(sa, g), ps(a * g, vol.rep()));
        }
      }
    }
  }
}

// ---------------------------------------------------------------- Haar

void check_haar_examples(CaseLog& log) {
  for (int dim = 1; dim <= 7; ++dim)
    for (int n = 0; n < 5; ++n)
      log.check(haar_lambda(n, dim) == haar_lambda(n + 1, dim) * Rational(2 * (n + 1) * (dim + 2 * n)),
                "lambda_n = lambda_{n+1} 2(n+1)(D+2n) " + dstr(dim));
  const auto c = Context::make(5);
  log.element_equal("d_1 x1 = 1", partial(1, x(c, 1)), one(c));
  log.element_equal("d_1 (x2 x1) = q12^-1 x2", partial(1, x(c, 2) * x(c, 1)), ExactScalar::phase(c->q(2, 1)) * x(c, 2));
  log.element_equal("d_a 1 = 0", partial(3, one(c)), Element(c));
  for (int k = 1; k <= 5; ++k)
    log.element_equal("Laplacian x^k x^k' = 2, k=" + std::to_string(k), laplacian(x(c, k) * x(c, c->primed(k))),
                      Element(c, ExactScalar(2)));
  log.element_equal("Laplacian c = 2D", laplacian(c_element(c)), Element(c, ExactScalar(10)));
  log.element_equal("Laplacian x1 = 0", laplacian(x(c, 1)), Element(c));
  log.scalar_equal("h(1) = 1", *c, haar_plane(one(c)), ExactScalar(1));
  log.scalar_equal("h(x3 x3) = 1/5", *c, haar_plane(x(c, 3) * x(c, 3)), ExactScalar(Rational(1, 5)));
  log.scalar_equal("h(x1 x5) = 1/5", *c, haar_plane(x(c, 1) * x(c, 5)), ExactScalar(Rational(1, 5)));
  log.scalar_equal("h(c) = 1", *c, haar_plane(c_element(c)), ExactScalar(1));
  bool threw = false;
  try {
    (void)partial(1, dx(c, 1));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  log.check(threw, "partial rejects forms");
  if (log.oracle_enabled())
    for (const auto& m : make_models(c, log.oracle_options()))
      log.oracle_case("numeric h(c) = 1", std::abs(numeric_haar(m, c_element(c)) - 1.0), log.oracle_options().tolerance);
}

void check_haar_well_defined(CaseLog& log, const std::vector<int>& dims, int max_degree) {
  for (int dim : dims) {
    const auto ctx = Context::make(dim);
    const Element cm1 = c_element(ctx) - one(ctx);
    std::optional<std::vector<TorusModel>> models;
    std::vector<ModelValue> cm1_img;
    if (log.oracle_enabled()) {
      models = make_models(ctx, log.oracle_options());
      for (const auto& m : *models) cm1_img.push_back(eval_element(m, cm1));
    }
    for (const auto& mono : x_monomials_up_to(dim, max_degree)) {
      const Element f(ctx, mono);
      log.scalar_equal("h((c-1) f) = 0 " + dstr(dim) + " f=" + to_string(*ctx, mono), *ctx, haar_plane(cm1 * f),
                       ExactScalar{});
      if (models)
        for (std::size_t k = 0; k < models->size(); ++k) {
          const auto& m = (*models)[k];
          log.oracle_case("numeric h((c-1) f) " + dstr(dim),
                          std::abs(numeric_haar(m, model_mul(m, cm1_img[k], eval_element(m, f)))),
                          log.oracle_options().tolerance);
        }
    }
  }
}

void check_haar_trace_reality(CaseLog& log, const std::vector<int>& dims, int pairs, std::uint64_t seed) {
  for (int dim : dims) {
    const auto ctx = Context::make(dim);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(dim));
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());
    const double tol = log.oracle_enabled() ? log.oracle_options().tolerance : 0.0;
    for (int t = 0; t < pairs; ++t) {
      const Element f = rnd.function(3, 2);
      const Element g = rnd.function(3, 2);
      log.scalar_equal("h(fg) = h(gf) " + dstr(dim), *ctx, haar_plane(f * g), haar_plane(g * f));
      log.scalar_equal("conj h(f) = h(f*) " + dstr(dim), *ctx, haar_plane(f).conj(), haar_plane(star(f)));
      const ExactScalar pos = haar_plane(star(f) * f);
      const bool null_class = reduce_mod_c(f).is_zero();
      if (models)
        for (const auto& m : *models) {
          const ModelValue ef = eval_element(m, f), eg = eval_element(m, g);
          log.oracle_case("numeric h(fg) = h(gf) " + dstr(dim),
                          std::abs(numeric_haar(m, model_mul(m, ef, eg)) - numeric_haar(m, model_mul(m, eg, ef))), tol);
          log.oracle_case("numeric conj h(f) = h(f*) " + dstr(dim),
                          std::abs(std::conj(numeric_haar(m, ef)) - numeric_haar(m, star(f))), tol);
          const Complex p = m.eval_scalar(pos);
          log.check((null_class ? p == Complex{} : p.real() > 0.0) && std::abs(p.imag()) < 1e-9, "h(f* f) > 0 off c = 1 " + dstr(dim));
          log.oracle_case("numeric h(f)", std::abs(numeric_haar(m, ef) - m.eval_scalar(haar_plane(f))), tol);
        }
    }
  }
}

void check_haar_moments(CaseLog& log, const std::vector<int>& dims) {
  for (int dim : dims) {
    const auto ctx = Context::make(dim);
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());
    for (int i = 1; i <= dim; ++i) {
      const std::string tag = " i=" + std::to_string(i) + " " + dstr(dim);
      const Element pair = x(ctx, i) * x(ctx, ctx->primed(i));
      log.scalar_equal("h(x^i (x^i)^*) = 1/D" + tag, *ctx, haar_plane(pair), ExactScalar(Rational(1, dim)));
      log.scalar_equal("h(x^i (x^i)^*) = h((x^i)^* x^i)" + tag, *ctx, haar_plane(pair),
                       haar_plane(x(ctx, ctx->primed(i)) * x(ctx, i)));
      for (int j = 1; j <= dim; ++j) {
        std::array<std::uint8_t, kMaxDim> e{};
        ++e[static_cast<std::size_t>(i - 1)];
        ++e[static_cast<std::size_t>(j - 1)];
        const Coeff classical = classical_moment(*ctx, e);
        const Element xij = x(ctx, i) * x(ctx, j);
        log.scalar_equal("h(x^i x^j) = classical moment" + tag + " j=" + std::to_string(j), *ctx, haar_plane(xij),
                         ExactScalar(classical));
        if (models)
          for (const auto& m : *models)
            log.oracle_case("numeric h(x^i x^j)" + tag, std::abs(numeric_haar(m, xij) - classical.to_complex()),
                            log.oracle_options().tolerance);
      }
    }
    if (ctx->has_middle()) {
      const int mid = ctx->middle();
      log.scalar_equal("h((x^m)^2) = 1/D " + dstr(dim), *ctx, haar_plane(x(ctx, mid) * x(ctx, mid)),
                       ExactScalar(Rational(1, dim)));
    }
  }
}

void check_haar_misc(CaseLog& log, int max_dim, std::uint64_t seed) {
  for (int dim = 2; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(dim));
    for (int t = 0; t < 10; ++t) {
      const Element f = rnd.function(4, 3);
      const int a = rnd.uniform(1, dim), b = rnd.uniform(1, dim);
      log.element_equal("d_a d_b = q_ab d_b d_a " + dstr(dim), partial(a, partial(b, f)),
                        ExactScalar::phase(ctx->q(a, b)) * partial(b, partial(a, f)));
      Element odd(ctx);
      for (const auto& [m, s] : f.terms())
        if (m.x_degree() % 2) odd.add_term(m, s);
      log.scalar_equal("h vanishes on odd degree " + dstr(dim), *ctx, haar_plane(odd), ExactScalar{});
    }
    // products of companion pairs x^a x^a' in any order take classical values
    for (int t = 0; t < 20; ++t) {
      std::vector<Generator> w;
      std::array<std::uint8_t, kMaxDim> e{};
      const int pairs = rnd.uniform(1, 3);
      for (int p = 0; p < pairs; ++p) {
        const int a = rnd.uniform(1, dim);
        w.push_back(Generator::x(a));
        w.push_back(Generator::x(ctx->primed(a)));
        ++e[static_cast<std::size_t>(a - 1)];
        ++e[static_cast<std::size_t>(ctx->primed(a) - 1)];
      }
      log.scalar_equal("h on companion-pair words = classical value " + dstr(dim), *ctx,
                       haar_plane(normal_order(ctx, w)), ExactScalar(classical_moment(*ctx, e)));
    }
  }
}

// ---------------------------------------------------------------- sphere

void check_sphere_basics(CaseLog& log, int max_sphere_dim, std::uint64_t seed) {
  {
    const auto c5 = Context::make(5);
    log.element_equal("reduce(c) = 1", reduce_mod_c(c_element(c5)), one(c5));
    log.element_equal("reduce((c-1) x2) = 0", reduce_mod_c((c_element(c5) - one(c5)) * x(c5, 2)), Element(c5));
    const auto c3 = Context::make(3);
    log.element_equal("reduce(x2^2 + 2 x1 x3) = 1 (D=3)",
                      reduce_mod_c(x(c3, 2) * x(c3, 2) + ExactScalar(2) * x(c3, 1) * x(c3, 3)), one(c3));
    bool threw = false;
    try {
      (void)reduce_mod_c(dx(c5, 1));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    log.check(threw, "reduce_mod_c rejects forms");
  }
  for (int n = 1; n <= max_sphere_dim; ++n) {
    const auto ctx = sphere_context(n);
    const int dim = n + 1;
    const std::string nt = "N=" + std::to_string(n);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(n));
    const Element v = volume_plane(ctx);
    const Element c = c_element(ctx);
    const Element dc = dc_element(ctx);
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());
    const double tol = log.oracle_enabled() ? log.oracle_options().tolerance : 0.0;

    for (int t = 0; t < 10; ++t) {
      const Element f = rnd.function(4, 3);
      const Element r = reduce_mod_c(f);
      log.element_equal("reduce idempotent " + nt, reduce_mod_c(r), r);
      log.sphere_equal("f = reduce(f) on the sphere " + nt, r, f);
      bool leftover = false;
      for (const auto& [m, s] : r.terms()) leftover = leftover || (m.x[0] && m.x[static_cast<std::size_t>(dim - 1)]);
      log.check(!leftover, "reduce eliminates x1 xD " + nt);
    }

    Element sum(ctx);
    for (int k = 1; k <= dim; ++k) {
      const Element w = omega_k(ctx, k);
      for (int l = 1; l <= dim; ++l)
        log.element_equal("omega_k dx^l = delta V " + nt, w * dx(ctx, l), k == l ? v : Element(ctx));
      sum += x(ctx, k) * w;
    }
    log.element_equal("x^k omega_k dc = 2 c V " + nt, sum * dc, ExactScalar(2) * c * v);
    const SphereForm vol = sphere_volume(ctx);
    log.element_equal("top_decompose(V) = c " + nt, top_decompose(vol.rep()), c);
    log.element_equal("top_decompose(0) = 0 " + nt, top_decompose(Element(ctx)), Element(ctx));
    log.scalar_equal("integral of V = 1 " + nt, *ctx, integrate(vol), ExactScalar(1));
    log.sphere_equal("V real " + nt, star(vol.rep()), vol.rep());
    log.check(!in_ideal_j(vol.rep()), "[V] != [0] " + nt);
    log.check(in_ideal_j(vol.rep() - vol.rep()), "[V] = [V] " + nt);
    if (models)
      for (const auto& m : *models) {
        log.oracle_case("numeric integral of V " + nt, std::abs(numeric_integrate(m, vol.rep()) - 1.0), tol);
        const Element w = x(ctx, dim) * omega_k(ctx, dim);
        const ModelValue lhs = model_mul(m, eval_element(m, w), classical_dc(m));
        const ModelValue rhs = model_mul(m, eval_element(m, top_decompose(w)), eval_element(m, v));
        log.oracle_case("numeric top_decompose " + nt, model_magnitude(m, model_add(lhs, rhs, -2.0), Space::Plane,
                                                                       log.oracle_options()),
                        tol);
      }

    for (int t = 0; t < 10; ++t) {
      const int k = rnd.uniform(0, n - 1);
      const Element w = rnd.form(k, 2, 2);
      const Element alpha = rnd.form(k, 1, 2);
      const Element beta = k > 0 ? rnd.form(k - 1, 1, 2) : Element(ctx);
      log.sphere_equal("[c w] = [w] " + nt, c * w, w);
      log.sphere_equal("[dc beta] = 0 " + nt, dc * beta, Element(ctx));
      const Element j = (c - one(ctx)) * alpha + dc * beta;
      log.check(in_ideal_j(d(j)), "J is a differential ideal " + nt);
      log.check(in_ideal_j(star(j)), "J is a star ideal " + nt);

      const Element top = rnd.form(n, 2, 2);
      const Element a = rnd.function(2, 2);
      const Element ja = rnd.form(n, 1, 2);
      const Element jb = rnd.form(n - 1, 1, 2);
      const ExactScalar it = integrate(SphereForm(top));
      log.scalar_equal("integral of [a w] = [w a] " + nt, *ctx, integrate(SphereForm(a * top)),
                       integrate(SphereForm(top * a)));
      log.scalar_equal("integral independent of representative " + nt, *ctx,
                       integrate(SphereForm(top + (c - one(ctx)) * ja + dc * jb)), it);
      if (models)
        for (const auto& m : *models)
          log.oracle_case("numeric integral of [a w] = [w a] " + nt,
                          std::abs(numeric_integrate(m, a * top) - numeric_integrate(m, top * a)), tol);
    }
  }
}

void check_stokes(CaseLog& log, const std::vector<int>& sphere_dims, int forms, int max_degree, std::uint64_t seed) {
  for (int n : sphere_dims) {
    const auto ctx = sphere_context(n);
    RandomElements rnd(ctx, seed + static_cast<std::uint64_t>(n));
    std::optional<std::vector<TorusModel>> models;
    if (log.oracle_enabled()) models = make_models(ctx, log.oracle_options());
    for (int t = 0; t < forms; ++t) {
      const Element theta = rnd.form(n - 1, max_degree, 3);
      const Element dtheta = d(theta);
      log.scalar_equal("integral of d[theta] = 0 N=" + std::to_string(n), *ctx, integrate(SphereForm(dtheta)),
                       ExactScalar{});
      if (models)
        for (const auto& m : *models)
          log.oracle_case("numeric integral of d[theta] N=" + std::to_string(n), std::abs(numeric_integrate(m, dtheta)),
                          log.oracle_options().tolerance);
    }
  }
}

void check_connes_landi(CaseLog& log) {
  const auto c = Context::make(5);
  const ExactScalar r(Coeff{{}, {}, Rational(1, 2), {}});  // 1/sqrt2
  const Element al = r * x(c, 1), als = r * x(c, 5), be = r * x(c, 2), bes = r * x(c, 4);
  const Element t = ExactScalar(Rational(1, 2)) * (x(c, 3) + one(c));
  const ExactScalar q = ExactScalar::phase(c->q(1, 2));
  auto rel = [&](const std::string& name, const Element& lhs, const Element& rhs) {
    log.element_equal("Connes-Landi " + name, reduce_mod_c(lhs - rhs), Element(c));
  };
  rel("alpha beta = q beta alpha", al * be, q * (be * al));
  rel("alpha beta* = conj(q) beta* alpha", al * bes, q.conj() * (bes * al));
  rel("alpha alpha* = alpha* alpha", al * als, als * al);
  rel("beta beta* = beta* beta", be * bes, bes * be);
  for (const Element& g : {al, als, be, bes}) rel("t central", t * g, g * t);
  rel("t real", star(t), t);
  rel("alpha* = star(alpha)", star(al), als);
  rel("alpha alpha* + beta beta* = t(1-t)", al * als + be * bes, t * (one(c) - t));
}

// ---------------------------------------------------------------- Clifford / Chern

namespace {

ComplexMatrix numeric_matrix(const TorusModel& m, const ScalarMatrix& s) {
  ComplexMatrix out(s.size());
  for (int r = 0; r < s.size(); ++r)
    for (int c = 0; c < s.size(); ++c) out(r, c) = m.eval_scalar(s(r, c));
  return out;
}

}  // namespace

void check_clifford(CaseLog& log, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const GammaRep rep = gamma_rep(n);
    const Context& c = *rep.ctx;
    const int dim = 2 * n + 1;
    const std::string nt = "n=" + std::to_string(n);
    const ScalarMatrix id = ScalarMatrix::identity(rep.size());
    bool cliff = true, dag = true, sq = true;
    for (int i = 1; i <= dim; ++i) {
      dag = dag && rep[c.primed(i)] == rep[i].conj_transpose();
      const ScalarMatrix s2 = rep[i] * rep[i];
      sq = sq && (i == n + 1 ? s2 == id : s2 == ScalarMatrix(rep.size()));
      for (int j = 1; j <= dim; ++j) {
        const ScalarMatrix lhs = rep[i] * rep[j] + ExactScalar::phase(c.q(j, i)) * (rep[j] * rep[i]);
        cliff = cliff && lhs == ExactScalar(2 * metric(c, i, j)) * id;
      }
    }
    log.check(cliff, "gamma^i gamma^j + q_ji gamma^j gamma^i = 2 g^ij " + nt);
    log.check(dag, "gamma^{i'} = gamma^i dagger " + nt);
    log.check(sq, "(gamma^i)^2 = 0, (gamma^{n+1})^2 = 1 " + nt);
    bool chir = true;
    for (int r = 0; r < rep.size(); ++r)
      for (int col = 0; col < rep.size(); ++col) {
        const ExactScalar& e = rep[n + 1](r, col);
        chir = chir && (r == col ? (e == ExactScalar(1) || e == ExactScalar(-1)) : e.is_zero());
      }
    log.check(chir, "gamma^{n+1} is a diagonal +-1 matrix " + nt);
    if (log.oracle_enabled()) {
      for (const auto& m : make_models(rep.ctx, log.oracle_options())) {
        std::vector<ComplexMatrix> g;
        for (int i = 1; i <= dim; ++i) g.push_back(numeric_matrix(m, rep[i]));
        double worst = 0.0;
        for (int i = 1; i <= dim; ++i)
          for (int j = 1; j <= dim; ++j) {
            ComplexMatrix lhs = g[static_cast<std::size_t>(i - 1)] * g[static_cast<std::size_t>(j - 1)] +
                                m.eval_scalar(ExactScalar::phase(c.q(j, i))) *
                                    (g[static_cast<std::size_t>(j - 1)] * g[static_cast<std::size_t>(i - 1)]);
            for (int k = 0; k < rep.size(); ++k) lhs(k, k) -= 2.0 * metric(c, i, j);
            worst = std::max(worst, lhs.max_abs());
          }
        log.oracle_case("numeric Clifford relations " + nt, worst, log.oracle_options().tolerance);
      }
      // q = 1 generators against the classical double-precision construction
      const GammaRep rep1 = gamma_rep(n, true);
      const TorusModel triv(rep1.ctx, {}, {});
      const auto cl = classical_gammas(n);
      double worst = 0.0;
      for (int i = 1; i <= dim; ++i) {
        const ComplexMatrix a = numeric_matrix(triv, rep1[i]);
        worst = std::max(worst, (a + (-1.0) * cl[static_cast<std::size_t>(i - 1)]).max_abs());
      }
      log.oracle_case("q=1 gammas = classical gammas " + nt, worst, log.oracle_options().tolerance);
    }
  }
  const GammaRep r1 = gamma_rep(1);
  ScalarMatrix g1(2), g2(2), g3(2);
  g1(1, 0) = ExactScalar::sqrt2();
  g2(0, 0) = ExactScalar(1);
  g2(1, 1) = ExactScalar(-1);
  g3(0, 1) = ExactScalar::sqrt2();
  log.check(r1[1] == g1 && r1[2] == g2 && r1[3] == g3, "n=1 gammas are sqrt2 L, diag(1,-1), sqrt2 L^T");
}

void check_trace_formula(CaseLog& log, int random_tuples_n2, std::uint64_t seed) {
  auto one_case = [&](const GammaRep& rep, const IndexTuple& t, std::vector<TorusModel>* models) {
    const ExactScalar expect = ExactScalar(1 << rep.n) * epsilon_qinv(*rep.ctx, t);
    const ExactScalar got = clifford_trace(rep, t);
    log.scalar_equal("Tr gamma... = 2^n eps_(q^-1) " + tuple_str(t), *rep.ctx, got, expect);
    if (models)
      for (const auto& m : *models) {
        ComplexMatrix p(rep.size());
        for (int k = 0; k < rep.size(); ++k) p(k, k) = 1.0;
        for (int i : t) p = p * numeric_matrix(m, rep[i]);
        log.oracle_case("numeric trace formula " + tuple_str(t), std::abs(p.trace() - m.eval_scalar(expect)),
                        log.oracle_options().tolerance);
      }
  };
  const GammaRep r1 = gamma_rep(1);
  std::vector<TorusModel> m1, m2;
  if (log.oracle_enabled()) m1 = make_models(r1.ctx, log.oracle_options());
  all_tuples(3, 3, [&](const IndexTuple& t) { one_case(r1, t, log.oracle_enabled() ? &m1 : nullptr); });
  log.scalar_equal("Tr(g1 g2 g3) = 2", *r1.ctx, clifford_trace(r1, IndexTuple{1, 2, 3}), ExactScalar(2));
  log.scalar_equal("Tr(g1 g3 g2) = -2", *r1.ctx, clifford_trace(r1, IndexTuple{1, 3, 2}), ExactScalar(-2));
  bool threw = false;
  try {
    (void)clifford_trace(r1, IndexTuple{1, 2});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  log.check(threw, "clifford_trace rejects wrong arity");

  const GammaRep r2 = gamma_rep(2);
  if (log.oracle_enabled()) m2 = make_models(r2.ctx, log.oracle_options());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, 5);
  for (int s = 0; s < random_tuples_n2; ++s) {
    IndexTuple t(5);
    if (s % 2 == 0) {
      std::iota(t.begin(), t.end(), 1);
      std::shuffle(t.begin(), t.end(), rng);
    } else {
      for (auto& v : t) v = idx(rng);
    }
    one_case(r2, t, log.oracle_enabled() ? &m2 : nullptr);
  }
}

void check_projector_curvature(CaseLog& log, int max_n, std::uint64_t seed) {
  for (int n = 1; n <= max_n; ++n) {
    const std::string nt = "n=" + std::to_string(n);
    const FormMatrix e = projector(n);
    const ContextPtr& ctx = e.ctx();
    const FormMatrix e2 = e * e;
    for (int r = 0; r < e.size(); ++r)
      for (int c = 0; c < e.size(); ++c) log.sphere_equal("e^2 = e " + nt, e2(r, c), e(r, c));
    log.check((e2 - e).reduce_mod_c().is_zero(), "e^2 - e reduces to 0 " + nt);
    log.check(e.star_transpose() == e, "e hermitian " + nt);
    log.element_equal("Tr e = 2^{n-1} " + nt, e.trace(), Element(ctx, ExactScalar(1 << (n - 1))));
    log.check(multiply_serial(e, e) == e2, "parallel product = serial product " + nt);

    const FormMatrix F = curvature(e);
    const FormMatrix Fs = F.star_transpose();
    const FormMatrix eF = e * F, Fe = F * e;
    for (int r = 0; r < e.size(); ++r)
      for (int c = 0; c < e.size(); ++c) {
        log.sphere_equal("F antihermitian " + nt, Fs(r, c), -F(r, c));
        log.sphere_equal("e F = F " + nt, eF(r, c), F(r, c));
        log.sphere_equal("F e = F " + nt, Fe(r, c), F(r, c));
      }
    log.check(multiply_serial(multiply_serial(e, e.d()), e.d()) == F, "curvature via serial products " + nt);
    bool threw = false;
    try {
      FormMatrix twice = e + e;
      (void)curvature(twice);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    log.check(threw, "curvature rejects non-projectors " + nt);
    log.scalar_equal("integral Tr (de)^{2n} = 0 " + nt, *ctx, integral_trace_de(n), ExactScalar{});
    if (log.oracle_enabled()) {
      const FormMatrix F1 = curvature(projector(n, true));
      log.oracle_case("q=1 curvature = classical monopole curvature " + nt,
                      bott_curvature_discrepancy(F1, n, log.oracle_options().points, log.oracle_options().seed),
                      log.oracle_options().tolerance);
    }
  }
  {
    const auto c = Context::make(3);
    const FormMatrix e = projector(1);
    const ExactScalar h(Rational(1, 2));
    const ExactScalar hs(Coeff{{}, {}, Rational(1, 2), {}});
    log.element_equal("e_11 = (1 + x2)/2", e(0, 0), h * (one(c) + x(c, 2)));
    log.element_equal("e_12 = x1/sqrt2", e(0, 1), hs * x(c, 1));
    log.element_equal("e_21 = x3/sqrt2", e(1, 0), hs * x(c, 3));
    log.element_equal("e_22 = (1 - x2)/2", e(1, 1), h * (one(c) - x(c, 2)));
    // classical north pole (y_2 = 1): Tr e = 1
    const FormMatrix e1 = projector(1, true);
    const TorusModel triv(e1.ctx(), {}, {});
    const std::vector<double> pole{0.0, 1.0, 0.0};
    const auto x0 = complex_coordinates(*e1.ctx(), pole);
    Complex tr = 0.0;
    for (const auto& [k, v] : evaluate_at(eval_element(triv, e1.trace()), x0)) tr += v;
    log.check(std::abs(tr - 1.0) < 1e-12, "q=1 Tr e at the north pole = 1");
  }
  // character: vanishing on constants and cyclicity for N = 2
  const auto c = Context::make(3);
  RandomElements rnd(c, seed);
  for (int t = 0; t < 20; ++t) {
    std::vector<Element> a;
    for (int k = 0; k < 3; ++k) a.push_back(Element(c, rnd.x_monomial(2), rnd.scalar()));
    const ExactScalar tau = character_tau(a);
    const std::vector<Element> shifted{a[2], a[0], a[1]};
    log.scalar_equal("tau cyclic, N=2", *c, character_tau(shifted), tau);
    std::vector<Element> with_one = a;
    with_one[static_cast<std::size_t>(1 + t % 2)] = one(c);
    log.scalar_equal("tau(.., 1, ..) = 0", *c, character_tau(with_one), ExactScalar{});
  }
}

void check_charge(CaseLog& log, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const std::string nt = "n=" + std::to_string(n);
    const auto ctx = Context::make(2 * n + 1);
    const ExactScalar expect = ExactScalar(Rational(factorial(2 * n), 1LL << (n + 1))) * ExactScalar::i_pow(n);
    const ExactScalar integral = charge_integral(n);
    log.scalar_equal("integral Tr e (de)^{2n} = (2n)! i^n / 2^{n+1} " + nt, *ctx, integral, expect);
    const ExactScalar ch = charge(n);
    log.scalar_equal("charge = 1 " + nt, *ctx, ch, ExactScalar(1));
    log.check(ch.is_rational(), "charge has no phase dependence " + nt);
    if (log.oracle_enabled()) {
      FormMatrix e = projector(n);
      const FormMatrix de = e.d();
      FormMatrix p = e;
      for (int k = 0; k < 2 * n; ++k) p = p * de;
      const Element tr = p.trace();
      for (const auto& m : make_models(ctx, log.oracle_options()))
        log.oracle_case("numeric charge integral " + nt, std::abs(numeric_integrate(m, tr) - m.eval_scalar(expect)),
                        log.oracle_options().tolerance);
    }
  }
}

// ---------------------------------------------------------------- oracle

void check_oracle_model(CaseLog& log, int dim, std::uint64_t seed) {
  const auto ctx = Context::make(dim);
  OracleOptions opt = log.oracle_enabled() ? log.oracle_options() : OracleOptions{};
  opt.seed = seed;
  RandomElements rnd(ctx, seed);
  const auto models = make_models(ctx, opt);
  const std::string dt = dstr(dim);

  log.check(check_identity(c_element(ctx) - one(ctx), Space::Sphere, opt).pass, "eval(c) = 1 on the sphere " + dt);
  log.check(check_identity(Element(ctx), Space::Plane, opt).pass, "check(0) passes " + dt);
  log.check(!check_identity(x(ctx, 1), Space::Sphere, opt).pass, "check(x1) fails " + dt);
  log.check(!check_identity(c_element(ctx) - one(ctx), Space::Plane, opt).pass, "c - 1 is nonzero on the plane " + dt);
  if (dim >= 2) {
    const Element v = sphere_volume(ctx).rep();
    const Element pert = v + (c_element(ctx) - one(ctx)) * rnd.form(dim - 1, 1, 2) + dc_element(ctx) * rnd.form(dim - 2, 1, 2);
    log.check(check_identity(v - pert, Space::Sphere, opt).pass, "V and a J-perturbed V agree " + dt);
  }
  const Element probe = rnd.form(1, 2, 3);
  const IdentityReport par = check_identity(probe, Space::Sphere, opt);
  const IdentityReport ser = check_identity_serial(probe, Space::Sphere, opt);
  log.check(par.pass == ser.pass && par.max_magnitude == ser.max_magnitude && par.evaluations == ser.evaluations,
            "parallel and serial sample evaluation agree " + dt);
  log.check(par.evaluations >= 20 * 2, "at least 20 points and 2 root choices " + dt);

  for (const auto& m : models) {
    double rel = 0.0, inv = 0.0;
    for (int a = 1; a <= dim; ++a)
      for (int b = 1; b <= dim; ++b) {
        const std::vector<Generator> ab{Generator::x(a), Generator::x(b)}, ba{Generator::x(b), Generator::x(a)};
        const ModelValue diff = model_add(eval_word(m, ab), eval_word(m, ba), -m.eval_scalar(ExactScalar::phase(ctx->q(a, b))));
        rel = std::max(rel, model_magnitude(m, diff, Space::Plane, opt));
        const std::vector<Generator> aa{Generator::x(a), Generator::x(ctx->primed(a))};
        for (const auto& [k, v] : eval_word(m, aa)) inv = std::max(inv, k.word == TorusWord{} ? 0.0 : 1.0);
      }
    log.oracle_case("U^a U^b = q_ab U^b U^a " + dt, rel, opt.tolerance);
    log.oracle_case("U^{a'} = (U^a)^-1 " + dt, inv, opt.tolerance);
    for (int t = 0; t < 100; ++t) {
      const Element f = rnd.form(rnd.uniform(0, 1), 2, 2);
      const Element g = rnd.form(rnd.uniform(0, 1), 2, 2);
      const ModelValue prod = model_mul(m, eval_element(m, f), eval_element(m, g));
      log.oracle_case("model is a homomorphism " + dt,
                      model_magnitude(m, model_add(eval_element(m, f * g), prod, -1.0), Space::Plane, opt), opt.tolerance);
    }
    for (int t = 0; t < 10; ++t) {
      const Element f = rnd.function(4, 3);
      log.oracle_case("numeric Haar = exact Haar " + dt, std::abs(numeric_haar(m, f) - m.eval_scalar(haar_plane(f))),
                      opt.tolerance);
    }
  }
}

// ---------------------------------------------------------------- q -> 1

void check_commutative_limit(CaseLog& log, int max_dim, int max_n) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto ctx = Context::make(dim, true);
    const Context& c = *ctx;
    const std::string dt = dstr(dim) + " q=1";
    log.check(c.num_params() == 0, "no parameters at q=1 " + dt);
    // classical Hodge: *dx^B = det(g^{a_i b_j}) i^{[D/2]} sgn(A, A^c) dx^{A^c}, A = B'
    for (int k = 0; k <= dim; ++k)
      for (const auto& b : ascending_subsets(dim, k)) {
        IndexTuple a;
        for (int v : b) a.push_back(c.primed(v));
        std::sort(a.begin(), a.end());
        // the matrix g^{a_i b_j} is a permutation matrix: its determinant is the permutation sign
        IndexTuple perm;
        for (int ai : a) perm.push_back(static_cast<int>(std::find(b.begin(), b.end(), c.primed(ai)) - b.begin()));
        int det = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
          for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) det = -det;
        const IndexTuple ac = complement(dim, a);
        int sgn = 1;
        for (int x1 : a)
          for (int x2 : ac)
            if (x1 > x2) sgn = -sgn;
        const Element expect = ExactScalar(det * sgn) * ExactScalar::i_pow(dim / 2) * wedge_word(ctx, ac);
        log.element_equal("q=1 Hodge = classical Hodge " + tuple_str(b) + " " + dt, hodge_plane(wedge_word(ctx, b)),
                          expect);
      }
    for (const auto& mono : x_monomials_up_to(dim, dim <= 3 ? 6 : 4))
      log.scalar_equal("q=1 Haar = classical moment " + to_string(c, mono) + " " + dt, c,
                       haar_plane(Element(ctx, mono)), ExactScalar(classical_moment(c, mono.x)));
  }
  for (int n = 1; n <= max_n; ++n) {
    const auto ctx = Context::make(2 * n + 1, true);
    const std::string nt = "n=" + std::to_string(n) + " q=1";
    log.scalar_equal("Bott charge = 1 " + nt, *ctx, charge(n, true), ExactScalar(1));
    log.scalar_equal("q=1 charge integral " + nt, *ctx, charge_integral(n, true),
                     ExactScalar(Rational(factorial(2 * n), 1LL << (n + 1))) * ExactScalar::i_pow(n));
    const FormMatrix F = curvature(projector(n, true));
    log.check(bott_curvature_discrepancy(F, n, 20, 42) < 1e-9, "q=1 curvature matches the classical monopole " + nt);
  }
}

}  // namespace twistcalc
