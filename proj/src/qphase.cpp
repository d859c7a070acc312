#include "twistcalc/qphase.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace twistcalc {

namespace {

// Q(i) product, used twice by the Q(i, sqrt2) product.
std::pair<Rational, Rational> cmul(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& d) {
  return {a * c - b * d, a * d + b * c};
}

}  // namespace

std::complex<double> Coeff::to_complex() const {
  const double s2 = std::sqrt(2.0);
  return {re.to_double() + s2 * re2.to_double(), im.to_double() + s2 * im2.to_double()};
}

Coeff operator*(const Coeff& x, const Coeff& y) {
  // (A + C sqrt2)(E + G sqrt2) = (AE + 2CG) + (AG + CE) sqrt2 with A, C, E, G in Q(i).
  auto [ae_r, ae_i] = cmul(x.re, x.im, y.re, y.im);
  auto [cg_r, cg_i] = cmul(x.re2, x.im2, y.re2, y.im2);
  auto [ag_r, ag_i] = cmul(x.re, x.im, y.re2, y.im2);
  auto [ce_r, ce_i] = cmul(x.re2, x.im2, y.re, y.im);
  return {ae_r + cg_r * Rational(2), ae_i + cg_i * Rational(2), ag_r + ce_r, ag_i + ce_i};
}

Context::Context(int dim, bool commutative) : dim_(dim), commutative_(commutative) {
  if (dim < 1 || dim > kMaxDim)
    throw std::out_of_range("dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  if (!commutative) {
    for (int a = 1; a <= half(); ++a)
      for (int b = a + 1; b <= half(); ++b) params_.emplace_back(a, b);
  }
  table_.resize(static_cast<std::size_t>(dim * dim));
  for (int a = 1; a <= dim; ++a)
    for (int b = 1; b <= dim; ++b) table_[idx(a, b)] = reduce_pair(*this, a, b);
}

std::shared_ptr<const Context> Context::make(int dim, bool commutative) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::shared_ptr<const Context>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{dim, commutative}];
  if (!slot) slot = std::shared_ptr<const Context>(new Context(dim, commutative));
  return slot;
}

PhaseMonomial reduce_pair(const Context& ctx, int a, int b) {
  const int dim = ctx.dim();
  if (a < 1 || a > dim || b < 1 || b > dim) throw std::out_of_range("index out of range in q(a,b)");
  PhaseMonomial out;
  if (ctx.num_params() == 0) return out;

  // sign[a][b]: 0 unseen, +1 / -1 exponent relative to q_ab of the start.
  std::vector<int> seen(static_cast<std::size_t>((dim + 1) * (dim + 1)), 0);
  auto at = [&](int x, int y) -> int& { return seen[static_cast<std::size_t>(x * (dim + 1) + y)]; };
  std::deque<std::tuple<int, int, int>> queue{{a, b, 1}};
  at(a, b) = 1;
  bool trivial = false;
  while (!queue.empty()) {
    auto [x, y, s] = queue.front();
    queue.pop_front();
    const std::tuple<int, int, int> moves[] = {
        {ctx.primed(x), ctx.primed(y), s}, {y, x, -s}, {x, ctx.primed(y), -s}};
    for (auto [u, v, t] : moves) {
      int& mark = at(u, v);
      if (mark == 0) {
        mark = t;
        queue.emplace_back(u, v, t);
      } else if (mark != t) {
        trivial = true;
      }
    }
  }
  if (trivial) return out;
  const auto& params = ctx.params();
  for (std::size_t k = 0; k < params.size(); ++k) {
    int mark = at(params[k].first, params[k].second);
    if (mark != 0) {
      out.exp[k] = static_cast<std::int16_t>(mark);
      return out;
    }
  }
  throw std::logic_error("q(a,b) orbit reaches no independent parameter");
}

ExactScalar ExactScalar::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return ExactScalar(1);
    case 1: return i();
    case 2: return ExactScalar(-1);
    default: return -i();
  }
}

bool ExactScalar::is_rational() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1 || !terms_[0].first.is_one()) return false;
  const Coeff& c = terms_[0].second;
  return c.im.is_zero() && c.re2.is_zero() && c.im2.is_zero();
}

Rational ExactScalar::as_rational() const {
  if (!is_rational()) throw std::logic_error("scalar is not rational");
  return terms_.empty() ? Rational{} : terms_[0].second.re;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r;
  r.terms_.reserve(terms_.size());
  for (const auto& [p, c] : terms_) r.terms_.push_back({p.inverse(), c.conj()});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

ExactScalar ExactScalar::invert_phases() const {
  ExactScalar r;
  r.terms_.reserve(terms_.size());
  for (const auto& [p, c] : terms_) r.terms_.push_back({p.inverse(), c});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

ExactScalar ExactScalar::times_phase(const PhaseMonomial& p) const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.first += p;
  return r;  // uniform shift keeps the order
}

ExactScalar ExactScalar::at_unit_phases() const {
  Coeff sum{};
  for (const auto& t : terms_) sum = sum + t.second;
  return ExactScalar(sum);
}

std::complex<double> ExactScalar::eval(std::span<const double> theta) const {
  std::vector<std::complex<double>> roots;
  roots.reserve(theta.size());
  for (double t : theta) roots.push_back(std::polar(1.0, t));
  return eval_roots(roots);
}

std::complex<double> ExactScalar::eval_roots(std::span<const std::complex<double>> roots) const {
  std::complex<double> total{};
  for (const auto& [p, c] : terms_) {
    std::complex<double> v = c.to_complex();
    for (int k = 0; k < kMaxParams; ++k) {
      if (p.exp[k] == 0) continue;
      if (static_cast<std::size_t>(k) >= roots.size())
        throw std::out_of_range("eval: missing value for a deformation parameter");
      v *= std::pow(roots[static_cast<std::size_t>(k)], static_cast<int>(p.exp[k]));
    }
    total += v;
  }
  return total;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Coeff c = i->second + j->second;
      if (!c.is_zero()) merged.push_back({i->first, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return ExactScalar(a.terms_[0].second * b.terms_[0].second, a.terms_[0].first + b.terms_[0].first);
  }
  std::vector<ExactScalar::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) raw.push_back({pa + pb, ca * cb});
  std::sort(raw.begin(), raw.end(),
            [](const ExactScalar::Term& x, const ExactScalar::Term& y) { return x.first < y.first; });
  ExactScalar r;
  for (auto& t : raw) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second = r.terms_.back().second + t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

}  // namespace twistcalc
