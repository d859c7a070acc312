#include "twistcalc/parse.hpp"

#include <cctype>
#include <vector>

namespace twistcalc {

namespace {

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  Element parse_all() {
    Element e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 17) fail("integer literal too long");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  long long signed_integer() {
    if (accept('-')) return -integer();
    accept('+');
    return integer();
  }
  int index() {
    const std::size_t at = pos_;
    long long a = integer();
    if (a < 1 || a > ctx_->dim()) {
      pos_ = at;
      fail("index " + std::to_string(a) + " out of range for D=" + std::to_string(ctx_->dim()));
    }
    return static_cast<int>(a);
  }

  Element expr() {
    Element total(ctx_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Element t = term();
      if (negate) total -= t;
      else total += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return total;
  }

  Element term() {
    Element t = factor();
    while (accept('*')) t = t * factor();
    return t;
  }

  Element factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long n = integer();
      long long den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return scalar(ctx_, ExactScalar(Rational(n, den)));
    }
    if (accept_word("sqrt2")) return scalar(ctx_, ExactScalar::sqrt2());
    if (accept_word("dx")) return dx(ctx_, index());
    if (accept_word("q(")) {
      int a = index();
      expect(',');
      int b = index();
      expect(')');
      long long power = 1;
      if (accept('^')) power = signed_integer();
      PhaseMonomial p;
      p.add_scaled(ctx_->q(a, b), static_cast<int>(power));
      return scalar(ctx_, ExactScalar::phase(p));
    }
    if (accept_word("i")) return scalar(ctx_, ExactScalar::i());
    if (accept_word("x")) {
      int a = index();
      long long power = 1;
      if (accept('^')) power = integer();
      Element r = one(ctx_);
      Element g = x(ctx_, a);
      for (long long k = 0; k < power; ++k) r = r * g;
      return r;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  ContextPtr ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

void append_rational_unit(std::vector<std::string>& out, const Rational& r, const char* unit,
                          bool& negative) {
  negative = r.num() < 0;
  Rational a = negative ? -r : r;
  if (!(a == Rational(1)) || unit == nullptr) out.push_back(a.str());
  if (unit) out.emplace_back(unit);
}

// One printed summand per (rational component, phase, monomial).
void print_terms(const Context& ctx, const ExactScalar& s, const std::string& mono,
                 std::vector<std::pair<bool, std::string>>& out) {
  for (const auto& [p, c] : s.terms()) {
    std::string phase;
    for (int k = 0; k < ctx.num_params(); ++k) {
      if (p.exp[k] == 0) continue;
      if (!phase.empty()) phase += "*";
      const auto& [a, b] = ctx.params()[static_cast<std::size_t>(k)];
      phase += "q(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (p.exp[k] != 1) phase += "^" + std::to_string(p.exp[k]);
    }
    const std::pair<const Rational*, const char*> parts[] = {
        {&c.re, nullptr}, {&c.im, "i"}, {&c.re2, "sqrt2"}, {&c.im2, "i*sqrt2"}};
    for (const auto& [r, unit] : parts) {
      if (r->is_zero()) continue;
      std::vector<std::string> f;
      bool negative = false;
      const bool bare = unit == nullptr && (!phase.empty() || !mono.empty()) && (*r == Rational(1) || *r == Rational(-1));
      if (bare) negative = r->num() < 0;
      else append_rational_unit(f, *r, unit, negative);
      if (!phase.empty()) f.push_back(phase);
      if (!mono.empty()) f.push_back(mono);
      std::string joined;
      for (std::size_t k = 0; k < f.size(); ++k) joined += (k ? "*" : "") + f[k];
      out.emplace_back(negative, joined);
    }
  }
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string r;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [neg, t] = terms[k];
    if (k == 0) r += neg ? "-" + t : t;
    else r += (neg ? " - " : " + ") + t;
  }
  return r;
}

}  // namespace

Element parse_expr(const ContextPtr& ctx, std::string_view text) { return Parser(ctx, text).parse_all(); }

ExactScalar parse_scalar(const ContextPtr& ctx, std::string_view text) {
  Element e = parse_expr(ctx, text);
  if (e.is_zero()) return {};
  if (e.size() != 1 || !(e.terms().begin()->first == Monomial{}))
    throw ParseError("expected a scalar expression", 0);
  return e.terms().begin()->second;
}

std::string to_string(const Context& ctx, const Monomial& m) {
  std::string r;
  for (int a = 1; a <= ctx.dim(); ++a) {
    const int e = m.x[a - 1];
    if (e == 0) continue;
    if (!r.empty()) r += "*";
    r += "x" + std::to_string(a);
    if (e > 1) r += "^" + std::to_string(e);
  }
  for (int a = 1; a <= ctx.dim(); ++a) {
    if (!m.has_dx(a)) continue;
    if (!r.empty()) r += "*";
    r += "dx" + std::to_string(a);
  }
  return r;
}

std::string to_string(const Context& ctx, const ExactScalar& s) {
  std::vector<std::pair<bool, std::string>> out;
  print_terms(ctx, s, "", out);
  return join_terms(out);
}

std::string to_string(const Element& e) {
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [m, s] : e.terms()) print_terms(e.context(), s, to_string(e.context(), m), out);
  return join_terms(out);
}

}  // namespace twistcalc
