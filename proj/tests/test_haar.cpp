#include <doctest.h>

#include "twistcalc/haar.hpp"
#include "twistcalc/parse.hpp"

using namespace twistcalc;

namespace {

std::int64_t double_factorial(int n) {
  std::int64_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// D (D+2) ... (D+2k-2): the classical normaliser of degree-2k moments on S^{D-1}.
Rational rising(int dim, int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= Rational(dim + 2 * j);
  return r;
}

// E[y^{2k}] for one real coordinate on the unit sphere.
Rational real_moment(int dim, int k) { return Rational(double_factorial(2 * k - 1)) / rising(dim, k); }

// E[|z|^{2k}] for z = (y1 + i y2)/sqrt2.
Rational pair_moment(int dim, int k) {
  Rational s(0);
  for (int j = 0; j <= k; ++j)
    s += Rational(binom(k, j) * double_factorial(2 * j - 1) * double_factorial(2 * (k - j) - 1));
  return s / rising(dim, k) / Rational(std::int64_t{1} << k);
}

}  // namespace

TEST_SUITE("haar") {
  TEST_CASE("partial derivative examples") {
    const auto c = Context::make(5);
    CHECK(partial(1, x(c, 1)) == one(c));
    CHECK(partial(1, x(c, 2) * x(c, 1)) == ExactScalar::phase(c->q(2, 1)) * x(c, 2));
    CHECK(partial(3, one(c)).is_zero());
    CHECK_THROWS_AS((void)partial(1, dx(c, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)partial(6, x(c, 1)), std::out_of_range);
  }

  TEST_CASE("Laplacian examples") {
    for (int d = 1; d <= 7; ++d) {
      const auto c = Context::make(d);
      for (int k = 1; k <= d; ++k) CHECK(laplacian(x(c, k) * x(c, c->primed(k))) == Element(c, ExactScalar(2)));
      CHECK(laplacian(c_element(c)) == Element(c, ExactScalar(2 * d)));
      CHECK(laplacian(x(c, 1)).is_zero());
    }
  }

  TEST_CASE("Haar examples") {
    const auto c = Context::make(5);
    CHECK(haar_plane(one(c)) == ExactScalar(1));
    CHECK(haar_plane(x(c, 3) * x(c, 3)) == ExactScalar(Rational(1, 5)));
    CHECK(haar_plane(x(c, 1) * x(c, 5)) == ExactScalar(Rational(1, 5)));
    CHECK(haar_plane(c_element(c)) == ExactScalar(1));
    CHECK(haar_lambda(1, 5) == Rational(1, 10));
  }

  TEST_CASE("Haar reproduces independent classical sphere moments") {
    for (int d = 2; d <= 7; ++d) {
      const auto c = Context::make(d);
      for (int k = 1; k <= 4; ++k) {
        if (c->has_middle()) {
          const int m = c->middle();
          CHECK(haar_plane(Element(c, x_monomial({{m, 2 * k}}))) == ExactScalar(real_moment(d, k)));
        }
        for (int a = 1; a <= d / 2; ++a)
          CHECK(haar_plane(Element(c, x_monomial({{a, k}, {c->primed(a), k}}))) == ExactScalar(pair_moment(d, k)));
      }
    }
  }

  TEST_CASE("h(c^k f) = h(f)") {
    const auto c = Context::make(4);
    const Element f = parse_expr(c, "x1*x4 + 3*x2*x3*x1*x4 + i*x2^2*x3^2");
    Element ck = one(c);
    for (int k = 0; k < 3; ++k) {
      CHECK(haar_plane(ck * f) == haar_plane(f));
      ck = ck * c_element(c);
    }
  }
}
