#include <doctest.h>

#include <random>

#include "twistcalc/parse.hpp"

using namespace twistcalc;

TEST_SUITE("cli") {
  TEST_CASE("parse examples") {
    const auto c = Context::make(5);
    CHECK(parse_expr(c, "x1*x2") == Element(c, x_monomial({{1, 1}, {2, 1}})));
    CHECK(parse_expr(c, "x2*x1") == ExactScalar::phase(c->q(2, 1)) * (x(c, 1) * x(c, 2)));
    CHECK(parse_expr(c, "dx1*dx1").is_zero());
    CHECK(to_string(parse_expr(c, "x2*x1")) == "q(1,2)^-1*x1*x2");
    CHECK(parse_expr(c, "1/2*(x3 + 1)") == ExactScalar(Rational(1, 2)) * (x(c, 3) + one(c)));
    CHECK(parse_scalar(c, "i*sqrt2*q(1,2)^2") ==
          ExactScalar::i() * ExactScalar::sqrt2() * ExactScalar::phase(c->q(1, 2) + c->q(1, 2)));
    CHECK(parse_expr(c, "x1^3") == x(c, 1) * x(c, 1) * x(c, 1));
  }

  TEST_CASE("parse errors carry a position") {
    const auto c = Context::make(5);
    CHECK_THROWS_AS(parse_expr(c, "x1 +* x2"), ParseError);
    CHECK_THROWS_AS(parse_expr(c, "x9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(c, "x1"), std::invalid_argument);
    try {
      (void)parse_expr(c, "x1 + )");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
  }

  TEST_CASE("print then parse round-trips") {
    std::mt19937_64 rng(3);
    for (int dim = 2; dim <= 7; ++dim) {
      const auto c = Context::make(dim);
      std::uniform_int_distribution<int> idx(1, dim), coef(-3, 3), kind(0, 3);
      for (int t = 0; t < 50; ++t) {
        Element e(c);
        for (int term = 0; term < 3; ++term) {
          Element m = Element(c, ExactScalar(coef(rng)));
          for (int f = 0; f < 4; ++f) {
            const int k = kind(rng);
            m = m * (k == 0 ? dx(c, idx(rng)) : k == 1 ? Element(c, ExactScalar::i()) : x(c, idx(rng)));
          }
          if (dim >= 4) m = m * Element(c, ExactScalar::phase(c->q(1, 2)));
          e += m;
        }
        CHECK(parse_expr(c, to_string(e)) == e);
      }
    }
  }
}
