#include <doctest.h>

#include "twistcalc/haar.hpp"
#include "twistcalc/parse.hpp"
#include "twistcalc/sphere.hpp"
#include "twistcalc/tensorcalc.hpp"

using namespace twistcalc;

TEST_SUITE("sphere") {
  TEST_CASE("reduce_mod_c examples") {
    const auto c = Context::make(5);
    CHECK(reduce_mod_c(c_element(c)) == one(c));
    CHECK(reduce_mod_c((c_element(c) - one(c)) * x(c, 2)).is_zero());
    const auto c3 = Context::make(3);
    CHECK(reduce_mod_c(parse_expr(c3, "x2^2 + 2*x1*x3")) == one(c3));
    const auto c1 = Context::make(1);
    CHECK(reduce_mod_c(parse_expr(c1, "x1^3")) == x(c1, 1));
    CHECK_THROWS_AS((void)reduce_mod_c(dx(c, 1)), std::invalid_argument);
  }

  TEST_CASE("reduce_mod_c preserves the Haar value") {
    const auto c = Context::make(5);
    for (const char* e : {"x1*x5*x2*x4", "x1^2*x5^2", "x1*x2*x4*x5*x3^2", "q(1,2)*x2*x1*x5*x4"}) {
      const Element f = parse_expr(c, e);
      CHECK(haar_plane(reduce_mod_c(f)) == haar_plane(f));
    }
  }

  TEST_CASE("omega_k and the volume form") {
    for (int n = 1; n <= 4; ++n) {
      const auto ctx = sphere_context(n);
      const int dim = n + 1;
      Element s(ctx);
      for (int k = 1; k <= dim; ++k) {
        for (int l = 1; l <= dim; ++l)
          CHECK(omega_k(ctx, k) * dx(ctx, l) == (k == l ? volume_plane(ctx) : Element(ctx)));
        s += x(ctx, k) * omega_k(ctx, k);
      }
      CHECK(s * dc_element(ctx) == ExactScalar(2) * c_element(ctx) * volume_plane(ctx));
      CHECK(top_decompose(sphere_volume(ctx).rep()) == c_element(ctx));
      CHECK(integrate(sphere_volume(ctx)) == ExactScalar(1));
      CHECK(top_decompose(Element(ctx)).is_zero());
    }
    CHECK_THROWS_AS((void)sphere_context(0), std::invalid_argument);
  }

  TEST_CASE("N = 2 top_decompose of a single omega term") {
    const auto ctx = sphere_context(2);
    // x3 omega_3 dc = 2 x3 x^{a'} dx^a omega_3-part, only a = 3 survives: 2 x3 x1 dx3 omega_3 = 2 x3 x1 V
    const Element w = x(ctx, 3) * omega_k(ctx, 3);
    CHECK(top_decompose(w) == x(ctx, 3) * x(ctx, 1));
  }

  TEST_CASE("sphere_equal examples") {
    for (int n = 1; n <= 4; ++n) {
      const auto ctx = sphere_context(n);
      const SphereForm v = sphere_volume(ctx);
      CHECK(sphere_equal(v, v));
      CHECK_FALSE(sphere_equal(v, SphereForm(Element(ctx))));
      CHECK(sphere_equal(SphereForm(c_element(ctx) * dx(ctx, 1)), SphereForm(dx(ctx, 1))));
      CHECK(sphere_equal(SphereForm(dc_element(ctx) * x(ctx, 1)), SphereForm(Element(ctx))));
      CHECK_FALSE(sphere_equal(SphereForm(dx(ctx, 1)), SphereForm(Element(ctx))));
    }
  }

  TEST_CASE("sphere Hodge examples") {
    for (int n = 1; n <= 4; ++n) {
      const auto ctx = sphere_context(n);
      const SphereForm v = sphere_volume(ctx);
      CHECK(sphere_equal(hodge_sphere(SphereForm(one(ctx))), v));
      CHECK(sphere_equal(hodge_sphere(v), SphereForm(one(ctx))));
      CHECK(sphere_equal(pairing_sphere(v, v), SphereForm(one(ctx))));
      for (int k = 0; k <= n; ++k)
        for (const auto& b : ascending_subsets(n + 1, k)) {
          const SphereForm a(wedge_word(ctx, b));
          const SphereForm twice = hodge_sphere(hodge_sphere(a));
          CHECK(sphere_equal(twice, (k * (n - k)) % 2 ? ExactScalar(-1) * a : a));
          CHECK(sphere_equal(hodge_sphere(SphereForm(star(a.rep()))), SphereForm(star(hodge_sphere(a).rep()))));
        }
    }
  }

  TEST_CASE("Connes-Landi presentation of S^4") {
    const auto c = Context::make(5);
    const ExactScalar r(Coeff{{}, {}, Rational(1, 2), {}});
    const Element al = r * x(c, 1), als = r * x(c, 5), be = r * x(c, 2), bes = r * x(c, 4);
    const Element t = ExactScalar(Rational(1, 2)) * (x(c, 3) + one(c));
    CHECK(reduce_mod_c(al * als + be * bes - t * (one(c) - t)).is_zero());
    CHECK(al * be == ExactScalar::phase(c->q(1, 2)) * (be * al));
  }
}
