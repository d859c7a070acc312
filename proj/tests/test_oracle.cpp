#include <doctest.h>

#include "twistcalc/haar.hpp"
#include "twistcalc/oracle.hpp"
#include "twistcalc/parse.hpp"
#include "twistcalc/sphere.hpp"

using namespace twistcalc;

TEST_SUITE("oracle") {
  TEST_CASE("check_identity examples") {
    const auto c = Context::make(5);
    CHECK(check_identity(Element(c), Space::Plane).pass);
    CHECK_FALSE(check_identity(x(c, 1), Space::Plane).pass);
    CHECK(check_identity(c_element(c) - one(c), Space::Sphere).pass);
    CHECK_FALSE(check_identity(c_element(c) - one(c), Space::Plane).pass);
    const Element rel = x(c, 1) * x(c, 2) - ExactScalar::phase(c->q(1, 2)) * (x(c, 2) * x(c, 1));
    CHECK(rel.is_zero());
  }

  TEST_CASE("relations hold in the model generator by generator") {
    const auto c = Context::make(5);
    for (const auto& m : make_models(c, {})) {
      const std::vector<Generator> w12{Generator::x(1), Generator::x(2)}, w21{Generator::x(2), Generator::x(1)};
      const ModelValue diff = model_add(eval_word(m, w12), eval_word(m, w21), -m.eval_scalar(ExactScalar::phase(c->q(1, 2))));
      CHECK(check_model_value(m, diff, Space::Plane, {}).pass);
      // a wrong phase is detected
      const ModelValue wrong = model_add(eval_word(m, w12), eval_word(m, w21), -1.0);
      CHECK_FALSE(check_model_value(m, wrong, Space::Plane, {}).pass);
    }
  }

  TEST_CASE("the oracle catches a wrong Hodge sign") {
    const auto c = Context::make(4);
    for (const auto& m : make_models(c, {})) {
      const Element a = dx(c, 1) * dx(c, 2);
      const ModelValue good = model_add(eval_element(m, a), classical_hodge(m, classical_hodge(m, eval_element(m, a))), -1.0);
      const ModelValue bad = model_add(eval_element(m, a), classical_hodge(m, classical_hodge(m, eval_element(m, a))), 1.0);
      CHECK(check_model_value(m, good, Space::Plane, {}).pass);
      CHECK_FALSE(check_model_value(m, bad, Space::Plane, {}).pass);
    }
  }

  TEST_CASE("numeric Haar and integral") {
    const auto c = Context::make(5);
    const Element f = parse_expr(c, "x1*x5*x3^2 + 2*q(1,2)*x1*x2*x4*x5 + i*x3^4");
    for (const auto& m : make_models(c, {})) {
      CHECK(std::abs(numeric_haar(m, f) - m.eval_scalar(haar_plane(f))) < 1e-12);
      CHECK(std::abs(numeric_haar(m, c_element(c)) - 1.0) < 1e-12);
    }
    for (int n = 1; n <= 4; ++n) {
      const auto ctx = sphere_context(n);
      for (const auto& m : make_models(ctx, {}))
        CHECK(std::abs(numeric_integrate(m, sphere_volume(ctx).rep()) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("classical moments") {
    const auto c = Context::make(3);
    std::array<std::uint8_t, kMaxDim> e{};
    e[1] = 2;
    CHECK(classical_moment(*c, e) == Coeff{Rational(1, 3), {}, {}, {}});
    e = {};
    e[0] = 1;
    e[2] = 1;
    CHECK(classical_moment(*c, e) == Coeff{Rational(1, 3), {}, {}, {}});
    e = {};
    e[0] = 2;
    CHECK(classical_moment(*c, e).is_zero());
  }

  TEST_CASE("parallel and serial identity checks agree and are seeded") {
    const auto c = Context::make(4);
    const Element f = parse_expr(c, "x1*dx2 + q(1,2)*x2*dx1");
    OracleOptions o;
    o.seed = 9;
    const IdentityReport a = check_identity(f, Space::Plane, o), b = check_identity_serial(f, Space::Plane, o);
    CHECK(a.max_magnitude == b.max_magnitude);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.seed == 9);
    CHECK(a.evaluations >= 40);
  }

  TEST_CASE("default moduli are distinct primes") {
    const auto m = default_moduli(6);
    CHECK(m == std::vector<int>{13, 17, 19, 23, 29, 31});
  }
}
