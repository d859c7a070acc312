#include <doctest.h>

#include "twistcalc/chern.hpp"
#include "twistcalc/tensorcalc.hpp"

using namespace twistcalc;

namespace {

ScalarMatrix two_by_two(ExactScalar a, ExactScalar b, ExactScalar c, ExactScalar d) {
  ScalarMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// <e, tau> through the multilinear character on matrix entries.
ExactScalar charge_via_character(int n) {
  const FormMatrix e = projector(n);
  const int s = e.size();
  const int len = 2 * n + 1;
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  ExactScalar total;
  while (true) {
    std::vector<Element> a;
    for (int k = 0; k < len; ++k) a.push_back(e(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>((k + 1) % len)]));
    total += character_tau(a);
    int p = len - 1;
    for (; p >= 0 && ++idx[static_cast<std::size_t>(p)] == s; --p) idx[static_cast<std::size_t>(p)] = 0;
    if (p < 0) break;
  }
  std::int64_t nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  return ExactScalar(Rational(1, nf)) * total;
}

}  // namespace

TEST_SUITE("chern") {
  TEST_CASE("n = 1 gamma matrices and traces by hand") {
    const GammaRep r = gamma_rep(1);
    const ExactScalar s2 = ExactScalar::sqrt2(), z{};
    const ScalarMatrix g1 = two_by_two(z, z, s2, z), g2 = two_by_two(1, z, z, -1), g3 = two_by_two(z, s2, z, z);
    CHECK(r[1] == g1);
    CHECK(r[2] == g2);
    CHECK(r[3] == g3);
    CHECK((g1 * g2 * g3).trace() == ExactScalar(2));
    CHECK(clifford_trace(r, IndexTuple{1, 2, 3}) == ExactScalar(2));
    CHECK(clifford_trace(r, IndexTuple{1, 3, 2}) == ExactScalar(-2));
    CHECK(clifford_trace(r, IndexTuple{1, 1, 3}).is_zero());
    CHECK((r[1] * r[1] * r[3]).trace().is_zero());
  }

  TEST_CASE("Clifford relations for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      const GammaRep r = gamma_rep(n);
      const int dim = 2 * n + 1;
      const ScalarMatrix id = ScalarMatrix::identity(r.size());
      for (int i = 1; i <= dim; ++i) {
        CHECK(r[r.ctx->primed(i)] == r[i].conj_transpose());
        for (int j = 1; j <= dim; ++j)
          CHECK(r[i] * r[j] + ExactScalar::phase(r.ctx->q(j, i)) * (r[j] * r[i]) ==
                ExactScalar(2 * metric(*r.ctx, i, j)) * id);
      }
    }
  }

  TEST_CASE("n = 2 trace formula on all permutations of 1..5") {
    const GammaRep r = gamma_rep(2);
    IndexTuple p{1, 2, 3, 4, 5};
    do CHECK(clifford_trace(r, p) == ExactScalar(4) * epsilon_qinv(*r.ctx, p));
    while (std::next_permutation(p.begin(), p.end()));
  }

  TEST_CASE("projector for n = 1") {
    const FormMatrix e = projector(1);
    const auto& c = e.ctx();
    const ExactScalar h(Rational(1, 2)), hs(Coeff{{}, {}, Rational(1, 2), {}});
    CHECK(e(0, 0) == h * (one(c) + x(c, 2)));
    CHECK(e(0, 1) == hs * x(c, 1));
    CHECK(e(1, 0) == hs * x(c, 3));
    CHECK(e(1, 1) == h * (one(c) - x(c, 2)));
    CHECK((e * e - e).reduce_mod_c().is_zero());
    CHECK(e.star_transpose() == e);
  }

  TEST_CASE("parallel and serial matrix products agree") {
    for (int n = 1; n <= 2; ++n) {
      const FormMatrix e = projector(n);
      const FormMatrix de = e.d();
      CHECK(e * de == multiply_serial(e, de));
      CHECK(de * de * e == multiply_serial(multiply_serial(de, de), e));
    }
  }

  TEST_CASE("curvature") {
    for (int n = 1; n <= 2; ++n) {
      const FormMatrix e = projector(n);
      const FormMatrix F = curvature(e);
      CHECK(F.star_transpose().sphere_equal(-F));
      CHECK((e * F).sphere_equal(F));
      CHECK((F * e).sphere_equal(F));
    }
    CHECK_THROWS_AS((void)curvature(projector(1) + projector(1)), std::invalid_argument);
  }

  TEST_CASE("charge") {
    CHECK(charge_integral(1) == ExactScalar(Rational(1, 2)) * ExactScalar::i());
    CHECK(charge_integral(2) == ExactScalar(-3));
    CHECK(charge(1) == ExactScalar(1));
    CHECK(charge(2) == ExactScalar(1));
    CHECK(charge(1, true) == ExactScalar(1));
    CHECK(charge(2, true) == ExactScalar(1));
    CHECK(integral_trace_de(1).is_zero());
    CHECK(integral_trace_de(2).is_zero());
  }

  TEST_CASE("charge through the multilinear character") {
    CHECK(charge_via_character(1) == ExactScalar(1));
    CHECK(charge_via_character(2) == ExactScalar(1));
  }

  TEST_CASE("character vanishes when a later argument is 1") {
    const auto c = Context::make(3);
    const std::vector<Element> a{x(c, 1), one(c), x(c, 3)};
    CHECK(character_tau(a).is_zero());
  }
}
