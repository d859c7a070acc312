#include <doctest.h>

#include <random>

#include "twistcalc/ncalg.hpp"

using namespace twistcalc;

namespace {

// Bubble sort with the defining commutation relations, one adjacent swap at a time.
Element bubble_normal_order(const ContextPtr& ctx, std::vector<Generator> w) {
  auto rank = [](const Generator& g) { return std::make_pair(g.kind == Generator::Kind::DX ? 1 : 0, g.index); };
  ExactScalar coeff(1);
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const Generator& u = w[k];
      const Generator& v = w[k + 1];
      if (u.kind == Generator::Kind::DX && v.kind == Generator::Kind::DX && u.index == v.index) return Element(ctx);
      if (rank(v) < rank(u)) {
        coeff = coeff * ExactScalar::phase(ctx->q(u.index, v.index));
        if (u.kind == Generator::Kind::DX && v.kind == Generator::Kind::DX) coeff = -coeff;
        std::swap(w[k], w[k + 1]);
        swapped = true;
      }
    }
  }
  Monomial m;
  for (const auto& g : w) {
    if (g.kind == Generator::Kind::X) ++m.x[static_cast<std::size_t>(g.index - 1)];
    else m.dx = static_cast<std::uint16_t>(m.dx | (1U << (g.index - 1)));
  }
  return Element(ctx, m, coeff);
}

std::vector<Generator> random_word(std::mt19937_64& rng, int dim, int len) {
  std::uniform_int_distribution<int> idx(1, dim), kind(0, 2);
  std::vector<Generator> w;
  for (int k = 0; k < len; ++k) w.push_back(kind(rng) == 0 ? Generator::dx(idx(rng)) : Generator::x(idx(rng)));
  return w;
}

}  // namespace

TEST_SUITE("ncalg") {
  TEST_CASE("normal_order examples") {
    const auto c = Context::make(5);
    CHECK(x(c, 2) * x(c, 1) == ExactScalar::phase(c->q(2, 1)) * (x(c, 1) * x(c, 2)));
    CHECK((dx(c, 1) * dx(c, 1)).is_zero());
    CHECK(dx(c, 3) * x(c, 1) == x(c, 1) * dx(c, 3));
    CHECK(x(c, 1) * one(c) == x(c, 1));
    CHECK(x(c, 2) * (x(c, 1) * x(c, 2)) == Element(c, x_monomial({{1, 1}, {2, 2}}), ExactScalar::phase(c->q(2, 1))));
    CHECK((dx(c, 1) * dx(c, 2) * dx(c, 1)).is_zero());
  }

  TEST_CASE("normal_order agrees with an independent bubble sort") {
    std::mt19937_64 rng(7);
    for (int dim = 1; dim <= 7; ++dim) {
      const auto c = Context::make(dim);
      for (int t = 0; t < 200; ++t) {
        const auto w = random_word(rng, dim, 1 + t % 9);
        CHECK(normal_order(c, w) == bubble_normal_order(c, w));
      }
    }
  }

  TEST_CASE("d and star") {
    const auto c = Context::make(5);
    CHECK(d(x(c, 1)) == dx(c, 1));
    CHECK(d(x(c, 1) * x(c, 2)) == dx(c, 1) * x(c, 2) + x(c, 1) * dx(c, 2));
    CHECK(d(one(c)).is_zero());
    CHECK(star(x(c, 1)) == x(c, 5));
    CHECK(star(dx(c, 1) * dx(c, 2)) == -(dx(c, 4) * dx(c, 5)));
    CHECK(star(ExactScalar::i() * x(c, 3)) == -ExactScalar::i() * x(c, 3));
  }

  TEST_CASE("d^2 = 0 on random forms and d agrees with the bubble-sorted Leibniz expansion") {
    std::mt19937_64 rng(11);
    for (int dim = 1; dim <= 5; ++dim) {
      const auto c = Context::make(dim);
      for (int t = 0; t < 50; ++t) {
        // only x generators: d of a word is the sum of words with one x replaced by dx
        std::vector<Generator> w = random_word(rng, dim, 1 + t % 5);
        for (auto& g : w) g.kind = Generator::Kind::X;
        const Element f = normal_order(c, w);
        CHECK(d(d(f)).is_zero());
        Element expect(c);
        for (std::size_t k = 0; k < w.size(); ++k) {
          auto v = w;
          v[k].kind = Generator::Kind::DX;
          expect += bubble_normal_order(c, v);
        }
        CHECK(d(f) == expect);
      }
    }
  }

  TEST_CASE("c is central and V is central") {
    for (int dim = 1; dim <= 7; ++dim) {
      const auto c = Context::make(dim);
      for (int a = 1; a <= dim; ++a) {
        CHECK(x(c, a) * c_element(c) == c_element(c) * x(c, a));
        CHECK(dx(c, a) * c_element(c) == c_element(c) * dx(c, a));
        CHECK(x(c, a) * volume_plane(c) == volume_plane(c) * x(c, a));
      }
    }
  }

  TEST_CASE("form degree bookkeeping") {
    const auto c = Context::make(4);
    CHECK(Element(c).form_degree() == 0);
    CHECK((x(c, 1) + dx(c, 1)).form_degree() == -1);
    CHECK((dx(c, 1) * dx(c, 2)).form_degree() == 2);
    CHECK_THROWS_AS((x(c, 1) + dx(c, 1)).require_form_degree(0, "test"), std::invalid_argument);
    CHECK_THROWS(x(c, 5));
    CHECK_THROWS(x(c, 1) == x(Context::make(5), 1));
  }
}
