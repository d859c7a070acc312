#include <doctest.h>

#include <map>
#include <set>
#include <numbers>
#include <vector>

#include "twistcalc/qphase.hpp"

using namespace twistcalc;

namespace {

// Independent orbit computation: signed union-find over ordered pairs (a,b),
// a != b, a != b', with q_ab = q_{a'b'} = q_{ba}^-1 = q_{ab'}^-1.
struct SignedClasses {
  int dim;
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> parent;

  explicit SignedClasses(int d) : dim(d) {
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        if (a != b && a != d + 1 - b) parent[{a, b}] = {{a, b}, 1};
    for (auto& [p, _] : parent) {
      const auto [a, b] = p;
      join(p, {d + 1 - a, d + 1 - b}, 1);
      join(p, {b, a}, -1);
      join(p, {a, d + 1 - b}, -1);
    }
  }
  std::pair<std::pair<int, int>, int> find(std::pair<int, int> p) {
    auto [up, s] = parent.at(p);
    if (up == p) return {p, 1};
    auto [root, s2] = find(up);
    parent[p] = {root, s * s2};
    return {root, s * s2};
  }
  bool trivial(std::pair<int, int> p) {
    // a class containing a pair with both signs forces q = 1
    return forced.count(find(p).first) > 0;
  }
  void join(std::pair<int, int> p, std::pair<int, int> r, int sign) {
    auto [rp, sp] = find(p);
    auto [rr, sr] = find(r);
    if (rp == rr) {
      if (sp != sign * sr) forced.insert(rp);
      return;
    }
    parent[rr] = {rp, sign * sp * sr};
    if (forced.count(rr)) forced.insert(rp);
  }
  std::set<std::pair<int, int>> forced;
};

}  // namespace

TEST_SUITE("qphase") {
  TEST_CASE("reduce_pair examples") {
    const auto c = Context::make(5);
    PhaseMonomial q12;
    q12.exp[0] = 1;
    CHECK(reduce_pair(*c, 1, 2) == q12);
    CHECK(reduce_pair(*c, 4, 5) == q12.inverse());
    CHECK(reduce_pair(*c, 3, 1).is_one());
    for (int a = 1; a <= 5; ++a) CHECK(reduce_pair(*c, a, a).is_one());
    CHECK_THROWS_AS((void)reduce_pair(*c, 0, 1), std::out_of_range);
  }

  TEST_CASE("independent parameters are the pairs a < b <= D/2") {
    for (int d = 1; d <= kMaxDim; ++d) {
      const auto c = Context::make(d);
      std::vector<std::pair<int, int>> expect;
      for (int a = 1; a <= d / 2; ++a)
        for (int b = a + 1; b <= d / 2; ++b) expect.push_back({a, b});
      CHECK(c->params() == expect);
      CHECK(Context::make(d, true)->num_params() == 0);
    }
  }

  TEST_CASE("reduce_pair agrees with an independent signed union-find") {
    for (int d = 1; d <= 9; ++d) {
      const auto c = Context::make(d);
      SignedClasses sc(d);
      for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
          if (a == b || a == d + 1 - b) {
            CHECK(reduce_pair(*c, a, b).is_one());
            continue;
          }
          if (sc.trivial({a, b})) {
            CHECK(reduce_pair(*c, a, b).is_one());
            continue;
          }
          auto [root, sign] = sc.find({a, b});
          const PhaseMonomial r = reduce_pair(*c, root.first, root.second);
          CHECK(reduce_pair(*c, a, b) == (sign > 0 ? r : r.inverse()));
          CHECK_FALSE(r.is_one());
        }
      for (const auto& [a, b] : c->params()) CHECK_FALSE(reduce_pair(*c, a, b).is_one());
    }
  }

  TEST_CASE("scalar arithmetic") {
    const auto c = Context::make(5);
    const ExactScalar q12 = ExactScalar::phase(c->q(1, 2));
    CHECK((ExactScalar::i() * q12).conj() == -ExactScalar::i() * ExactScalar::phase(c->q(2, 1)));
    const double pi[] = {std::numbers::pi};
    CHECK(std::abs(q12.eval(pi) - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(q12 * ExactScalar::phase(c->q(2, 1)) == ExactScalar(1));
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == ExactScalar(2));
    CHECK(ExactScalar::i_pow(2) == ExactScalar(-1));
    CHECK(ExactScalar::i_pow(-1) == -ExactScalar::i());
    CHECK((q12 + q12 - q12 - q12).is_zero());
    CHECK(q12.invert_phases() == ExactScalar::phase(c->q(2, 1)));
    CHECK((q12 * ExactScalar(3)).at_unit_phases() == ExactScalar(3));
  }

  TEST_CASE("rational arithmetic stays normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(4, 3)) == Rational(1));
    CHECK_THROWS(Rational(1, 0));
  }
}
