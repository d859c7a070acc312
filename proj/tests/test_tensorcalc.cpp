#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "twistcalc/tensorcalc.hpp"

using namespace twistcalc;

namespace {

// eps_q^{I} read off the normal-ordered wedge word.
ExactScalar epsilon_from_wedge(const ContextPtr& c, const IndexTuple& idx) {
  const Element w = wedge_word(c, idx);
  Monomial top;
  top.dx = static_cast<std::uint16_t>((1U << c->dim()) - 1);
  return w.coeff(top);
}

// Sum over permutations of sgn * (row action of the permutation's reduced word).
std::map<IndexTuple, ExactScalar> brute_row(const Context& c, const IndexTuple& upper) {
  const std::size_t k = upper.size();
  std::map<IndexTuple, ExactScalar> row;
  IndexTuple perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // decompose by insertion sort, applying each adjacent swap to the row vector
    IndexTuple p = perm, r = upper;
    ExactScalar v(1);
    int sgn = 1;
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = i; j > 0 && p[j - 1] > p[j]; --j) {
        std::swap(p[j - 1], p[j]);
        v = v * ExactScalar::phase(c.q(r[j - 1], r[j]));
        std::swap(r[j - 1], r[j]);
        sgn = -sgn;
      }
    row[r] += sgn > 0 ? v : -v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  return row;
}

}  // namespace

TEST_SUITE("tensorcalc") {
  TEST_CASE("epsilon examples") {
    const auto c4 = Context::make(4);
    CHECK(epsilon_q(*c4, IndexTuple{1, 2, 3, 4}) == ExactScalar(1));
    CHECK(epsilon_q(*c4, IndexTuple{2, 1, 3, 4}) == -ExactScalar::phase(c4->q(2, 1)));
    for (int d = 1; d <= 7; ++d) {
      const auto c = Context::make(d);
      IndexTuple rev(static_cast<std::size_t>(d));
      std::iota(rev.rbegin(), rev.rend(), 1);
      CHECK(epsilon_q(*c, rev) == ExactScalar((d / 2) % 2 ? -1 : 1));
    }
    CHECK_THROWS_AS((void)epsilon_q(*c4, IndexTuple{1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("epsilon agrees with wedge reordering") {
    for (int d = 1; d <= 6; ++d) {
      const auto c = Context::make(d);
      IndexTuple p(static_cast<std::size_t>(d));
      std::iota(p.begin(), p.end(), 1);
      do {
        CHECK(epsilon_q(*c, p) == epsilon_from_wedge(c, p));
        CHECK(epsilon_qinv(*c, p) == epsilon_from_wedge(c, p).invert_phases());
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }

  TEST_CASE("W examples") {
    const auto c4 = Context::make(4);
    CHECK(antisym_W(*c4, {1, 2}, {2, 1}) == -ExactScalar::phase(c4->q(1, 2)));
    CHECK(antisym_W(*c4, {1, 2}, {1, 2}) == ExactScalar(1));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) CHECK(antisym_W(*c4, {i}, {j}) == ExactScalar(i == j ? 1 : 0));
    IndexTuple id{1, 2, 3, 4}, p = id;
    do CHECK(antisym_W(*c4, id, p) == epsilon_qinv(*c4, p));
    while (std::next_permutation(p.begin(), p.end()));
    CHECK_THROWS_AS((void)antisym_W(*c4, {1, 2}, {1}), std::invalid_argument);
  }

  TEST_CASE("W recursion agrees with the brute permutation sum") {
    for (int d = 1; d <= 5; ++d) {
      const auto c = Context::make(d);
      for (int k = 1; k <= std::min(d, 4); ++k) {
        IndexTuple t(static_cast<std::size_t>(k), 1);
        while (true) {
          CHECK(antisym_row(*c, t) == brute_row(*c, t));
          int pos = k - 1;
          for (; pos >= 0 && ++t[static_cast<std::size_t>(pos)] > d; --pos) t[static_cast<std::size_t>(pos)] = 1;
          if (pos < 0) break;
        }
      }
    }
  }

  TEST_CASE("W is idempotent up to k!") {
    const auto c = Context::make(5);
    for (const auto& sub : ascending_subsets(5, 3)) {
      IndexTuple i = sub;
      do {
        std::map<IndexTuple, ExactScalar> sq;
        for (const auto& [mid, v] : antisym_row(*c, i))
          for (const auto& [j, w] : antisym_row(*c, mid)) sq[j] += v * w;
        std::erase_if(sq, [](const auto& kv) { return kv.second.is_zero(); });
        std::map<IndexTuple, ExactScalar> expect;
        for (const auto& [j, v] : antisym_row(*c, i)) expect[j] = ExactScalar(6) * v;
        CHECK(sq == expect);
      } while (std::next_permutation(i.begin(), i.end()));
    }
  }

  TEST_CASE("pairing examples") {
    for (int d = 2; d <= 6; ++d) {
      const auto c = Context::make(d);
      CHECK(pairing_plane(dx(c, 1), dx(c, d)) == one(c));
      CHECK(pairing_plane(dx(c, 1), dx(c, 1)).is_zero());
      CHECK(pairing_plane(volume_plane(c), volume_plane(c)) == one(c));
    }
  }

  TEST_CASE("D = 2 commutative Hodge star solves a ^ *b = <a,b> V by hand") {
    const auto c = Context::make(2, true);
    // *dx1 = a dx1 + b dx2: dx1 ^ *dx1 = b dx1dx2 must vanish, dx2 ^ *dx1 = -a dx1dx2 = i dx1dx2
    CHECK(hodge_plane(dx(c, 1)) == -ExactScalar::i() * dx(c, 1));
    CHECK(hodge_plane(dx(c, 2)) == ExactScalar::i() * dx(c, 2));
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        CHECK(dx(c, a) * hodge_plane(dx(c, b)) == pairing_plane(dx(c, a), dx(c, b)) * volume_plane(c));
  }

  TEST_CASE("Hodge star on constants and top forms") {
    for (int d = 1; d <= 7; ++d) {
      const auto c = Context::make(d);
      CHECK(hodge_plane(one(c)) == volume_plane(c));
      CHECK(hodge_plane(volume_plane(c)) == one(c));
    }
    const auto c5 = Context::make(5);
    CHECK_THROWS_AS((void)hodge_plane(x(c5, 1) + dx(c5, 1)), std::invalid_argument);
  }
}
