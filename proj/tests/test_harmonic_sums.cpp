#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "qharm/harmonic_sums.hpp"
#include "qharm/qseries.hpp"

using namespace qharm;

namespace {

CyclotomicNumber cyc_rational(int n, const Rational& x) { return CyclotomicNumber::from_rational(n, x); }

}  // namespace

TEST_SUITE("harmonic-sums") {
  TEST_CASE("build_index") {
    CHECK(build_index(1, Composition{{0}}).depth() == 0);
    CHECK(oracle::vec(build_index(1, Composition{{1, 2}}).parts()) == std::vector<int>{1, 2, 1, 1});
    CHECK(oracle::vec(build_index(3, Composition{{0, 0}}).parts()) == std::vector<int>{4});
    for (int r = 1; r <= 3; ++r) {
      for (const auto& d : oracle::compositions(3, 3)) {
        CHECK(oracle::vec(build_index(r, Composition{d}).parts()) == oracle::block_index(r, d));
      }
    }
  }

  TEST_CASE("w_brute against the definition") {
    for (int r = 1; r <= 3; ++r) {
      for (int n = 2; n <= 7; ++n) {
        for (int l = 0; l <= 3; ++l) {
          for (int s = 0; s <= 2; ++s) {
            CAPTURE(r);
            CAPTURE(n);
            CAPTURE(l);
            CAPTURE(s);
            CHECK(w_brute({r, n, l, s}) == oracle::w_exact(r, n, l, s));
          }
        }
      }
    }
  }

  TEST_CASE("w examples") {
    for (int r = 1; r <= 3; ++r) {
      for (int n = 1; n <= 12; ++n) {
        CHECK(w_brute({r, n, 0, 0}) == cyc_rational(n, 1));
        CHECK(w_closed({r, n, 0, 0}) == cyc_rational(n, 1));
      }
    }
    CHECK(w_closed_r1({1, 4, 1, 0}) == one_minus_zeta_pow(4, 1) * Rational(3, 2));
    CHECK(w_closed_r1({1, 2, 1, 0}) == cyc_rational(2, 1));
    CHECK(w_brute({1, 4, 0, 1}) == eval_z(Index({2}), 4));
    CHECK(w_closed_r2({2, 5, 1, 0}) == w_brute({2, 5, 1, 0}));
    CHECK(w_closed_r2({2, 6, 0, 1}) == w_brute({2, 6, 0, 1}));
    CHECK(w_closed_r3({3, 5, 1, 0}) == w_brute({3, 5, 1, 0}));
    CHECK(w_closed_r3({3, 6, 0, 1}) == w_brute({3, 6, 0, 1}));
    CHECK(w_closed_r3({3, 6, 1, 0}) == w_brute({3, 6, 1, 0}));
    CHECK_THROWS(w_closed({4, 5, 1, 0}));
  }

  TEST_CASE("closed forms match the definition beyond the verify grid") {
    for (int n = 11; n <= 13; ++n) {
      CHECK(w_closed({1, n, 2, 1}) == oracle::w_exact(1, n, 2, 1));
      CHECK(w_closed({2, n, 1, 1}) == oracle::w_exact(2, n, 1, 1));
      CHECK(w_closed({3, n, 1, 1}) == oracle::w_exact(3, n, 1, 1));
    }
  }

  TEST_CASE("A(n, 0, 0) = 4 binom(n+1, 3)") {
    for (int n = 1; n <= 20; ++n) CHECK(a_term(n, 0, 0) == Rational(4 * oracle::pascal_binom(n + 1, 3)));
  }

  TEST_CASE("cyclic sums") {
    // s = 0: a single rotation.
    for (int n = 2; n <= 7; ++n) {
      CHECK(cyclic_sum({1, n, Composition{{2}}}) == eval_z(build_index(1, Composition{{2}}), n));
      // Coinciding rotations are counted twice.
      CHECK(cyclic_sum({2, n, Composition{{1, 1}}}) == eval_z(build_index(2, Composition{{1, 1}}), n) * Rational(2));
    }
    // Rotation invariance.
    for (int r = 1; r <= 3; ++r) {
      const Composition c{{2, 0, 1}};
      const auto base = cyclic_sum({r, 8, c});
      for (int i = 1; i < 3; ++i) CHECK(cyclic_sum({r, 8, c.rotated(i)}) == base);
    }
  }

  TEST_CASE("rotation-sum identity") {
    for (int r = 1; r <= 3; ++r) {
      for (int n = 2; n <= 7; ++n) {
        for (int l = 0; l <= 3; ++l) {
          for (int s = 0; s <= 2; ++s) {
            CyclotomicNumber total = CyclotomicNumber::zero(n);
            for (const auto& d : oracle::compositions(l, s + 1)) total += cyclic_sum({r, n, Composition{d}});
            CHECK(total == oracle::w_exact(r, n, l, s) * Rational(s + 1));
          }
        }
      }
    }
  }

  TEST_CASE("derived k and d") {
    const CyclicParams p1{1, 9, Composition{{1, 2}}};
    CHECK(p1.k() == 3 + 2);
    const CyclicParams p2{2, 9, Composition{{1, 2}}};
    CHECK(p2.k() == 2 * 3 + 3);
    CHECK(p2.d() == 4);
    const CyclicParams p3{3, 9, Composition{{1, 2}}};
    CHECK(p3.k() == 3 * 3 + 4);
  }

  TEST_CASE("conjecture checks on small examples") {
    CHECK(conjecture1_check({1, 6, Composition{{1, 1}}}).status == Status::pass);
    CHECK(conjecture1_check({1, 4, Composition{{0, 0}}}).status == Status::pass);
    CHECK(conjecture1_check({1, 3, Composition{{1, 1}}}).status == Status::skip);
    for (int n = 2; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        const CyclicParams p{1, n, Composition{{l}}};
        CHECK(conjecture1_value(p) == w_closed_r1({1, n, l, 0}));
      }
    }
    const auto c2 = conjecture2_check({2, 8, Composition{{1, 0}}});
    CHECK(c2.status == Status::pass);
    CHECK(c2.params["k"] == 5);
    CHECK(conjecture2_check({2, 4, Composition{{1, 1}}}).status == Status::skip);
    CHECK(guess_check({2, 8, Composition{{1, 0}}}).status == Status::pass);
    CHECK(guess_check({2, 9, Composition{{0, 1}}}).status == Status::pass);
    CHECK(guess_check({3, 9, Composition{{1, 0}}}).status == Status::pass);
    CHECK(guess_check({3, 10, Composition{{0, 1}}}).status == Status::pass);
  }

  TEST_CASE("equal cyclic sums force the conjectured value") {
    // When every pattern with the same (n, l, s) gives the same cyclic sum,
    // the rotation-sum identity pins that common value to
    // (s+1) W / #patterns, which must be the conjectured closed form.
    for (int r = 1; r <= 3; ++r) {
      for (int n = 2; n <= 9; ++n) {
        for (int s = 0; s <= 1; ++s) {
          for (int l = 0; l <= 2; ++l) {
            const auto comps = oracle::compositions(l, s + 1);
            const CyclicParams first{r, n, Composition{comps.front()}};
            if (first.k() >= n) continue;
            std::vector<CyclotomicNumber> values;
            for (const auto& d : comps) values.push_back(cyclic_sum({r, n, Composition{d}}));
            bool all_equal = true;
            for (const auto& v : values) all_equal = all_equal && v == values.front();
            if (!all_equal) continue;
            const auto common = oracle::w_exact(r, n, l, s) * ratio(s + 1, static_cast<long>(comps.size()));
            CAPTURE(r);
            CAPTURE(n);
            CAPTURE(l);
            CAPTURE(s);
            CHECK(values.front() == common);
            const CyclotomicNumber formula = r == 1   ? conjecture1_value(first)
                                             : r == 2 ? guess_c2_value(first)
                                                      : guess_c3_value(first);
            CHECK(formula == common);
          }
        }
      }
    }
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SumParams({0, 5, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SumParams({1, 0, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SumParams({1, 5, -1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CyclicParams({1, 5, Composition{{}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CyclicParams({1, 5, Composition{{1, -1}}}).validate(), std::invalid_argument);
  }
}
