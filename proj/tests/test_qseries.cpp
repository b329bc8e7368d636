#include <doctest.h>

#include <functional>
#include <set>

#include "oracle.hpp"
#include "qharm/qseries.hpp"
#include "qharm/report.hpp"

using namespace qharm;

namespace {

/// All indices of weight exactly w (compositions of w into positive parts).
std::vector<std::vector<int>> indices_of_weight(int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(w);
  return out;
}

struct Fill {
  std::vector<int> p;
  int weight_drop;
  int depth_drop;
};

/// Fill every gap with ",", "+" or "-1+" by explicit recursion.
std::vector<Fill> fills(const std::vector<int>& k) {
  std::vector<Fill> out;
  std::function<void(std::size_t, std::vector<int>, int, int)> rec = [&](std::size_t i, std::vector<int> p, int wd,
                                                                         int dd) {
    if (i == k.size()) {
      out.push_back({p, wd, dd});
      return;
    }
    auto sep = p;
    sep.push_back(k[i]);
    rec(i + 1, sep, wd, dd);
    auto plus = p;
    plus.back() += k[i];
    rec(i + 1, plus, wd, dd + 1);
    auto minus = p;
    minus.back() += k[i] - 1;
    rec(i + 1, minus, wd + 1, dd + 1);
  };
  rec(1, {k[0]}, 0, 0);
  return out;
}

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("index accessors") {
    const Index k({3, 1, 2});
    CHECK(k.weight() == 6);
    CHECK(k.depth() == 3);
    CHECK(k.height(1) == 2);
    CHECK(k.height(2) == 1);
    CHECK(k.height(3) == 0);
    const Index empty;
    CHECK(empty.weight() == 0);
    CHECK(empty.height(1) == 0);
    CHECK_THROWS(Index({1, 0}));
  }

  TEST_CASE("chain count is binom(n-1, d)") {
    for (int n = 1; n <= 9; ++n) {
      for (int d = 0; d <= n + 1; ++d) {
        CHECK(oracle::chain_count(n, d, false) == oracle::pascal_binom(n - 1, d));
      }
    }
  }

  TEST_CASE("z_n agrees with chain enumeration, exact and floating") {
    for (int n = 1; n <= 8; ++n) {
      for (int w = 0; w <= 5; ++w) {
        for (const auto& k : indices_of_weight(w)) {
          CAPTURE(n);
          CAPTURE(Index(k).to_string());
          const auto z = eval_z(Index(k), n);
          const auto zs = eval_z_star(Index(k), n);
          CHECK(z == oracle::z_exact(k, n));
          CHECK(zs == oracle::z_exact(k, n, true));
          CHECK(oracle::close(oracle::approx(z), oracle::z_float(k, n)));
          CHECK(oracle::close(oracle::approx(zs), oracle::z_float(k, n, true)));
        }
      }
    }
  }

  TEST_CASE("z_n examples") {
    CHECK(eval_z(Index(), 7) == CyclotomicNumber::from_rational(7, 1));
    CHECK(eval_z(Index({1}), 2) == CyclotomicNumber::from_rational(2, 1));
    const auto z4 = eval_z(Index({1}), 4);
    CHECK(z4 == one_minus_zeta_pow(4, 1) * Rational(3, 2));
    CHECK(to_json(z4).dump() == R"({"n":4,"coeffs":["3/2","-3/2"]})");
    CHECK(eval_z(Index({1, 1, 1}), 3).is_zero());
    CHECK(eval_z_star(Index({2}), 6) == eval_z(Index({2}), 6));
  }

  TEST_CASE("contractions match explicit fills") {
    CHECK(contractions(Index({4})).size() == 1);
    const auto c11 = contractions(Index({1, 1}));
    REQUIRE(c11.size() == 3);
    CHECK(oracle::vec(c11[0].index.parts()) == std::vector<int>{1, 1});
    CHECK(oracle::vec(c11[1].index.parts()) == std::vector<int>{2});
    CHECK(oracle::vec(c11[2].index.parts()) == std::vector<int>{1});
    CHECK(c11[2].weight_drop == 1);
    CHECK(c11[2].depth_drop == 1);
    const auto c23 = contractions(Index({2, 3}));
    REQUIRE(c23.size() == 3);
    CHECK(oracle::vec(c23[1].index.parts()) == std::vector<int>{5});
    CHECK(oracle::vec(c23[2].index.parts()) == std::vector<int>{4});

    for (int w = 1; w <= 6; ++w) {
      for (const auto& k : indices_of_weight(w)) {
        const auto got = contractions(Index(k));
        std::multiset<std::tuple<std::vector<int>, int, int>> a;
        std::multiset<std::tuple<std::vector<int>, int, int>> b;
        for (const auto& c : got) a.emplace(oracle::vec(c.index.parts()), c.weight_drop, c.depth_drop);
        for (const auto& f : fills(k)) b.emplace(f.p, f.weight_drop, f.depth_drop);
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("interpolation endpoints and explicit contraction sum") {
    for (int n = 2; n <= 8; ++n) {
      for (int w = 1; w <= 6; ++w) {
        for (const auto& k : indices_of_weight(w)) {
          const Index idx(k);
          const auto zt = eval_z_t(idx, n);
          CHECK(zt.at(0) == eval_z(idx, n));
          CHECK(zt.at(1) == eval_z_star(idx, n));
          CHECK(zt.coeffs.size() <= k.size());
          // Sum over explicit fills at t = 2 from the oracle.
          CyclotomicNumber want = CyclotomicNumber::zero(n);
          for (const auto& f : fills(k)) {
            want += one_minus_zeta_pow(n, f.weight_drop) * oracle::z_exact(f.p, n) * Rational(1 << f.depth_drop);
          }
          CHECK(zt.at(2) == want);
        }
      }
    }
  }

  TEST_CASE("zbar scaling") {
    CHECK(eval_zbar_t(Index(), 5).at(0) == CyclotomicNumber::from_rational(5, 1));
    CHECK(eval_zbar_t(Index({1}), 4).at(0) == CyclotomicNumber::from_rational(4, Rational(3, 2)));
    const auto zb = eval_zbar_t(Index({2, 1}), 7);
    CHECK(zb.at(Rational(1, 3)) * one_minus_zeta_pow(7, 3) == eval_z_t(Index({2, 1}), 7).at(Rational(1, 3)));
    CHECK_THROWS(eval_zbar_t(Index({1}), 1));
  }

  TEST_CASE("enumerate_indices") {
    const std::vector<int> h0{0};
    const auto e0 = enumerate_indices(0, 0, h0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].depth() == 0);

    const std::vector<int> h1{1};
    const auto e1 = enumerate_indices(3, 2, h1);
    REQUIRE(e1.size() == 2);
    CHECK(oracle::vec(e1[0].parts()) == std::vector<int>{2, 1});
    CHECK(oracle::vec(e1[1].parts()) == std::vector<int>{1, 2});

    const std::vector<int> h2{2};
    const auto e2 = enumerate_indices(4, 2, h2);
    REQUIRE(e2.size() == 1);
    CHECK(oracle::vec(e2[0].parts()) == std::vector<int>{2, 2});

    // Every weight-6 index lands in exactly one (depth, h1, h2) bucket.
    std::size_t total = 0;
    for (int d = 0; d <= 6; ++d) {
      for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= a; ++b) {
          const std::vector<int> hs{a, b};
          for (const auto& k : enumerate_indices(6, d, hs)) {
            CHECK(k.weight() == 6);
            CHECK(k.depth() == d);
            CHECK(k.height(1) == a);
            CHECK(k.height(2) == b);
            ++total;
          }
        }
      }
    }
    CHECK(total == indices_of_weight(6).size());
  }
}
