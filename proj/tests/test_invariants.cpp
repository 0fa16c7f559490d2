#include <random>

#include "braidorbit/invariants.hpp"
#include "braidorbit/linear.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidorbit;

namespace {

OrbitSignature sig(std::initializer_list<int> v) { return signature(KVector(std::vector<Int>(v.begin(), v.end()))); }

OrbitSignature sig_mod(std::initializer_list<int> v, int m) {
  return signature(KVector(std::vector<Int>(v.begin(), v.end()), Int(m)));
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("formula examples") {
    auto a = sig({1, 1, 1, 1});
    CHECK(a.gamma == 1);
    CHECK(a.alpha == Int(4));
    CHECK(a.delta == Int(3));
    CHECK_FALSE(a.x.has_value());

    auto b = sig({2, 4, 6, 8});
    CHECK(b.gamma == 2);
    CHECK(b.alpha == Int(2));
    CHECK(b.delta == Int(1));

    auto c = sig({1, 2, 3});
    CHECK(c.gamma == 1);
    CHECK(c.alpha == Int(2));
    CHECK(c.delta == Int(0));
    CHECK(c.x == Int(2));
    CHECK(c.to_string() == "gamma=1, alpha=2, delta=0, x=2");
    CHECK(sig({1, 1, 1, 1}).to_string() == "gamma=1, alpha=4, delta=3, x=-");
  }

  TEST_CASE("zero vector") {
    auto z = sig({0, 0, 0});
    CHECK(z.gamma == 0);
    CHECK_FALSE(z.delta.has_value());
    CHECK(z.x == Int(0));
    CHECK(signatures_equal(z, sig({0, 0, 0})));
    CHECK(sig_mod({0, 0}, 4).gamma == 0);
  }

  TEST_CASE("equality examples") {
    CHECK(signatures_equal(sig({0, 1}), sig({1, 1})));
    CHECK_FALSE(signatures_equal(sig({1, 1, 1, 1}), sig({0, 0, 1, 1})));
    CHECK_FALSE(signatures_equal(sig({1, 2, 3}), sig({-1, -2, -3})));
    CHECK(signatures_equal(sig({1, 2, 3}), sig({-1, -2, -3}), SignConvention::UpToSign));
    CHECK_THROWS_AS(signatures_equal(sig({1, 1}), sig({1, 1, 1})), DimensionError);
    CHECK_THROWS_AS(signatures_equal(sig({1, 1}), sig_mod({1, 1}, 4)), DimensionError);
  }

  TEST_CASE("x and -x lie in different orbits") {
    // x_n is fixed by every generator, so no word can flip its sign.
    std::vector<Int> k{1, 2, 3}, neg{-1, -2, -3};
    for (int g = 1; g <= 3; ++g)
      for (int l : {g, -g}) CHECK(transform(oracle::act_via_angles({l}, k), Frame::K, Frame::X).back() == 2);
    CHECK(transform(neg, Frame::K, Frame::X).back() == -2);
  }

  TEST_CASE("modular semantics") {
    auto s = sig_mod({2, 0}, 4);
    CHECK(s.gamma == 2);
    CHECK(s.delta == Int(1));
    CHECK_FALSE(sig_mod({1, 0}, 3).delta.has_value());
    CHECK_FALSE(sig_mod({2, 0}, 6).delta.has_value());
    CHECK(sig_mod({3, 0}, 6).delta == Int(1));
    CHECK(sig_mod({5, 7}, 4).gamma == 1);
    CHECK(sig_mod({1, 2, 6}, 4).x == Int(1));
    // Adding m keeps the parity of k / gamma when m / gamma is even.
    CHECK(sig_mod({1, 1, 1, 1}, 4) == sig_mod({5, -3, 9, 1}, 4));
  }

  TEST_CASE("invariance under the action") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 3000; ++t) {
      const std::size_t n = 1 + t % 8;
      auto k = oracle::random_vector(rng, n, 50);
      auto w = oracle::random_word(rng, n, 40);
      auto moved = oracle::act_via_angles(w, k);
      auto a = signature(KVector(k)), b = signature(KVector(moved));
      CHECK(signatures_equal(a, b));
      CHECK(a.gamma == b.gamma);
      CHECK(a.delta == b.delta);
      CHECK(a.x == b.x);

      for (int m : {2, 3, 4, 6, 8}) {
        KVector km(k, Int(m)), mm(moved, Int(m));
        CHECK(signatures_equal(signature(km), signature(mm)));
      }
    }
  }

  TEST_CASE("delta range") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 2000; ++t) {
      const std::size_t n = 1 + t % 8;
      auto k = oracle::random_vector(rng, n, 50);
      auto s = signature(KVector(k));
      if (s.gamma == 0) continue;
      CHECK(*s.alpha >= 1);
      CHECK(*s.alpha <= Int(n));
      if (n % 2 == 0) {
        CHECK(*s.delta % 2 == 1);
        CHECK(*s.delta >= 1);
        CHECK(*s.delta <= Int(2 * n - 1));
      } else {
        CHECK(*s.delta % 2 == 0);
      }
    }
  }

  TEST_CASE("sigma_1 swaps the parity counts") {
    std::mt19937_64 rng(23);
    int seen = 0;
    for (int t = 0; t < 2000; ++t) {
      const std::size_t n = 2 + t % 7;
      auto k = oracle::random_vector(rng, n, 50);
      auto s = signature(KVector(k));
      if (s.gamma == 0 || (k[0] / s.gamma) % 2 == 0) continue;
      ++seen;
      const Int alpha = *s.alpha, beta = Int(n) - alpha;
      auto once = signature(KVector(act_k(BraidWord(n, {1}), k)));
      CHECK(*once.alpha == beta + 1);
      auto twice = signature(KVector(act_k(BraidWord(n, {1, 1}), k)));
      CHECK(*twice.alpha == alpha);
    }
    CHECK(seen > 500);
  }
}
