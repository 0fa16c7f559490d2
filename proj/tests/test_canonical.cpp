#include <map>
#include <random>

#include "braidorbit/canonical.hpp"
#include "braidorbit/linear.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidorbit;

namespace {

KVector kv(std::initializer_list<int> v) { return KVector(std::vector<Int>(v.begin(), v.end())); }
KVector kv_mod(std::initializer_list<int> v, int m) { return KVector(std::vector<Int>(v.begin(), v.end()), Int(m)); }

void check_result(const KVector& k, const CanonicalResult& r) {
  CHECK(act_k(r.witness, k) == r.canonical);
  CHECK(r.signature == signature(k));
  CHECK(signatures_equal(signature(r.canonical), signature(k)));
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("examples") {
    auto z = reduce(kv({0, 0, 0, 0}));
    CHECK(z.canonical == kv({0, 0, 0, 0}));
    CHECK(z.witness.empty());

    auto a = reduce(kv({0, 1}));
    CHECK(a.canonical == kv({1, 1}));
    check_result(kv({0, 1}), a);

    auto b = reduce(kv({1, 0, 0, 0}));
    CHECK(b.canonical == kv({1, 1, 1, 1}));
    check_result(kv({1, 0, 0, 0}), b);

    CHECK(same_orbit(kv({0, 1}), kv({1, 1})));
    CHECK_FALSE(same_orbit(kv({1, 1, 1, 1}), kv({0, 0, 1, 1})));
    CHECK_THROWS_AS(same_orbit(kv({1, 1}), kv({1, 1, 1})), DimensionError);
  }

  TEST_CASE("modular examples") {
    auto a = reduce_modular(kv_mod({2, 1}, 3));
    check_result(kv_mod({2, 1}, 3), a);
    CHECK(a.canonical == reduce_modular(kv_mod({1, 0}, 3)).canonical);
    CHECK(a.canonical == reduce_modular(kv_mod({0, 2}, 3)).canonical);

    auto b = reduce_modular(kv_mod({1, 0, 0, 0}, 2));
    check_result(kv_mod({1, 0, 0, 0}, 2), b);
    CHECK(b.canonical == reduce_modular(kv_mod({1, 1, 1, 1}, 2)).canonical);
    CHECK(b.canonical != reduce_modular(kv_mod({0, 0, 1, 1}, 2)).canonical);
    CHECK_THROWS_AS(reduce_modular(kv({1, 0})), DimensionError);
  }

  TEST_CASE("step log") {
    auto r = reduce(kv({3, -7, 12, 5}));
    BraidWord joined(4);
    for (const auto& s : r.steps) joined.append(s.word);
    CHECK(joined == r.witness);
    CHECK(r.steps.front().step == "1");

    auto odd = reduce(kv({4, -9, 2, 8, 1}));
    for (const auto& s : odd.steps) {
      if (s.step == "6" || s.step == "normalize" || s.step == "lift") continue;
      for (int l : s.word.letters()) CHECK((l != 1 && l != -1));
    }
  }

  TEST_CASE("soundness and idempotence") {
    std::mt19937_64 rng(31);
    ReduceOptions checked;
    checked.check_each_step = true;
    for (int t = 0; t < 1200; ++t) {
      const std::size_t n = 1 + t % 7;
      KVector k(oracle::random_vector(rng, n, 60));
      auto r = reduce(k, t % 5 == 0 ? checked : ReduceOptions{});
      check_result(k, r);
      auto again = reduce(r.canonical);
      CHECK(again.canonical == r.canonical);
    }
  }

  TEST_CASE("scrambled copies reduce back") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 2 + t % 6;
      KVector k(oracle::random_vector(rng, n, 25));
      const KVector c = reduce(k).canonical;
      for (int rep = 0; rep < 3; ++rep) {
        BraidWord w(n, oracle::random_word(rng, n, 40));
        CHECK(reduce(act_k(w, c)).canonical == c);
      }
    }
  }

  TEST_CASE("integer classification agrees with the signature") {
    std::mt19937_64 rng(33);
    for (std::size_t n = 1; n <= 7; ++n) {
      std::map<std::string, KVector> canon_of_sig;
      std::map<std::string, std::string> sig_of_canon;
      for (int t = 0; t < 400; ++t) {
        KVector k(oracle::random_vector(rng, n, 4));
        auto r = reduce(k);
        OrbitSignature key = r.signature;
        key.alpha.reset();
        const std::string sig = key.to_string();
        CHECK(canon_of_sig.emplace(sig, r.canonical).first->second == r.canonical);
        CHECK(sig_of_canon.emplace(r.canonical.to_string(), sig).first->second == sig);
      }
    }
  }

  TEST_CASE("modular partition matches brute force") {
    const std::vector<std::pair<std::size_t, int>> grid{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3},
                                                        {3, 4}, {4, 2}, {4, 3}, {5, 2}, {2, 6}, {3, 5}};
    for (auto [n, m] : grid) {
      CAPTURE(n);
      CAPTURE(m);
      auto bfs = oracle::bfs_partition(n, m);
      std::map<std::vector<Int>, int> canon_to_orbit;
      std::map<int, std::vector<Int>> orbit_to_canon;
      for (const auto& [v, orbit] : bfs) {
        KVector k(v, Int(m));
        auto r = reduce_modular(k);
        check_result(k, r);
        auto c = r.canonical.entries();
        CHECK(canon_to_orbit.emplace(c, orbit).first->second == orbit);
        CHECK(orbit_to_canon.emplace(orbit, c).first->second == c);
      }
    }
  }

  TEST_CASE("budget guard") {
    ReduceOptions tiny;
    tiny.letter_budget = 3;
    CHECK_THROWS_AS(reduce(kv({1000003, 999331, 7, 5}), tiny), GuardError);
  }
}
