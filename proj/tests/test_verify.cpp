#include <random>

#include "braidorbit/gram.hpp"
#include "braidorbit/linear.hpp"
#include "braidorbit/verify.hpp"
#include "doctest.h"

using namespace braidorbit;

namespace {

const RelationReport* find(const std::vector<RelationReport>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("n = 2 by hand") {
    IntMatrix a = rho_matrix(BraidWord(2, {1}), 2) * rho_matrix(BraidWord(2, {2}), 2);
    CHECK(a == IntMatrix(2, {Int(2), Int(-1), Int(3), Int(-1)}));
    CHECK(a == rho_matrix(BraidWord(2, {2, 1}), 2));
    CHECK(rho_matrix(BraidWord(2, {1, 2}), 2) == IntMatrix(2, {Int(1), Int(-1), Int(1), Int(0)}));
    CHECK(a.pow(2) == a - IntMatrix::identity(2));
    CHECK(a.pow(3) == -IntMatrix::identity(2));
    CHECK(a.pow(6).is_identity());

    auto rs = verify_relations(2, 1);
    CHECK(all_hold(rs));
    REQUIRE(find(rs, "full-twist"));
    CHECK(find(rs, "full-twist")->note == "full twist = -I");
  }

  TEST_CASE("n = 3 full twist is the identity") {
    CHECK(rho_matrix(BraidWord(3, {1, 2, 3}).power(4), 3).is_identity());
    auto rs = verify_relations(3, 1);
    CHECK(all_hold(rs));
    CHECK(find(rs, "full-twist")->note == "full twist = I");
  }

  TEST_CASE("every relation holds for n up to 7") {
    for (std::size_t n = 2; n <= 7; ++n) {
      auto rs = verify_relations(n, n / 2);
      CHECK(all_hold(rs));
      CHECK(find(rs, "full-twist")->note == (n % 2 ? "full twist = I" : "full twist = -I"));
      CHECK(find(rs, "chain(1," + std::to_string(n / 2) + ")") != nullptr);
      for (const auto& r : rs) CHECK(r.to_string().find(r.id + " " + std::to_string(n) + " holds") == 0);
    }
  }

  TEST_CASE("a false identity is reported, not thrown") {
    IntMatrix s1 = rho_matrix(BraidWord(3, {1}), 3);
    CHECK_FALSE((s1 * s1).is_identity());
    RelationReport r{"x", 3, false, s1, ""};
    CHECK(r.to_string() == "x 3 FAILS");
    CHECK_FALSE(all_hold({r}));
  }

  TEST_CASE("symplectic reports") {
    for (std::size_t n = 2; n <= 8; ++n) {
      auto rs = verify_symplectic(n, 200, n);
      CHECK(all_hold(rs));
      CHECK((find(rs, "kernel") != nullptr) == (n % 2 == 1));
      CHECK((find(rs, "symplectic-defect(1)") != nullptr) == (n % 2 == 1));
    }
  }

  TEST_CASE("odd defect on random pairs") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-40, 40);
    for (std::size_t n : {3u, 5u, 7u}) {
      IntMatrix m = frame_action(BraidWord(n, {1}), n, Frame::X);
      for (int t = 0; t < 300; ++t) {
        std::vector<Int> x(n), y(n);
        for (auto& e : x) e = d(rng);
        for (auto& e : y) e = d(rng);
        CHECK(eval_J(m.apply(x), m.apply(y)) - eval_J(x, y) == x[0] * y[n - 1] - x[n - 1] * y[0]);
      }
    }
  }

  TEST_CASE("transvection reports") {
    for (std::size_t n = 2; n <= 8; ++n) CHECK(all_hold(verify_transvections(n)));
  }

  TEST_CASE("gram and skew correspondence") {
    IntMatrix g(2, {Int(2), Int(1), Int(1), Int(2)});
    CHECK(transvection_correspondence(g, Correspondence::GramToSkew) == IntMatrix(2, {Int(0), Int(1), Int(-1), Int(0)}));
    CHECK(transvection_correspondence(IntMatrix(4), Correspondence::SkewToGram) == IntMatrix::identity(4) + IntMatrix::identity(4));
    CHECK_THROWS_AS(transvection_correspondence(IntMatrix(2, {Int(1), Int(0), Int(0), Int(2)}), Correspondence::GramToSkew),
                    DimensionError);
    CHECK_THROWS_AS(transvection_correspondence(IntMatrix(2, {Int(0), Int(1), Int(1), Int(0)}), Correspondence::SkewToGram),
                    DimensionError);

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + t % 6;
      IntMatrix h(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          h(i, j) = d(rng);
          h(j, i) = -h(i, j);
        }
      IntMatrix back = transvection_correspondence(h, Correspondence::SkewToGram);
      for (std::size_t i = 0; i < n; ++i) CHECK(back(i, i) == 2);
      CHECK(back == back.transposed());
      CHECK(transvection_correspondence(back, Correspondence::GramToSkew) == h);
    }
  }

  TEST_CASE("full twist acts trivially on Gram matrices") {
    for (std::size_t n = 2; n <= 6; ++n) {
      std::vector<int> w;
      for (std::size_t r = 0; r <= n; ++r)
        for (int i = 1; i <= static_cast<int>(n); ++i) w.push_back(i);
      const std::vector<Rational> pool{0, Rational(1, 7), Rational(3, 5), Rational(1, 4),
                                       Rational(5, 6), Rational(2, 9), Rational(1, 11)};
      GramMatrix g = gram_from_angles(AngleConfig({pool.begin(), pool.begin() + static_cast<long>(n) + 1}));
      CHECK(act_gram(g, BraidWord(n, w)) == g);
    }
  }
}
