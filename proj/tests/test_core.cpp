#include <random>

#include "braidorbit/core.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidorbit;

TEST_SUITE("core") {
  TEST_CASE("parse braid words") {
    auto w = parse_braid_word("1 2 -1", 3);
    CHECK(w.n() == 3);
    CHECK(w.letters() == std::vector<int>{1, 2, -1});
    CHECK(parse_braid_word("", 5).empty());
    CHECK(parse_braid_word("  \t ", 5).empty());
  }

  TEST_CASE("parse errors name the token") {
    try {
      parse_braid_word("4", 3);
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()) == "generator index 4 exceeds n=3");
    }
    CHECK_THROWS_AS(parse_braid_word("0", 3), ParseError);
    CHECK_THROWS_WITH_AS(parse_braid_word("1 x 2", 3), doctest::Contains("'x'"), ParseError);
    CHECK_THROWS_AS(parse_braid_word("1.5", 3), ParseError);
    CHECK_THROWS_AS(parse_braid_word("-7", 3), ParseError);
  }

  TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + t % 8;
      BraidWord w(n, oracle::random_word(rng, n, 30));
      CHECK(parse_braid_word(w.to_string(), n) == w);
    }
  }

  TEST_CASE("word inverse and power") {
    BraidWord w(3, {1, -2, 3});
    CHECK(w.inverse().letters() == std::vector<int>{-3, 2, -1});
    CHECK(w.power(2).size() == 6);
    CHECK(w.power(-1) == w.inverse());
    CHECK(w.power(0).empty());
    CHECK((w * w.inverse()).size() == 6);
  }

  TEST_CASE("angle normalization") {
    CHECK(angle_normalize(Rational(7, 3)) == Rational(1, 3));
    CHECK(angle_normalize(Rational(-1, 4)) == Rational(3, 4));
    CHECK(angle_normalize(Rational(0)) == Rational(0));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-200, 200), den(1, 30);
    for (int t = 0; t < 500; ++t) {
      Rational r(num(rng), den(rng));
      Rational a = angle_normalize(r);
      CHECK(a >= 0);
      CHECK(a < 1);
      CHECK(angle_normalize(a) == a);
      CHECK(angle_normalize(r + 1) == a);
      CHECK(denominator(Rational(r - a)) == 1);
    }
  }

  TEST_CASE("rational text format") {
    CHECK(parse_rational("2/6") == Rational(1, 3));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(Rational(4, 6)) == "2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  }

  TEST_CASE("continued fraction snapping") {
    CHECK(snap_to_rational(0.25, 1e-9, 64) == Rational(1, 4));
    CHECK(snap_to_rational(1.0 / 3.0, 1e-9, 64) == Rational(1, 3));
    CHECK(snap_to_rational(0.7071067811, 1e-9, 64) == std::nullopt);
    CHECK(snap_to_rational(17.0 / 63.0, 1e-9, 64) == Rational(17, 63));
    CHECK(snap_to_rational(17.0 / 65.0, 1e-9, 64) == std::nullopt);
  }

  TEST_CASE("integer helpers") {
    CHECK(floor_mod(Int(-7), Int(3)) == 2);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(gcd(Int(0), Int(0)) == 0);
    CHECK(gcd(Int(-12), Int(18)) == 6);
    CHECK(lcm(Int(4), Int(6)) == 12);
  }

  TEST_CASE("matrix arithmetic") {
    IntMatrix a(2, {Int(2), Int(-1), Int(1), Int(0)});
    CHECK(a.determinant() == 1);
    CHECK(IntMatrix::identity(4).determinant() == 1);
    IntMatrix b(3, {Int(0), Int(2), Int(1), Int(1), Int(0), Int(0), Int(0), Int(0), Int(3)});
    CHECK(b.determinant() == -6);
    CHECK(b.rank() == 3);
    IntMatrix c(2, {Int(1), Int(2), Int(2), Int(4)});
    CHECK(c.rank() == 1);
    CHECK(c.determinant() == 0);
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3) == a * a * a);
  }

  TEST_CASE("matrix multiplication is associative") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int t = 0; t < 50; ++t) {
      std::size_t n = 1 + t % 6;
      auto random_matrix = [&] {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(d(rng)) * Int(d(rng)) * Int(d(rng));
        return m;
      };
      IntMatrix x = random_matrix(), y = random_matrix(), z = random_matrix();
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * y).determinant() == x.determinant() * y.determinant());
    }
  }

  TEST_CASE("parameter vectors") {
    KVector k = parse_kvector("1,2,3");
    CHECK(k.size() == 3);
    CHECK_FALSE(k.is_modular());
    KVector m = parse_kvector("7,-1,3 mod 5");
    CHECK(m.modulus() == Int(5));
    CHECK(m.entries() == std::vector<Int>{2, 4, 3});
    CHECK(m.to_string() == "2,4,3 mod 5");
    CHECK(parse_kvector(m.to_string()) == m);
    CHECK_THROWS_AS(parse_kvector("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_kvector("1,2 mod 1"), ParseError);
  }
}
