#include "doctest.h"
#include "moschext/errors.hpp"
#include "moschext/rational.hpp"

using namespace moschext;

TEST_SUITE("rational") {
  TEST_CASE("pairing basics") {
    CHECK(pair_j(0, 0) == 0);
    CHECK(pair_j(1, 2) == 8);
    CHECK(pair_j(0, 1) == 2);
    CHECK(pair_j(1, 0) == 1);
    // J dominates both arguments.
    for (int m = 0; m < 10; ++m) {
      for (int n = 0; n < 10; ++n) {
        const Int j = pair_j(m, n);
        CHECK(j >= m);
        CHECK(j >= n);
        const auto [mm, nn] = unpair_j(j);
        CHECK(mm == m);
        CHECK(nn == n);
      }
    }
  }

  TEST_CASE("unpair round-trips large values") {
    const Int big = Int("123456789123456789123456789");
    const auto [m, n] = unpair_j(big);
    CHECK(pair_j(m, n) == big);
  }

  TEST_CASE("rational enumeration first values") {
    // Frozen prefix of the canonical enumeration.
    CHECK(rat_enum(0) == Rat(0));
    CHECK(rat_enum(1) == Rat(1));
    CHECK(rat_enum(2) == Rat(-1));
    CHECK(rat_enum(3) == Rat(1, 2));
    CHECK(rat_enum(4) == Rat(2));
    CHECK(rat_enum(5) == Rat(-1, 2));
    CHECK(rat_enum(6) == Rat(1, 3));
    CHECK(rat_enum(7) == Rat(-2));
    CHECK(rat_enum(8) == Rat(1));  // 2/2: the enumeration repeats values
    CHECK(rat_enum(9) == Rat(-1, 3));
    CHECK(rat_enum(10) == Rat(1, 4));
  }

  TEST_CASE("rat_index is a right inverse of rat_enum") {
    for (int num = -12; num <= 12; ++num) {
      for (int den = 1; den <= 9; ++den) {
        const Rat q(num, den);
        CHECK(rat_enum(rat_index(q)) == q);
      }
    }
  }

  TEST_CASE("pow2_neg") {
    CHECK(pow2_neg(0) == Rat(1));
    CHECK(pow2_neg(3) == Rat(1, 8));
    CHECK(pow2_neg(20) == Rat(1, 1048576));
  }

  TEST_CASE("parse and print") {
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-10.75") == Rat(-43, 4));
    CHECK(parse_rational("0.5") == Rat(1, 2));
    CHECK(print_rational(Rat(-43, 4)) == "-43/4");
    CHECK(print_rational(Rat(6, 3)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("x"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), SyntaxError);
    CHECK_THROWS_AS(parse_rational(""), SyntaxError);
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_rational("12#");
      CHECK(false);
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.col() == 3);
    }
  }
}
