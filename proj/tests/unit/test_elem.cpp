#include <sstream>

#include "doctest.h"
#include "moschext/elem.hpp"
#include "moschext/errors.hpp"

using namespace moschext;

TEST_SUITE("elem") {
  TEST_CASE("interning gives pointer identity") {
    const Elem a = pair_elem(atom(), base_elem(std::uint32_t{0}));
    const Elem b = pair_elem(atom(), base_elem(std::uint32_t{0}));
    CHECK(a == b);
    CHECK(atom() == atom());
    CHECK(base_elem(Rat(1, 2)) == base_elem(Rat(2, 4)));
    CHECK(base_elem(Rat(1, 2)) != base_elem(Rat(1, 3)));
    CHECK(base_elem(std::uint32_t{0}) != base_elem(Rat(0)));
  }

  TEST_CASE("basic vs pair") {
    CHECK(is_basic(atom()));
    CHECK(is_basic(base_elem(std::uint32_t{1})));
    CHECK(!is_basic(pair_elem(atom(), atom())));
    CHECK(is_pair(pair_elem(atom(), atom())));
  }

  TEST_CASE("total projections") {
    const Elem x = base_elem(std::uint32_t{0});
    const Elem p = pair_elem(x, atom());
    CHECK(left1(p) == x);
    CHECK(right1(p) == atom());
    // On basic elements the projections are total with fixed values.
    CHECK(left1(atom()) == atom());
    CHECK(right1(atom()) == atom());
    CHECK(left1(x) == pair_elem(atom(), atom()));
    CHECK(right1(x) == pair_elem(atom(), atom()));
  }

  TEST_CASE("numeral codes") {
    CHECK(nat_to_code(0) == atom());
    CHECK(nat_to_code(1) == pair_elem(atom(), atom()));
    CHECK(nat_to_code(3) ==
          pair_elem(atom(), pair_elem(atom(), pair_elem(atom(), atom()))));
    for (std::uint64_t n = 0; n < 40; ++n) {
      CHECK(code_to_nat(nat_to_code(n)) == n);
      CHECK(as_nat_code(nat_to_code(n)).value() == n);
    }
    const Elem not_code = pair_elem(base_elem(std::uint32_t{0}), atom());
    CHECK(!as_nat_code(not_code).has_value());
    CHECK_THROWS_AS(code_to_nat(not_code), NotANatCodeError);
  }

  TEST_CASE("sequence codes") {
    CHECK(encode_seq({}) == atom());
    const Elem x = base_elem(std::uint32_t{0});
    const Elem y = base_elem(std::uint32_t{1});
    CHECK(encode_seq({x, y}) == pair_elem(x, pair_elem(y, atom())));
  }

  TEST_CASE("printing") {
    CHECK(print_elem(atom()) == "o");
    CHECK(print_elem(nat_to_code(3)) == "#3");
    CHECK(print_elem(pair_elem(atom(), atom())) == "#1");
    CHECK(print_elem(base_elem(std::uint32_t{3})) == "`x3`");
    CHECK(print_elem(base_elem(Rat(-7, 2))) == "`-7/2`");
    const Elem mixed = pair_elem(base_elem(Rat(1, 2)), nat_to_code(2));
    CHECK(print_elem(mixed) == "(`1/2`,#2)");
  }

  TEST_CASE("parsing round-trips") {
    for (const char* text :
         {"o", "#0", "#5", "(o,o)", "((o,o),o)", "`x0`", "`-7/2`",
          "(`1/2`,(o,`x1`))", "(o,(o,(o,o)))"}) {
      const Elem z = parse_elem(text);
      CHECK(parse_elem(print_elem(z)) == z);
    }
    CHECK(parse_elem("#2") == pair_elem(atom(), pair_elem(atom(), atom())));
    CHECK(parse_elem(" ( o , o ) ") == pair_elem(atom(), atom()));
    CHECK_THROWS_AS(parse_elem("(o,"), SyntaxError);
    CHECK_THROWS_AS(parse_elem("(o))"), SyntaxError);
    CHECK_THROWS_AS(parse_elem("zeta"), SyntaxError);
    CHECK_THROWS_AS(parse_elem(""), SyntaxError);
  }

  TEST_CASE("comparison is a strict total order on distinct nodes") {
    const Elem zs[] = {atom(), base_elem(std::uint32_t{0}),
                       base_elem(Rat(1, 2)), pair_elem(atom(), atom()),
                       pair_elem(atom(), base_elem(std::uint32_t{0}))};
    for (const Elem& a : zs) {
      CHECK(elem_cmp(a, a) == 0);
      for (const Elem& b : zs) {
        if (a == b) continue;
        CHECK(elem_cmp(a, b) != 0);
        CHECK(elem_cmp(a, b) == -elem_cmp(b, a));
      }
    }
  }

  TEST_CASE("sets are sorted and deduplicated") {
    const Elem x = base_elem(std::uint32_t{0});
    ElemSet s = set_of({x, atom(), x, pair_elem(x, x)});
    CHECK(s.size() == 3);
    set_insert(s, atom());
    CHECK(s.size() == 3);
    CHECK(set_contains(s, x));
    CHECK(!set_contains(s, base_elem(std::uint32_t{1})));
    const ElemSet t = set_of({atom(), base_elem(std::uint32_t{1})});
    const ElemSet u = set_union(s, t);
    CHECK(u.size() == 4);
    CHECK(set_subset(s, u));
    CHECK(!set_subset(u, s));
    CHECK(set_has_basic(u));
    CHECK(set_has_pair(u));
    CHECK(!set_has_pair(t));
  }
}
