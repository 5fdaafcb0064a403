#include <random>

#include "doctest.h"
#include "moschext/elem.hpp"
#include "moschext/space.hpp"
#include "support/axioms.hpp"
#include "support/reduct.hpp"
#include "support/universe.hpp"

using namespace moschext;
using namespace moschext::testing;

namespace {

Elem o() { return atom(); }
Elem oo() { return pair_elem(atom(), atom()); }

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("universe has the expected layer sizes") {
    CHECK(universe3().elems.size() == 21612);      // 3 + (3 + (3+3^2)^2)^2
    CHECK(universe_upto_depth(0).size() == 3);
    CHECK(universe_upto_depth(1).size() == 12);
    CHECK(universe_upto_depth(2).size() == 147);
  }

  TEST_CASE("basic operations") {
    const Elem x = base_elem(std::uint32_t{0});
    CHECK(*s1_identity()(x) == x);
    CHECK(*s1_left()(pair_elem(x, o())) == x);
    CHECK(*s1_right()(pair_elem(x, o())) == o());
    CHECK(*s1_left()(o()) == o());
    CHECK(*s1_left()(x) == oo());  // basic-but-not-atom convention
    CHECK(*s1_true()(x) == oo());
    CHECK(*s1_false()(x) == o());
    CHECK(!s1_undefined()(x).has_value());

    CHECK(*s2_identity()(x) == ElemSet{x});
    CHECK(*s2_true()(x) == ElemSet{oo()});
  }

  TEST_CASE("branching selects by the control value's shape") {
    const Pfn1 f = s1_const(nat_to_code(1));
    const Pfn1 g = s1_const(nat_to_code(2));
    const Pfn1 br = s1_sigma(s1_identity(), f, g);
    CHECK(*br(oo()) == nat_to_code(1));              // pair control value
    CHECK(*br(o()) == nat_to_code(2));               // basic control value
    CHECK(*br(base_elem(std::uint32_t{1})) == nat_to_code(2));

    // Undefined control makes the point undefined.
    const Pfn1 br2 = s1_sigma(s1_undefined(), f, g);
    CHECK(!br2(o()).has_value());
  }

  TEST_CASE("multi-valued branching takes both branches when the control offers both shapes") {
    const Elem x = base_elem(std::uint32_t{0});
    const Mfn2 both = s2_const_set(set_of({o(), oo()}));
    const Mfn2 f = s2_const(nat_to_code(2));
    const Mfn2 g = s2_const(nat_to_code(3));
    const auto v = s2_sigma(both, f, g)(x);
    REQUIRE(v.has_value());
    CHECK(*v == set_of({nat_to_code(2), nat_to_code(3)}));

    // Conjunctive domain: if the control offers a pair member, the first
    // branch must be defined even when the basic member alone would answer.
    const Mfn2 nowhere = s2_undefined();
    CHECK(!s2_sigma(both, nowhere, g)(x).has_value());
    CHECK(!s2_sigma(both, f, nowhere)(x).has_value());
    // With a single-shape control only the selected branch matters.
    const Mfn2 basic_only = s2_const(o());
    CHECK(s2_sigma(basic_only, nowhere, g)(x).has_value());
  }

  TEST_CASE("derived booleans: F = L^3 [L,L] and T = Pi(F,F)") {
    // [L,L] loops while L(u) is a pair, i.e. exactly once on pairs of pairs,
    // and stops immediately on anything whose left part is basic; composing
    // with L three times always lands on o.  Pi(F,F) then pins (o,o).
    const Pfn1 ll = s1_iter(s1_left(), s1_left(), 64);
    const Pfn1 l3 = s1_compose(
        s1_left(), s1_compose(s1_left(), s1_compose(s1_left(), ll)));
    const Pfn1 t = s1_pi(l3, l3);
    std::string where;
    CHECK(s1_graph_eq(l3, s1_false(), universe3().elems, &where));
    CHECK(s1_graph_eq(t, s1_true(), universe3().elems, &where));
  }

  TEST_CASE("branching is definable from iteration, pairing and booleans") {
    // The reduction replaces Sigma(c,f,g) by a two-phase loop: tag the
    // input, run the inner loop to apply f exactly when c(z) is a pair, run
    // the outer loop to apply g exactly when it was basic, then strip tags.
    //   Sigma(c,f,g) = R.[Pi(F,I) psi R, L].R.[Pi(F,I)^2 phi R^2, L].Pi(c, Pi(T,I))
    const auto reduced = [](const Pfn1& c, const Pfn1& f, const Pfn1& g) {
      return sigma_reduct(c, f, g);
    };
    const Universe& u = universe3();
    for (int i = 0; i < 12; ++i) {
      const Pfn1 c = hash_pfn1(u, 1000 + i);
      const Pfn1 f = hash_pfn1(u, 2000 + i);
      const Pfn1 g = hash_pfn1(u, 3000 + i);
      std::string where;
      CAPTURE(i);
      CAPTURE(where);
      CHECK(s1_graph_eq(reduced(c, f, g), s1_sigma(c, f, g), u.elems, &where));
    }
  }

  TEST_CASE("iteration: basic runs") {
    // Numeral predecessor chain: step R, control L. On #n (n >= 1) the
    // control is o... actually L(#n) = o for n = 0 only; on pairs (o, rest)
    // the control value is the left part o, which is basic, so the loop
    // stops immediately: [R, L](z) = z when L(z) is basic.
    FuelBudget fuel{1000};
    const auto v = s1_iter_apply(s1_right(), s1_left(), nat_to_code(3), fuel);
    REQUIRE(v.has_value());
    CHECK(*v == nat_to_code(3));

    // A loop that genuinely iterates: control (z ↦ z), step (z ↦ left z):
    // from ((o,o),(o,o)) it strips one layer per step and stops at o... the
    // control value is z itself, so it runs until z becomes basic.
    FuelBudget fuel2{1000};
    const auto w =
        s1_iter_apply(s1_left(), s1_identity(),
                      pair_elem(pair_elem(o(), o()), oo()), fuel2);
    REQUIRE(w.has_value());
    CHECK(*w == o());

    // Divergence: step identity, control constantly a pair.
    FuelBudget fuel3{100};
    CHECK_THROWS_AS(
        s1_iter_apply(s1_identity(), s1_true(), o(), fuel3),
        FuelExhaustedError);
    CHECK(fuel3.remaining == 0);

    // Undefined step where the control demands one more round.
    FuelBudget fuel4{100};
    CHECK(!s1_iter_apply(s1_undefined(), s1_identity(), oo(), fuel4)
               .has_value());
  }

  TEST_CASE("iteration satisfies the fixed-point identity") {
    // iota = Sigma(c, iota s, I) as graphs over the carrier.
    const Universe& u = universe3();
    for (int i = 0; i < 8; ++i) {
      const Pfn1 s = hash_pfn1(u, 4000 + i, 0.8);
      const Pfn1 c = hash_pfn1(u, 5000 + i, 0.9);
      const Pfn1 iota = s1_iter(s, c, 4096);
      const Pfn1 rhs = s1_sigma(c, s1_compose(iota, s), s1_identity());
      std::string where;
      CAPTURE(i);
      CAPTURE(where);
      CHECK(s1_graph_eq(iota, rhs, u.elems, &where));
    }
  }

  TEST_CASE("iteration is the least solution (Kleene join from bottom)") {
    // theta_0 = undefined; theta_{n+1} = Sigma(c, theta_n s, I), computed as
    // tables over the whole universe (which is closed under the generated
    // step values) until stabilization.  The stable table is the least
    // solution there, and the evaluator must compute exactly it: defined with
    // equal values, or undefined where the table is (fuel exhaustion counts
    // as undefined, since with this budget it occurs only on genuinely
    // divergent points).
    const Universe& u = universe3();
    const std::size_t n = u.elems.size();
    for (int i = 0; i < 4; ++i) {
      const Pfn1 s = hash_pfn1(u, 6000 + i, 0.8);
      const Pfn1 c = hash_pfn1(u, 7000 + i, 0.9);
      std::vector<std::optional<Elem>> table(n);
      bool changed = true;
      std::uint32_t rounds = 0;
      while (changed) {
        changed = false;
        ++rounds;
        REQUIRE(rounds <= n + 2);  // each round adds a point or stops
        for (std::size_t j = 0; j < n; ++j) {
          if (table[j]) continue;  // the rounds form an ascending chain
          const Elem& z = u.elems[j];
          const auto cv = c(z);
          if (!cv) continue;
          if (is_basic(*cv)) {
            table[j] = z;  // identity branch
            changed = true;
            continue;
          }
          const auto sz = s(z);
          if (!sz) continue;
          const auto& prev = table[(*sz)->carrier_slot];
          if (prev) {
            table[j] = prev;
            changed = true;
          }
        }
      }
      const Pfn1 iota = s1_iter(s, c, 30000);
      for (std::size_t j = 0; j < n; ++j) {
        const Eval1 got = eval1(iota, u.elems[j]);
        const bool got_defined = got.status == EvalStatus::Value;
        CAPTURE(i);
        CAPTURE(print_elem(u.elems[j]));
        REQUIRE(got_defined == table[j].has_value());
        if (got_defined) REQUIRE(got.value == *table[j]);
      }
    }
  }

  TEST_CASE("multi-valued iteration: stop sets") {
    // Control: pairs keep going, basics stop; step: both projections.
    // From ((o,o), x0) the reachable stops are the basic leaves.
    const Elem x0 = base_elem(std::uint32_t{0});
    const Mfn2 step{[](const Elem& z) -> std::optional<ElemSet> {
      if (!is_pair(z)) return std::nullopt;
      return set_of({z->left, z->right});
    }};
    const Mfn2 ctl = s2_identity();
    FuelBudget fuel{1000};
    const auto v =
        s2_iter_apply(step, ctl, pair_elem(oo(), x0), fuel);
    REQUIRE(v.has_value());
    CHECK(*v == set_of({o(), x0}));
  }

  TEST_CASE("multi-valued iteration matches the independent oracle") {
    const Universe& u = universe3();
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
      const Mfn2 s = hash_mfn2(u, 8000 + i, 0.85, 3);
      const Mfn2 c = hash_mfn2(u, 9000 + i, 0.9, 2);
      for (int j = 0; j < 5; ++j) {
        const Elem z = random_elem(u, rng);
        const std::uint64_t budget = 300;
        const OracleOutcome expect = s2_iter_oracle(s, c, z, budget);
        FuelBudget fuel{budget};
        std::optional<ElemSet> got;
        bool got_fuel = false;
        try {
          got = s2_iter_apply(s, c, z, fuel);
        } catch (const FuelExhaustedError&) {
          got_fuel = true;
        }
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(print_elem(z));
        REQUIRE(got_fuel == expect.fuel_exhausted);
        if (!got_fuel) {
          REQUIRE(got.has_value() == expect.value.has_value());
          if (got) CHECK(*got == *expect.value);
        }
        ++checked;
      }
    }
    CHECK(checked == 300);
  }

  TEST_CASE("embedding is a homomorphism on the operations") {
    const Universe& u = universe3();
    const std::vector<Elem> carrier = universe_upto_depth(2);
    for (int i = 0; i < 10; ++i) {
      const Pfn1 f = hash_pfn1(u, 11000 + i);
      const Pfn1 g = hash_pfn1(u, 12000 + i);
      const Pfn1 c = hash_pfn1(u, 13000 + i, 0.9);
      std::string where;
      CAPTURE(i);
      CAPTURE(where);
      CHECK(s2_graph_eq(embed(s1_compose(f, g)),
                        s2_compose(embed(f), embed(g)), carrier, &where));
      CHECK(s2_graph_eq(embed(s1_pi(f, g)), s2_pi(embed(f), embed(g)),
                        carrier, &where));
      CHECK(s2_graph_eq(embed(s1_sigma(c, f, g)),
                        s2_sigma(embed(c), embed(f), embed(g)), carrier,
                        &where));
    }
  }

  TEST_CASE("embedding commutes with iteration") {
    const Universe& u = universe3();
    for (int i = 0; i < 6; ++i) {
      const Pfn1 s = hash_pfn1(u, 14000 + i, 0.8);
      const Pfn1 c = hash_pfn1(u, 15000 + i, 0.9);
      // Budget exceeding the carrier size +1 makes fuel exhaustion occur
      // exactly on genuine divergence, identically on both sides.
      const std::uint64_t fuel = 30000;
      const Pfn1 it1 = s1_iter(s, c, fuel);
      const Mfn2 lhs = embed(it1);
      const Mfn2 rhs = s2_iter(embed(s), embed(c), fuel);
      std::string where;
      CAPTURE(i);
      CAPTURE(where);
      CHECK(s2_graph_eq(lhs, rhs, u.elems, &where));
    }
  }

  TEST_CASE("law battery, small run") {
    const Universe& u = universe3();
    LawOptions opt;
    opt.full_walk_stride = 8;
    const LawReport r1 = check_laws_s1(u, 42, 16, opt);
    CHECK(r1.failures == 0);
    CAPTURE(r1.first_failure);
    const LawReport r2 = check_laws_s2(u, 43, 16, opt);
    CHECK(r2.failures == 0);
    CAPTURE(r2.first_failure);
  }
}
