#include "doctest.h"
#include "moschext/elem.hpp"
#include "moschext/errors.hpp"
#include "moschext/lfp.hpp"
#include "moschext/registry.hpp"
#include "support/universe.hpp"

using namespace moschext;
using namespace moschext::testing;

namespace {

Elem mirror(const Elem& z) {
  if (is_basic(z)) return z;
  return pair_elem(mirror(z->right), mirror(z->left));
}

}  // namespace

TEST_SUITE("lfp") {
  TEST_CASE("mirror as a least fixed point") {
    // Gamma(th)(z) = (th(R z), th(L z)) on pairs, z on basics.
    const std::vector<Elem> carrier = universe_upto_depth(2);
    const auto result = lfp_system_s1({parse_term("sigma(I,pi(th.R,th.L),I)")},
                                      {"th"}, Registry{}, carrier, 1000, 64);
    REQUIRE(result.solutions.size() == 1);
    const Table1& sol = result.solutions[0];
    CHECK(result.rounds <= 8);
    for (const Elem& z : carrier) {
      const auto it = sol.find(z.get());
      CAPTURE(print_elem(z));
      REQUIRE(it != sol.end());  // mirror is total on the carrier
      CHECK(it->second == mirror(z));
    }
    const Elem probe = parse_elem("(o,(o,o))");
    CHECK(sol.at(probe.get()) == parse_elem("((o,o),o)"));
  }

  TEST_CASE("mutual recursion: parity of numerals") {
    // ev(#n) = (o,o) iff n even; od(#n) = (o,o) iff n odd.
    std::vector<Elem> carrier;
    for (std::uint64_t n = 0; n <= 12; ++n) carrier.push_back(nat_to_code(n));
    const auto result = lfp_system_s1(
        {parse_term("sigma(I,od.R,T)"), parse_term("sigma(I,ev.R,F)")},
        {"ev", "od"}, Registry{}, carrier, 1000, 64);
    REQUIRE(result.solutions.size() == 2);
    const Elem yes = pair_elem(atom(), atom());
    const Elem no = atom();
    for (std::uint64_t n = 0; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(result.solutions[0].at(nat_to_code(n).get()) ==
            (n % 2 == 0 ? yes : no));
      CHECK(result.solutions[1].at(nat_to_code(n).get()) ==
            (n % 2 == 0 ? no : yes));
    }
  }

  TEST_CASE("subtree collection as a multi-valued least fixed point") {
    // Gamma(th)(z) = {z} on basics, {z} ∪ th(L z) ∪ th(R z) on pairs,
    // written with a control constant offering both shapes.
    Registry reg;
    reg.s2["beta_both"] =
        s2_const_set(set_of({atom(), pair_elem(atom(), atom())}));
    const std::vector<Elem> carrier = universe_upto_depth(2);
    const auto result = lfp_system_s2(
        {parse_term("sigma(I,sigma(beta_both,I,sigma(beta_both,th.L,th.R)),I)")},
        {"th"}, reg, carrier, 1000, 64);
    REQUIRE(result.solutions.size() == 1);
    const Table2& sol = result.solutions[0];

    // Spot values.
    CHECK(sol.at(atom().get()) == ElemSet{atom()});
    const Elem oo = pair_elem(atom(), atom());
    CHECK(sol.at(oo.get()) == set_of({oo, atom()}));

    // Independent characterization: all subtree nodes.
    std::function<void(const Elem&, ElemSet&)> collect =
        [&](const Elem& z, ElemSet& out) {
          set_insert(out, z);
          if (is_pair(z)) {
            collect(z->left, out);
            collect(z->right, out);
          }
        };
    for (const Elem& z : carrier) {
      ElemSet expect;
      collect(z, expect);
      CAPTURE(print_elem(z));
      CHECK(sol.at(z.get()) == expect);
    }

    // The same set arises as the stop set of the iteration
    // [Sigma(beta,L,R), Sigma(I,beta,I)].
    const Mfn2 beta = reg.s2["beta_both"];
    const Mfn2 sigma_step = s2_sigma(beta, s2_left(), s2_right());
    const Mfn2 sigma_ctl = s2_sigma(s2_identity(), beta, s2_identity());
    const Mfn2 kappa = s2_iter(sigma_step, sigma_ctl, 10000);
    for (const Elem& z : carrier) {
      const auto v = kappa(z);
      CAPTURE(print_elem(z));
      REQUIRE(v.has_value());
      CHECK(*v == sol.at(z.get()));
    }
  }

  TEST_CASE("the trivial equation has the empty least solution") {
    const std::vector<Elem> carrier = universe_upto_depth(1);
    const auto r1 = lfp_system_s1({parse_term("th")}, {"th"}, Registry{},
                                  carrier, 100, 16);
    CHECK(r1.solutions[0].empty());
    CHECK(r1.rounds <= 2);
    const auto r2 = lfp_system_s2({parse_term("th")}, {"th"}, Registry{},
                                  carrier, 100, 16);
    CHECK(r2.solutions[0].empty());
  }

  TEST_CASE("the round budget is enforced and sufficient rounds converge") {
    // th(#0) = o and th(#n) = (o, th(#n-1)): the identity on numerals, but
    // one new numeral is settled per round, so 13 numerals need more than 3
    // rounds and the low budget must surface as fuel exhaustion.
    std::vector<Elem> carrier;
    for (std::uint64_t n = 0; n <= 12; ++n) carrier.push_back(nat_to_code(n));
    CHECK_THROWS_AS(lfp_system_s1({parse_term("sigma(I,s.th.R,F)")}, {"th"},
                                  default_registry(), carrier, 1000, 3),
                    FuelExhaustedError);
    // With enough rounds the same system computes: th(#n) = #n' ... each
    // numeral maps through n unfoldings to (o,)^n o = #n itself.
    const auto ok = lfp_system_s1({parse_term("sigma(I,s.th.R,F)")}, {"th"},
                                  default_registry(), carrier, 1000, 32);
    CHECK(ok.rounds > 3);
    CHECK(ok.solutions[0].at(nat_to_code(5).get()) == nat_to_code(5));
    CHECK(ok.solutions[0].at(nat_to_code(0).get()) == atom());
  }
}
