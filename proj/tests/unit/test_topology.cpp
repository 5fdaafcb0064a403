// Topological extension over the two-point desk base: exhaustive structural
// checks of the extended basic opens, the extended intersection relation,
// the T0 separation property, and the enumerated relation stream.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "moschext/elem.hpp"
#include "moschext/rational.hpp"
#include "moschext/topology.hpp"
#include "support/universe.hpp"

using namespace moschext;
using namespace moschext::testing;

namespace {

Int pair_index(const Int& m, const Int& n) { return 2 * pair_j(m, n) + 1; }

}  // namespace

TEST_SUITE_BEGIN("topology");

TEST_CASE("desk opens cycle with period 3 and the base relation is exact") {
  TopBase b = desk_top_base();
  CHECK(b.period == 3);
  BaseId x0{std::uint32_t{0}}, x1{std::uint32_t{1}};
  CHECK(b.in_u(x0, Int(0)));
  CHECK_FALSE(b.in_u(x1, Int(0)));
  CHECK(b.in_u(x1, Int(1)));
  CHECK(b.in_u(x0, Int(2)));
  CHECK(b.in_u(x1, Int(2)));
  for (int i = 0; i < 9; ++i) {
    CHECK(b.in_u(x0, Int(i)) == b.in_u(x0, Int(i + 3)));
    CHECK(b.in_u(x1, Int(i)) == b.in_u(x1, Int(i + 3)));
  }
  // U_i ⊆ U_{i1} ∩ U_{i2}, checked against explicit point membership.
  for (int i1 = 0; i1 < 6; ++i1)
    for (int i2 = 0; i2 < 6; ++i2)
      for (int i = 0; i < 6; ++i) {
        bool incl = (!b.in_u(x0, Int(i)) ||
                     (b.in_u(x0, Int(i1)) && b.in_u(x0, Int(i2)))) &&
                    (!b.in_u(x1, Int(i)) ||
                     (b.in_u(x1, Int(i1)) && b.in_u(x1, Int(i2))));
        CHECK(b.in_s(Int(i1), Int(i2), Int(i)) == incl);
      }
}

TEST_CASE("extended open membership follows the index clauses") {
  TopStar t = top_extend(desk_top_base());
  Elem x0 = base_elem(std::uint32_t{0});
  Elem x1 = base_elem(std::uint32_t{1});
  // Index 0: exactly the fresh atom.
  CHECK(t.elem_in_u(atom(), Int(0)));
  CHECK_FALSE(t.elem_in_u(x0, Int(0)));
  CHECK_FALSE(t.elem_in_u(pair_elem(atom(), atom()), Int(0)));
  // Even indices: the lifted base opens, on base points only.
  CHECK(t.elem_in_u(x0, Int(2)));       // U_0 = {x0}
  CHECK_FALSE(t.elem_in_u(x1, Int(2)));
  CHECK(t.elem_in_u(x1, Int(4)));       // U_1 = {x1}
  CHECK(t.elem_in_u(x0, Int(6)));       // U_2 = {x0,x1}
  CHECK(t.elem_in_u(x1, Int(6)));
  CHECK_FALSE(t.elem_in_u(atom(), Int(6)));
  // Odd indices: componentwise products.
  CHECK(t.elem_in_u(pair_elem(atom(), atom()), Int(1)));
  CHECK_FALSE(t.elem_in_u(atom(), Int(1)));
  Int i_x0_o = pair_index(Int(2), Int(0));  // U*_2 × U*_0 = {(x0, o)}
  CHECK(t.elem_in_u(pair_elem(x0, atom()), i_x0_o));
  CHECK_FALSE(t.elem_in_u(pair_elem(x1, atom()), i_x0_o));
  CHECK_FALSE(t.elem_in_u(pair_elem(atom(), x0), i_x0_o));
}

TEST_CASE("the extended relation contains the expected closure triples") {
  TopStar t = top_extend(desk_top_base());
  // The seed triple for the atom open.
  CHECK(t.in_s_star(Int(0), Int(0), Int(0)));
  // Its componentwise square: index 1 = 2J(0,0)+1.
  CHECK(t.in_s_star(Int(1), Int(1), Int(1)));
  // The lift of the base relation to even indices.
  TopBase b = desk_top_base();
  for (int i1 = 0; i1 < 7; ++i1)
    for (int i2 = 0; i2 < 7; ++i2)
      for (int i = 0; i < 7; ++i)
        CHECK(t.in_s_star(Int(2 * i1 + 2), Int(2 * i2 + 2), Int(2 * i + 2)) ==
              b.in_s(Int(i1), Int(i2), Int(i)));
  // Mixed tag classes never combine.
  CHECK_FALSE(t.in_s_star(Int(0), Int(0), Int(2)));
  CHECK_FALSE(t.in_s_star(Int(0), Int(2), Int(0)));
  CHECK_FALSE(t.in_s_star(Int(1), Int(1), Int(0)));
  CHECK_FALSE(t.in_s_star(Int(2), Int(2), Int(1)));
  // A genuinely structural product triple: {x0}×{o} ⊆ ({x0,x1}×{o})².
  Int small = pair_index(Int(2), Int(0));
  Int big = pair_index(Int(6), Int(0));
  CHECK(t.in_s_star(big, big, small));
  CHECK_FALSE(t.in_s_star(small, small, big));
}

TEST_CASE("relation membership implies open inclusion on the carrier") {
  TopStar t = top_extend(desk_top_base());
  std::vector<Elem> carrier = universe_upto_depth(2);
  for (int i1 = 0; i1 < 32; ++i1)
    for (int i2 = 0; i2 < 32; ++i2)
      for (int i = 0; i < 32; ++i) {
        if (!t.in_s_star(Int(i1), Int(i2), Int(i))) continue;
        for (const Elem& z : carrier) {
          if (!t.elem_in_u(z, Int(i))) continue;
          CHECK(t.elem_in_u(z, Int(i1)));
          CHECK(t.elem_in_u(z, Int(i2)));
        }
      }
}

TEST_CASE("every carrier element lies in its witness open") {
  TopStar t = top_extend(desk_top_base());
  for (const Elem& z : universe_upto_depth(2)) {
    CHECK(t.elem_in_u(z, t.witness_index(z)));
  }
}

TEST_CASE("the extension is T0 on the whole carrier") {
  TopStar t = top_extend(desk_top_base());
  std::vector<Elem> carrier = universe_upto_depth(2);
  for (std::size_t a = 0; a < carrier.size(); ++a)
    for (std::size_t b = a + 1; b < carrier.size(); ++b) {
      auto sep = t.separating_index(carrier[a], carrier[b]);
      REQUIRE(sep.has_value());
      CHECK(t.elem_in_u(carrier[a], *sep) != t.elem_in_u(carrier[b], *sep));
    }
}

TEST_CASE("intersection witnesses satisfy the base property") {
  TopStar t = top_extend(desk_top_base());
  std::vector<Elem> carrier = universe_upto_depth(2);
  // Index pool: a contiguous box plus every canonical witness index the
  // carrier produces (these reach far past the box for nested pairs).
  std::vector<Int> pool;
  for (int i = 0; i < 24; ++i) pool.push_back(Int(i));
  for (const Elem& z : carrier) {
    Int w = t.witness_index(z);
    bool known = false;
    for (const Int& p : pool) known = known || p == w;
    if (!known) pool.push_back(w);
  }
  for (const Elem& z : carrier)
    for (const Int& i1 : pool) {
      if (!t.elem_in_u(z, i1)) continue;
      for (const Int& i2 : pool) {
        if (!t.elem_in_u(z, i2)) continue;
        auto k = t.intersect_witness(i1, i2, z);
        REQUIRE(k.has_value());
        CHECK(t.elem_in_u(z, *k));
        CHECK(t.in_s_star(i1, i2, *k));
      }
    }
  // Outside the intersection there is no witness.
  CHECK_FALSE(t.intersect_witness(Int(0), Int(2), base_elem(std::uint32_t{0}))
                  .has_value());
  CHECK_FALSE(
      t.intersect_witness(Int(2), Int(4), base_elem(std::uint32_t{0}))
          .has_value());
  // The free-function form agrees.
  CHECK(top_intersect_witness(t, Int(2), Int(6), base_elem(std::uint32_t{0}))
            .has_value());
}

TEST_CASE("the relation stream is sound and reaches its count") {
  TopStar t = top_extend(desk_top_base());
  std::vector<Elem> carrier = universe_upto_depth(2);
  auto triples = t.stream_s_star(600);
  REQUIRE(triples.size() == 600);
  CHECK(triples[0] == std::array<Int, 3>{Int(0), Int(0), Int(0)});
  for (const auto& tr : triples) {
    CHECK(t.in_s_star(tr[0], tr[1], tr[2]));
    for (const Elem& z : carrier) {
      if (!t.elem_in_u(z, tr[2])) continue;
      CHECK(t.elem_in_u(z, tr[0]));
      CHECK(t.elem_in_u(z, tr[1]));
    }
  }
  // Deterministic: a second enumeration repeats the first.
  auto again = t.stream_s_star(600);
  CHECK(again == triples);
}

TEST_SUITE_END();
