// Metric extension: the bounded extension metric, its dense enumeration,
// the approximation map's accuracy promise, and the exactness of the
// strict-ball decision, over all three desk instances.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "moschext/elem.hpp"
#include "moschext/metric.hpp"
#include "moschext/rational.hpp"
#include "moschext/reals.hpp"

using namespace moschext;

namespace {

Rat pow2neg(std::uint64_t k) { return Rat(Int(1), Int(1) << k); }

}  // namespace

TEST_SUITE_BEGIN("metric");

TEST_CASE("the extension metric follows its clauses") {
  MetricStar m = metric_extend(desk_metric_rationals());
  Elem q0 = base_elem(Rat(0));
  Elem q13 = base_elem(Rat(1, 3));
  Elem q7 = base_elem(Rat(7));
  CHECK(m.d_star(atom(), atom()) == Rat(0));
  CHECK(m.d_star(atom(), q0) == Rat(1));            // shapes differ
  CHECK(m.d_star(atom(), pair_elem(atom(), atom())) == Rat(1));
  CHECK(m.d_star(q0, pair_elem(q0, q0)) == Rat(1));
  CHECK(m.d_star(q0, q13) == Rat(1, 3));            // under the cap: exact
  CHECK(m.d_star(q0, q7) == Rat(1));                // capped at 1
  // Pairs take the maximum of the component distances.
  Elem a = pair_elem(q0, q13);
  Elem b = pair_elem(q13, q0);
  CHECK(m.d_star(a, b) == Rat(1, 3));
  CHECK(m.d_star(pair_elem(a, q0), pair_elem(b, q7)) == Rat(1));
  // The two-point instance caps its base distance 3 at 1.
  MetricStar tp = metric_extend(desk_metric_two_point());
  Elem y0 = base_elem(std::uint32_t{0});
  Elem y1 = base_elem(std::uint32_t{1});
  CHECK(tp.d_star(y0, y1) == Rat(1));
  CHECK(tp.d_star(y0, y0) == Rat(0));
}

TEST_CASE("the dense enumeration follows the index clauses") {
  MetricStar m = metric_extend(desk_metric_rationals());
  CHECK(m.alpha_star(Int(0)) == atom());
  CHECK(m.alpha_star(Int(2)) == base_elem(rat_enum(Int(0))));
  CHECK(m.alpha_star(Int(4)) == base_elem(rat_enum(Int(1))));
  // 11 = 2J(0,2)+1: the pair (alpha*_0, alpha*_2).
  CHECK(m.alpha_star(Int(11)) == pair_elem(atom(), base_elem(rat_enum(Int(0)))));
}

TEST_CASE("metric axioms hold on enumerated points") {
  for (MetricBase base : {desk_metric_rationals(), desk_metric_two_point()}) {
    MetricStar m = metric_extend(std::move(base));
    std::vector<Elem> pts;
    for (int i = 0; i < 120; ++i) pts.push_back(m.alpha_star(Int(i)));
    std::mt19937_64 rng(20240811);
    auto draw = [&]() -> const Elem& { return pts[rng() % pts.size()]; };
    for (int t = 0; t < 2500; ++t) {
      const Elem &a = draw(), &b = draw(), &c = draw();
      Rat dab = m.d_star(a, b);
      // Bounded, nonnegative, symmetric.
      CHECK(dab >= Rat(0));
      CHECK(dab <= Rat(1));
      CHECK(dab == m.d_star(b, a));
      // Identity of indiscernibles (elements are interned, so == is
      // structural equality).
      CHECK((dab == Rat(0)) == (a == b));
      // Triangle inequality.
      CHECK(m.d_star(a, c) <= dab + m.d_star(b, c));
    }
  }
}

TEST_CASE("the approximation map keeps its accuracy promise") {
  for (MetricBase base : {desk_metric_rationals(), desk_metric_rationals_noisy()}) {
    MetricStar m = metric_extend(std::move(base));
    std::vector<Elem> pts;
    for (int i = 0; i < 48; ++i) pts.push_back(m.alpha_star(Int(i)));
    for (int i = 0; i < 48; ++i)
      for (int j = 0; j < 48; ++j) {
        Rat exact = m.d_star(pts[i], pts[j]);
        for (std::uint64_t k = 0; k <= 10; ++k) {
          CHECK(abs(m.delta_star(Int(i), Int(j), k) - exact) < pow2neg(k));
        }
      }
  }
  // The noisy instance genuinely differs from the exact distance where the
  // distance is not dyadic, so the bound above is doing real work.
  MetricStar noisy = metric_extend(desk_metric_rationals_noisy());
  Int i13 = 2 * alpha_rho_index(Rat(1, 3)) + 2;
  Int i0 = 2 * alpha_rho_index(Rat(0)) + 2;
  MetricStar exact = metric_extend(desk_metric_rationals());
  for (std::uint64_t k = 0; k <= 8; ++k) {
    Rat dv = noisy.delta_star(i13, i0, k);
    CHECK(dv != Rat(1, 3));
    CHECK(abs(dv - Rat(1, 3)) < pow2neg(k));
    CHECK(exact.delta_star(i13, i0, k) == Rat(1, 3));
  }
  // Two-point: the approximation of the capped distance is exactly 1.
  MetricStar tp = metric_extend(desk_metric_two_point());
  CHECK(tp.delta_star(Int(2), Int(4), 6) == Rat(1));
  CHECK(tp.d_star(tp.alpha_star(Int(2)), tp.alpha_star(Int(4))) == Rat(1));
}

TEST_CASE("the strict-ball decision is exactly the strict-ball relation") {
  for (MetricBase base : {desk_metric_rationals(), desk_metric_two_point()}) {
    MetricStar m = metric_extend(std::move(base));
    std::vector<Elem> pts;
    for (int i = 0; i < 36; ++i) pts.push_back(m.alpha_star(Int(i)));
    for (int i = 0; i < 36; ++i)
      for (int j = 0; j < 36; ++j) {
        Rat d = m.d_star(pts[i], pts[j]);
        for (std::uint64_t k = 0; k <= 5; ++k)
          for (std::uint64_t l = 0; l <= 6; ++l) {
            bool brute = d < Rat(Int(k + 1), Int(l + 1));
            CHECK(m.in_h_star(Int(i), Int(j), k, l) == brute);
          }
      }
  }
}

TEST_CASE("the strict-ball stream is sound and deterministic") {
  MetricStar m = metric_extend(desk_metric_rationals());
  auto quads = m.stream_h_star(400);
  REQUIRE(quads.size() == 400);
  for (const auto& [i, j, k, l] : quads) {
    CHECK(m.d_star(m.alpha_star(i), m.alpha_star(j)) <
          Rat(Int(k + 1), Int(l + 1)));
  }
  CHECK(m.stream_h_star(400) == quads);
}

TEST_CASE("fast Cauchy name checking accepts exactly the fast names") {
  MetricBase base = desk_metric_rationals();
  BaseId third{Rat(1, 3)};
  // Constantly the point itself: every approximation is exact.
  CHECK(cauchy_check(base, [](std::uint64_t) { return alpha_rho_index(Rat(1, 3)); },
                     third, 12));
  // Dyadic truncations from below: |q_k - 1/3| < 2^-(k+1).
  auto truncated = [](std::uint64_t k) {
    Int scale = Int(1) << (k + 1);
    return alpha_rho_index(Rat(scale / 3, scale));
  };
  CHECK(cauchy_check(base, truncated, third, 12));
  // A constant wrong guess fails once the tolerance drops below |0 - 1/3|.
  auto zero = [](std::uint64_t) { return alpha_rho_index(Rat(0)); };
  CHECK(cauchy_check(base, zero, third, 1));
  CHECK_FALSE(cauchy_check(base, zero, third, 2));
  // Convergence at the wrong rate (one level too slow) is rejected.
  auto slow = [](std::uint64_t k) {
    Int scale = k == 0 ? Int(1) : Int(1) << (k - 1);
    return alpha_rho_index(Rat(1, 3) + Rat(Int(1), scale));
  };
  CHECK_FALSE(cauchy_check(base, slow, third, 12));
}

TEST_SUITE_END();
