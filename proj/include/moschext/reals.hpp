// Exact-real demos: recursion on represented reals.
//
// A real x is represented by a base-level name q with
// |alpha_rho(q(k)) - x| < 2^-k, where alpha_rho is the canonical rational
// enumeration; the extension-level name is the base-tagged lift lambda
// k.2q(k)+2.  Partial functions on reals are consumed as interval extensions
// (see interval.hpp) and turned into name transformations by refinement
// drivers: to emit the k-th output value, a driver refines the input
// enclosure until the image interval is narrower than 2^-k and emits the
// index of its midpoint.
//
// The recursion demos solve theta = Sigma(chi, alpha, beta . Pi(I, theta . sigma))
// with sigma = (x |-> x+1):
//   theta(x) = alpha(x)                 when the test chi selects the first
//   theta(x) = beta(x, theta(x+1))      branch, resp. the second.
// rec1 uses the strict sign test against c (undefined on the cut point);
// rec2 uses the soft test (total, either answer allowed on the overlap
// (c, c+1)).  The desk instance c = 0, alpha(x) = (x - x^2)/2,
// beta(u,v) = u + v has the closed form theta(x) = (x - x^2)/2 on all of R.
//
// join_functions glues two partial functions that agree at a point c into
// one via alpha_bar(x) = alpha(max(x,c)) + alpha1(min(x,c)) - alpha(c),
// checking the seam first.

#pragma once

#include <cstdint>
#include <optional>

#include "moschext/interval.hpp"
#include "moschext/name.hpp"
#include "moschext/rational.hpp"
#include "moschext/realizer.hpp"

namespace moschext {

// The canonical dense enumeration of the rationals and its index map
// (right inverse: alpha_rho(alpha_rho_index(q)) == q).
Rat alpha_rho(const Int& i);
Int alpha_rho_index(const Rat& q);

// Base-level name of the rational x: constantly its index (every
// approximation is exact).
Name real_name_of_rational(const Rat& x);
// Base-level name from an approximation scheme: |approx(k) - x| < 2^-k must
// hold for the named real x.
Name real_name_from_approximations(std::function<Rat(std::uint64_t)> approx);

// Lift a base-level real name to the extension-level (base-tagged) name, and
// read an approximation back out of a tagged name (throws MalformedNameError
// if the value at that index is not base-tagged).
Name tagged_real_name(const Name& q);
Rat read_real_approx(const Name& tagged, std::uint64_t k);

// Turn an interval extension into a name transformation.  One-argument
// drivers act on tagged real names; the two-argument driver acts on tagged
// pair names whose components are tagged real names.  `max_refine` bounds
// how far the input may be refined per output index before
// FuelExhaustedError; a certified out-of-domain input raises
// DomainViolationError.
Name drive_interval_fn(const IntervalFn& fn, const Name& input,
                       std::uint64_t max_refine = 512);
Name drive_interval_fn2(const IntervalFn2& fn, const Name& pair_input,
                        std::uint64_t max_refine = 512);
Realizer interval_fn_realizer(const IntervalFn& fn,
                              std::uint64_t max_refine = 512);
Realizer interval_fn2_realizer(const IntervalFn2& fn,
                               std::uint64_t max_refine = 512);
// Exact shift x |-> x + 1 on tagged real names.
Realizer shift_realizer();

// Branch tests as realizers on tagged real names.  Output names the pair
// (o,o) (selecting the first branch) or the atom o (the second branch); the
// decision is made on the output's first query and cached.
//   soft:   x > c  may answer (o,o);  x < c+1  may answer o;  total.
//           The refinement loop tries "certainly > c" first at each level.
//   strict: x > c answers (o,o), x < c answers o, diverges at x = c
//           (FuelExhaustedError after max_refine levels).
Realizer soft_test_realizer(const Rat& c, std::uint64_t max_refine = 256);
Realizer strict_test_realizer(const Rat& c, std::uint64_t max_refine = 256);

// Desk instance pieces.
IntervalFn demo_alpha();         // (x - x^2)/2
IntervalFn demo_alpha_shift1();  // x + demo_alpha(x+1) (same closed form)
IntervalFn2 demo_beta_add();     // (u, v) |-> u + v
IntervalFn demo_upper_half();    // x on domain x >= 1 (definitely_out below 1)

struct RecResult {
  Rat value;                 // midpoint approximation at the requested level
  std::uint64_t loop_count;  // number of second-branch (unfolding) selections
  Name result_name;          // the tagged output name, for further queries
};

// Direct evaluation of the recursion at the rational x: branch decisions are
// made by the stated test against c, beta-branch selections are counted, and
// the value is read at index `prec` (within 2^-prec of theta(x)).  `fuel`
// bounds the unfolding depth.  rec2 may have its top-level branch forced.
RecResult rec1_eval(const IntervalFn& alpha, const IntervalFn2& beta,
                    const Rat& c, const Rat& x, std::uint32_t prec,
                    std::uint64_t fuel);
RecResult rec2_eval(const IntervalFn& alpha, const IntervalFn2& beta,
                    const Rat& c, const Rat& x, std::uint32_t prec,
                    std::uint64_t fuel,
                    std::optional<bool> force_first_branch = std::nullopt);

// The same recursions assembled from the generic realizer combinators
// (branching realizer over the test, with the unfolding in the second
// branch).  `fuel` bounds the unfolding depth, enforced at query time.
Realizer rec1_realizer(const IntervalFn& alpha, const IntervalFn2& beta,
                       const Rat& c, std::uint64_t fuel);
Realizer rec2_realizer(const IntervalFn& alpha, const IntervalFn2& beta,
                       const Rat& c, std::uint64_t fuel);

// An upper bound for the number of unfoldings the recursion needs at x:
// max(0, ceil(c + 1 - x)).
std::uint64_t rec_loop_bound(const Rat& c, const Rat& x);

// Glue alpha (used on [c, +inf)) and alpha1 (used on (-inf, c]) into one
// interval extension; the two are first compared at the seam c to within
// 2^-seam_prec and JoinMismatchError is thrown when their enclosures are
// disjoint there.
IntervalFn join_functions(const IntervalFn& alpha, const IntervalFn& alpha1,
                          const Rat& c, std::uint32_t seam_prec = 24);

}  // namespace moschext
