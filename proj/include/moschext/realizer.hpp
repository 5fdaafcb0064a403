// Realizers: total transformations of names that track the combinatory
// operations through the representation.
//
// A realizer γ for a single-valued map φ satisfies ρ*(γ(p)) = φ(ρ*(p))
// whenever p names a point of dom φ; for a multi-valued map the requirement
// relaxes to ρ*(γ(p)) ∈ φ(ρ*(p)).  All constructions here are lazy: applying
// a realizer builds a name without querying anything, branch choices are
// resolved (and cached) on the output's first query, and every construction
// touches only finitely many input values per output value.

#pragma once

#include <cstdint>

#include "moschext/name.hpp"

namespace moschext {

struct Realizer {
  std::function<Name(const Name&)> apply;
  Name operator()(const Name& p) const { return apply(p); }
};

Realizer rz_identity();
Realizer rz_const(const Name& out);       // ignores its input
Realizer rz_left();                       // realizes the left projection:
                                          //   0 ↦ 0, 2i+2 ↦ 1, 2J(m,n)+1 ↦ m
Realizer rz_right();
Realizer rz_inject_base();                // base-level name q ↦ λk.2q(k)+2
Realizer rz_project_base();               // λk.⌊p(k)/2⌋∸1 (base tag stripped)

// The numeral embedding f: f(0)=0, f(n+1)=2J(0,f(n))+1, so λk.f(n) names the
// numeral code of n.  Values grow doubly exponentially.
Int nat_to_star_value(std::uint64_t n);
Realizer rz_nat_to_star();                // pointwise f
// Inverse by bounded search: the least n ≤ fuel with f(n) = p(0).
std::uint64_t star_to_nat(const Name& p, std::uint64_t fuel);
Realizer rz_star_to_nat(std::uint64_t fuel);  // pointwise bounded search

Realizer rz_pi(const Realizer& g1, const Realizer& g2);
// Branch on the control realizer's output tag at index 0: pair tag selects
// g2, basic tag selects g3.  The choice happens on first query of the result.
Realizer rz_sigma(const Realizer& g1, const Realizer& g2, const Realizer& g3);
// Iterate `step` while `control`'s output carries a pair tag; at most `fuel`
// steps, then FuelExhaustedError (raised from the output name's query).
Realizer rz_iter(const Realizer& step, const Realizer& control,
                 std::uint64_t fuel);
Realizer rz_compose(const Realizer& g1, const Realizer& g2);  // g1 after g2

}  // namespace moschext
