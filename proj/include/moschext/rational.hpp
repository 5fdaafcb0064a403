// Exact rational arithmetic helpers and the canonical enumeration of Q.
//
// Rationals are boost::multiprecision::cpp_rational (always stored in lowest
// terms with positive denominator).  The enumeration rat_enum : N -> Q is the
// standard zig-zag over numerator/denominator codes driven by the Cantor
// pairing; it is surjective (with repetitions up to value equality) and has a
// computable right inverse rat_index that picks the lowest-terms preimage.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace moschext {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Cantor pairing J(m,n) = (m+n)(m+n+1)/2 + n and its inverse.  Satisfies
// J(0,0)=0 and J(m,n) >= max(m,n), which grounds every recursion that
// descends through unpairing.
Int pair_j(const Int& m, const Int& n);
std::pair<Int, Int> unpair_j(const Int& c);

// Enumeration of Q:
//   rat_enum(0) = 0
//   rat_enum(1+J(a,b)) = zigzag(a) / (b+1)
// where zigzag maps 0,1,2,3,4,... to 1,-1,2,-2,3,... so every nonzero
// numerator appears.  First values: 0, 1, -1, 1/2, 2, -1/2, 1/3, -2, 1, -1/3.
Rat rat_enum(const Int& i);

// Right inverse of rat_enum on values: rat_enum(rat_index(q)) == q, using the
// lowest-terms representation of q.
Int rat_index(const Rat& q);

// 2^-k as an exact rational.
Rat pow2_neg(unsigned k);

// Parse "p/q", an integer, or an exact decimal such as "-2.75"; all three
// denote exact rationals.  Throws SyntaxError on malformed input.
Rat parse_rational(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string print_rational(const Rat& q);

}  // namespace moschext
