// Exact rational interval arithmetic.
//
// Closed intervals [lo, hi] with rational endpoints back the real-number
// demos: a real is consumed through shrinking enclosures, and a function on
// reals is supplied as an interval extension (sound and convergent: the
// image of an enclosure of x encloses f(x), and image widths go to 0 as the
// input width does).

#pragma once

#include <functional>
#include <optional>

#include "moschext/rational.hpp"

namespace moschext {

struct Ival {
  Rat lo;
  Rat hi;  // invariant: lo <= hi
};

Ival ival_point(const Rat& x);
Ival ival_make(const Rat& lo, const Rat& hi);

Rat ival_width(const Ival& a);
Rat ival_mid(const Ival& a);
bool ival_contains(const Ival& a, const Rat& x);
bool ival_subset(const Ival& a, const Ival& b);
// True when the intervals have no common point.
bool ival_disjoint(const Ival& a, const Ival& b);

Ival ival_add(const Ival& a, const Ival& b);
Ival ival_sub(const Ival& a, const Ival& b);
Ival ival_mul(const Ival& a, const Ival& b);
Ival ival_neg(const Ival& a);
Ival ival_scale(const Ival& a, const Rat& c);
Ival ival_shift(const Ival& a, const Rat& c);
// Pointwise max/min against a constant (used to clamp at a joining point).
Ival ival_max_const(const Ival& a, const Rat& c);
Ival ival_min_const(const Ival& a, const Rat& c);
// Smallest interval containing both.
Ival ival_hull(const Ival& a, const Ival& b);

// A partial real function presented by a sound, convergent interval
// extension.  `definitely_out`, when set, certifies that an enclosure lies
// entirely outside the domain (used to report domain violations).
struct IntervalFn {
  std::function<Ival(const Ival&)> image;
  std::function<bool(const Ival&)> definitely_out;  // may be empty
};

// Two-argument variant (for combination maps like addition).
struct IntervalFn2 {
  std::function<Ival(const Ival&, const Ival&)> image;
  std::function<bool(const Ival&, const Ival&)> definitely_out;  // may be empty
};

// Evaluates fn at the exact rational point x until the image enclosure has
// width at most 2^-prec; returns the midpoint (within 2^-prec of the true
// value).  Throws DomainViolationError if the point is certified outside the
// domain, FuelExhaustedError if the enclosures fail to shrink.
Rat interval_eval_at(const IntervalFn& fn, const Rat& x, std::uint32_t prec);

}  // namespace moschext
