#include "moschext/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "moschext/errors.hpp"

namespace moschext {

Ival ival_point(const Rat& x) { return Ival{x, x}; }

Ival ival_make(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw std::logic_error("interval endpoints out of order");
  return Ival{lo, hi};
}

Rat ival_width(const Ival& a) { return a.hi - a.lo; }

Rat ival_mid(const Ival& a) { return (a.lo + a.hi) / 2; }

bool ival_contains(const Ival& a, const Rat& x) {
  return a.lo <= x && x <= a.hi;
}

bool ival_subset(const Ival& a, const Ival& b) {
  return b.lo <= a.lo && a.hi <= b.hi;
}

bool ival_disjoint(const Ival& a, const Ival& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

Ival ival_add(const Ival& a, const Ival& b) {
  return Ival{a.lo + b.lo, a.hi + b.hi};
}

Ival ival_sub(const Ival& a, const Ival& b) {
  return Ival{a.lo - b.hi, a.hi - b.lo};
}

Ival ival_mul(const Ival& a, const Ival& b) {
  const Rat p1 = a.lo * b.lo;
  const Rat p2 = a.lo * b.hi;
  const Rat p3 = a.hi * b.lo;
  const Rat p4 = a.hi * b.hi;
  return Ival{std::min(std::min(p1, p2), std::min(p3, p4)),
              std::max(std::max(p1, p2), std::max(p3, p4))};
}

Ival ival_neg(const Ival& a) { return Ival{-a.hi, -a.lo}; }

Ival ival_scale(const Ival& a, const Rat& c) {
  if (c < 0) return Ival{a.hi * c, a.lo * c};
  return Ival{a.lo * c, a.hi * c};
}

Ival ival_shift(const Ival& a, const Rat& c) {
  return Ival{a.lo + c, a.hi + c};
}

Ival ival_max_const(const Ival& a, const Rat& c) {
  return Ival{std::max(a.lo, c), std::max(a.hi, c)};
}

Ival ival_min_const(const Ival& a, const Rat& c) {
  return Ival{std::min(a.lo, c), std::min(a.hi, c)};
}

Ival ival_hull(const Ival& a, const Ival& b) {
  return Ival{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Rat interval_eval_at(const IntervalFn& fn, const Rat& x, std::uint32_t prec) {
  const Ival point = ival_point(x);
  if (fn.definitely_out && fn.definitely_out(point)) {
    throw DomainViolationError(print_rational(x) +
                               " is outside the function's domain");
  }
  const Rat target = pow2_neg(prec + 1);  // half-width bound 2^-(prec+1)
  // The input is exact, so the only refinement knob is re-asking with the
  // same point; convergence means the image of a point interval already has
  // width 0 for arithmetic extensions, but allow a few retries for
  // extensions that over-approximate points.
  Ival img = fn.image(point);
  if (ival_width(img) <= target * 2) return ival_mid(img);
  for (int round = 0; round < 4; ++round) {
    img = fn.image(point);
    if (ival_width(img) <= target * 2) return ival_mid(img);
  }
  throw FuelExhaustedError("interval evaluation at a point failed to converge",
                           4);
}

}  // namespace moschext
