#pragma once

#include <cstdint>

#include "moschext/space.hpp"

namespace moschext::testing {

// Branching rebuilt from iteration, pairing and the booleans alone:
//
//   Sigma(c, f, g) = R . [F^ g R, L] . R . [F^ F^ f R R, L] . Pi(c, Pi(T, I))
//
// where F^(p) = Pi(F, p) tags a value as "keep looping" and [s, c] is
// iteration.  The first loop applies f exactly when c(z) is a pair, the
// second applies g exactly when it was basic, and the trailing projections
// strip the tags.  Pointwise equal to s1_sigma(c, f, g) on every element.
// `fuel` bounds each loop; both stop after at most two passes per input.
inline Pfn1 sigma_reduct(const Pfn1& c, const Pfn1& f, const Pfn1& g,
                         std::uint64_t fuel = 1u << 10) {
  const Pfn1 i = s1_identity();
  const Pfn1 l = s1_left();
  const Pfn1 r = s1_right();
  const Pfn1 t_hat = s1_pi(s1_true(), i);
  const auto f_hat = [](const Pfn1& p) { return s1_pi(s1_false(), p); };
  const Pfn1 inner =
      s1_iter(f_hat(f_hat(s1_compose(f, s1_compose(r, r)))), l, fuel);
  const Pfn1 outer = s1_iter(f_hat(s1_compose(g, r)), l, fuel);
  return s1_compose(
      r, s1_compose(outer,
                    s1_compose(r, s1_compose(inner, s1_pi(c, t_hat)))));
}

}  // namespace moschext::testing
