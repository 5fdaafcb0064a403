// Effective metric extension.
//
// A base instance supplies an exact metric on the base set, a dense
// enumeration alpha, a rational approximation map delta with the promise
// |delta(i,j,k) - d(alpha_i, alpha_j)| < 2^-k, and the exact strict-ball
// relation H = {(i,j,k,l) : d(alpha_i, alpha_j) < (k+1)/(l+1)}.
//
// The extension puts a bounded metric on X*:
//   d*(o, o) = 0; d*(x, y) = min(d(x,y), 1) on base points;
//   d*((a,b), (a',b')) = max(d*(a,a'), d*(b,b'));
//   d* = 1 whenever the two sides have different shapes (o vs base point,
//   basic vs pair).
// Its dense enumeration reuses the name index coding:
//   alpha*_0 = o, alpha*_{2i+2} = alpha_i, alpha*_{2J(m,n)+1} = (alpha*_m, alpha*_n).
// delta* follows the same clauses with the base clause clamped to 1
// (|min(delta,1) - min(d,1)| <= |delta - d|, so the promise survives), and
// H* is decided structurally; the decision is provably the exact relation
// {(i,j,k,l) : d*(alpha*_i, alpha*_j) < (k+1)/(l+1)}.
//
// Desk instances: the rationals with |x - y| (alpha = the canonical rational
// enumeration, delta exact or dyadically rounded), and a two-point discrete
// space with d = 3 to exercise the clamping clauses.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "moschext/elem.hpp"
#include "moschext/rational.hpp"

namespace moschext {

struct MetricBase {
  std::string label;
  // exact distance between enumerated points
  std::function<Rat(const BaseId&, const BaseId&)> dist;
  // dense enumeration of the base set
  std::function<BaseId(const Int&)> alpha;
  // |delta(i,j,k) - dist(alpha_i, alpha_j)| < 2^-k
  std::function<Rat(const Int&, const Int&, std::uint64_t)> delta;
  // exact: dist(alpha_i, alpha_j) < (k+1)/(l+1)
  std::function<bool(const Int&, const Int&, std::uint64_t, std::uint64_t)>
      in_h;
};

// Rationals with |x - y|; delta exact.
MetricBase desk_metric_rationals();
// Rationals with |x - y|; delta rounded down to a multiple of 2^-(k+2)
// (still within the 2^-k promise, but never equal to the true distance).
MetricBase desk_metric_rationals_noisy();
// Two points at distance 3; exercises min(d,1) clamping.
MetricBase desk_metric_two_point();

using HQuad = std::tuple<Int, Int, std::uint64_t, std::uint64_t>;

class MetricStar {
 public:
  explicit MetricStar(MetricBase base);

  const MetricBase& base() const { return base_; }

  // The bounded extension metric (exact rational value in [0,1]).
  Rat d_star(const Elem& a, const Elem& b) const;

  // Dense enumeration of X* induced by the base enumeration.
  Elem alpha_star(const Int& i) const;

  // |delta_star(i,j,k) - d_star(alpha*_i, alpha*_j)| < 2^-k
  Rat delta_star(const Int& i, const Int& j, std::uint64_t k) const;

  // exact: d_star(alpha*_i, alpha*_j) < (k+1)/(l+1)
  bool in_h_star(const Int& i, const Int& j, std::uint64_t k,
                 std::uint64_t l) const;

  // First `count` H*-quadruples in the canonical deterministic order.
  std::vector<HQuad> stream_h_star(std::size_t count) const;

 private:
  MetricBase base_;
};

MetricStar metric_extend(MetricBase base);

// Verifies that p names a fast Cauchy sequence for x through level K:
// dist(alpha(p(k)), x) < 2^-k exactly for every k <= K.
bool cauchy_check(const MetricBase& base,
                  const std::function<Int(std::uint64_t)>& p, const BaseId& x,
                  std::uint64_t levels);

}  // namespace moschext
