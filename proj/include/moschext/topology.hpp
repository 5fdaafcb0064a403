// Effective topological extension.
//
// A base instance supplies a countable family U_i of basic opens over the
// base set (total in i) together with the exact ternary relation
// S = {(i1,i2,i) : U_i ⊆ U_{i1} ∩ U_{i2}}.  The extension re-indexes opens
// over X*:
//   U*_0        = {o}
//   U*_{2i+2}   = U_i            (as a set of base points)
//   U*_{2J(m,n)+1} = U*_m × U*_n (as a set of pairs)
// and S* is the closure of: the lift of S to even indices, the triple
// (0,0,0), and the componentwise combination of two S*-triples into an
// odd-index triple.  Membership in the closure is decided exactly by reading
// index tags and recursing through unpairing (tags never mix inside one
// clause, and unpairing strictly decreases indices).
//
// The desk instance is a two-point space {x0,x1} with the opens cycling
// through {x0}, {x1}, {x0,x1}, which makes S decidable and every membership
// question exact.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "moschext/elem.hpp"
#include "moschext/rational.hpp"

namespace moschext {

struct TopBase {
  std::vector<BaseId> points;  // finite desk carrier
  // x ∈ U_i; total in i (desk instances cycle).
  std::function<bool(const BaseId&, const Int&)> in_u;
  // exact: U_i ⊆ U_{i1} ∩ U_{i2}
  std::function<bool(const Int&, const Int&, const Int&)> in_s;
  // every index denotes the same open as index mod period (enumeration bound)
  std::uint64_t period = 0;
};

// Two points, opens cycling {x0}, {x1}, {x0,x1}.
TopBase desk_top_base();

class TopStar {
 public:
  explicit TopStar(TopBase base);

  // z ∈ U*_i (exact).
  bool elem_in_u(const Elem& z, const Int& i) const;

  // (i1,i2,i) ∈ S* (exact decision of the closure).
  bool in_s_star(const Int& i1, const Int& i2, const Int& i) const;

  // Some index whose open contains z.
  Int witness_index(const Elem& z) const;

  // For distinct elements: an index whose open contains exactly one of the
  // two (the T0 property of the extension).  nullopt only if the base itself
  // fails to separate two base points.
  std::optional<Int> separating_index(const Elem& a, const Elem& b) const;

  // Given z ∈ U*_{i1} ∩ U*_{i2}: an index i with z ∈ U*_i and
  // (i1,i2,i) ∈ S*; nullopt when z is not in the intersection.
  std::optional<Int> intersect_witness(const Int& i1, const Int& i2,
                                       const Elem& z) const;

  // First `count` S*-triples in the canonical deterministic order (diagonal
  // enumeration filtered by the exact decision).
  std::vector<std::array<Int, 3>> stream_s_star(std::size_t count) const;

 private:
  TopBase base_;
};

TopStar top_extend(TopBase base);

// Free-function form of the intersection witness.
std::optional<Int> top_intersect_witness(const TopStar& space, const Int& i1,
                                         const Int& i2, const Elem& z);

}  // namespace moschext
