// Least fixed points of computable systems over a finite carrier.
//
// A system is a list of term contexts Γ_1..Γ_n over designated unknown
// symbols θ_1..θ_n (plus anything the base registry provides).  Starting from
// the everywhere-undefined tuple, Kleene rounds re-evaluate every Γ_i at
// every carrier point against the previous round's approximants until the
// tuple stabilizes; the stable tuple restricted to the carrier is returned.
// Because the combinatory operations are monotone, the rounds form an
// ascending chain and the limit is the least fixed point restricted to the
// carrier.

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "moschext/term.hpp"

namespace moschext {

// Finite function tables keyed by interned node identity.
using Table1 = std::unordered_map<const ElemNode*, Elem>;
using Table2 = std::unordered_map<const ElemNode*, ElemSet>;

Pfn1 table_to_pfn1(std::shared_ptr<const Table1> t);
Mfn2 table_to_mfn2(std::shared_ptr<const Table2> t);

struct LfpResult1 {
  std::vector<Table1> solutions;  // one per unknown
  std::uint32_t rounds = 0;       // rounds until stabilization
};
struct LfpResult2 {
  std::vector<Table2> solutions;
  std::uint32_t rounds = 0;
};

// `gammas[i]` defines unknown `unknowns[i]`.  Each right-hand side may use
// every unknown plus the base registry.  eval_fuel bounds each pointwise
// evaluation; round_fuel bounds the number of Kleene rounds
// (FuelExhaustedError when stabilization needs more).
LfpResult1 lfp_system_s1(const std::vector<TermPtr>& gammas,
                         const std::vector<std::string>& unknowns,
                         const Registry& base_registry,
                         const std::vector<Elem>& carrier,
                         std::uint64_t eval_fuel, std::uint32_t round_fuel);

LfpResult2 lfp_system_s2(const std::vector<TermPtr>& gammas,
                         const std::vector<std::string>& unknowns,
                         const Registry& base_registry,
                         const std::vector<Elem>& carrier,
                         std::uint64_t eval_fuel, std::uint32_t round_fuel);

}  // namespace moschext
