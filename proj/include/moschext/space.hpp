// The two combinatory spaces over X*.
//
// Single-valued space: partial maps X* -> X* under composition, with
//   I, L, R          identity and the total projections
//   constants        total constant maps (T = const (o,o), F = const o)
//   Pi(f,g)(z)       = (f(z), g(z)),            dom = dom f ∩ dom g
//   Sigma(c,f,g)(z)  = f(z) if c(z) is a pair, g(z) if c(z) is basic,
//                      dom = c⁻¹(pairs) ∩ dom f  ∪  c⁻¹(basic) ∩ dom g
//   iteration [s,c]  least solution of  ι = Sigma(c, ι∘s, I):
//                    run u := s(u) while c(u) is a pair, return u when c(u)
//                    is basic.
// Order: extension of graphs.
//
// Multi-valued space: partial maps X* -> nonempty finite subsets of X*.
//   composition      dom(f∘g) = { z ∈ dom g | g(z) ⊆ dom f },
//                    (f∘g)(z) = ∪ { f(u) | u ∈ g(z) }   (the weak composition
//                    that preserves realizer-style computability)
//   order            f ≥ g  iff  dom f ⊇ dom g and f(z) ⊆ g(z) on dom g
//   Pi2(f,g)(z)      = f(z) × g(z) as pairs
//   Sigma2(c,f,g)(z) = { u | c(z) has a pair member and u ∈ f(z), or
//                            c(z) has a basic member and u ∈ g(z) },
//                    dom = { z ∈ dom c | (c(z) has a pair member ⇒ z ∈ dom f)
//                                      ∧ (c(z) has a basic member ⇒ z ∈ dom g) }
//                    (the conjunctive domain; the disjunctive reading breaks
//                    Sigma2(T,f,g) = f and the embedding homomorphism)
//   iteration [s,c]  explore the s/c-path tree from z: at a node u, c(u) must
//                    be defined; every pair member of c(u) requires u ∈ dom s
//                    and spawns the children s(u); every basic member marks u
//                    as a stop.  z ∈ dom iff the whole tree is finite and no
//                    requirement fails; the value is the set of stops.
//
// Fuel: iteration evaluators consume one unit per step (single-valued) or per
// processed tree node (multi-valued) from a caller-supplied budget and throw
// FuelExhaustedError when it runs out.  The multi-valued evaluator explores
// the full tree under its budget and reports fuel exhaustion with precedence
// over regularity violations, so any two full explorations of the same tree
// classify identically regardless of traversal order.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moschext/elem.hpp"
#include "moschext/errors.hpp"

namespace moschext {

// Partial single-valued map.
struct Pfn1 {
  std::function<std::optional<Elem>(const Elem&)> f;
  std::optional<Elem> operator()(const Elem& z) const { return f(z); }
};

// Partial multi-valued map (values are nonempty sorted sets).
struct Mfn2 {
  std::function<std::optional<ElemSet>(const Elem&)> f;
  std::optional<ElemSet> operator()(const Elem& z) const { return f(z); }
};

// Step/node budget shared across every iteration nested in one application.
struct FuelBudget {
  std::uint64_t remaining;
  std::uint64_t spent = 0;

  void spend(const char* context) {
    if (remaining == 0) throw FuelExhaustedError(context, spent);
    --remaining;
    ++spent;
  }
};

// Optional step observer for traced evaluation (CLI --trace).
struct IterObserver {
  // Single-valued: visiting u, control value c(u) (present when defined).
  std::function<void(const Elem& u, const std::optional<Elem>& control)> on_step1;
  // Multi-valued: processed node u with its control set (when defined).
  std::function<void(const Elem& u, const std::optional<ElemSet>& control)> on_step2;
};

// ---- single-valued space ----

Pfn1 s1_identity();
Pfn1 s1_left();
Pfn1 s1_right();
Pfn1 s1_const(const Elem& c);  // total constant map
Pfn1 s1_true();                // const (o,o)
Pfn1 s1_false();               // const o
Pfn1 s1_undefined();           // empty map (order-theoretic bottom)

Pfn1 s1_compose(const Pfn1& f, const Pfn1& g);  // f after g
Pfn1 s1_pi(const Pfn1& f, const Pfn1& g);
Pfn1 s1_sigma(const Pfn1& c, const Pfn1& f, const Pfn1& g);

// One application of [s,c] at z under the given budget.  Returns nullopt when
// z is outside the iteration's domain (control or step undefined where
// required); throws FuelExhaustedError when the budget runs out first.
std::optional<Elem> s1_iter_apply(const Pfn1& s, const Pfn1& c, const Elem& z,
                                  FuelBudget& fuel,
                                  const IterObserver* obs = nullptr);

// [s,c] as a map; each application gets a fresh budget of `fuel` steps.
Pfn1 s1_iter(const Pfn1& s, const Pfn1& c, std::uint64_t fuel);

// ---- multi-valued space ----

Mfn2 s2_identity();
Mfn2 s2_left();
Mfn2 s2_right();
Mfn2 s2_const(const Elem& c);       // embedded constant z ↦ {c}
Mfn2 s2_const_set(const ElemSet& s);  // genuinely multi-valued constant
Mfn2 s2_true();
Mfn2 s2_false();
Mfn2 s2_undefined();

Mfn2 s2_compose(const Mfn2& f, const Mfn2& g);
Mfn2 s2_pi(const Mfn2& f, const Mfn2& g);
Mfn2 s2_sigma(const Mfn2& c, const Mfn2& f, const Mfn2& g);

// Iteration outcome classification (used by the evaluator and the acceptance
// oracle): either a value set, or "outside the domain" with a witnessing
// point where the path conditions failed.
struct S2IterOutcome {
  std::optional<ElemSet> value;     // set of stop points when z ∈ dom
  std::optional<Elem> violation;    // first node (in traversal order) whose
                                    // requirements failed, when z ∉ dom
};

// Full-tree exploration (breadth-first) under a node budget.  Never throws
// RegularityViolationError itself; fuel exhaustion does throw.
S2IterOutcome s2_iter_explore(const Mfn2& s, const Mfn2& c, const Elem& z,
                              FuelBudget& fuel,
                              const IterObserver* obs = nullptr);

// One application of [s,c] at z: nullopt on regularity violation (z outside
// the domain), FuelExhaustedError when the tree exceeds the budget.
std::optional<ElemSet> s2_iter_apply(const Mfn2& s, const Mfn2& c, const Elem& z,
                                     FuelBudget& fuel,
                                     const IterObserver* obs = nullptr);

// [s,c] as a map with a fresh per-application budget.  Applications report a
// regularity violation by throwing RegularityViolationError (callers that
// only care about definedness catch it as "undefined").
Mfn2 s2_iter(const Mfn2& s, const Mfn2& c, std::uint64_t fuel);

// ---- embedding ----

// The isomorphic embedding of the single-valued space into the multi-valued
// one: z ↦ {f(z)} on dom f.
Mfn2 embed(const Pfn1& f);

// ---- finite-carrier comparisons (used by property and acceptance tests) ----

// Evaluation outcome normal form over a carrier: defined value, undefined
// (including regularity violations), or fuel exhaustion.
enum class EvalStatus : std::uint8_t { Value, Undefined, Fuel };

struct Eval1 {
  EvalStatus status;
  Elem value;  // meaningful when status == Value
};
struct Eval2 {
  EvalStatus status;
  ElemSet value;
};

Eval1 eval1(const Pfn1& f, const Elem& z);
Eval2 eval2(const Mfn2& f, const Elem& z);

// Graph equality / order over a finite carrier.  `where` (when non-null)
// receives the first differing point.
bool s1_graph_eq(const Pfn1& f, const Pfn1& g, const std::vector<Elem>& carrier,
                 std::string* where = nullptr);
bool s2_graph_eq(const Mfn2& f, const Mfn2& g, const std::vector<Elem>& carrier,
                 std::string* where = nullptr);
// f ≥ g restricted to the carrier.
bool s1_extends(const Pfn1& f, const Pfn1& g, const std::vector<Elem>& carrier,
                std::string* where = nullptr);
bool s2_extends(const Mfn2& f, const Mfn2& g, const std::vector<Elem>& carrier,
                std::string* where = nullptr);

}  // namespace moschext
