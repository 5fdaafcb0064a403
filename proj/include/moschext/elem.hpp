// The extended datatype over a base set X: the closure X* of X ∪ {o} under
// ordered pairing, where o is a fresh atom and no member of X ∪ {o} is a pair.
//
// Elements are immutable, hash-consed nodes: structurally equal elements are
// pointer-equal, so Elem equality is pointer comparison and sets of elements
// can be kept as sorted vectors under the deterministic structural order
// elem_cmp.  Base points carry either an abstract index (for finite test
// carriers) or an exact rational (for the computable-reals instance).
//
// Numerals: 0 is encoded by o and n+1 by the pair (o, <n>), so the codes are
// the right-nested chains o, (o,o), (o,(o,o)), ...  Finite sequences are
// encoded by o (empty) and (z0, <rest>) otherwise; the numeral n is exactly
// the code of the n-term sequence of o's.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moschext/rational.hpp"

namespace moschext {

class ElemNode;
using Elem = std::shared_ptr<const ElemNode>;

// Identity of a base point: an abstract index into a finite carrier, or an
// exact rational (the two never compare equal).
using BaseId = std::variant<std::uint32_t, Rat>;

enum class ElemKind : std::uint8_t { Atom, Base, Pair };

class ElemNode {
 public:
  static constexpr std::uint32_t kNoSlot = 0xFFFFFFFFu;

  ElemKind kind;
  BaseId base;       // meaningful only when kind == Base
  Elem left, right;  // meaningful only when kind == Pair
  std::size_t hash = 0;
  std::uint32_t depth = 0;  // atoms/bases 0, pairs 1+max(children)

  // Cache used by finite-carrier function tables (tests, acceptance suite):
  // the carrier registry assigns each enumerated element its index here.
  // Purely an acceleration slot; library semantics never read it.
  mutable std::uint32_t carrier_slot = kNoSlot;
};

// Interned constructors.  The interner is process-global and keeps nodes
// alive for the process lifetime; the library is single-threaded by design.
Elem atom();                            // o
Elem base_elem(const BaseId& id);       // a base point of X
Elem base_elem(std::uint32_t index);
Elem base_elem(const Rat& value);
Elem pair_elem(const Elem& l, const Elem& r);

inline bool is_basic(const Elem& z) { return z->kind != ElemKind::Pair; }
inline bool is_pair(const Elem& z) { return z->kind == ElemKind::Pair; }

// Total projections: both send o to o and every base point to (o,o); on pairs
// they project.
Elem left1(const Elem& z);
Elem right1(const Elem& z);

// Numeral codes.
Elem nat_to_code(std::uint64_t n);
std::optional<std::uint64_t> as_nat_code(const Elem& z);  // nullopt if not one
std::uint64_t code_to_nat(const Elem& z);                 // NotANatCodeError

// Sequence code: o for the empty sequence, (z0, <z1..zk>) otherwise.
Elem encode_seq(const std::vector<Elem>& zs);

// Deterministic structural total order: Atom < Base < Pair; bases by variant
// kind then value; pairs lexicographically.  Returns <0, 0, >0.
int elem_cmp(const Elem& a, const Elem& b);

// Canonical printing:
//   o                  the atom
//   #n                 numeral chains (n >= 1; the bare atom prints as "o")
//   `x3` / `-7/2`      base points (abstract index / exact rational)
//   (l,r)              other pairs, no spaces
std::string print_elem(const Elem& z);

// Parser for the same syntax (whitespace between tokens allowed; rationals
// also accept exact decimals like `-2.5`, and "#0" parses to o).  Throws
// SyntaxError with 1-based positions.
Elem parse_elem(const std::string& text);

// Sorted-unique element sets (ordered by elem_cmp); the value alphabet of the
// multi-valued space.
using ElemSet = std::vector<Elem>;

ElemSet set_of(std::initializer_list<Elem> zs);
void set_insert(ElemSet& s, const Elem& z);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& s, const Elem& z);
bool set_subset(const ElemSet& a, const ElemSet& b);  // a ⊆ b
bool set_eq(const ElemSet& a, const ElemSet& b);
std::string print_elem_set(const ElemSet& s);  // {e1,e2,...} in order

// True iff the set contains at least one basic element / at least one pair.
bool set_has_basic(const ElemSet& s);
bool set_has_pair(const ElemSet& s);

}  // namespace moschext
