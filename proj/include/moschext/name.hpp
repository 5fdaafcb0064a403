// Names: total maps N -> N used to represent elements of X*.
//
// The representation reads the k-th value's tag:
//   0        names the atom o            (the whole name is λk.0)
//   2q(k)+2  names a base point          (q is a base-level name of it)
//   2J(m,n)+1 names a pair               (m,n are the component values at k)
// where J is the Cantor pairing.  A well-formed name keeps the same tag class
// at every index; decoding checks a two-index window (k = 0,1) at each node
// and rejects mixed-tag names as malformed.
//
// Names are lazy and memoized: construction never queries anything, values
// are computed on first use and cached, and the number of generator
// invocations is observable (realizer constructions must stay finite-use).
// Values are arbitrary-precision integers: pairing towers grow doubly
// exponentially and must not overflow.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "moschext/elem.hpp"
#include "moschext/rational.hpp"

namespace moschext {

class NameImpl {
 public:
  explicit NameImpl(std::function<Int(std::uint64_t)> gen)
      : gen_(std::move(gen)) {}

  const Int& at(std::uint64_t k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    ++queries_;
    return memo_.emplace(k, gen_(k)).first->second;
  }

  std::uint64_t query_count() const { return queries_; }

 private:
  std::function<Int(std::uint64_t)> gen_;
  std::map<std::uint64_t, Int> memo_;
  std::uint64_t queries_ = 0;
};

using Name = std::shared_ptr<NameImpl>;

Name make_name(std::function<Int(std::uint64_t)> gen);
inline const Int& name_at(const Name& p, std::uint64_t k) { return p->at(k); }
inline std::uint64_t name_query_count(const Name& p) { return p->query_count(); }

// Tag classes of name values.
enum class NameTag : std::uint8_t { Atom, Base, Pair };
NameTag tag_of(const Int& value);

// Constructors mirroring the representation clauses.
Name name_const(const Int& v);
Name name_of_atom();                              // λk.0
Name name_inject_base(const Name& q);             // λk.2q(k)+2
Name name_project_base(const Name& p);            // λk.(p(k)-2)/2
Name name_pair(const Name& a, const Name& b);     // λk.2J(a(k),b(k))+1
Name name_left(const Name& p);                    // pair component names
Name name_right(const Name& p);

// Structural name of a finite element; base points are named through the
// supplied base namer.
Name name_of_elem(const Elem& z, const std::function<Name(const Elem&)>& base_namer);

// Decoded shape of a name: the element structure with base points left as
// base-level names.
struct DecodedShape;
using DecodedShapePtr = std::shared_ptr<const DecodedShape>;
struct DecodedShape {
  NameTag tag;
  Name base;                      // tag == Base: the underlying base name
  DecodedShapePtr left, right;    // tag == Pair
};

// Reads tags through a two-index window at every node; throws
// MalformedNameError on mixed tags and FuelExhaustedError when the nesting
// exceeds depth_fuel.
DecodedShapePtr name_decode_shape(const Name& p, std::uint32_t depth_fuel);

// Full decode to an element, resolving base-level names through base_decode.
Elem name_decode_elem(const Name& p,
                      const std::function<Elem(const Name&)>& base_decode,
                      std::uint32_t depth_fuel);

// A pairing of N², with enough structure to translate encodings.
struct Pairing {
  std::function<Int(const Int&, const Int&)> pair;
  std::function<std::pair<Int, Int>(const Int&)> unpair;
  std::string label;
};

Pairing cantor_pairing();  // J(m,n) = (m+n)(m+n+1)/2 + n
Pairing exp_pairing();     // J'(m,n) = 2^m(2n+1) - 1

// The value translator h from source-pairing names to target-pairing names:
// h(2l) = 2l, h(2J_src(m,n)+1) = 2J_tgt(h(m),h(n))+1.  Well-founded because
// both pairings dominate their arguments.  The returned function is memoized.
std::function<Int(const Int&)> translate_pairing(const Pairing& target,
                                                 const Pairing& source);

// Pointwise application of a value translator to a name.
Name name_translate(const std::function<Int(const Int&)>& h, const Name& p);

}  // namespace moschext
