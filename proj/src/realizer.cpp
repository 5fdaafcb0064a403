#include "moschext/realizer.hpp"

#include "moschext/errors.hpp"

namespace moschext {

Realizer rz_identity() {
  return {[](const Name& p) { return p; }};
}

Realizer rz_const(const Name& out) {
  return {[out](const Name&) { return out; }};
}

Realizer rz_left() {
  return {[](const Name& p) {
    return make_name([p](std::uint64_t k) -> Int {
      const Int& v = name_at(p, k);
      if (v == 0) return Int(0);
      if (v % 2 == 0) return Int(1);  // 1 = 2J(0,0)+1 names (o,o)
      return unpair_j((v - 1) / 2).first;
    });
  }};
}

Realizer rz_right() {
  return {[](const Name& p) {
    return make_name([p](std::uint64_t k) -> Int {
      const Int& v = name_at(p, k);
      if (v == 0) return Int(0);
      if (v % 2 == 0) return Int(1);
      return unpair_j((v - 1) / 2).second;
    });
  }};
}

Realizer rz_inject_base() {
  return {[](const Name& q) {
    return make_name([q](std::uint64_t k) { return Int(2 * name_at(q, k) + 2); });
  }};
}

Realizer rz_project_base() {
  return {[](const Name& p) {
    return make_name([p](std::uint64_t k) -> Int {
      Int half = name_at(p, k) / 2;
      return half >= 1 ? Int(half - 1) : Int(0);  // truncated predecessor
    });
  }};
}

Int nat_to_star_value(std::uint64_t n) {
  Int v = 0;
  for (std::uint64_t i = 0; i < n; ++i) v = 2 * pair_j(Int(0), v) + 1;
  return v;
}

Realizer rz_nat_to_star() {
  return {[](const Name& p) {
    return make_name([p](std::uint64_t k) -> Int {
      const Int& n = name_at(p, k);
      if (n < 0 || n > 0xFFFFFFFFull)
        throw MalformedNameError("numeral index out of range: " + n.str());
      return nat_to_star_value(n.convert_to<std::uint64_t>());
    });
  }};
}

std::uint64_t star_to_nat(const Name& p, std::uint64_t fuel) {
  const Int& target = name_at(p, 0);
  Int v = 0;
  for (std::uint64_t n = 0;; ++n) {
    if (v == target) return n;
    if (n >= fuel) throw FuelExhaustedError("numeral search", n);
    v = 2 * pair_j(Int(0), v) + 1;
  }
}

Realizer rz_star_to_nat(std::uint64_t fuel) {
  return {[fuel](const Name& p) {
    return make_name([p, fuel](std::uint64_t k) -> Int {
      const Int& target = name_at(p, k);
      Int v = 0;
      for (std::uint64_t n = 0;; ++n) {
        if (v == target) return Int(n);
        if (n >= fuel) throw FuelExhaustedError("numeral search", n);
        v = 2 * pair_j(Int(0), v) + 1;
      }
    });
  }};
}

Realizer rz_pi(const Realizer& g1, const Realizer& g2) {
  auto a1 = g1.apply, a2 = g2.apply;
  return {[a1, a2](const Name& p) { return name_pair(a1(p), a2(p)); }};
}

Realizer rz_sigma(const Realizer& g1, const Realizer& g2, const Realizer& g3) {
  auto a1 = g1.apply, a2 = g2.apply, a3 = g3.apply;
  return {[a1, a2, a3](const Name& p) {
    auto chosen = std::make_shared<Name>();
    return make_name([a1, a2, a3, p, chosen](std::uint64_t k) -> Int {
      if (!*chosen) {
        const Int& t = name_at(a1(p), 0);
        *chosen = (tag_of(t) == NameTag::Pair) ? a2(p) : a3(p);
      }
      return name_at(*chosen, k);
    });
  }};
}

Realizer rz_iter(const Realizer& step, const Realizer& control,
                 std::uint64_t fuel) {
  auto st = step.apply, ct = control.apply;
  return {[st, ct, fuel](const Name& p) {
    auto result = std::make_shared<Name>();
    return make_name([st, ct, fuel, p, result](std::uint64_t k) -> Int {
      if (!*result) {
        Name q = p;
        for (std::uint64_t n = 0;; ++n) {
          const Int& t = name_at(ct(q), 0);
          if (tag_of(t) != NameTag::Pair) {
            *result = q;
            break;
          }
          if (n >= fuel) throw FuelExhaustedError("realized iteration", n);
          q = st(q);
        }
      }
      return name_at(*result, k);
    });
  }};
}

Realizer rz_compose(const Realizer& g1, const Realizer& g2) {
  auto a1 = g1.apply, a2 = g2.apply;
  return {[a1, a2](const Name& p) { return a1(a2(p)); }};
}

}  // namespace moschext
