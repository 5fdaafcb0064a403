#include "moschext/topology.hpp"

#include <cassert>
#include <stdexcept>

#include "moschext/errors.hpp"

namespace moschext {

namespace {

// Index tags mirror name tags: 0 is the singleton {o}, even indices 2i+2
// lift base opens, odd indices 2J(m,n)+1 are products.
bool idx_is_atom(const Int& i) { return i == 0; }
bool idx_is_base(const Int& i) { return i >= 2 && i % 2 == 0; }
bool idx_is_pair(const Int& i) { return i % 2 == 1; }

Int idx_base_part(const Int& i) { return (i - 2) / 2; }

std::pair<Int, Int> idx_components(const Int& i) {
  return unpair_j((i - 1) / 2);
}

}  // namespace

TopBase desk_top_base() {
  TopBase b;
  b.points = {BaseId{std::uint32_t{0}}, BaseId{std::uint32_t{1}}};
  b.period = 3;
  b.in_u = [](const BaseId& x, const Int& i) {
    const auto* raw = std::get_if<std::uint32_t>(&x);
    if (raw == nullptr) return false;
    const auto r = static_cast<std::uint32_t>(i % 3);
    return r == 2 || r == *raw;
  };
  // U_i as a bitmask over {x0,x1}: residue 0 -> {x0}, 1 -> {x1}, 2 -> both.
  auto mask = [](const Int& i) -> unsigned {
    const auto r = static_cast<std::uint32_t>(i % 3);
    return r == 2 ? 3u : (1u << r);
  };
  b.in_s = [mask](const Int& i1, const Int& i2, const Int& i) {
    const unsigned inter = mask(i1) & mask(i2);
    return (mask(i) & ~inter) == 0;
  };
  return b;
}

TopStar::TopStar(TopBase base) : base_(std::move(base)) {}

TopStar top_extend(TopBase base) { return TopStar(std::move(base)); }

bool TopStar::elem_in_u(const Elem& z, const Int& i) const {
  if (i < 0) return false;
  if (idx_is_atom(i)) return z->kind == ElemKind::Atom;
  if (idx_is_base(i)) {
    if (z->kind != ElemKind::Base) return false;
    return base_.in_u(z->base, idx_base_part(i));
  }
  if (z->kind != ElemKind::Pair) return false;
  const auto [m, n] = idx_components(i);
  return elem_in_u(z->left, m) && elem_in_u(z->right, n);
}

bool TopStar::in_s_star(const Int& i1, const Int& i2, const Int& i) const {
  if (i1 < 0 || i2 < 0 || i < 0) return false;
  if (idx_is_atom(i1) && idx_is_atom(i2) && idx_is_atom(i)) return true;
  if (idx_is_base(i1) && idx_is_base(i2) && idx_is_base(i)) {
    return base_.in_s(idx_base_part(i1), idx_base_part(i2), idx_base_part(i));
  }
  if (idx_is_pair(i1) && idx_is_pair(i2) && idx_is_pair(i)) {
    const auto [m1, n1] = idx_components(i1);
    const auto [m2, n2] = idx_components(i2);
    const auto [m, n] = idx_components(i);
    return in_s_star(m1, m2, m) && in_s_star(n1, n2, n);
  }
  return false;  // mixed tags never enter the closure
}

Int TopStar::witness_index(const Elem& z) const {
  switch (z->kind) {
    case ElemKind::Atom:
      return 0;
    case ElemKind::Base: {
      for (std::uint64_t i = 0; i < base_.period; ++i) {
        if (base_.in_u(z->base, Int(i))) return Int(2 * i + 2);
      }
      throw std::logic_error("topology base does not cover a base point");
    }
    case ElemKind::Pair: {
      const Int m = witness_index(z->left);
      const Int n = witness_index(z->right);
      return 2 * pair_j(m, n) + 1;
    }
  }
  throw std::logic_error("unreachable element kind");
}

std::optional<Int> TopStar::separating_index(const Elem& a,
                                             const Elem& b) const {
  if (a == b) return std::nullopt;
  // Distinct kinds: the witness open of the one with the "smaller" kind
  // excludes every element of the other kind (atom opens hold only o, base
  // opens hold only base points, product opens hold only pairs).
  if (a->kind != b->kind) {
    return witness_index(a->kind <= b->kind ? a : b);
  }
  switch (a->kind) {
    case ElemKind::Atom:
      return std::nullopt;  // equal after interning; unreachable for a != b
    case ElemKind::Base: {
      for (std::uint64_t i = 0; i < base_.period; ++i) {
        const bool ina = base_.in_u(a->base, Int(i));
        const bool inb = base_.in_u(b->base, Int(i));
        if (ina != inb) return Int(2 * i + 2);
      }
      return std::nullopt;  // base fails T0 on these two points
    }
    case ElemKind::Pair: {
      // Recurse into a differing component; pair the separator with a plain
      // witness for the other component of whichever pair the separator's
      // open contains.
      for (int side = 0; side < 2; ++side) {
        const Elem& ca = side == 0 ? a->left : a->right;
        const Elem& cb = side == 0 ? b->left : b->right;
        if (ca == cb) continue;
        const auto sep = separating_index(ca, cb);
        if (!sep) continue;
        const bool holds_a = elem_in_u(ca, *sep);
        const Elem& kept = holds_a ? a : b;
        const Int other =
            witness_index(side == 0 ? kept->right : kept->left);
        const Int m = side == 0 ? *sep : other;
        const Int n = side == 0 ? other : *sep;
        return 2 * pair_j(m, n) + 1;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Int> TopStar::intersect_witness(const Int& i1, const Int& i2,
                                              const Elem& z) const {
  if (!elem_in_u(z, i1) || !elem_in_u(z, i2)) return std::nullopt;
  switch (z->kind) {
    case ElemKind::Atom:
      return Int(0);  // both indices must be 0 given membership
    case ElemKind::Base: {
      const Int b1 = idx_base_part(i1);
      const Int b2 = idx_base_part(i2);
      for (std::uint64_t i = 0; i < base_.period; ++i) {
        if (!base_.in_u(z->base, Int(i))) continue;
        if (base_.in_s(b1, b2, Int(i))) return Int(2 * i + 2);
      }
      return std::nullopt;  // base lacks a refining open here
    }
    case ElemKind::Pair: {
      const auto [m1, n1] = idx_components(i1);
      const auto [m2, n2] = idx_components(i2);
      const auto m = intersect_witness(m1, m2, z->left);
      if (!m) return std::nullopt;
      const auto n = intersect_witness(n1, n2, z->right);
      if (!n) return std::nullopt;
      return 2 * pair_j(*m, *n) + 1;
    }
  }
  return std::nullopt;
}

std::vector<std::array<Int, 3>> TopStar::stream_s_star(
    std::size_t count) const {
  std::vector<std::array<Int, 3>> out;
  out.reserve(count);
  // Diagonal sweep: all triples whose maximum entry equals the current bound,
  // in lexicographic order, filtered through the exact decision.
  for (std::uint64_t bound = 0; out.size() < count; ++bound) {
    const Int b(bound);
    for (Int i1 = 0; i1 <= b && out.size() < count; ++i1) {
      for (Int i2 = 0; i2 <= b && out.size() < count; ++i2) {
        for (Int i = 0; i <= b && out.size() < count; ++i) {
          if (i1 != b && i2 != b && i != b) continue;
          if (in_s_star(i1, i2, i)) out.push_back({i1, i2, i});
        }
      }
    }
  }
  return out;
}

std::optional<Int> top_intersect_witness(const TopStar& space, const Int& i1,
                                         const Int& i2, const Elem& z) {
  return space.intersect_witness(i1, i2, z);
}

}  // namespace moschext
