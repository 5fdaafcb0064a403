#include "moschext/name.hpp"

#include "moschext/errors.hpp"

namespace moschext {

Name make_name(std::function<Int(std::uint64_t)> gen) {
  return std::make_shared<NameImpl>(std::move(gen));
}

NameTag tag_of(const Int& value) {
  if (value == 0) return NameTag::Atom;
  if (value % 2 == 1) return NameTag::Pair;
  return NameTag::Base;
}

Name name_const(const Int& v) {
  return make_name([v](std::uint64_t) { return v; });
}

Name name_of_atom() { return name_const(Int(0)); }

Name name_inject_base(const Name& q) {
  return make_name([q](std::uint64_t k) { return Int(2 * name_at(q, k) + 2); });
}

Name name_project_base(const Name& p) {
  return make_name([p](std::uint64_t k) -> Int {
    const Int& v = name_at(p, k);
    if (tag_of(v) != NameTag::Base)
      throw MalformedNameError("base tag expected at index " + std::to_string(k) +
                               ", value " + v.str());
    return (v - 2) / 2;
  });
}

Name name_pair(const Name& a, const Name& b) {
  return make_name([a, b](std::uint64_t k) {
    return Int(2 * pair_j(name_at(a, k), name_at(b, k)) + 1);
  });
}

namespace {

Int pair_component(const Int& v, std::uint64_t k, bool left) {
  if (tag_of(v) != NameTag::Pair)
    throw MalformedNameError("pair tag expected at index " + std::to_string(k) +
                             ", value " + v.str());
  auto [m, n] = unpair_j((v - 1) / 2);
  return left ? m : n;
}

}  // namespace

Name name_left(const Name& p) {
  return make_name(
      [p](std::uint64_t k) { return pair_component(name_at(p, k), k, true); });
}

Name name_right(const Name& p) {
  return make_name(
      [p](std::uint64_t k) { return pair_component(name_at(p, k), k, false); });
}

Name name_of_elem(const Elem& z,
                  const std::function<Name(const Elem&)>& base_namer) {
  switch (z->kind) {
    case ElemKind::Atom:
      return name_of_atom();
    case ElemKind::Base:
      return name_inject_base(base_namer(z));
    case ElemKind::Pair:
      return name_pair(name_of_elem(z->left, base_namer),
                       name_of_elem(z->right, base_namer));
  }
  return name_of_atom();  // unreachable
}

namespace {

constexpr std::uint64_t kTagWindow = 2;

NameTag checked_tag(const Name& p) {
  NameTag t = tag_of(name_at(p, 0));
  for (std::uint64_t k = 1; k < kTagWindow; ++k) {
    if (tag_of(name_at(p, k)) != t)
      throw MalformedNameError("tag class changes between indices 0 and " +
                               std::to_string(k) + " (values " +
                               name_at(p, 0).str() + ", " + name_at(p, k).str() +
                               ")");
  }
  return t;
}

}  // namespace

DecodedShapePtr name_decode_shape(const Name& p, std::uint32_t depth_fuel) {
  NameTag t = checked_tag(p);
  auto node = std::make_shared<DecodedShape>();
  node->tag = t;
  switch (t) {
    case NameTag::Atom:
      break;
    case NameTag::Base:
      node->base = name_project_base(p);
      break;
    case NameTag::Pair: {
      if (depth_fuel == 0)
        throw FuelExhaustedError("name shape decoding depth");
      node->left = name_decode_shape(name_left(p), depth_fuel - 1);
      node->right = name_decode_shape(name_right(p), depth_fuel - 1);
      break;
    }
  }
  return node;
}

Elem name_decode_elem(const Name& p,
                      const std::function<Elem(const Name&)>& base_decode,
                      std::uint32_t depth_fuel) {
  NameTag t = checked_tag(p);
  switch (t) {
    case NameTag::Atom:
      return atom();
    case NameTag::Base:
      return base_decode(name_project_base(p));
    case NameTag::Pair: {
      if (depth_fuel == 0)
        throw FuelExhaustedError("name element decoding depth");
      return pair_elem(name_decode_elem(name_left(p), base_decode, depth_fuel - 1),
                       name_decode_elem(name_right(p), base_decode, depth_fuel - 1));
    }
  }
  return atom();  // unreachable
}

Pairing cantor_pairing() {
  return {[](const Int& m, const Int& n) { return pair_j(m, n); },
          [](const Int& c) { return unpair_j(c); },
          "cantor"};
}

Pairing exp_pairing() {
  return {[](const Int& m, const Int& n) -> Int {
            return (Int(1) << static_cast<unsigned>(m)) * (2 * n + 1) - 1;
          },
          [](const Int& c) -> std::pair<Int, Int> {
            Int v = c + 1;  // = 2^m (2n+1), v >= 1
            unsigned m = boost::multiprecision::lsb(v);
            Int odd = v >> m;
            return {Int(m), (odd - 1) / 2};
          },
          "exp"};
}

std::function<Int(const Int&)> translate_pairing(const Pairing& target,
                                                 const Pairing& source) {
  struct Rec {
    std::shared_ptr<std::map<Int, Int>> memo;
    std::function<Int(const Int&, const Int&)> pair_t;
    std::function<std::pair<Int, Int>(const Int&)> unpair_s;
    Int run(const Int& v) {
      if (v % 2 == 0) return v;
      auto it = memo->find(v);
      if (it != memo->end()) return it->second;
      auto [m, n] = unpair_s((v - 1) / 2);
      Int result = 2 * pair_t(run(m), run(n)) + 1;
      memo->emplace(v, result);
      return result;
    }
  };
  auto rec = std::make_shared<Rec>(
      Rec{std::make_shared<std::map<Int, Int>>(), target.pair, source.unpair});
  return [rec](const Int& v) { return rec->run(v); };
}

Name name_translate(const std::function<Int(const Int&)>& h, const Name& p) {
  return make_name([h, p](std::uint64_t k) { return h(name_at(p, k)); });
}

}  // namespace moschext
