#include "moschext/registry.hpp"

namespace moschext {

namespace {

std::optional<Rat> rat_of(const Elem& z) {
  if (z->kind != ElemKind::Base || z->base.index() != 1) return std::nullopt;
  return std::get<1>(z->base);
}

Pfn1 lift_rat_fn(std::function<std::optional<Rat>(const Rat&)> f) {
  return {[f](const Elem& z) -> std::optional<Elem> {
    auto r = rat_of(z);
    if (!r) return std::nullopt;
    auto v = f(*r);
    if (!v) return std::nullopt;
    return base_elem(*v);
  }};
}

Mfn2 lift_to_s2(const Pfn1& f) { return embed(f); }

}  // namespace

Registry default_registry() {
  Registry reg;

  Pfn1 succ{[](const Elem& z) -> std::optional<Elem> {
    return pair_elem(atom(), z);
  }};

  Pfn1 shift = lift_rat_fn([](const Rat& r) -> std::optional<Rat> {
    return r + 1;
  });

  Pfn1 alpha_demo = lift_rat_fn([](const Rat& r) -> std::optional<Rat> {
    return (r - r * r) / 2;
  });

  Pfn1 beta_add{[](const Elem& z) -> std::optional<Elem> {
    if (!is_pair(z)) return std::nullopt;
    auto u = rat_of(z->left);
    auto v = rat_of(z->right);
    if (!u || !v) return std::nullopt;
    return base_elem(Rat(*u + *v));
  }};

  Pfn1 strict_zero{[](const Elem& z) -> std::optional<Elem> {
    auto r = rat_of(z);
    if (!r) return std::nullopt;
    if (*r > 0) return pair_elem(atom(), atom());
    if (*r < 0) return atom();
    return std::nullopt;  // diverges at the threshold
  }};

  Mfn2 soft_zero{[](const Elem& z) -> std::optional<ElemSet> {
    auto r = rat_of(z);
    if (!r) return std::nullopt;
    Elem yes = pair_elem(atom(), atom());
    Elem no = atom();
    if (*r >= 1) return ElemSet{yes};
    if (*r > 0) return set_of({no, yes});
    return ElemSet{no};
  }};

  reg.s1["s"] = succ;
  reg.s1["shift"] = shift;
  reg.s1["alpha_demo"] = alpha_demo;
  reg.s1["beta_add"] = beta_add;
  reg.s1["beta"] = beta_add;
  reg.s1["strict_zero"] = strict_zero;

  reg.s2["s"] = lift_to_s2(succ);
  reg.s2["shift"] = lift_to_s2(shift);
  reg.s2["alpha_demo"] = lift_to_s2(alpha_demo);
  reg.s2["beta_add"] = lift_to_s2(beta_add);
  reg.s2["beta"] = lift_to_s2(beta_add);
  reg.s2["strict_zero"] = lift_to_s2(strict_zero);
  reg.s2["soft_zero"] = soft_zero;

  return reg;
}

const std::vector<SymbolInfo>& registry_symbol_table() {
  static const std::vector<SymbolInfo> table = {
      {"s", true, true, "successor on numeral codes: z -> (o,z)"},
      {"shift", true, true, "rational base point r -> r+1"},
      {"beta_add", true, true, "pair of rational base points (u,v) -> u+v"},
      {"beta", true, true, "alias of beta_add"},
      {"alpha_demo", true, true, "rational base point r -> (r-r^2)/2"},
      {"strict_zero", true, true,
       "r>0 -> (o,o), r<0 -> o, undefined at 0 (strict sign test)"},
      {"soft_zero", false, true,
       "r>=1 -> {(o,o)}, 0<r<1 -> {o,(o,o)}, r<=0 -> {o} (soft sign test)"},
  };
  return table;
}

}  // namespace moschext
