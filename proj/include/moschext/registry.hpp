// The compiled-in symbol registry used by the CLI and reusable from tests.
//
// Registry functions operate on elements whose base points are exact
// rationals (the computable-reals instance); they are undefined elsewhere.

#pragma once

#include <string>
#include <vector>

#include "moschext/term.hpp"

namespace moschext {

struct SymbolInfo {
  std::string name;
  bool in_s1;
  bool in_s2;
  std::string summary;
};

// Symbols:
//   s            successor on numeral codes, z ↦ (o,z)          (both spaces)
//   shift        rational base point r ↦ r+1                    (both spaces)
//   beta_add     pair of rational base points (u,v) ↦ u+v       (both spaces)
//   beta         alias of beta_add                              (both spaces)
//   alpha_demo   rational base point r ↦ (r - r²)/2             (both spaces)
//   strict_zero  r > 0 ↦ (o,o);  r < 0 ↦ o;  undefined at 0     (both spaces)
//   soft_zero    r ≥ 1 ↦ {(o,o)};  0 < r < 1 ↦ {o,(o,o)};
//                r ≤ 0 ↦ {o}                                    (multi only)
Registry default_registry();

const std::vector<SymbolInfo>& registry_symbol_table();

}  // namespace moschext
