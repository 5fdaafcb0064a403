// Term language over the combinatory operations.
//
// Grammar (whitespace-insensitive):
//   term  := atom | atom "." term                 composition, right-assoc,
//                                                  (a.b)(z) = a(b(z))
//   atom  := "I" | "L" | "R" | "T" | "F"
//          | "pi" "(" term "," term ")"
//          | "sigma" "(" term "," term "," term ")"
//          | "iter" "(" term "," term ")"          iter(step, control)
//          | "(" term ")"
//          | ident                                 registry symbol
//   ident := [a-z_][a-z0-9_]*  other than the keywords pi/sigma/iter
//
// The canonical printer emits minimal parentheses (composition chains print
// as a.b.c; a left-nested composition prints its left factor in parens) and
// round-trips through the parser.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "moschext/realizer.hpp"
#include "moschext/space.hpp"

namespace moschext {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind : std::uint8_t { I, L, R, T, F, Sym, Comp, Pi, Sigma, Iter };
  Kind kind;
  std::string sym;  // Kind::Sym
  TermPtr a, b, c;  // Comp: a∘b;  Pi(a,b);  Sigma(a,b,c);  Iter(step a, control b)
};

TermPtr t_i();
TermPtr t_l();
TermPtr t_r();
TermPtr t_t();
TermPtr t_f();
TermPtr t_sym(const std::string& name);
TermPtr t_comp(const TermPtr& a, const TermPtr& b);
TermPtr t_pi(const TermPtr& a, const TermPtr& b);
TermPtr t_sigma(const TermPtr& a, const TermPtr& b, const TermPtr& c);
TermPtr t_iter(const TermPtr& step, const TermPtr& control);

bool term_eq(const TermPtr& a, const TermPtr& b);

TermPtr parse_term(const std::string& text);  // SyntaxError
std::string print_term(const TermPtr& t);

// Symbols a term may reference, per space.
struct Registry {
  std::map<std::string, Pfn1> s1;
  std::map<std::string, Mfn2> s2;
};

// Evaluation.  All iterations nested in the term share one budget of `fuel`
// steps per top-level application.  Unknown symbols throw UnknownSymbolError
// (eagerly, at compile time of the term).  steps_out (when non-null) receives
// the number of budget units actually consumed.
std::optional<Elem> eval_term_s1(const TermPtr& t, const Registry& reg,
                                 const Elem& z, std::uint64_t fuel,
                                 const IterObserver* obs = nullptr,
                                 std::uint64_t* steps_out = nullptr);
std::optional<ElemSet> eval_term_s2(const TermPtr& t, const Registry& reg,
                                    const Elem& z, std::uint64_t fuel,
                                    const IterObserver* obs = nullptr,
                                    std::uint64_t* steps_out = nullptr);

// The term as a map with a fresh per-application budget.
Pfn1 term_to_pfn1(const TermPtr& t, const Registry& reg, std::uint64_t fuel);
Mfn2 term_to_mfn2(const TermPtr& t, const Registry& reg, std::uint64_t fuel);

// The term as a name transformation.  Covers the structural fragment
// (I, L, R, T, F, composition, pi, sigma, iter); registry symbols have no
// realizer form and throw UnknownSymbolError eagerly.  `fuel` bounds each
// realized iteration (enforced at query time).
Realizer term_to_realizer(const TermPtr& t, std::uint64_t fuel);

}  // namespace moschext
