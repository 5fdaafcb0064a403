#include "moschext/term.hpp"

#include <cctype>

#include "moschext/errors.hpp"

namespace moschext {

namespace {

TermPtr leaf(Term::Kind k) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  return t;
}

}  // namespace

TermPtr t_i() { static TermPtr t = leaf(Term::Kind::I); return t; }
TermPtr t_l() { static TermPtr t = leaf(Term::Kind::L); return t; }
TermPtr t_r() { static TermPtr t = leaf(Term::Kind::R); return t; }
TermPtr t_t() { static TermPtr t = leaf(Term::Kind::T); return t; }
TermPtr t_f() { static TermPtr t = leaf(Term::Kind::F); return t; }

TermPtr t_sym(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Sym;
  t->sym = name;
  return t;
}

TermPtr t_comp(const TermPtr& a, const TermPtr& b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Comp;
  t->a = a;
  t->b = b;
  return t;
}

TermPtr t_pi(const TermPtr& a, const TermPtr& b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Pi;
  t->a = a;
  t->b = b;
  return t;
}

TermPtr t_sigma(const TermPtr& a, const TermPtr& b, const TermPtr& c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Sigma;
  t->a = a;
  t->b = b;
  t->c = c;
  return t;
}

TermPtr t_iter(const TermPtr& step, const TermPtr& control) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Iter;
  t->a = step;
  t->b = control;
  return t;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Sym) return a->sym == b->sym;
  auto eq0 = [](const TermPtr& x, const TermPtr& y) {
    return (!x && !y) || (x && y && term_eq(x, y));
  };
  return eq0(a->a, b->a) && eq0(a->b, b->b) && eq0(a->c, b->c);
}

// ---- parser ----

namespace {

struct TCursor {
  const std::string& s;
  std::size_t i = 0;
  int line = 1, col = 1;

  explicit TCursor(const std::string& text) : s(text) {}

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void advance() {
    if (s[i] == '\n') { ++line; col = 1; } else { ++col; }
    ++i;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found =
        eof() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(line, col, expected, found);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || peek() != c) fail(what);
    advance();
  }
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

TermPtr parse_term_inner(TCursor& cur);

TermPtr parse_atom(TCursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("term");
  char c = cur.peek();
  switch (c) {
    case 'I': cur.advance(); return t_i();
    case 'L': cur.advance(); return t_l();
    case 'R': cur.advance(); return t_r();
    case 'T': cur.advance(); return t_t();
    case 'F': cur.advance(); return t_f();
    default: break;
  }
  if (c == '(') {
    cur.advance();
    TermPtr t = parse_term_inner(cur);
    cur.expect(')', "')'");
    return t;
  }
  if (!ident_start(c)) cur.fail("term");
  std::size_t start = cur.i;
  while (!cur.eof() && ident_char(cur.peek())) cur.advance();
  std::string word = cur.s.substr(start, cur.i - start);
  if (word == "pi") {
    cur.expect('(', "'('");
    TermPtr a = parse_term_inner(cur);
    cur.expect(',', "','");
    TermPtr b = parse_term_inner(cur);
    cur.expect(')', "')'");
    return t_pi(a, b);
  }
  if (word == "sigma") {
    cur.expect('(', "'('");
    TermPtr a = parse_term_inner(cur);
    cur.expect(',', "','");
    TermPtr b = parse_term_inner(cur);
    cur.expect(',', "','");
    TermPtr c3 = parse_term_inner(cur);
    cur.expect(')', "')'");
    return t_sigma(a, b, c3);
  }
  if (word == "iter") {
    cur.expect('(', "'('");
    TermPtr a = parse_term_inner(cur);
    cur.expect(',', "','");
    TermPtr b = parse_term_inner(cur);
    cur.expect(')', "')'");
    return t_iter(a, b);
  }
  return t_sym(word);
}

TermPtr parse_term_inner(TCursor& cur) {
  TermPtr head = parse_atom(cur);
  cur.skip_ws();
  if (!cur.eof() && cur.peek() == '.') {
    cur.advance();
    TermPtr rest = parse_term_inner(cur);
    return t_comp(head, rest);
  }
  return head;
}

}  // namespace

TermPtr parse_term(const std::string& text) {
  TCursor cur(text);
  TermPtr t = parse_term_inner(cur);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("end of input");
  return t;
}

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::I: return "I";
    case Term::Kind::L: return "L";
    case Term::Kind::R: return "R";
    case Term::Kind::T: return "T";
    case Term::Kind::F: return "F";
    case Term::Kind::Sym: return t->sym;
    case Term::Kind::Comp: {
      // Right-associated chains print without parens; a composition on the
      // left needs them to survive a round trip.
      std::string lhs = print_term(t->a);
      if (t->a->kind == Term::Kind::Comp) lhs = "(" + lhs + ")";
      return lhs + "." + print_term(t->b);
    }
    case Term::Kind::Pi:
      return "pi(" + print_term(t->a) + "," + print_term(t->b) + ")";
    case Term::Kind::Sigma:
      return "sigma(" + print_term(t->a) + "," + print_term(t->b) + "," +
             print_term(t->c) + ")";
    case Term::Kind::Iter:
      return "iter(" + print_term(t->a) + "," + print_term(t->b) + ")";
  }
  return "";  // unreachable
}

// ---- evaluation ----

namespace {

using Comp1 = std::function<std::optional<Elem>(const Elem&, FuelBudget&,
                                                const IterObserver*)>;
using Comp2 = std::function<std::optional<ElemSet>(const Elem&, FuelBudget&,
                                                   const IterObserver*)>;

Comp1 compile1(const TermPtr& t, const Registry& reg) {
  switch (t->kind) {
    case Term::Kind::I:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<Elem> { return z; };
    case Term::Kind::L:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<Elem> { return left1(z); };
    case Term::Kind::R:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<Elem> { return right1(z); };
    case Term::Kind::T:
      return [](const Elem&, FuelBudget&, const IterObserver*)
                 -> std::optional<Elem> { return pair_elem(atom(), atom()); };
    case Term::Kind::F:
      return [](const Elem&, FuelBudget&, const IterObserver*)
                 -> std::optional<Elem> { return atom(); };
    case Term::Kind::Sym: {
      auto it = reg.s1.find(t->sym);
      if (it == reg.s1.end())
        throw UnknownSymbolError(t->sym, "not available in the single-valued space");
      Pfn1 f = it->second;
      return [f](const Elem& z, FuelBudget&, const IterObserver*) { return f(z); };
    }
    case Term::Kind::Comp: {
      Comp1 a = compile1(t->a, reg), b = compile1(t->b, reg);
      return [a, b](const Elem& z, FuelBudget& fuel,
                    const IterObserver* obs) -> std::optional<Elem> {
        auto u = b(z, fuel, obs);
        if (!u) return std::nullopt;
        return a(*u, fuel, obs);
      };
    }
    case Term::Kind::Pi: {
      Comp1 a = compile1(t->a, reg), b = compile1(t->b, reg);
      return [a, b](const Elem& z, FuelBudget& fuel,
                    const IterObserver* obs) -> std::optional<Elem> {
        auto u = a(z, fuel, obs);
        if (!u) return std::nullopt;
        auto v = b(z, fuel, obs);
        if (!v) return std::nullopt;
        return pair_elem(*u, *v);
      };
    }
    case Term::Kind::Sigma: {
      Comp1 a = compile1(t->a, reg), b = compile1(t->b, reg),
            c = compile1(t->c, reg);
      return [a, b, c](const Elem& z, FuelBudget& fuel,
                       const IterObserver* obs) -> std::optional<Elem> {
        auto tv = a(z, fuel, obs);
        if (!tv) return std::nullopt;
        return is_pair(*tv) ? b(z, fuel, obs) : c(z, fuel, obs);
      };
    }
    case Term::Kind::Iter: {
      Comp1 step = compile1(t->a, reg), control = compile1(t->b, reg);
      return [step, control](const Elem& z, FuelBudget& fuel,
                             const IterObserver* obs) -> std::optional<Elem> {
        Pfn1 s{[&step, &fuel, obs](const Elem& u) { return step(u, fuel, obs); }};
        Pfn1 c{[&control, &fuel, obs](const Elem& u) {
          return control(u, fuel, obs);
        }};
        return s1_iter_apply(s, c, z, fuel, obs);
      };
    }
  }
  return {};  // unreachable
}

Comp2 compile2(const TermPtr& t, const Registry& reg) {
  switch (t->kind) {
    case Term::Kind::I:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<ElemSet> { return ElemSet{z}; };
    case Term::Kind::L:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<ElemSet> { return ElemSet{left1(z)}; };
    case Term::Kind::R:
      return [](const Elem& z, FuelBudget&, const IterObserver*)
                 -> std::optional<ElemSet> { return ElemSet{right1(z)}; };
    case Term::Kind::T:
      return [](const Elem&, FuelBudget&, const IterObserver*)
                 -> std::optional<ElemSet> {
        return ElemSet{pair_elem(atom(), atom())};
      };
    case Term::Kind::F:
      return [](const Elem&, FuelBudget&, const IterObserver*)
                 -> std::optional<ElemSet> { return ElemSet{atom()}; };
    case Term::Kind::Sym: {
      auto it = reg.s2.find(t->sym);
      if (it == reg.s2.end())
        throw UnknownSymbolError(t->sym, "not available in the multi-valued space");
      Mfn2 f = it->second;
      return [f](const Elem& z, FuelBudget&, const IterObserver*) { return f(z); };
    }
    case Term::Kind::Comp: {
      Comp2 a = compile2(t->a, reg), b = compile2(t->b, reg);
      return [a, b](const Elem& z, FuelBudget& fuel,
                    const IterObserver* obs) -> std::optional<ElemSet> {
        auto us = b(z, fuel, obs);
        if (!us) return std::nullopt;
        ElemSet out;
        for (const auto& u : *us) {
          auto vs = a(u, fuel, obs);
          if (!vs) return std::nullopt;
          out = out.empty() ? *vs : set_union(out, *vs);
        }
        return out;
      };
    }
    case Term::Kind::Pi: {
      Comp2 a = compile2(t->a, reg), b = compile2(t->b, reg);
      return [a, b](const Elem& z, FuelBudget& fuel,
                    const IterObserver* obs) -> std::optional<ElemSet> {
        auto us = a(z, fuel, obs);
        if (!us) return std::nullopt;
        auto vs = b(z, fuel, obs);
        if (!vs) return std::nullopt;
        ElemSet out;
        for (const auto& u : *us)
          for (const auto& v : *vs) set_insert(out, pair_elem(u, v));
        return out;
      };
    }
    case Term::Kind::Sigma: {
      Comp2 a = compile2(t->a, reg), b = compile2(t->b, reg),
            c = compile2(t->c, reg);
      return [a, b, c](const Elem& z, FuelBudget& fuel,
                       const IterObserver* obs) -> std::optional<ElemSet> {
        auto ts = a(z, fuel, obs);
        if (!ts) return std::nullopt;
        std::optional<ElemSet> fv, gv;
        if (set_has_pair(*ts)) {
          fv = b(z, fuel, obs);
          if (!fv) return std::nullopt;
        }
        if (set_has_basic(*ts)) {
          gv = c(z, fuel, obs);
          if (!gv) return std::nullopt;
        }
        if (fv && gv) return set_union(*fv, *gv);
        return fv ? fv : gv;
      };
    }
    case Term::Kind::Iter: {
      Comp2 step = compile2(t->a, reg), control = compile2(t->b, reg);
      return [step, control](const Elem& z, FuelBudget& fuel,
                             const IterObserver* obs) -> std::optional<ElemSet> {
        Mfn2 s{[&step, &fuel, obs](const Elem& u) { return step(u, fuel, obs); }};
        Mfn2 c{[&control, &fuel, obs](const Elem& u) {
          return control(u, fuel, obs);
        }};
        auto outcome = s2_iter_explore(s, c, z, fuel, obs);
        if (outcome.violation)
          throw RegularityViolationError(print_elem(*outcome.violation));
        return outcome.value;
      };
    }
  }
  return {};  // unreachable
}

}  // namespace

std::optional<Elem> eval_term_s1(const TermPtr& t, const Registry& reg,
                                 const Elem& z, std::uint64_t fuel,
                                 const IterObserver* obs,
                                 std::uint64_t* steps_out) {
  Comp1 f = compile1(t, reg);
  FuelBudget budget{fuel};
  try {
    auto result = f(z, budget, obs);
    if (steps_out) *steps_out = budget.spent;
    return result;
  } catch (...) {
    if (steps_out) *steps_out = budget.spent;
    throw;
  }
}

std::optional<ElemSet> eval_term_s2(const TermPtr& t, const Registry& reg,
                                    const Elem& z, std::uint64_t fuel,
                                    const IterObserver* obs,
                                    std::uint64_t* steps_out) {
  Comp2 f = compile2(t, reg);
  FuelBudget budget{fuel};
  try {
    auto result = f(z, budget, obs);
    if (steps_out) *steps_out = budget.spent;
    return result;
  } catch (...) {
    if (steps_out) *steps_out = budget.spent;
    throw;
  }
}

Pfn1 term_to_pfn1(const TermPtr& t, const Registry& reg, std::uint64_t fuel) {
  auto f = std::make_shared<Comp1>(compile1(t, reg));
  return {[f, fuel](const Elem& z) -> std::optional<Elem> {
    FuelBudget budget{fuel};
    return (*f)(z, budget, nullptr);
  }};
}

Mfn2 term_to_mfn2(const TermPtr& t, const Registry& reg, std::uint64_t fuel) {
  auto f = std::make_shared<Comp2>(compile2(t, reg));
  return {[f, fuel](const Elem& z) -> std::optional<ElemSet> {
    FuelBudget budget{fuel};
    auto result = (*f)(z, budget, nullptr);
    return result;
  }};
}

Realizer term_to_realizer(const TermPtr& t, std::uint64_t fuel) {
  switch (t->kind) {
    case Term::Kind::I:
      return rz_identity();
    case Term::Kind::L:
      return rz_left();
    case Term::Kind::R:
      return rz_right();
    case Term::Kind::T:
      return rz_const(name_const(Int(1)));  // 1 = 2J(0,0)+1 names (o,o)
    case Term::Kind::F:
      return rz_const(name_of_atom());
    case Term::Kind::Sym:
      throw UnknownSymbolError(
          t->sym, "registry symbols have no realizer form; realizers cover "
                  "I, L, R, T, F, composition, pi, sigma, iter");
    case Term::Kind::Comp:
      return rz_compose(term_to_realizer(t->a, fuel),
                        term_to_realizer(t->b, fuel));
    case Term::Kind::Pi:
      return rz_pi(term_to_realizer(t->a, fuel), term_to_realizer(t->b, fuel));
    case Term::Kind::Sigma:
      return rz_sigma(term_to_realizer(t->a, fuel),
                      term_to_realizer(t->b, fuel),
                      term_to_realizer(t->c, fuel));
    case Term::Kind::Iter:
      return rz_iter(term_to_realizer(t->a, fuel),
                     term_to_realizer(t->b, fuel), fuel);
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace moschext
