#include "moschext/space.hpp"

#include <cassert>
#include <deque>

namespace moschext {

// ---- single-valued space ----

Pfn1 s1_identity() {
  return {[](const Elem& z) -> std::optional<Elem> { return z; }};
}

Pfn1 s1_left() {
  return {[](const Elem& z) -> std::optional<Elem> { return left1(z); }};
}

Pfn1 s1_right() {
  return {[](const Elem& z) -> std::optional<Elem> { return right1(z); }};
}

Pfn1 s1_const(const Elem& c) {
  return {[c](const Elem&) -> std::optional<Elem> { return c; }};
}

Pfn1 s1_true() { return s1_const(pair_elem(atom(), atom())); }
Pfn1 s1_false() { return s1_const(atom()); }

Pfn1 s1_undefined() {
  return {[](const Elem&) -> std::optional<Elem> { return std::nullopt; }};
}

Pfn1 s1_compose(const Pfn1& f, const Pfn1& g) {
  return {[f, g](const Elem& z) -> std::optional<Elem> {
    auto u = g(z);
    if (!u) return std::nullopt;
    return f(*u);
  }};
}

Pfn1 s1_pi(const Pfn1& f, const Pfn1& g) {
  return {[f, g](const Elem& z) -> std::optional<Elem> {
    auto u = f(z);
    if (!u) return std::nullopt;
    auto v = g(z);
    if (!v) return std::nullopt;
    return pair_elem(*u, *v);
  }};
}

Pfn1 s1_sigma(const Pfn1& c, const Pfn1& f, const Pfn1& g) {
  return {[c, f, g](const Elem& z) -> std::optional<Elem> {
    auto t = c(z);
    if (!t) return std::nullopt;
    return is_pair(*t) ? f(z) : g(z);
  }};
}

std::optional<Elem> s1_iter_apply(const Pfn1& s, const Pfn1& c, const Elem& z,
                                  FuelBudget& fuel, const IterObserver* obs) {
  Elem u = z;
  for (;;) {
    auto t = c(u);
    if (obs && obs->on_step1) obs->on_step1(u, t);
    if (!t) return std::nullopt;
    if (is_basic(*t)) return u;
    fuel.spend("single-valued iteration");
    auto next = s(u);
    if (!next) return std::nullopt;
    u = *next;
  }
}

Pfn1 s1_iter(const Pfn1& s, const Pfn1& c, std::uint64_t fuel) {
  return {[s, c, fuel](const Elem& z) -> std::optional<Elem> {
    FuelBudget budget{fuel};
    return s1_iter_apply(s, c, z, budget);
  }};
}

// ---- multi-valued space ----

Mfn2 s2_identity() {
  return {[](const Elem& z) -> std::optional<ElemSet> { return ElemSet{z}; }};
}

Mfn2 s2_left() {
  return {[](const Elem& z) -> std::optional<ElemSet> {
    return ElemSet{left1(z)};
  }};
}

Mfn2 s2_right() {
  return {[](const Elem& z) -> std::optional<ElemSet> {
    return ElemSet{right1(z)};
  }};
}

Mfn2 s2_const(const Elem& c) {
  return {[c](const Elem&) -> std::optional<ElemSet> { return ElemSet{c}; }};
}

Mfn2 s2_const_set(const ElemSet& s) {
  return {[s](const Elem&) -> std::optional<ElemSet> { return s; }};
}

Mfn2 s2_true() { return s2_const(pair_elem(atom(), atom())); }
Mfn2 s2_false() { return s2_const(atom()); }

Mfn2 s2_undefined() {
  return {[](const Elem&) -> std::optional<ElemSet> { return std::nullopt; }};
}

Mfn2 s2_compose(const Mfn2& f, const Mfn2& g) {
  return {[f, g](const Elem& z) -> std::optional<ElemSet> {
    auto us = g(z);
    if (!us) return std::nullopt;
    ElemSet out;
    for (const auto& u : *us) {
      auto vs = f(u);
      if (!vs) return std::nullopt;  // weak composition: g(z) ⊆ dom f required
      out = out.empty() ? *vs : set_union(out, *vs);
    }
    return out;
  }};
}

Mfn2 s2_pi(const Mfn2& f, const Mfn2& g) {
  return {[f, g](const Elem& z) -> std::optional<ElemSet> {
    auto us = f(z);
    if (!us) return std::nullopt;
    auto vs = g(z);
    if (!vs) return std::nullopt;
    ElemSet out;
    out.reserve(us->size() * vs->size());
    for (const auto& u : *us)
      for (const auto& v : *vs) set_insert(out, pair_elem(u, v));
    return out;
  }};
}

Mfn2 s2_sigma(const Mfn2& c, const Mfn2& f, const Mfn2& g) {
  return {[c, f, g](const Elem& z) -> std::optional<ElemSet> {
    auto ts = c(z);
    if (!ts) return std::nullopt;
    bool pick_f = set_has_pair(*ts);
    bool pick_g = set_has_basic(*ts);
    // Conjunctive domain: every selected branch must be defined at z.
    std::optional<ElemSet> fv, gv;
    if (pick_f) {
      fv = f(z);
      if (!fv) return std::nullopt;
    }
    if (pick_g) {
      gv = g(z);
      if (!gv) return std::nullopt;
    }
    if (fv && gv) return set_union(*fv, *gv);
    if (fv) return fv;
    return gv;
  }};
}

S2IterOutcome s2_iter_explore(const Mfn2& s, const Mfn2& c, const Elem& z,
                              FuelBudget& fuel, const IterObserver* obs) {
  // Breadth-first exploration of the path tree.  Nodes are path positions:
  // repeated elements are processed again (their subtrees are part of the
  // tree), so the total node count is a property of the tree alone and any
  // two full explorations within the same budget classify identically.
  S2IterOutcome out;
  ElemSet stops;
  std::optional<Elem> violation;
  std::deque<Elem> queue{z};
  while (!queue.empty()) {
    Elem u = queue.front();
    queue.pop_front();
    fuel.spend("multi-valued iteration");
    auto ts = c(u);
    if (obs && obs->on_step2) obs->on_step2(u, ts);
    if (!ts) {
      if (!violation) violation = u;
      continue;  // leaf: control undefined here
    }
    if (set_has_basic(*ts)) set_insert(stops, u);
    if (set_has_pair(*ts)) {
      auto next = s(u);
      if (!next) {
        if (!violation) violation = u;
        continue;  // leaf: step required but undefined
      }
      for (const auto& v : *next) queue.push_back(v);
    }
  }
  if (violation) {
    out.violation = violation;
    return out;
  }
  assert(!stops.empty());
  out.value = std::move(stops);
  return out;
}

std::optional<ElemSet> s2_iter_apply(const Mfn2& s, const Mfn2& c, const Elem& z,
                                     FuelBudget& fuel, const IterObserver* obs) {
  auto outcome = s2_iter_explore(s, c, z, fuel, obs);
  if (outcome.violation) return std::nullopt;
  return outcome.value;
}

Mfn2 s2_iter(const Mfn2& s, const Mfn2& c, std::uint64_t fuel) {
  return {[s, c, fuel](const Elem& z) -> std::optional<ElemSet> {
    FuelBudget budget{fuel};
    auto outcome = s2_iter_explore(s, c, z, budget);
    if (outcome.violation)
      throw RegularityViolationError(print_elem(*outcome.violation));
    return outcome.value;
  }};
}

// ---- embedding ----

Mfn2 embed(const Pfn1& f) {
  return {[f](const Elem& z) -> std::optional<ElemSet> {
    auto v = f(z);
    if (!v) return std::nullopt;
    return ElemSet{*v};
  }};
}

// ---- finite-carrier comparisons ----

Eval1 eval1(const Pfn1& f, const Elem& z) {
  try {
    auto v = f(z);
    if (!v) return {EvalStatus::Undefined, nullptr};
    return {EvalStatus::Value, *v};
  } catch (const FuelExhaustedError&) {
    return {EvalStatus::Fuel, nullptr};
  } catch (const RegularityViolationError&) {
    return {EvalStatus::Undefined, nullptr};
  }
}

Eval2 eval2(const Mfn2& f, const Elem& z) {
  try {
    auto v = f(z);
    if (!v) return {EvalStatus::Undefined, {}};
    return {EvalStatus::Value, *v};
  } catch (const FuelExhaustedError&) {
    return {EvalStatus::Fuel, {}};
  } catch (const RegularityViolationError&) {
    return {EvalStatus::Undefined, {}};
  }
}

namespace {

std::string describe1(const Eval1& e) {
  switch (e.status) {
    case EvalStatus::Value: return print_elem(e.value);
    case EvalStatus::Undefined: return "undefined";
    case EvalStatus::Fuel: return "fuel-exhausted";
  }
  return "";
}

std::string describe2(const Eval2& e) {
  switch (e.status) {
    case EvalStatus::Value: return print_elem_set(e.value);
    case EvalStatus::Undefined: return "undefined";
    case EvalStatus::Fuel: return "fuel-exhausted";
  }
  return "";
}

}  // namespace

bool s1_graph_eq(const Pfn1& f, const Pfn1& g, const std::vector<Elem>& carrier,
                 std::string* where) {
  for (const auto& z : carrier) {
    Eval1 a = eval1(f, z), b = eval1(g, z);
    bool same = a.status == b.status &&
                (a.status != EvalStatus::Value || a.value.get() == b.value.get());
    if (!same) {
      if (where)
        *where = "at " + print_elem(z) + ": " + describe1(a) + " vs " + describe1(b);
      return false;
    }
  }
  return true;
}

bool s2_graph_eq(const Mfn2& f, const Mfn2& g, const std::vector<Elem>& carrier,
                 std::string* where) {
  for (const auto& z : carrier) {
    Eval2 a = eval2(f, z), b = eval2(g, z);
    bool same = a.status == b.status &&
                (a.status != EvalStatus::Value || set_eq(a.value, b.value));
    if (!same) {
      if (where)
        *where = "at " + print_elem(z) + ": " + describe2(a) + " vs " + describe2(b);
      return false;
    }
  }
  return true;
}

bool s1_extends(const Pfn1& f, const Pfn1& g, const std::vector<Elem>& carrier,
                std::string* where) {
  for (const auto& z : carrier) {
    Eval1 b = eval1(g, z);
    if (b.status == EvalStatus::Undefined) continue;
    Eval1 a = eval1(f, z);
    bool ok = b.status == EvalStatus::Value && a.status == EvalStatus::Value &&
              a.value.get() == b.value.get();
    if (!ok) {
      if (where)
        *where = "at " + print_elem(z) + ": " + describe1(a) + " vs " + describe1(b);
      return false;
    }
  }
  return true;
}

bool s2_extends(const Mfn2& f, const Mfn2& g, const std::vector<Elem>& carrier,
                std::string* where) {
  for (const auto& z : carrier) {
    Eval2 b = eval2(g, z);
    if (b.status == EvalStatus::Undefined) continue;
    Eval2 a = eval2(f, z);
    bool ok = b.status == EvalStatus::Value && a.status == EvalStatus::Value &&
              set_subset(a.value, b.value);
    if (!ok) {
      if (where)
        *where = "at " + print_elem(z) + ": " + describe2(a) + " vs " + describe2(b);
      return false;
    }
  }
  return true;
}

}  // namespace moschext
