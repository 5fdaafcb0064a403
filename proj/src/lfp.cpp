#include "moschext/lfp.hpp"

#include "moschext/errors.hpp"

namespace moschext {

Pfn1 table_to_pfn1(std::shared_ptr<const Table1> t) {
  return {[t](const Elem& z) -> std::optional<Elem> {
    auto it = t->find(z.get());
    if (it == t->end()) return std::nullopt;
    return it->second;
  }};
}

Mfn2 table_to_mfn2(std::shared_ptr<const Table2> t) {
  return {[t](const Elem& z) -> std::optional<ElemSet> {
    auto it = t->find(z.get());
    if (it == t->end()) return std::nullopt;
    return it->second;
  }};
}

namespace {

bool tables_eq(const Table1& a, const Table1& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second.get() != v.get()) return false;
  }
  return true;
}

bool tables_eq(const Table2& a, const Table2& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || !set_eq(it->second, v)) return false;
  }
  return true;
}

}  // namespace

LfpResult1 lfp_system_s1(const std::vector<TermPtr>& gammas,
                         const std::vector<std::string>& unknowns,
                         const Registry& base_registry,
                         const std::vector<Elem>& carrier,
                         std::uint64_t eval_fuel, std::uint32_t round_fuel) {
  const std::size_t n = gammas.size();
  std::vector<Table1> current(n);
  LfpResult1 result;
  for (std::uint32_t round = 0;; ++round) {
    if (round >= round_fuel)
      throw FuelExhaustedError("fixed-point rounds (single-valued system)", round);
    Registry reg = base_registry;
    for (std::size_t i = 0; i < n; ++i) {
      auto snapshot = std::make_shared<const Table1>(current[i]);
      reg.s1[unknowns[i]] = table_to_pfn1(snapshot);
    }
    std::vector<Table1> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& z : carrier) {
        std::optional<Elem> v;
        try {
          v = eval_term_s1(gammas[i], reg, z, eval_fuel);
        } catch (const RegularityViolationError&) {
          v = std::nullopt;
        }
        if (v) next[i].emplace(z.get(), *v);
      }
    }
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i)
      stable = tables_eq(next[i], current[i]);
    current = std::move(next);
    if (stable) {
      result.solutions = std::move(current);
      result.rounds = round;
      return result;
    }
  }
}

LfpResult2 lfp_system_s2(const std::vector<TermPtr>& gammas,
                         const std::vector<std::string>& unknowns,
                         const Registry& base_registry,
                         const std::vector<Elem>& carrier,
                         std::uint64_t eval_fuel, std::uint32_t round_fuel) {
  const std::size_t n = gammas.size();
  std::vector<Table2> current(n);
  LfpResult2 result;
  for (std::uint32_t round = 0;; ++round) {
    if (round >= round_fuel)
      throw FuelExhaustedError("fixed-point rounds (multi-valued system)", round);
    Registry reg = base_registry;
    for (std::size_t i = 0; i < n; ++i) {
      auto snapshot = std::make_shared<const Table2>(current[i]);
      reg.s2[unknowns[i]] = table_to_mfn2(snapshot);
    }
    std::vector<Table2> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& z : carrier) {
        std::optional<ElemSet> v;
        try {
          v = eval_term_s2(gammas[i], reg, z, eval_fuel);
        } catch (const RegularityViolationError&) {
          v = std::nullopt;
        }
        if (v) next[i].emplace(z.get(), *v);
      }
    }
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i)
      stable = tables_eq(next[i], current[i]);
    current = std::move(next);
    if (stable) {
      result.solutions = std::move(current);
      result.rounds = round;
      return result;
    }
  }
}

}  // namespace moschext
