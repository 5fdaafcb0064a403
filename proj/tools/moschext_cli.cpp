// moschext — command-line front end for the extended-space library.
//
//   moschext eval  --space s1 --term "iter(s,F)" --input "#3"
//   moschext name  --input "(o,`1/2`)" --prec 8
//   moschext real  --example rec2 --x -3 --prec 20
//   moschext check --suite axioms --cases 500 --seed 7
//
// Exit codes: 0 success; 1 undefined result, exhausted fuel, or a failed
// check suite; 2 usage errors (bad flags, bad syntax, unknown symbols).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "moschext/elem.hpp"
#include "moschext/errors.hpp"
#include "moschext/interval.hpp"
#include "moschext/name.hpp"
#include "moschext/rational.hpp"
#include "moschext/realizer.hpp"
#include "moschext/reals.hpp"
#include "moschext/registry.hpp"
#include "moschext/space.hpp"
#include "moschext/term.hpp"

#include "support/axioms.hpp"
#include "support/reduct.hpp"
#include "support/termgen.hpp"
#include "support/universe.hpp"

namespace {

using namespace moschext;
using nlohmann::ordered_json;

struct Options {
  std::string space = "s1";
  std::string term_text;
  std::string term_file;
  std::string input = "o";
  std::uint64_t fuel = 10000;  // resolved: flag > MOSCHEXT_FUEL > default
  std::uint64_t fuel_flag = 0;
  bool fuel_given = false;
  std::uint32_t prec = 20;
  std::uint64_t seed = 0;
  std::uint32_t cases = 100;
  bool json = false;
  bool trace = false;
  bool list_symbols = false;
  bool realizer = false;
  std::string example;       // real: rec1 | rec2 | join
  std::string x_text;        // real/name: rational argument
  std::string force_branch;  // real --example rec2: first | second
  std::string suite = "axioms";
};

enum class RunStatus { Ok, Undefined, Fuel };

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// Single exit point for evaluation-style commands: emits either the stable
// JSON object {"result", "steps", "status"} or a plain line, and maps the
// status to the exit code (0 ok, 1 undefined/fuel).
int finish(const Options& o, RunStatus st,
           const std::optional<std::string>& result, std::uint64_t steps,
           const std::string& detail = "") {
  const char* status = st == RunStatus::Ok          ? "ok"
                       : st == RunStatus::Undefined ? "undefined"
                                                    : "fuel";
  if (!detail.empty()) std::cerr << detail << "\n";
  if (o.json) {
    ordered_json j;
    if (result)
      j["result"] = *result;
    else
      j["result"] = nullptr;
    j["steps"] = steps;
    j["status"] = status;
    std::cout << j.dump() << "\n";
  } else {
    switch (st) {
      case RunStatus::Ok:
        std::cout << (result ? *result : std::string()) << "\n";
        break;
      case RunStatus::Undefined:
        std::cout << "undefined\n";
        break;
      case RunStatus::Fuel:
        std::cout << "fuel exhausted after " << steps << " steps\n";
        break;
    }
  }
  return st == RunStatus::Ok ? 0 : 1;
}

// ---- shared input plumbing -------------------------------------------------

// Base namer accepting both kinds of base point: abstract indices name
// themselves, rational points name their enumeration index.
Name any_base_namer(const Elem& b) {
  if (std::holds_alternative<Rat>(b->base))
    return name_const(rat_index(std::get<Rat>(b->base)));
  return name_const(Int(std::get<std::uint32_t>(b->base)));
}

bool elem_has_abstract_base(const Elem& z) {
  switch (z->kind) {
    case ElemKind::Atom:
      return false;
    case ElemKind::Base:
      return std::holds_alternative<std::uint32_t>(z->base);
    case ElemKind::Pair:
      return elem_has_abstract_base(z->left) || elem_has_abstract_base(z->right);
  }
  return false;
}

// ---- list-symbols ----------------------------------------------------------

int cmd_list_symbols(const Options& o) {
  const auto& table = registry_symbol_table();
  if (o.json) {
    ordered_json rows = ordered_json::array();
    for (const auto& s : table) {
      ordered_json r;
      r["name"] = s.name;
      r["spaces"] = s.in_s1 && s.in_s2 ? "s1,s2" : (s.in_s1 ? "s1" : "s2");
      r["summary"] = s.summary;
      rows.push_back(r);
    }
    ordered_json j;
    j["result"] = rows;
    j["steps"] = table.size();
    j["status"] = "ok";
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& s : table) {
      std::ostringstream line;
      line << s.name;
      for (std::size_t k = s.name.size(); k < 13; ++k) line << ' ';
      line << (s.in_s1 && s.in_s2 ? "s1,s2" : (s.in_s1 ? "s1   " : "s2   "))
           << "  " << s.summary;
      std::cout << line.str() << "\n";
    }
  }
  return 0;
}

// ---- eval ------------------------------------------------------------------

int eval_realized(const Options& o, const TermPtr& t, const Elem& z) {
  if (o.space != "s1")
    return usage_error("--realizer evaluates in the single-valued space only "
                       "(use --space s1)");
  if (elem_has_abstract_base(z))
    return usage_error("--realizer inputs may use rational base points only "
                       "(`1/2` style); abstract points `x0`, `x1` have no "
                       "canonical decoding");
  Realizer rz;
  try {
    rz = term_to_realizer(t, o.fuel);
  } catch (const UnknownSymbolError& e) {
    return usage_error(e.what());
  }
  if (o.trace)
    std::cerr << "trace: realized evaluation has no step trace\n";
  const Name in = name_of_elem(z, any_base_namer);
  const auto decode_base = [](const Name& q) -> Elem {
    return base_elem(rat_enum(name_at(q, 0)));
  };
  try {
    const Name out = rz(in);
    const Elem res = name_decode_elem(out, decode_base, 64);
    return finish(o, RunStatus::Ok, print_elem(res), name_query_count(in));
  } catch (const FuelExhaustedError& e) {
    return finish(o, RunStatus::Fuel, std::nullopt, e.steps());
  } catch (const MalformedNameError& e) {
    return finish(o, RunStatus::Undefined, std::nullopt, name_query_count(in),
                  std::string("malformed output name: ") + e.what());
  }
}

int cmd_eval(const Options& o) {
  if (!o.term_text.empty() && !o.term_file.empty())
    return usage_error("--term and --term-file are mutually exclusive");
  std::string text = o.term_text;
  if (!o.term_file.empty()) {
    std::ifstream in(o.term_file);
    if (!in) return usage_error("cannot read term file: " + o.term_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty())
    return usage_error("eval needs a term: --term EXPR or --term-file PATH");

  TermPtr t;
  Elem z;
  try {
    t = parse_term(text);
  } catch (const SyntaxError& e) {
    return usage_error(std::string("bad term: ") + e.what());
  }
  try {
    z = parse_elem(o.input);
  } catch (const SyntaxError& e) {
    return usage_error(std::string("bad input element: ") + e.what());
  }

  if (o.realizer) return eval_realized(o, t, z);

  const Registry reg = default_registry();
  IterObserver obs;
  const IterObserver* obsp = nullptr;
  if (o.trace) {
    obs.on_step1 = [](const Elem& u, const std::optional<Elem>& control) {
      std::cerr << "[iter] u=" << print_elem(u) << " control=";
      if (!control)
        std::cerr << "undefined";
      else
        std::cerr << print_elem(*control)
                  << (is_pair(*control) ? " (pair: continue)"
                                        : " (basic: stop)");
      std::cerr << "\n";
    };
    obs.on_step2 = [](const Elem& u, const std::optional<ElemSet>& control) {
      std::cerr << "[tree] u=" << print_elem(u) << " control=";
      if (!control)
        std::cerr << "undefined";
      else
        std::cerr << print_elem_set(*control);
      std::cerr << "\n";
    };
    obsp = &obs;
  }

  std::uint64_t steps = 0;
  try {
    if (o.space == "s1") {
      const auto r = eval_term_s1(t, reg, z, o.fuel, obsp, &steps);
      if (!r) return finish(o, RunStatus::Undefined, std::nullopt, steps);
      return finish(o, RunStatus::Ok, print_elem(*r), steps);
    }
    const auto r = eval_term_s2(t, reg, z, o.fuel, obsp, &steps);
    if (!r) return finish(o, RunStatus::Undefined, std::nullopt, steps);
    return finish(o, RunStatus::Ok, print_elem_set(*r), steps);
  } catch (const UnknownSymbolError& e) {
    return usage_error(e.what());
  } catch (const RegularityViolationError& e) {
    return finish(o, RunStatus::Undefined, std::nullopt, steps, e.what());
  } catch (const FuelExhaustedError& e) {
    return finish(o, RunStatus::Fuel, std::nullopt, e.steps());
  }
}

// ---- name ------------------------------------------------------------------

int cmd_name(const Options& o, bool x_given) {
  Name nm;
  try {
    if (x_given) {
      nm = tagged_real_name(real_name_of_rational(parse_rational(o.x_text)));
    } else {
      nm = name_of_elem(parse_elem(o.input), any_base_namer);
    }
  } catch (const SyntaxError& e) {
    return usage_error(std::string("bad argument: ") + e.what());
  }
  std::ostringstream out;
  for (std::uint32_t k = 0; k < o.prec; ++k) {
    if (k) out << ' ';
    out << name_at(nm, k).str();
  }
  return finish(o, RunStatus::Ok, out.str(), o.prec);
}

// ---- real ------------------------------------------------------------------

int cmd_real(const Options& o, bool x_given) {
  if (o.example.empty())
    return usage_error("real needs --example rec1|rec2|join");
  if (o.example != "rec1" && o.example != "rec2" && o.example != "join")
    return usage_error("unknown --example \"" + o.example +
                       "\" (expected rec1, rec2 or join)");
  if (!x_given) return usage_error("real needs --x RATIONAL");
  Rat x;
  try {
    x = parse_rational(o.x_text);
  } catch (const SyntaxError& e) {
    return usage_error(std::string("bad --x: ") + e.what());
  }
  std::optional<bool> force;
  if (!o.force_branch.empty()) {
    if (o.example != "rec2")
      return usage_error("--force-branch applies to --example rec2 only");
    if (o.realizer)
      return usage_error("--force-branch is unavailable with --realizer");
    if (o.force_branch == "first")
      force = true;
    else if (o.force_branch == "second")
      force = false;
    else
      return usage_error("--force-branch expects first or second");
  }

  try {
    if (o.example == "join") {
      const IntervalFn joined =
          join_functions(demo_alpha(), demo_alpha_shift1(), Rat(0));
      const Rat v = interval_eval_at(joined, x, o.prec);
      return finish(o, RunStatus::Ok, print_rational(v), 0);
    }
    if (o.realizer) {
      const Realizer rz =
          o.example == "rec1"
              ? rec1_realizer(demo_alpha(), demo_beta_add(), Rat(0), o.fuel)
              : rec2_realizer(demo_alpha(), demo_beta_add(), Rat(0), o.fuel);
      const Name in = tagged_real_name(real_name_of_rational(x));
      const Rat v = read_real_approx(rz(in), o.prec);
      return finish(o, RunStatus::Ok, print_rational(v), name_query_count(in));
    }
    const RecResult r =
        o.example == "rec1"
            ? rec1_eval(demo_alpha(), demo_beta_add(), Rat(0), x, o.prec,
                        o.fuel)
            : rec2_eval(demo_alpha(), demo_beta_add(), Rat(0), x, o.prec,
                        o.fuel, force);
    return finish(o, RunStatus::Ok, print_rational(r.value), r.loop_count);
  } catch (const FuelExhaustedError& e) {
    return finish(o, RunStatus::Fuel, std::nullopt, e.steps());
  } catch (const DomainViolationError& e) {
    return finish(o, RunStatus::Undefined, std::nullopt, 0, e.what());
  } catch (const JoinMismatchError& e) {
    return finish(o, RunStatus::Undefined, std::nullopt, 0, e.what());
  } catch (const MalformedNameError& e) {
    return finish(o, RunStatus::Undefined, std::nullopt, 0, e.what());
  }
}

// ---- check -----------------------------------------------------------------

struct SuiteOutcome {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::string first_failure;
  std::vector<std::string> lines;  // per-law / per-section detail

  void fail(const std::string& where) {
    ++failed;
    if (first_failure.empty()) first_failure = where;
  }
};

void law_lines(SuiteOutcome& out, const char* label,
               const moschext::testing::LawReport& r) {
  out.lines.push_back(std::string(label) + " (" + std::to_string(r.instances) +
                      " instances):");
  for (const auto& [law, cnt] : r.by_law) {
    out.checked += cnt.checked;
    out.lines.push_back("  " + law + ": " +
                        std::to_string(cnt.checked - cnt.failed) + "/" +
                        std::to_string(cnt.checked) + " passed");
  }
  if (r.failures > 0) {
    out.failed += r.failures;
    if (out.first_failure.empty()) out.first_failure = r.first_failure;
  }
}

SuiteOutcome run_suite_axioms(const Options& o) {
  SuiteOutcome out;
  const auto& u = moschext::testing::universe3();
  law_lines(out, "single-valued laws",
            moschext::testing::check_laws_s1(u, o.seed, o.cases));
  law_lines(out, "multi-valued laws",
            moschext::testing::check_laws_s2(u, o.seed + 1, o.cases));
  return out;
}

SuiteOutcome run_suite_sigma(const Options& o) {
  // Branching equals its iteration/pairing reduction pointwise on the whole
  // finite carrier, for random triples.
  SuiteOutcome out;
  const auto& u = moschext::testing::universe3();
  std::mt19937_64 rng(o.seed);
  for (std::uint32_t i = 0; i < o.cases; ++i) {
    const Pfn1 c = moschext::testing::hash_pfn1(u, rng());
    const Pfn1 f = moschext::testing::hash_pfn1(u, rng());
    const Pfn1 g = moschext::testing::hash_pfn1(u, rng());
    std::string where;
    ++out.checked;
    if (!s1_graph_eq(s1_sigma(c, f, g), moschext::testing::sigma_reduct(c, f, g),
                     u.elems, &where))
      out.fail("triple " + std::to_string(i) + ": " + where);
  }
  out.lines.push_back("branch-vs-reduction: " +
                      std::to_string(out.checked - out.failed) + "/" +
                      std::to_string(out.checked) +
                      " triples agree on the full carrier");
  return out;
}

// Independent single-valued iteration oracle sharing the budget contract of
// the evaluator: one unit per step application, exhaustion checked before
// the step.
struct S1OracleOutcome {
  bool fuel_exhausted = false;
  std::optional<Elem> value;
};

S1OracleOutcome s1_iter_oracle(const Pfn1& s, const Pfn1& c, Elem u,
                               std::uint64_t budget) {
  for (;;) {
    const auto control = c(u);
    if (!control) return {false, std::nullopt};
    if (is_basic(*control)) return {false, u};
    if (budget == 0) return {true, std::nullopt};
    --budget;
    const auto next = s(u);
    if (!next) return {false, std::nullopt};
    u = *next;
  }
}

SuiteOutcome run_suite_iteration(const Options& o) {
  SuiteOutcome out;
  const auto& u = moschext::testing::universe3();
  std::mt19937_64 rng(o.seed);
  std::uint64_t ok1 = 0, ok2 = 0;
  for (std::uint32_t i = 0; i < o.cases; ++i) {
    {
      const Pfn1 s = moschext::testing::hash_pfn1(u, rng());
      const Pfn1 c = moschext::testing::hash_pfn1(u, rng());
      const Elem z = u.elems[rng() % u.elems.size()];
      bool lib_fuel = false;
      std::optional<Elem> lib;
      try {
        FuelBudget b{o.fuel};
        lib = s1_iter_apply(s, c, z, b);
      } catch (const FuelExhaustedError&) {
        lib_fuel = true;
      }
      const S1OracleOutcome ora = s1_iter_oracle(s, c, z, o.fuel);
      ++out.checked;
      const bool same = lib_fuel == ora.fuel_exhausted &&
                        lib.has_value() == ora.value.has_value() &&
                        (!lib || *lib == *ora.value);
      if (same)
        ++ok1;
      else
        out.fail("s1 case " + std::to_string(i) + " at " + print_elem(z));
    }
    {
      const Mfn2 s = moschext::testing::hash_mfn2(u, rng());
      const Mfn2 c = moschext::testing::hash_mfn2(u, rng());
      const Elem z = u.elems[rng() % u.elems.size()];
      bool lib_fuel = false;
      std::optional<ElemSet> lib;
      try {
        FuelBudget b{o.fuel};
        lib = s2_iter_apply(s, c, z, b);
      } catch (const FuelExhaustedError&) {
        lib_fuel = true;
      }
      const auto ora = moschext::testing::s2_iter_oracle(s, c, z, o.fuel);
      ++out.checked;
      const bool same = lib_fuel == ora.fuel_exhausted &&
                        lib.has_value() == ora.value.has_value() &&
                        (!lib || set_eq(*lib, *ora.value));
      if (same)
        ++ok2;
      else
        out.fail("s2 case " + std::to_string(i) + " at " + print_elem(z));
    }
  }
  out.lines.push_back("single-valued loop vs oracle: " + std::to_string(ok1) +
                      "/" + std::to_string(o.cases) + " agree");
  out.lines.push_back("multi-valued tree vs oracle:  " + std::to_string(ok2) +
                      "/" + std::to_string(o.cases) + " agree");
  return out;
}

SuiteOutcome run_suite_embed(const Options& o) {
  SuiteOutcome out;
  const auto& u = moschext::testing::universe3();
  std::mt19937_64 rng(o.seed);
  // Large enough that exhaustion means true divergence for both loop styles,
  // so the classifications line up exactly.
  const std::uint64_t efuel =
      std::max<std::uint64_t>(o.fuel, u.elems.size() + 2);
  const auto classify = [](const Mfn2& m,
                           const Elem& z) -> std::pair<int, ElemSet> {
    try {
      const auto v = m(z);
      if (!v) return {1, {}};
      return {0, *v};
    } catch (const RegularityViolationError&) {
      return {1, {}};
    } catch (const FuelExhaustedError&) {
      return {2, {}};
    }
  };
  std::uint64_t ok = 0;
  for (std::uint32_t i = 0; i < o.cases; ++i) {
    const Pfn1 f = moschext::testing::hash_pfn1(u, rng());
    const Pfn1 g = moschext::testing::hash_pfn1(u, rng());
    const Pfn1 h = moschext::testing::hash_pfn1(u, rng());
    Mfn2 lhs, rhs;
    const char* kind = "";
    switch (rng() % 4) {
      case 0:
        kind = "compose";
        lhs = embed(s1_compose(f, g));
        rhs = s2_compose(embed(f), embed(g));
        break;
      case 1:
        kind = "pair";
        lhs = embed(s1_pi(f, g));
        rhs = s2_pi(embed(f), embed(g));
        break;
      case 2:
        kind = "branch";
        lhs = embed(s1_sigma(h, f, g));
        rhs = s2_sigma(embed(h), embed(f), embed(g));
        break;
      default:
        kind = "iterate";
        lhs = embed(s1_iter(f, g, efuel));
        rhs = s2_iter(embed(f), embed(g), efuel);
        break;
    }
    bool same = true;
    for (int k = 0; k < 32 && same; ++k) {
      const Elem z = u.elems[rng() % u.elems.size()];
      const auto a = classify(lhs, z);
      const auto b = classify(rhs, z);
      same = a.first == b.first &&
             (a.first != 0 || set_eq(a.second, b.second));
      if (!same)
        out.fail(std::string(kind) + " case " + std::to_string(i) + " at " +
                 print_elem(z));
    }
    ++out.checked;
    if (same) ++ok;
  }
  out.lines.push_back("embedding commutes with the combinators: " +
                      std::to_string(ok) + "/" + std::to_string(o.cases) +
                      " cases");
  return out;
}

SuiteOutcome run_suite_realizers(const Options& o) {
  // Random structural terms, evaluated once denotationally and once through
  // their realizer on the input's name; the decoded output must match.
  // Cases whose denotational run exhausts the shared budget are skipped:
  // completing within it guarantees every realized loop fits its own bound.
  SuiteOutcome out;
  const auto& u = moschext::testing::universe3();
  const Registry reg = default_registry();
  std::mt19937_64 rng(o.seed);
  std::uint64_t attempts = 0;
  const std::uint64_t cap = static_cast<std::uint64_t>(o.cases) * 50 + 100;
  while (out.checked < o.cases && attempts < cap) {
    ++attempts;
    const TermPtr t = moschext::testing::random_structural_term(rng, 4);
    const Elem z = u.elems[rng() % u.elems.size()];
    std::optional<Elem> denot;
    try {
      denot = eval_term_s1(t, reg, z, o.fuel);
    } catch (const FuelExhaustedError&) {
      ++out.skipped;
      continue;
    }
    if (!denot) {
      ++out.skipped;  // structural terms are total; defensive only
      continue;
    }
    ++out.checked;
    try {
      const Name in = name_of_elem(z, moschext::testing::two_point_namer);
      const Elem dec = name_decode_elem(term_to_realizer(t, o.fuel)(in),
                                        moschext::testing::two_point_decode,
                                        64);
      if (!(dec == *denot))
        out.fail("term " + print_term(t) + " at " + print_elem(z) +
                 ": decoded " + print_elem(dec) + ", expected " +
                 print_elem(*denot));
    } catch (const std::exception& e) {
      out.fail("term " + print_term(t) + " at " + print_elem(z) + ": " +
               e.what());
    }
  }
  if (out.checked < o.cases)
    out.fail("assembled only " + std::to_string(out.checked) + " of " +
             std::to_string(o.cases) + " realizer cases");
  out.lines.push_back("realized vs denotational: " +
                      std::to_string(out.checked - out.failed) + "/" +
                      std::to_string(out.checked) + " agree (" +
                      std::to_string(out.skipped) + " fuel-bound skips)");
  return out;
}

int cmd_check(const Options& o) {
  SuiteOutcome out;
  if (o.suite == "axioms")
    out = run_suite_axioms(o);
  else if (o.suite == "sigma")
    out = run_suite_sigma(o);
  else if (o.suite == "iteration")
    out = run_suite_iteration(o);
  else if (o.suite == "embed")
    out = run_suite_embed(o);
  else if (o.suite == "realizers")
    out = run_suite_realizers(o);
  else
    return usage_error("unknown --suite \"" + o.suite +
                       "\" (expected axioms, sigma, iteration, embed or "
                       "realizers)");

  const bool pass = out.failed == 0;
  // Detail lines: stdout in plain mode, stderr in JSON mode (stdout stays a
  // single machine-readable object).
  std::ostream& detail = o.json ? std::cerr : std::cout;
  for (const auto& line : out.lines) detail << line << "\n";
  if (!pass) detail << "first failure: " << out.first_failure << "\n";
  if (o.json) {
    ordered_json j;
    j["result"] = pass ? "pass" : "fail";
    j["steps"] = out.checked;
    j["status"] = "ok";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (pass ? "pass" : "fail") << " (" << out.checked
              << " checks)\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;

  CLI::App app{
      "moschext — evaluate terms over the extended datatype, inspect "
      "names, run exact-real recursion demos, and check the library "
      "against its laws"};
  app.require_subcommand(0, 1);

  app.add_option("--space", o.space, "Combinatory space: s1 or s2")
      ->check(CLI::IsMember({"s1", "s2"}))
      ->capture_default_str();
  app.add_option("--term", o.term_text, "Term expression to evaluate");
  app.add_option("--term-file", o.term_file, "Read the term from a file");
  app.add_option("--input", o.input,
                 "Input element, e.g. o, #3, (o,#1), `1/2`, `x0`")
      ->capture_default_str();
  auto* fuel_opt =
      app.add_option("--fuel", o.fuel_flag,
                     "Iteration budget (default 10000; MOSCHEXT_FUEL "
                     "overrides the default)");
  app.add_option("--prec", o.prec,
                 "Precision: 2^-prec error bound / name prefix length")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed for check suites")
      ->capture_default_str();
  app.add_option("--cases", o.cases, "Number of random cases per check suite")
      ->capture_default_str();
  app.add_flag("--json", o.json,
               "Emit one JSON object: {\"result\", \"steps\", \"status\"}");
  app.add_flag("--trace", o.trace, "Trace iteration steps to stderr");
  app.add_flag("--list-symbols", o.list_symbols,
               "List the compiled-in registry symbols and exit");

  auto* eval = app.add_subcommand("eval", "Evaluate a term at an element");
  eval->add_flag("--realizer", o.realizer,
                 "Run the term's realizer on the input's name instead of "
                 "evaluating denotationally (s1 only)");

  auto* name = app.add_subcommand(
      "name", "Print a prefix of an element's (or real number's) name");
  bool name_x_given = false;
  auto* name_x = name->add_option(
      "--x", o.x_text, "Rational: print its tagged real-number name");

  auto* real = app.add_subcommand("real", "Exact-real recursion demos");
  real->add_option("--example", o.example, "rec1 | rec2 | join");
  auto* real_x =
      real->add_option("--x", o.x_text, "Rational argument of the demo");
  real->add_option("--force-branch", o.force_branch,
                   "rec2 only: force the top-level branch (first | second)");
  real->add_flag("--realizer", o.realizer,
                 "Drive the demo through its realizer (rec1/rec2)");

  auto* check =
      app.add_subcommand("check", "Run a randomized law/consistency suite");
  check->add_option("--suite", o.suite,
                    "axioms | sigma | iteration | embed | realizers")
      ->capture_default_str();

  for (auto* sc : {eval, name, real, check}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Fuel: flag beats MOSCHEXT_FUEL beats the built-in default.
  o.fuel_given = fuel_opt->count() > 0;
  if (const char* env = std::getenv("MOSCHEXT_FUEL")) {
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      return usage_error("MOSCHEXT_FUEL must be a positive integer, got \"" +
                         s + "\"");
    try {
      const unsigned long long v = std::stoull(s);
      if (v == 0) return usage_error("MOSCHEXT_FUEL must be at least 1");
      o.fuel = v;
    } catch (const std::exception&) {
      return usage_error("MOSCHEXT_FUEL is out of range: \"" + s + "\"");
    }
  }
  if (o.fuel_given) o.fuel = o.fuel_flag;
  if (o.fuel < 1) return usage_error("--fuel must be at least 1");
  if (o.prec < 1) return usage_error("--prec must be at least 1");
  if (o.cases < 1) return usage_error("--cases must be at least 1");

  name_x_given = name_x->count() > 0;
  const bool real_x_given = real_x->count() > 0;

  if (o.list_symbols) return cmd_list_symbols(o);

  try {
    if (app.got_subcommand(eval)) return cmd_eval(o);
    if (app.got_subcommand(name)) return cmd_name(o, name_x_given);
    if (app.got_subcommand(real)) return cmd_real(o, real_x_given);
    if (app.got_subcommand(check)) return cmd_check(o);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << app.help();
  return 2;
}
