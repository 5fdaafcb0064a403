#include "moschext/reals.hpp"

#include <memory>
#include <stdexcept>

#include "moschext/errors.hpp"

namespace moschext {

namespace {

// Enclosure of the real named by a tagged name, read at refinement level t.
Ival enclosure_at(const Name& tagged, std::uint64_t t) {
  const Rat r = read_real_approx(tagged, t);
  const Rat eps = pow2_neg(t);
  return Ival{r - eps, r + eps};
}

Int tag_base_value(const Rat& q) { return 2 * alpha_rho_index(q) + 2; }

}  // namespace

Rat alpha_rho(const Int& i) { return rat_enum(i); }

Int alpha_rho_index(const Rat& q) { return rat_index(q); }

Name real_name_of_rational(const Rat& x) {
  const Int idx = alpha_rho_index(x);
  return make_name([idx](std::uint64_t) { return idx; });
}

Name real_name_from_approximations(std::function<Rat(std::uint64_t)> approx) {
  return make_name([approx = std::move(approx)](std::uint64_t k) {
    return alpha_rho_index(approx(k));
  });
}

Name tagged_real_name(const Name& q) { return name_inject_base(q); }

Rat read_real_approx(const Name& tagged, std::uint64_t k) {
  const Int& v = name_at(tagged, k);
  if (tag_of(v) != NameTag::Base) {
    throw MalformedNameError("expected a base-tagged real name value at index " +
                             std::to_string(k) + ", got " + v.str());
  }
  return alpha_rho((v - 2) / 2);
}

Name drive_interval_fn(const IntervalFn& fn, const Name& input,
                       std::uint64_t max_refine) {
  return make_name([fn, input, max_refine](std::uint64_t k) {
    const Rat target = pow2_neg(k);
    for (std::uint64_t t = k; t <= k + max_refine; ++t) {
      const Ival in = enclosure_at(input, t);
      if (fn.definitely_out && fn.definitely_out(in)) {
        throw DomainViolationError("input enclosure [" +
                                   print_rational(in.lo) + ", " +
                                   print_rational(in.hi) +
                                   "] certified outside the domain");
      }
      const Ival out = fn.image(in);
      if (ival_width(out) <= target) return tag_base_value(ival_mid(out));
    }
    throw FuelExhaustedError("interval refinement for output index " +
                                 std::to_string(k),
                             max_refine);
  });
}

Name drive_interval_fn2(const IntervalFn2& fn, const Name& pair_input,
                        std::uint64_t max_refine) {
  const Name left = name_left(pair_input);
  const Name right = name_right(pair_input);
  return make_name([fn, left, right, max_refine](std::uint64_t k) {
    const Rat target = pow2_neg(k);
    for (std::uint64_t t = k; t <= k + max_refine; ++t) {
      const Ival in1 = enclosure_at(left, t);
      const Ival in2 = enclosure_at(right, t);
      if (fn.definitely_out && fn.definitely_out(in1, in2)) {
        throw DomainViolationError(
            "input enclosures certified outside the domain");
      }
      const Ival out = fn.image(in1, in2);
      if (ival_width(out) <= target) return tag_base_value(ival_mid(out));
    }
    throw FuelExhaustedError("interval refinement for output index " +
                                 std::to_string(k),
                             max_refine);
  });
}

Realizer interval_fn_realizer(const IntervalFn& fn, std::uint64_t max_refine) {
  return Realizer{[fn, max_refine](const Name& p) {
    return drive_interval_fn(fn, p, max_refine);
  }};
}

Realizer interval_fn2_realizer(const IntervalFn2& fn,
                               std::uint64_t max_refine) {
  return Realizer{[fn, max_refine](const Name& p) {
    return drive_interval_fn2(fn, p, max_refine);
  }};
}

Realizer shift_realizer() {
  return Realizer{[](const Name& p) {
    return make_name([p](std::uint64_t k) {
      return tag_base_value(read_real_approx(p, k) + 1);
    });
  }};
}

namespace {

// Shared refinement loop for the branch tests.  first_hit: enclosure
// certainly above c (select the first branch).  second_hit: enclosure
// certainly below the stated bound (select the second branch).
bool decide_above(const Name& p, const Rat& c, const Rat& second_bound,
                  std::uint64_t max_refine, const char* what) {
  for (std::uint64_t t = 0; t <= max_refine; ++t) {
    const Ival in = enclosure_at(p, t);
    if (in.lo > c) return true;
    if (in.hi < second_bound) return false;
  }
  throw FuelExhaustedError(what, max_refine);
}

Realizer test_realizer(const Rat& c, const Rat& second_bound,
                       std::uint64_t max_refine, const char* what) {
  return Realizer{[c, second_bound, max_refine, what](const Name& p) {
    auto cache = std::make_shared<std::optional<bool>>();
    return make_name([p, c, second_bound, max_refine, what,
                      cache](std::uint64_t) {
      if (!cache->has_value()) {
        *cache = decide_above(p, c, second_bound, max_refine, what);
      }
      return **cache ? Int(1) : Int(0);  // 1 names (o,o), 0 names o
    });
  }};
}

}  // namespace

Realizer soft_test_realizer(const Rat& c, std::uint64_t max_refine) {
  return test_realizer(c, c + 1, max_refine, "soft branch test");
}

Realizer strict_test_realizer(const Rat& c, std::uint64_t max_refine) {
  return test_realizer(c, c, max_refine, "strict branch test");
}

IntervalFn demo_alpha() {
  IntervalFn fn;
  fn.image = [](const Ival& in) {
    return ival_scale(ival_sub(in, ival_mul(in, in)), Rat(1, 2));
  };
  return fn;
}

IntervalFn demo_alpha_shift1() {
  IntervalFn fn;
  const IntervalFn inner = demo_alpha();
  fn.image = [inner](const Ival& in) {
    return ival_add(in, inner.image(ival_shift(in, Rat(1))));
  };
  return fn;
}

IntervalFn2 demo_beta_add() {
  IntervalFn2 fn;
  fn.image = [](const Ival& a, const Ival& b) { return ival_add(a, b); };
  return fn;
}

IntervalFn demo_upper_half() {
  IntervalFn fn;
  fn.image = [](const Ival& in) { return ival_max_const(in, Rat(1)); };
  fn.definitely_out = [](const Ival& in) { return in.hi < 1; };
  return fn;
}

namespace {

struct RecConfig {
  IntervalFn alpha;
  IntervalFn2 beta;
  Rat c;
  Rat second_bound;  // c for the strict test, c+1 for the soft test
  const char* test_what;
  std::uint64_t test_refine = 256;
  std::uint64_t drive_refine = 512;
};

// Direct unfolding with eager branch decisions; the interval refinement
// inside each branch stays lazy (per output index).
Name rec_unfold(const RecConfig& cfg, const Name& p, std::uint64_t depth,
                std::uint64_t fuel, std::uint64_t* loops,
                std::optional<bool> force_first) {
  if (depth > fuel) {
    throw FuelExhaustedError("recursive unfolding", depth);
  }
  const bool take_first =
      force_first.has_value()
          ? *force_first
          : decide_above(p, cfg.c, cfg.second_bound, cfg.test_refine,
                         cfg.test_what);
  if (take_first) {
    return drive_interval_fn(cfg.alpha, p, cfg.drive_refine);
  }
  ++*loops;
  const Name shifted = shift_realizer()(p);
  const Name inner =
      rec_unfold(cfg, shifted, depth + 1, fuel, loops, std::nullopt);
  return drive_interval_fn2(cfg.beta, name_pair(p, inner), cfg.drive_refine);
}

RecResult rec_eval(const RecConfig& cfg, const Rat& x, std::uint32_t prec,
                   std::uint64_t fuel, std::optional<bool> force_first) {
  const Name input = tagged_real_name(real_name_of_rational(x));
  std::uint64_t loops = 0;
  const Name out = rec_unfold(cfg, input, 0, fuel, &loops, force_first);
  const Rat value = read_real_approx(out, prec);
  return RecResult{value, loops, out};
}

// Realizer assembly: branch realizer over the test, with the unfolding in
// the second branch.  Lazy: the recursive realizer is only applied when the
// branch realizer's output is first queried, so the depth actually unfolded
// is driven by demand; `depth` guards it against runaway recursion.
Realizer rec_realizer_at(std::shared_ptr<const RecConfig> cfg,
                         const Realizer& test, std::uint64_t depth,
                         std::uint64_t fuel) {
  Realizer first = interval_fn_realizer(cfg->alpha, cfg->drive_refine);
  Realizer second{[cfg, test, depth, fuel](const Name& p) -> Name {
    if (depth >= fuel) {
      throw FuelExhaustedError("recursive realizer unfolding", depth);
    }
    const Realizer inner = rec_realizer_at(cfg, test, depth + 1, fuel);
    const Name paired = name_pair(p, inner(shift_realizer()(p)));
    return drive_interval_fn2(cfg->beta, paired, cfg->drive_refine);
  }};
  return rz_sigma(test, first, second);
}

}  // namespace

RecResult rec1_eval(const IntervalFn& alpha, const IntervalFn2& beta,
                    const Rat& c, const Rat& x, std::uint32_t prec,
                    std::uint64_t fuel) {
  const RecConfig cfg{alpha, beta, c, c, "strict branch test"};
  return rec_eval(cfg, x, prec, fuel, std::nullopt);
}

RecResult rec2_eval(const IntervalFn& alpha, const IntervalFn2& beta,
                    const Rat& c, const Rat& x, std::uint32_t prec,
                    std::uint64_t fuel, std::optional<bool> force_first_branch) {
  const RecConfig cfg{alpha, beta, c, c + 1, "soft branch test"};
  return rec_eval(cfg, x, prec, fuel, force_first_branch);
}

Realizer rec1_realizer(const IntervalFn& alpha, const IntervalFn2& beta,
                       const Rat& c, std::uint64_t fuel) {
  auto cfg = std::make_shared<const RecConfig>(
      RecConfig{alpha, beta, c, c, "strict branch test"});
  return rec_realizer_at(cfg, strict_test_realizer(c, cfg->test_refine), 0,
                         fuel);
}

Realizer rec2_realizer(const IntervalFn& alpha, const IntervalFn2& beta,
                       const Rat& c, std::uint64_t fuel) {
  auto cfg = std::make_shared<const RecConfig>(
      RecConfig{alpha, beta, c, c + 1, "soft branch test"});
  return rec_realizer_at(cfg, soft_test_realizer(c, cfg->test_refine), 0,
                         fuel);
}

std::uint64_t rec_loop_bound(const Rat& c, const Rat& x) {
  const Rat gap = c + 1 - x;
  if (gap <= 0) return 0;
  // ceil(gap) for a positive rational
  const Int q = numerator(gap) / denominator(gap);
  const Int r = numerator(gap) % denominator(gap);
  const Int up = r == 0 ? q : q + 1;
  return static_cast<std::uint64_t>(up);
}

IntervalFn join_functions(const IntervalFn& alpha, const IntervalFn& alpha1,
                          const Rat& c, std::uint32_t seam_prec) {
  // Seam check: both halves at c, refined to disjointness resolution.
  const Ival at_c = ival_point(c);
  Ival upper = alpha.image(at_c);
  Ival lower = alpha1.image(at_c);
  (void)seam_prec;  // point images are exact for rational interval arithmetic
  if (ival_disjoint(upper, lower)) {
    throw JoinMismatchError("the two halves disagree at " + print_rational(c) +
                            ": [" + print_rational(upper.lo) + ", " +
                            print_rational(upper.hi) + "] vs [" +
                            print_rational(lower.lo) + ", " +
                            print_rational(lower.hi) + "]");
  }
  IntervalFn glued;
  glued.image = [alpha, alpha1, c](const Ival& in) {
    const Ival up = alpha.image(ival_max_const(in, c));
    const Ival down = alpha1.image(ival_min_const(in, c));
    const Ival base = alpha.image(ival_point(c));
    return ival_sub(ival_add(up, down), base);
  };
  return glued;
}

}  // namespace moschext
