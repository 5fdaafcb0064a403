#include "moschext/metric.hpp"

#include <stdexcept>

namespace moschext {

namespace {

bool idx_is_atom(const Int& i) { return i == 0; }
bool idx_is_base(const Int& i) { return i >= 2 && i % 2 == 0; }
bool idx_is_pair(const Int& i) { return i % 2 == 1; }

Int idx_base_part(const Int& i) { return (i - 2) / 2; }

std::pair<Int, Int> idx_components(const Int& i) {
  return unpair_j((i - 1) / 2);
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat rat_of_base(const BaseId& b) {
  const auto* q = std::get_if<Rat>(&b);
  if (q == nullptr) {
    throw std::logic_error("metric instance applied to a non-rational point");
  }
  return *q;
}

// Largest multiple of 2^-(k+2) that is <= x (x >= 0): differs from x by less
// than 2^-(k+2), comfortably inside the 2^-k promise.
Rat dyadic_floor(const Rat& x, std::uint64_t k) {
  const Int scale = Int(1) << (k + 2);
  const Int scaled = numerator(x) * scale / denominator(x);  // floor for x>=0
  return Rat(scaled, scale);
}

}  // namespace

MetricBase desk_metric_rationals() {
  MetricBase m;
  m.label = "rationals";
  m.dist = [](const BaseId& a, const BaseId& b) {
    return rat_abs(rat_of_base(a) - rat_of_base(b));
  };
  m.alpha = [](const Int& i) { return BaseId{rat_enum(i)}; };
  m.delta = [](const Int& i, const Int& j, std::uint64_t) {
    return rat_abs(rat_enum(i) - rat_enum(j));
  };
  m.in_h = [](const Int& i, const Int& j, std::uint64_t k, std::uint64_t l) {
    return rat_abs(rat_enum(i) - rat_enum(j)) < Rat(k + 1, l + 1);
  };
  return m;
}

MetricBase desk_metric_rationals_noisy() {
  MetricBase m = desk_metric_rationals();
  m.label = "rationals-noisy";
  m.delta = [](const Int& i, const Int& j, std::uint64_t k) {
    return dyadic_floor(rat_abs(rat_enum(i) - rat_enum(j)), k);
  };
  return m;
}

MetricBase desk_metric_two_point() {
  MetricBase m;
  m.label = "two-point";
  m.dist = [](const BaseId& a, const BaseId& b) {
    return a == b ? Rat(0) : Rat(3);
  };
  m.alpha = [](const Int& i) {
    return BaseId{static_cast<std::uint32_t>(i % 2)};
  };
  m.delta = [m](const Int& i, const Int& j, std::uint64_t) {
    return m.dist(m.alpha(i), m.alpha(j));
  };
  m.in_h = [m](const Int& i, const Int& j, std::uint64_t k, std::uint64_t l) {
    return m.dist(m.alpha(i), m.alpha(j)) < Rat(k + 1, l + 1);
  };
  return m;
}

MetricStar::MetricStar(MetricBase base) : base_(std::move(base)) {}

MetricStar metric_extend(MetricBase base) {
  return MetricStar(std::move(base));
}

Rat MetricStar::d_star(const Elem& a, const Elem& b) const {
  if (a->kind == ElemKind::Pair && b->kind == ElemKind::Pair) {
    return rat_max(d_star(a->left, b->left), d_star(a->right, b->right));
  }
  if (a->kind != b->kind) return Rat(1);  // o vs base point, basic vs pair
  if (a->kind == ElemKind::Atom) return Rat(0);
  return rat_min(base_.dist(a->base, b->base), Rat(1));
}

Elem MetricStar::alpha_star(const Int& i) const {
  if (idx_is_atom(i)) return atom();
  if (idx_is_base(i)) return base_elem(base_.alpha(idx_base_part(i)));
  const auto [m, n] = idx_components(i);
  return pair_elem(alpha_star(m), alpha_star(n));
}

Rat MetricStar::delta_star(const Int& i, const Int& j,
                           std::uint64_t k) const {
  if (idx_is_atom(i) && idx_is_atom(j)) return Rat(0);
  if (idx_is_base(i) && idx_is_base(j)) {
    return rat_min(base_.delta(idx_base_part(i), idx_base_part(j), k), Rat(1));
  }
  if (idx_is_pair(i) && idx_is_pair(j)) {
    const auto [m1, n1] = idx_components(i);
    const auto [m2, n2] = idx_components(j);
    return rat_max(delta_star(m1, m2, k), delta_star(n1, n2, k));
  }
  return Rat(1);  // shapes differ, the distance is exactly 1
}

bool MetricStar::in_h_star(const Int& i, const Int& j, std::uint64_t k,
                           std::uint64_t l) const {
  if (k > l) return true;  // radius exceeds 1, and d* never does
  if (idx_is_atom(i) && idx_is_atom(j)) return true;  // d* = 0 < radius
  if (idx_is_base(i) && idx_is_base(j)) {
    // min(d,1) < r <= 1 is equivalent to d < r here.
    return base_.in_h(idx_base_part(i), idx_base_part(j), k, l);
  }
  if (idx_is_pair(i) && idx_is_pair(j)) {
    const auto [m1, n1] = idx_components(i);
    const auto [m2, n2] = idx_components(j);
    return in_h_star(m1, m2, k, l) && in_h_star(n1, n2, k, l);
  }
  return false;  // d* = 1 and the radius is at most 1
}

std::vector<HQuad> MetricStar::stream_h_star(std::size_t count) const {
  std::vector<HQuad> out;
  out.reserve(count);
  for (std::uint64_t bound = 0; out.size() < count; ++bound) {
    for (std::uint64_t a = 0; a <= bound && out.size() < count; ++a) {
      for (std::uint64_t b = 0; b <= bound && out.size() < count; ++b) {
        for (std::uint64_t k = 0; k <= bound && out.size() < count; ++k) {
          for (std::uint64_t l = 0; l <= bound && out.size() < count; ++l) {
            if (a != bound && b != bound && k != bound && l != bound) continue;
            if (in_h_star(Int(a), Int(b), k, l)) {
              out.emplace_back(Int(a), Int(b), k, l);
            }
          }
        }
      }
    }
  }
  return out;
}

bool cauchy_check(const MetricBase& base,
                  const std::function<Int(std::uint64_t)>& p, const BaseId& x,
                  std::uint64_t levels) {
  for (std::uint64_t k = 0; k <= levels; ++k) {
    if (!(base.dist(base.alpha(p(k)), x) < pow2_neg(k))) return false;
  }
  return true;
}

}  // namespace moschext
