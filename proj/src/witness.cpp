#include "loja/witness.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace loja {

std::optional<ComponentOrder> component_order(const MultiPoly& p,
                                              const MonomialCurve& curve) {
  const UniPoly along = substitute_curve(p, curve);
  const auto term = curve.regime() == Regime::Local ? along.lowest() : along.highest();
  if (!term) return std::nullopt;
  return ComponentOrder{term->first, term->second};
}

NotEventuallyPositive::NotEventuallyPositive(
    std::vector<std::optional<ComponentOrder>> orders)
    : Error("NotEventuallyPositive",
            "no member of the system is eventually positive along the curve"),
      orders_(std::move(orders)) {}

WitnessReport system_curve_order(const MaxSystem& sys, const MonomialCurve& curve) {
  if (curve.nvars() != sys.nvars()) {
    throw DimensionMismatch("curve in " + std::to_string(curve.nvars()) +
                            " variables for a system in " +
                            std::to_string(sys.nvars()));
  }
  const bool local = curve.regime() == Regime::Local;
  std::vector<std::optional<ComponentOrder>> orders;
  orders.reserve(sys.size());
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    orders.push_back(component_order(sys.polys()[i], curve));
    const auto& o = orders.back();
    // Only eventually-positive members can carry a positive max. Phi >= f_i
    // pointwise, so any such member certifies Phi >= c t^order.
    if (!o || o->leading_coeff <= 0) continue;
    if (!best) {
      best = i;
      continue;
    }
    const std::int64_t current = orders[*best]->order;
    if (local ? o->order < current : o->order > current) best = i;
  }
  if (!best) throw NotEventuallyPositive(std::move(orders));

  const auto& a = curve.exponents();
  const std::int64_t norm_order =
      local ? *std::min_element(a.begin(), a.end()) : *std::max_element(a.begin(), a.end());
  const std::int64_t phi_order = orders[*best]->order;
  return WitnessReport{curve.regime(),
                       phi_order,
                       norm_order,
                       make_rational(phi_order, norm_order),
                       *best,
                       std::move(orders)};
}

MonomialCurve canonical_worst_curve(std::int64_t n, std::int64_t d) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (d < 2) throw DomainError("d must be >= 2");
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  std::int64_t power = 1;
  for (std::int64_t i = n - 1; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = power;
    if (i > 0 && __builtin_mul_overflow(power, d, &power)) {
      throw DomainError("d^(n-1) overflows 64-bit curve exponents");
    }
  }
  std::vector<Rational> s(a.size(), Rational(1));
  return MonomialCurve(std::move(a), std::move(s), Regime::Local);
}

}  // namespace loja
