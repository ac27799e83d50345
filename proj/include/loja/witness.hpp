#ifndef LOJA_WITNESS_HPP
#define LOJA_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "loja/curve.hpp"
#include "loja/errors.hpp"
#include "loja/poly.hpp"

namespace loja {

// Order of f along a curve together with the coefficient realizing it.
// Local: lowest t-exponent of f(p(t)). Infinity: highest t-exponent.
struct ComponentOrder {
  std::int64_t order;
  Rational leading_coeff;

  friend bool operator==(const ComponentOrder&, const ComponentOrder&) = default;
};

// std::nullopt when f vanishes identically along the curve.
std::optional<ComponentOrder> component_order(const MultiPoly& p,
                                              const MonomialCurve& curve);

// Lower-bound certificate for the exponent of Phi = max_i f_i along a curve.
//
// Local: Phi(p(t)) >= c t^phi_order as t -> 0+, while ||p(t)||_max ~ t^m with
// m = min a_i, so the exponent is at least phi_order / m.
// Infinity: Phi(p(t)) ~ c t^phi_order as t -> infinity and ||p(t)|| ~ t^m with
// m = max a_i; the certified growth exponent is phi_order / m (negative for
// decay).
struct WitnessReport {
  Regime regime;
  std::int64_t phi_order;
  std::int64_t norm_order;
  Rational exponent_bound;
  std::size_t dominating_index;  // zero-based member index
  // Per-member order along the curve; nullopt for identically-zero members.
  std::vector<std::optional<ComponentOrder>> member_orders;
};

// No member of Phi is eventually positive along the curve: Phi <= 0 there
// (up to higher-order terms), so the positivity hypothesis fails.
class NotEventuallyPositive : public Error {
 public:
  explicit NotEventuallyPositive(std::vector<std::optional<ComponentOrder>> orders);

  const std::vector<std::optional<ComponentOrder>>& member_orders() const noexcept {
    return orders_;
  }

 private:
  std::vector<std::optional<ComponentOrder>> orders_;
};

WitnessReport system_curve_order(const MaxSystem& sys, const MonomialCurve& curve);

// p(t) = (t^{d^{n-1}}, t^{d^{n-2}}, ..., t), Local regime.
MonomialCurve canonical_worst_curve(std::int64_t n, std::int64_t d);

}  // namespace loja

#endif  // LOJA_WITNESS_HPP
