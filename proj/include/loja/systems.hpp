#ifndef LOJA_SYSTEMS_HPP
#define LOJA_SYSTEMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "loja/poly.hpp"

namespace loja {

// f_1 = x1^d, f_i = x_{i-1} - x_i^d for i = 2..n.
MaxSystem worst_case(std::int64_t n, std::int64_t d);

// {f_1, -f_1, f_2, -f_2, ...}: the system whose max is max_i |f_i|.
MaxSystem absolute_system(const MaxSystem& sys);

// F(x_1..x_n) + (ell(x_1..x_n) - x_{n+1}^d)^2 in n+1 variables, with
// n = F.nvars(). `ell` defaults to x_n; it must have total degree 1 and
// must not involve x_{n+1} or beyond.
MultiPoly pemantle_lift(const MultiPoly& base, std::int64_t d,
                        const std::optional<MultiPoly>& ell = std::nullopt);

// {F, x_{n+1}} in n+1 variables, F = sum of squares of worst_case(n, d).
MaxSystem mixed_degree_counterexample(std::int64_t n, std::int64_t d);

// X = {g_j = 0, h_k >= 0}; Phi = max f_i.
struct SemiAlgSpec {
  std::vector<MultiPoly> f;
  std::vector<MultiPoly> g;
  std::vector<MultiPoly> h;
};

// Psi = max{f_i, g_j, -g_j, -h_k}, members in exactly that block order.
// Psi > 0 off X, and Psi = max(Phi, 0) on X when some g_j is present
// (Psi = Phi on X wherever Phi >= 0).
MaxSystem semialg_psi(const SemiAlgSpec& spec);

}  // namespace loja

#endif  // LOJA_SYSTEMS_HPP
