#ifndef LOJA_BOUNDS_HPP
#define LOJA_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "loja/rational.hpp"

namespace loja {

BigInt binomial(std::uint64_t n, std::uint64_t k);

// B(n): the largest binomial coefficient binom(n, k), i.e. the central one.
BigInt binom_max(std::uint64_t n);

// B(n-1) * d^n, the exponent for max_i f_i with deg f_i <= d in n variables.
BigInt loja_bound(std::int64_t n, std::int64_t d);

// (d-1)^n + 1, the single-polynomial exponent.
BigInt gwozdziewicz_bound(std::int64_t n, std::int64_t d);

struct WorstCaseExponents {
  BigInt system;           // d^n
  BigInt sum_of_squares;   // 2 d^n
};

// Exponents realized by the worst-case chain x1^d, x_{i-1} - x_i^d.
WorstCaseExponents worst_case_exponents(std::int64_t n, std::int64_t d);

// binom(n-1, k-1) d^k (d-1)^{n-k}: critical points of a general linear
// function on a complete intersection of k degree-d hypersurfaces in A^n.
BigInt critical_count_closed(std::int64_t n, std::int64_t k, std::int64_t d);

// Coefficient of H^n in
//   (-1)^{n-k} (1+H)^n / (1+cH) * prod_i d_i H / (1 + d_i H),
// k = degrees.size(), evaluated with truncated series.
BigInt critical_count_series(std::int64_t n, std::span<const std::int64_t> degrees,
                             std::int64_t c);

struct BoundReport {
  std::int64_t n;
  std::int64_t d;
  BigInt loja_bound;
  BigInt gwoz_bound;
  // Absent for d = 1, where the worst-case family is undefined.
  std::optional<BigInt> worst_case_exponent;
  std::optional<BigInt> sos_exponent;
};

// n >= 1, d >= 1.
BoundReport make_bound_report(std::int64_t n, std::int64_t d);

}  // namespace loja

#endif  // LOJA_BOUNDS_HPP
