#ifndef LOJA_SERIES_HPP
#define LOJA_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loja/rational.hpp"

namespace loja {

// Power series in H over Q, truncated after H^order.
class TruncatedSeries {
 public:
  // Zero series.
  explicit TruncatedSeries(std::size_t order);
  // Coefficients of H^0, H^1, ...; missing ones are zero, extra ones dropped.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncatedSeries one(std::size_t order);
  // c0 + c1*H.
  static TruncatedSeries affine(std::size_t order, const Rational& c0,
                                const Rational& c1);

  std::size_t order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t order_;
  std::vector<Rational> coeffs_;  // size order_ + 1
};

TruncatedSeries add_series(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale_series(const TruncatedSeries& a, const Rational& c);
// Cauchy product truncated at the common order.
TruncatedSeries mul_series(const TruncatedSeries& a, const TruncatedSeries& b);
// Multiply by H^k, discarding what falls past the order.
TruncatedSeries shift_series(const TruncatedSeries& a, std::size_t k);
// b with a*b = 1 + O(H^{order+1}); needs a nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& a);
// (1 + u*H)^exponent.
TruncatedSeries binom_power(const Rational& u, std::uint64_t exponent,
                            std::size_t order);
// Coefficient of H^k, 0 <= k <= order.
Rational coefficient(const TruncatedSeries& a, std::int64_t k);

}  // namespace loja

#endif  // LOJA_SERIES_HPP
