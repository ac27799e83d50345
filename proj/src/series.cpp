#include "loja/series.hpp"

#include <string>

#include "loja/errors.hpp"

namespace loja {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("series of orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order)
    : order_(order), coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return affine(order, 1, 0);
}

TruncatedSeries TruncatedSeries::affine(std::size_t order, const Rational& c0,
                                        const Rational& c1) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c0;
  if (order >= 1) s.coeffs_[1] = c1;
  return s;
}

TruncatedSeries add_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries scale_series(const TruncatedSeries& a, const Rational& factor) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= factor;
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries mul_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return TruncatedSeries(n, std::move(c));
}

TruncatedSeries shift_series(const TruncatedSeries& a, std::size_t k) {
  const std::size_t n = a.order();
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t i = 0; i + k <= n; ++i) c[i + k] = a.coeffs()[i];
  return TruncatedSeries(n, std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const auto& ac = a.coeffs();
  if (ac[0] == 0) throw NonUnitConstantTerm("series with zero constant term");
  const std::size_t n = a.order();
  const Rational inv0 = 1 / ac[0];
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational sum = 0;
    for (std::size_t j = 1; j <= k; ++j) sum += ac[j] * b[k - j];
    b[k] = -inv0 * sum;
  }
  return TruncatedSeries(n, std::move(b));
}

TruncatedSeries binom_power(const Rational& u, std::uint64_t exponent,
                            std::size_t order) {
  // c_k = binom(e, k) u^k via c_k = c_{k-1} * (e - k + 1) / k * u.
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  for (std::size_t k = 1; k <= order && k <= exponent; ++k) {
    c[k] = c[k - 1] * u * make_rational(BigInt(std::to_string(exponent - k + 1)),
                                        BigInt(std::to_string(k)));
  }
  return TruncatedSeries(order, std::move(c));
}

Rational coefficient(const TruncatedSeries& a, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > a.order()) {
    throw IndexOutOfRange("coefficient index " + std::to_string(k) +
                          " outside 0.." + std::to_string(a.order()));
  }
  return a.coeffs()[static_cast<std::size_t>(k)];
}

}  // namespace loja
