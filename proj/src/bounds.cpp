#include "loja/bounds.hpp"

#include <string>

#include "loja/errors.hpp"
#include "loja/series.hpp"

namespace loja {

namespace {

// Keeps d^n and friends within reach of a desk computation.
constexpr std::int64_t kMaxArgument = 1'000'000;
// Series extraction is quadratic in n.
constexpr std::int64_t kMaxSeriesOrder = 4096;

void require_range(const char* name, std::int64_t value, std::int64_t lo) {
  if (value < lo) {
    throw DomainError(std::string(name) + " must be >= " + std::to_string(lo) +
                      " (got " + std::to_string(value) + ")");
  }
  if (value > kMaxArgument) {
    throw DomainError(std::string(name) + " must be <= " +
                      std::to_string(kMaxArgument));
  }
}

BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt binom_max(std::uint64_t n) { return binomial(n, n / 2); }

BigInt loja_bound(std::int64_t n, std::int64_t d) {
  require_range("n", n, 1);
  require_range("d", d, 1);
  return binom_max(static_cast<std::uint64_t>(n - 1)) *
         pow(big(d), static_cast<std::uint64_t>(n));
}

BigInt gwozdziewicz_bound(std::int64_t n, std::int64_t d) {
  require_range("n", n, 1);
  require_range("d", d, 1);
  return pow(big(d - 1), static_cast<std::uint64_t>(n)) + 1;
}

WorstCaseExponents worst_case_exponents(std::int64_t n, std::int64_t d) {
  require_range("n", n, 1);
  require_range("d", d, 2);
  BigInt e = pow(big(d), static_cast<std::uint64_t>(n));
  return {e, 2 * e};
}

BigInt critical_count_closed(std::int64_t n, std::int64_t k, std::int64_t d) {
  require_range("n", n, 1);
  require_range("k", k, 1);
  require_range("d", d, 1);
  if (k > n) throw DomainError("k must not exceed n");
  return binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(k - 1)) *
         pow(big(d), static_cast<std::uint64_t>(k)) *
         pow(big(d - 1), static_cast<std::uint64_t>(n - k));
}

BigInt critical_count_series(std::int64_t n, std::span<const std::int64_t> degrees,
                             std::int64_t c) {
  require_range("n", n, 1);
  require_range("c", c, 1);
  if (n > kMaxSeriesOrder) {
    throw DomainError("n must be <= " + std::to_string(kMaxSeriesOrder) +
                      " for the series count");
  }
  const auto k = static_cast<std::int64_t>(degrees.size());
  if (k > n) throw DomainError("more hypersurfaces than variables");
  for (const auto di : degrees) require_range("degree", di, 1);

  const auto order = static_cast<std::size_t>(n);
  TruncatedSeries s = mul_series(binom_power(1, static_cast<std::uint64_t>(n), order),
                                 reciprocal(TruncatedSeries::affine(order, 1, big(c))));
  for (const auto di : degrees) {
    const TruncatedSeries factor = shift_series(
        reciprocal(TruncatedSeries::affine(order, 1, big(di))), 1);
    s = mul_series(s, scale_series(factor, big(di)));
  }
  Rational value = coefficient(s, n);
  if ((n - k) % 2 != 0) value = -value;
  if (!is_integer(value)) {
    throw std::logic_error("critical-point count " + to_string(value) +
                           " is not an integer");
  }
  if (value < 0) {
    throw NegativeCount("coefficient " + to_string(value) +
                        " is negative; inputs lie outside the counting regime");
  }
  return value.get_num();
}

BoundReport make_bound_report(std::int64_t n, std::int64_t d) {
  BoundReport report{n, d, loja_bound(n, d), gwozdziewicz_bound(n, d),
                     std::nullopt, std::nullopt};
  if (d >= 2) {
    auto worst = worst_case_exponents(n, d);
    report.worst_case_exponent = std::move(worst.system);
    report.sos_exponent = std::move(worst.sum_of_squares);
  }
  return report;
}

}  // namespace loja
