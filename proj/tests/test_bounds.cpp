#include <vector>

#include "doctest.h"
#include "loja/bounds.hpp"
#include "loja/errors.hpp"

using namespace loja;

namespace {


BigInt brute_binomial(unsigned n, unsigned k) {
  // Pascal's triangle, independent of mpz_bin_uiui.
  std::vector<std::vector<BigInt>> row(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    row[i].assign(i + 1, BigInt(1));
    for (unsigned j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return k > n ? BigInt(0) : row[n][k];
}

BigInt ipow(long b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("binom_max") {
  CHECK(binom_max(0) == 1);
  CHECK(binom_max(4) == 6);
  CHECK(binom_max(5) == 10);
  for (unsigned n = 0; n <= 20; ++n) {
    BigInt best = 0;
    for (unsigned k = 0; k <= n; ++k) best = std::max(best, brute_binomial(n, k));
    REQUIRE(binom_max(n) == best);
  }
}

TEST_CASE("loja_bound") {
  CHECK(loja_bound(2, 3) == 9);
  CHECK(loja_bound(3, 2) == 16);
  CHECK(loja_bound(4, 3) == 243);
  CHECK(loja_bound(1, 7) == 7);
  CHECK_THROWS_AS(loja_bound(0, 2), DomainError);
  CHECK_THROWS_AS(loja_bound(2, 0), DomainError);
}

TEST_CASE("gwozdziewicz_bound") {
  CHECK(gwozdziewicz_bound(2, 3) == 5);
  CHECK(gwozdziewicz_bound(3, 4) == 28);
  CHECK(gwozdziewicz_bound(5, 1) == 1);
  CHECK_THROWS_AS(gwozdziewicz_bound(0, 3), DomainError);
}

TEST_CASE("worst_case_exponents") {
  auto e = worst_case_exponents(2, 2);
  CHECK(e.system == 4);
  CHECK(e.sum_of_squares == 8);
  e = worst_case_exponents(3, 2);
  CHECK(e.system == 8);
  CHECK(e.sum_of_squares == 16);
  e = worst_case_exponents(1, 5);
  CHECK(e.system == 5);
  CHECK(e.sum_of_squares == 10);
  CHECK_THROWS_AS(worst_case_exponents(2, 1), DomainError);
  CHECK_THROWS_AS(worst_case_exponents(0, 2), DomainError);
}

TEST_CASE("critical_count_closed") {
  CHECK(critical_count_closed(2, 1, 3) == 6);
  CHECK(critical_count_closed(3, 2, 2) == 8);
  CHECK(critical_count_closed(1, 1, 7) == 7);
  CHECK_THROWS_AS(critical_count_closed(2, 3, 2), DomainError);
  CHECK_THROWS_AS(critical_count_closed(2, 0, 2), DomainError);
}

TEST_CASE("critical_count_series") {
  const std::vector<std::int64_t> one_quadric{2};
  CHECK(critical_count_series(3, one_quadric, 1) == critical_count_closed(3, 1, 2));
  CHECK(critical_count_series(3, one_quadric, 1) == 2);
  // k = 0: Bezout count (c-1)^n of the gradient system
  CHECK(critical_count_series(2, {}, 3) == ipow(2, 2));
  for (long c = 1; c <= 5; ++c) {
    for (unsigned n = 1; n <= 6; ++n) {
      REQUIRE(critical_count_series(n, {}, c) == ipow(c - 1, n));
    }
  }
  // k = n: zero-dimensional intersection, prod d_i points
  const std::vector<std::int64_t> two{2, 3};
  CHECK(critical_count_series(2, two, 5) == 6);
  const std::vector<std::int64_t> three{2, 3, 4};
  CHECK(critical_count_series(3, three, 7) == 24);

  const std::vector<std::int64_t> too_many{2, 2, 2};
  CHECK_THROWS_AS(critical_count_series(2, too_many, 1), DomainError);
  const std::vector<std::int64_t> zero_degree{0};
  CHECK_THROWS_AS(critical_count_series(2, zero_degree, 1), DomainError);
  CHECK_THROWS_AS(critical_count_series(2, {}, 0), DomainError);
}

TEST_CASE("series count agrees with the closed form") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      for (std::int64_t d = 2; d <= 6; ++d) {
        const std::vector<std::int64_t> degrees(static_cast<std::size_t>(k), d);
        const BigInt expected = brute_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1)) *
                                ipow(d, static_cast<unsigned>(k)) *
                                ipow(d - 1, static_cast<unsigned>(n - k));
        REQUIRE(critical_count_closed(n, k, d) == expected);
        REQUIRE(critical_count_series(n, degrees, 1) == expected);
      }
    }
  }
}

TEST_CASE("bound dominance") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t d = 2; d <= 10; ++d) {
      REQUIRE(loja_bound(n, d) >= worst_case_exponents(n, d).system);
    }
    REQUIRE(loja_bound(n, 1) >= 1);
  }
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t d = 2; d <= 6; ++d) {
      REQUIRE(worst_case_exponents(n, d).sum_of_squares <= gwozdziewicz_bound(n, 2 * d));
    }
  }
}

TEST_CASE("bound report") {
  const BoundReport r = make_bound_report(3, 2);
  CHECK(r.loja_bound == 16);
  CHECK(r.gwoz_bound == 2);
  CHECK(*r.worst_case_exponent == 8);
  CHECK(*r.sos_exponent == 16);
  const BoundReport linear = make_bound_report(3, 1);
  CHECK(linear.loja_bound == 2);
  CHECK_FALSE(linear.worst_case_exponent.has_value());
}
