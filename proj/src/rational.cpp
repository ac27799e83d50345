#include "loja/rational.hpp"

#include "loja/errors.hpp"

namespace loja {

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational result(BigInt(0), BigInt(1));
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return result;  // coprime powers stay in lowest terms
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace loja
