#ifndef LOJA_RATIONAL_HPP
#define LOJA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace loja {

using BigInt = mpz_class;

// mpq_class kept in lowest terms with a positive denominator. Every
// constructor below canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Integer power with a possibly negative exponent; 0^negative is undefined.
Rational pow(const Rational& base, std::int64_t exponent);
BigInt pow(const BigInt& base, std::uint64_t exponent);

}  // namespace loja

#endif  // LOJA_RATIONAL_HPP
