#ifndef LOJA_CURVE_HPP
#define LOJA_CURVE_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "loja/rational.hpp"

namespace loja {

// Local: behaviour as ||x|| -> 0. Infinity: behaviour as ||x|| -> infinity.
enum class Regime { Local, Infinity };

std::string_view to_string(Regime regime);
// Accepts "local" and "infinity"; throws DomainError otherwise.
Regime parse_regime(std::string_view text);

// x_i(t) = s_i * t^{a_i} for t > 0. In the Local regime t -> 0+ and all
// a_i > 0; in the Infinity regime t -> +infinity and a_i is any nonzero
// integer, at least one of them positive.
class MonomialCurve {
 public:
  MonomialCurve(std::vector<std::int64_t> exponents,
                std::vector<Rational> coefficients, Regime regime);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Regime regime() const noexcept { return regime_; }

  // Point on the curve at parameter t (t != 0).
  std::vector<Rational> at(const Rational& t) const;

 private:
  std::vector<std::int64_t> exponents_;
  std::vector<Rational> coefficients_;
  Regime regime_;
};

}  // namespace loja

#endif  // LOJA_CURVE_HPP
