#include "loja/curve.hpp"

#include <algorithm>
#include <string>

#include "loja/errors.hpp"

namespace loja {

std::string_view to_string(Regime regime) {
  return regime == Regime::Local ? "local" : "infinity";
}

Regime parse_regime(std::string_view text) {
  if (text == "local") return Regime::Local;
  if (text == "infinity") return Regime::Infinity;
  throw DomainError("unknown regime '" + std::string(text) +
                    "' (expected local or infinity)");
}

MonomialCurve::MonomialCurve(std::vector<std::int64_t> exponents,
                             std::vector<Rational> coefficients, Regime regime)
    : exponents_(std::move(exponents)),
      coefficients_(std::move(coefficients)),
      regime_(regime) {
  if (exponents_.empty()) throw DomainError("curve needs at least one coordinate");
  if (exponents_.size() != coefficients_.size()) {
    throw DimensionMismatch("curve has " + std::to_string(exponents_.size()) +
                            " exponents but " +
                            std::to_string(coefficients_.size()) + " coefficients");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) {
      throw DomainError("curve exponent a_" + std::to_string(i + 1) + " is zero");
    }
    if (regime_ == Regime::Local && exponents_[i] < 0) {
      throw DomainError("local-regime curve needs positive exponents (a_" +
                        std::to_string(i + 1) + " < 0)");
    }
    if (coefficients_[i] == 0) {
      throw DomainError("curve coefficient s_" + std::to_string(i + 1) + " is zero");
    }
  }
  if (regime_ == Regime::Infinity &&
      std::none_of(exponents_.begin(), exponents_.end(),
                   [](std::int64_t a) { return a > 0; })) {
    throw DomainError("infinity-regime curve needs a positive exponent to leave every ball");
  }
}

std::vector<Rational> MonomialCurve::at(const Rational& t) const {
  std::vector<Rational> x;
  x.reserve(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    x.push_back(coefficients_[i] * loja::pow(t, exponents_[i]));
  }
  return x;
}

}  // namespace loja
