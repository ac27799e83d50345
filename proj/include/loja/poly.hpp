#ifndef LOJA_POLY_HPP
#define LOJA_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "loja/rational.hpp"

namespace loja {

using Exponent = std::uint32_t;

// Exponents of x1..xn; the length always equals the ambient variable count.
using ExpVec = std::vector<Exponent>;

std::uint64_t total_degree(const ExpVec& e);

// Graded lexicographic order: lower total degree first; within a degree,
// larger powers of x1 (then x2, ...) first. So x1 < x2^2 and
// x1^2 < x1*x2 < x2^2.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q. Never stores a zero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

  // Zero polynomial in `nvars` variables (nvars >= 1).
  explicit MultiPoly(std::size_t nvars);
  // Drops zero coefficients; every key must have length nvars.
  MultiPoly(std::size_t nvars, TermMap terms);

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  // x_{index+1}; `index` is zero-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(ExpVec exponents, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Largest exponent sum over the stored terms; std::nullopt stands for the
  // degree of the zero polynomial (-infinity).
  std::optional<std::uint64_t> total_degree() const;

  // Same polynomial viewed in `nvars` >= nvars() variables.
  MultiPoly embed(std::size_t nvars) const;

  // True when some stored term has a positive power of x_{index+1}.
  bool uses_variable(std::size_t index) const;

  Rational eval(std::span<const Rational> point) const;
  // Monomials by repeated squaring, accumulated in term-storage order.
  double eval_float(std::span<const double> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly negate(const MultiPoly& p);
MultiPoly scale(const MultiPoly& p, const Rational& c);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, std::uint64_t exponent);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return sub(p, q); }
inline MultiPoly operator-(const MultiPoly& p) { return negate(p); }
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return mul(p, q); }

// x^e for doubles, by repeated squaring.
double ipow(double base, std::uint64_t exponent);

// Phi(x) = max_i f_i(x) over a nonempty list sharing one variable count.
class MaxSystem {
 public:
  explicit MaxSystem(std::vector<MultiPoly> polys);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<MultiPoly>& polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }

  // Largest member degree; nullopt when every member is zero.
  std::optional<std::uint64_t> max_degree() const;

  friend bool operator==(const MaxSystem&, const MaxSystem&) = default;

 private:
  std::size_t nvars_;
  std::vector<MultiPoly> polys_;
};

Rational eval_max(const MaxSystem& sys, std::span<const Rational> point);
double eval_max_float(const MaxSystem& sys, std::span<const double> point);

// F = sum_i f_i^2.
MultiPoly sum_of_squares(const MaxSystem& sys);

// Laurent polynomial in t; empty map is zero.
class UniPoly {
 public:
  using TermMap = std::map<std::int64_t, Rational>;

  UniPoly() = default;
  explicit UniPoly(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Smallest / largest exponent with its coefficient; nullopt for zero.
  std::optional<std::pair<std::int64_t, Rational>> lowest() const;
  std::optional<std::pair<std::int64_t, Rational>> highest() const;

  // t must be nonzero when negative exponents are present.
  Rational eval(const Rational& t) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  TermMap terms_;
};

class MonomialCurve;

// Exact Laurent polynomial in t from x_i = s_i * t^{a_i}.
UniPoly substitute_curve(const MultiPoly& p, const MonomialCurve& curve);

}  // namespace loja

#endif  // LOJA_POLY_HPP
