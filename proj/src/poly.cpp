#include "loja/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "loja/curve.hpp"
#include "loja/errors.hpp"

namespace loja {

std::uint64_t total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const auto da = loja::total_degree(a);
  const auto db = loja::total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_nvars(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) {
    throw VariableCountMismatch("polynomials in " + std::to_string(p.nvars()) +
                                " and " + std::to_string(q.nvars()) +
                                " variables");
  }
}

void accumulate_term(MultiPoly::TermMap& terms, const ExpVec& e,
                     const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw DomainError("polynomial needs at least one variable");
}

MultiPoly::MultiPoly(std::size_t nvars, TermMap terms) : MultiPoly(nvars) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != nvars) {
      throw DimensionMismatch("exponent vector of length " +
                              std::to_string(it->first.size()) +
                              " in a polynomial of " + std::to_string(nvars) +
                              " variables");
    }
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw DimensionMismatch("variable x" + std::to_string(index + 1) +
                            " outside " + std::to_string(nvars) + " variables");
  }
  ExpVec e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(ExpVec exponents, const Rational& c) {
  MultiPoly p(exponents.size());
  if (c != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

std::optional<std::uint64_t> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order: the last key has the largest degree.
  return loja::total_degree(terms_.rbegin()->first);
}

MultiPoly MultiPoly::embed(std::size_t nvars) const {
  if (nvars < nvars_) {
    throw DimensionMismatch("cannot embed " + std::to_string(nvars_) +
                            " variables into " + std::to_string(nvars));
  }
  if (nvars == nvars_) return *this;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    ExpVec padded = e;
    padded.resize(nvars, 0);
    out.emplace(std::move(padded), c);
  }
  return MultiPoly(nvars, std::move(out));
}

bool MultiPoly::uses_variable(std::size_t index) const {
  if (index >= nvars_) return false;
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const auto& term) { return term.first[index] > 0; });
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw DimensionMismatch("point of dimension " + std::to_string(point.size()) +
                            " for " + std::to_string(nvars_) + " variables");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= loja::pow(point[i], static_cast<std::int64_t>(e[i]));
    }
    sum += term;
  }
  return sum;
}

double ipow(double base, std::uint64_t exponent) {
  double result = 1.0;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

double MultiPoly::eval_float(std::span<const double> point) const {
  if (point.size() != nvars_) {
    throw DimensionMismatch("point of dimension " + std::to_string(point.size()) +
                            " for " + std::to_string(nvars_) + " variables");
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= ipow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) {
  require_same_nvars(p, q);
  MultiPoly::TermMap terms = p.terms();
  for (const auto& [e, c] : q.terms()) accumulate_term(terms, e, c);
  return MultiPoly(p.nvars(), std::move(terms));
}

MultiPoly negate(const MultiPoly& p) { return scale(p, -1); }

MultiPoly sub(const MultiPoly& p, const MultiPoly& q) { return add(p, negate(q)); }

MultiPoly scale(const MultiPoly& p, const Rational& c) {
  if (c == 0) return MultiPoly(p.nvars());
  MultiPoly::TermMap terms = p.terms();
  for (auto& [e, coeff] : terms) coeff *= c;
  return MultiPoly(p.nvars(), std::move(terms));
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) {
  require_same_nvars(p, q);
  const std::size_t n = p.nvars();
  MultiPoly::TermMap terms;
  ExpVec e(n);
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sum = std::uint64_t{ep[i]} + eq[i];
        if (sum > std::numeric_limits<Exponent>::max()) {
          throw DomainError("exponent overflow in product");
        }
        e[i] = static_cast<Exponent>(sum);
      }
      accumulate_term(terms, e, cp * cq);
    }
  }
  return MultiPoly(n, std::move(terms));
}

MultiPoly pow(const MultiPoly& p, std::uint64_t exponent) {
  MultiPoly result = MultiPoly::constant(p.nvars(), 1);
  MultiPoly base = p;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = mul(base, base);
  }
  return result;
}

MaxSystem::MaxSystem(std::vector<MultiPoly> polys) : nvars_(0), polys_(std::move(polys)) {
  if (polys_.empty()) throw EmptySystem("a max-system needs at least one member");
  nvars_ = polys_.front().nvars();
  for (const auto& p : polys_) {
    if (p.nvars() != nvars_) {
      throw VariableCountMismatch("system members in " + std::to_string(nvars_) +
                                  " and " + std::to_string(p.nvars()) +
                                  " variables");
    }
  }
}

std::optional<std::uint64_t> MaxSystem::max_degree() const {
  std::optional<std::uint64_t> best;
  for (const auto& p : polys_) {
    const auto d = p.total_degree();
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

Rational eval_max(const MaxSystem& sys, std::span<const Rational> point) {
  Rational best = sys.polys().front().eval(point);
  for (std::size_t i = 1; i < sys.size(); ++i) {
    Rational v = sys.polys()[i].eval(point);
    if (v > best) best = std::move(v);
  }
  return best;
}

double eval_max_float(const MaxSystem& sys, std::span<const double> point) {
  double best = sys.polys().front().eval_float(point);
  for (std::size_t i = 1; i < sys.size(); ++i) {
    best = std::max(best, sys.polys()[i].eval_float(point));
  }
  return best;
}

MultiPoly sum_of_squares(const MaxSystem& sys) {
  MultiPoly f(sys.nvars());
  for (const auto& p : sys.polys()) f = add(f, mul(p, p));
  return f;
}

UniPoly::UniPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& term) { return term.second == 0; });
}

std::optional<std::pair<std::int64_t, Rational>> UniPoly::lowest() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.begin();
}

std::optional<std::pair<std::int64_t, Rational>> UniPoly::highest() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.rbegin();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c * loja::pow(t, k);
  return sum;
}

UniPoly substitute_curve(const MultiPoly& p, const MonomialCurve& curve) {
  if (curve.nvars() != p.nvars()) {
    throw DimensionMismatch("curve in " + std::to_string(curve.nvars()) +
                            " variables for a polynomial in " +
                            std::to_string(p.nvars()));
  }
  const auto& a = curve.exponents();
  const auto& s = curve.coefficients();
  UniPoly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t order = 0;
    Rational coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::int64_t step = 0;
      if (__builtin_mul_overflow(a[i], static_cast<std::int64_t>(e[i]), &step) ||
          __builtin_add_overflow(order, step, &order)) {
        throw DomainError("curve order overflows 64-bit integers");
      }
      coeff *= loja::pow(s[i], static_cast<std::int64_t>(e[i]));
    }
    auto [it, inserted] = out.try_emplace(order, coeff);
    if (!inserted) it->second += coeff;
  }
  return UniPoly(std::move(out));
}

}  // namespace loja
